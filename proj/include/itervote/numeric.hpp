#pragma once

#include <gmpxx.h>

#include <cmath>
#include <vector>

namespace itervote {

// Neumaier compensated summation.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        double t = sum + x;
        if (std::fabs(sum) >= std::fabs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

// log(k!) for k in [0, n]
std::vector<long double> log_factorials(int n);

std::vector<std::vector<mpz_class>> binomial_table(int n);

mpz_class binomial(unsigned long n, unsigned long k);

}  // namespace itervote
