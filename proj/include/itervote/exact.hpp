#pragma once

#include "itervote/core.hpp"

#include <functional>
#include <map>

namespace itervote {

enum class Mode { Exact, Float };

struct PreferenceDistribution {
    std::array<Rational, 6> p;

    explicit PreferenceDistribution(std::array<Rational, 6> probs);
    static PreferenceDistribution impartial_culture();

    bool strictly_positive() const;
    std::array<double, 6> as_double() const;
    mpz_class common_denominator() const;
    std::array<mpz_class, 6> numerators(const mpz_class& den) const;
};

// A probability or expectation; `exact` is meaningful only in Mode::Exact.
struct Value {
    Mode mode = Mode::Exact;
    Rational exact;
    double approx = 0.0;
};

struct EadpoaResult {
    int n = 0;
    Mode mode = Mode::Exact;
    Value value;
    std::map<AltSet, Value> per_W;  // every W with |W| >= 2
};

constexpr int kDefaultEnumerationBound = 80;
constexpr int kDefaultPoaBarBound = 200;

// Visits every histogram of size n in lexicographic (c1..c5) order.
void for_each_histogram(int n, const std::function<void(const Counts&)>& fn);

Rational histogram_probability(const PreferenceDistribution& pi, const Histogram& h);
double histogram_log_probability(const std::array<double, 6>& pi, const Counts& c);

EadpoaResult exact_eadpoa(const PreferenceDistribution& pi, const Utility& u, int n, Mode mode = Mode::Exact,
                          int threads = 0, int bound = kDefaultEnumerationBound);

Value poa_bar(const PreferenceDistribution& pi, const Utility& u, int n, AltSet W, Mode mode = Mode::Exact,
              int threads = 0, int bound = kDefaultPoaBarBound);

Value tie_probability(const PreferenceDistribution& pi, int n, AltSet W, Mode mode = Mode::Exact);

}  // namespace itervote
