#pragma once

#include "itervote/core.hpp"

#include <map>
#include <string>
#include <vector>

namespace itervote {

enum class Status { ExactMatch, WithinTolerance, Violation };
std::string status_name(Status s);

struct IdentityReport {
    std::string identity_id;
    std::map<std::string, std::string> parameter;
    std::string lhs;
    std::string rhs;
    Status status = Status::Violation;
    std::string detail;
};

bool all_pass(const std::vector<IdentityReport>& reports);

// Half-probability binomial partial sums (eight closed forms). At p = 1/2 each is checked exactly;
// otherwise the sum or its complement must shrink from q to 2q.
std::vector<IdentityReport> check_binomial_half_sums(int q, const Rational& p = Rational(1, 2));

// Three odd/even partial-sum identities plus sum_{v=t}^{u} C(u,v)(u-2v) = -t C(u,t).
std::vector<IdentityReport> check_supplementary_sums(int q);
IdentityReport check_alternating_sum(int u, int t);

// multinomial(n; n/2-q, n/2-q, q, q) p1^(n-2q) p3^(2q) as a squared binomial, p3 = 1/2 - p1.
IdentityReport check_multinomial_square(int n, int q, const Rational& p1);

// 2^{2n}/((2n+1) C(2n,n)) sandwiched by sqrt(2n/(2n+1)) sqrt(pi/(2(2n+1))) and sqrt(pi/(2(2n+1))).
IdentityReport check_wallis_bounds(int n);
// The same sandwich with 2/pi in place of pi/2.
bool wallis_as_printed_holds(int n);

// n * C(3n; n,n,n) / 3^{3n} stabilises.
std::vector<IdentityReport> check_trinomial_rate(const std::vector<int>& n_list, double tolerance = 0.05);

// Tail sums of multinomial(n; n/2-q, n/2-q, q, q) p1^(n-2q) p3^(2q) over q in [an, n/6] and [0, bn].
double paired_multinomial_sum(int n, const Rational& p1, int q_lo, int q_hi);
std::vector<IdentityReport> check_prob_bounds(const Rational& p1, const Rational& a, const Rational& b,
                                              const std::vector<int>& n_list);

enum class SquaredBinomialSum {
    Centered,         // sum_{k=0}^{n} x Pr^2, p in (0, 2/3)
    CenteredLower,    // sum_{k=floor(np/2)}^{floor(np)} x Pr^2, p = 2/3
    WeightedSquare,   // sum_{k=floor(np/2)}^{n} x^2 g Pr^2, p in (0, 2/3)
    Weighted,         // sum_{k=floor(np/2)}^{n} x g Pr^2, p in (0, 2/3)
};
std::string squared_binomial_name(SquaredBinomialSum which);
double squared_binomial_exponent(SquaredBinomialSum which);  // n^alpha * |value| should stay bounded
double evaluate_squared_binomial_sum(SquaredBinomialSum which, const Rational& p, int n);
std::vector<IdentityReport> check_squared_binomial_probe(SquaredBinomialSum which, const Rational& p,
                                                         const std::vector<int>& n_list, double growth = 0.25);

// sum_{k=floor(an)}^{ceil(bn)} (C(n,k) p^{n-k} (1-p)^k)^2
double squared_binomial_range_sum(int n, double p, int k_lo, int k_hi);
std::vector<IdentityReport> check_hoeffding_squared(const Rational& p, const Rational& a, const Rational& b,
                                                    const std::vector<int>& n_list, double max_ratio = 0.1);

struct SuiteOptions {
    int q_max = 300;            // binomial-sums, supplementary-sums
    int u_max = 300;            // supplementary-sums
    int multinomial_n_max = 120;
    int wallis_n_max = 10000;
    Rational p = Rational(1, 2);  // binomial-sums
};

// Suites: binomial-sums, supplementary-sums, multinomial-square, wallis, trinomial, prob-bounds,
// squared-binomial, hoeffding, all.
const std::vector<std::string>& identity_suite_names();
std::vector<IdentityReport> run_identity_suite(const std::string& suite, const SuiteOptions& opts = {});

}  // namespace itervote
