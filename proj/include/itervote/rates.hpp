#pragma once

#include "itervote/core.hpp"
#include "itervote/exact.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace itervote {

enum class Magnitude { Zero, ExpSmall, InvN, InvSqrtN, Const, BoundedIndeterminate, SqrtN };
enum class Sign { Plus, Minus, PlusMinus };

struct RateClass {
    Magnitude magnitude = Magnitude::Zero;
    Sign sign = Sign::PlusMinus;

    bool operator==(const RateClass&) const = default;
    std::string str() const;
    static RateClass parse(const std::string& s);

    static RateClass sqrt_n(Sign s) { return {Magnitude::SqrtN, s}; }
    static RateClass constant(Sign s) { return {Magnitude::Const, s}; }
    static RateClass bounded() { return {Magnitude::BoundedIndeterminate, Sign::PlusMinus}; }
    static RateClass inv_sqrt_n() { return {Magnitude::InvSqrtN, Sign::PlusMinus}; }
    static RateClass inv_n() { return {Magnitude::InvN, Sign::PlusMinus}; }
    static RateClass exp_small() { return {Magnitude::ExpSmall, Sign::PlusMinus}; }
    static RateClass zero() { return {Magnitude::Zero, Sign::PlusMinus}; }
};

// Asymptotic class of a sum of two terms.
RateClass combine(const RateClass& a, const RateClass& b);

struct ParityRate {
    RateClass even;
    RateClass odd;
    bool operator==(const ParityRate&) const = default;
};

// Indexed by n mod 3.
struct ResidueRate {
    std::array<RateClass, 3> per_residue;
    bool operator==(const ResidueRate&) const = default;
};

// Signs of table conditions. With an epsilon, |x| <= epsilon counts as zero.
class Comparator {
public:
    Comparator() = default;
    explicit Comparator(Rational epsilon) : eps_(std::move(epsilon)) {}
    int sign(const Rational& x) const;
    bool has_epsilon() const { return eps_.has_value(); }

private:
    std::optional<Rational> eps_;
};

using Probs = std::array<Rational, 6>;

enum class UtilityRegime { Degenerate, SecondAboveThird, TopOnly };
UtilityRegime utility_regime(const Utility& u);

std::array<Rational, 3> lambda_vector(const Probs& p);
AltSet w_star(const Probs& p, const Comparator& cmp = {});

Probs permute_13(const Probs& p);
Probs permute_23(const Probs& p);

// Row of the two-way table (1..6 for u2 > u3, 1..2 for u2 = u3) read from W's own column.
// fired receives the number of rows whose conditions hold.
int two_way_row_direct(const Probs& p, AltSet W, UtilityRegime regime, const Comparator& cmp, int* fired = nullptr);
int two_way_row_via_permutation(const Probs& p, AltSet W, UtilityRegime regime, const Comparator& cmp);
ParityRate two_way_rate_for_row(int row, UtilityRegime regime);

ParityRate classify_two_way(const Probs& p, const Utility& u, AltSet W, const Comparator& cmp = {});

struct ThreeWayResult {
    RateClass rate;
    int case_index = 0;                // i in {1,2,3}
    std::optional<Rational> f;         // empty when the grid cell is N/A or unused
    std::string g;                     // "Theta(1)" or "O(1/sqrt n)", empty when unused
    bool infeasible = false;
};

int three_way_case(int residue);  // n mod 3 -> i
// f^i from the comparison grid; empty for N/A cells.
std::optional<Rational> three_way_f(const Probs& p, int i, const Comparator& cmp = {});
ThreeWayResult classify_three_way(const Probs& p, const Utility& u, int residue, const Comparator& cmp = {});

struct RateReport {
    std::array<Rational, 3> lambda;
    AltSet w_star = 0;
    std::map<AltSet, ParityRate> two_way;    // {1,2}, {1,3}, {2,3}
    ResidueRate three_way;                   // {1,2,3}
    std::array<RateClass, 6> per_subsequence; // indexed by n mod 6
    RateClass combined;
    std::map<int, std::optional<Rational>> f_values;
    std::map<int, std::string> g_values;
    std::vector<std::string> warnings;

    bool operator==(const RateReport&) const = default;
};

RateReport classify_eadpoa(const Probs& p, const Utility& u, const Comparator& cmp = {});

std::string rate_report_to_json(const RateReport& r, int indent = 2);
RateReport rate_report_from_json(const std::string& text);

struct SlopeFit {
    bool sufficient = false;
    int points = 0;
    double slope = 0.0;      // d log|v| / d log n
    double intercept = 0.0;
    int sign = 0;            // +1, -1, or 0 when mixed
};

struct RateFit {
    SlopeFit all;
    SlopeFit even;
    SlopeFit odd;
    bool insufficient = true;
    std::string verdict;     // "growth", "flat", "decay" or "insufficient-data"
};

RateFit empirical_rate_fit(const std::vector<std::pair<int, double>>& series, int min_points = 4);

}  // namespace itervote
