#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace itervote {

using Rational = mpq_class;

// Alternatives are 1, 2, 3 at the API boundary and 0, 1, 2 internally.
constexpr int kAlts = 3;
constexpr int kRankings = 6;

// R1=(1>2>3) R2=(2>3>1) R3=(3>2>1) R4=(3>1>2) R5=(1>3>2) R6=(2>1>3)
constexpr std::array<std::array<int, 3>, 6> kOrder{{
    {0, 1, 2},
    {1, 2, 0},
    {2, 1, 0},
    {2, 0, 1},
    {0, 2, 1},
    {1, 0, 2},
}};

constexpr int top_of(int r) { return kOrder[r][0]; }

constexpr int rank_position(int r, int c) {
    for (int k = 0; k < 3; ++k)
        if (kOrder[r][k] == c) return k;
    return -1;
}

constexpr bool prefers(int r, int a, int b) { return rank_position(r, a) < rank_position(r, b); }

class invalid_argument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class resource_limit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class infeasible_condition : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bitmask over alternatives; bit c is alternative c+1.
using AltSet = std::uint8_t;

inline AltSet alt_bit(int c) { return static_cast<AltSet>(1u << c); }
inline int alt_count(AltSet s) { return __builtin_popcount(s); }
std::vector<int> to_list(AltSet s);          // 1-based, ascending
AltSet from_list(const std::vector<int>& v);  // 1-based input
std::string set_name(AltSet s);               // "{1,2}"

using Scores = std::array<int, 3>;
using Counts = std::array<int, 6>;

struct Histogram {
    Counts counts{};

    Histogram() = default;
    explicit Histogram(const Counts& c);

    int n() const;
    bool operator==(const Histogram&) const = default;
};

struct Utility {
    std::array<Rational, 3> u;

    Utility(Rational u1, Rational u2, Rational u3);
    bool degenerate() const { return u[0] == u[1] && u[1] == u[2]; }
};

// u scaled to integers: u_k = num[k] / den.
struct ScaledUtility {
    std::array<std::int64_t, 3> num{};
    mpz_class den;
    explicit ScaledUtility(const Utility& u);
};

int plurality_winner(const Scores& s);
AltSet potential_winners(const Scores& s);
int pairwise_count(const Histogram& h, int a, int b);  // 1-based
Rational social_welfare(const Histogram& h, const Utility& u, int c);  // 1-based c
Scores truthful_votes(const Histogram& h);

std::int64_t social_welfare_scaled(const Counts& c, const ScaledUtility& u, int alt);  // 0-based alt

}  // namespace itervote
