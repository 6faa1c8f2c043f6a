#pragma once

#include "itervote/core.hpp"

#include <cstddef>

namespace itervote {

struct DynState {
    // votes[r][c]: agents of ranking r currently voting alternative c (both 0-based)
    std::array<std::array<int, 3>, 6> votes{};

    Scores scores() const;
    bool operator==(const DynState&) const = default;
};

struct BrMove {
    int ranking;  // 1..6
    int from;     // 1..3
    int to;       // 1..3
    bool operator==(const BrMove&) const = default;
};

DynState truthful_state(const Histogram& h);
std::vector<BrMove> legal_moves(const DynState& s, const Histogram& h);
DynState apply_move(const DynState& s, const BrMove& m);

// Target a ranking-r agent currently voting x would move to, or -1 (0-based).
int best_response_target(int r, int x, const Scores& s);

struct OracleStats {
    AltSet winners = 0;
    std::size_t states = 0;
    std::size_t transitions = 0;
    int max_depth = 0;                    // longest BR path from the truthful state
    std::size_t monotonicity_violations = 0;
};

constexpr int kDefaultOracleBound = 14;

AltSet br_equilibrium_winners_oracle(const Histogram& h, int max_n = kDefaultOracleBound);
OracleStats run_br_oracle(const Histogram& h, int max_n = kDefaultOracleBound);

AltSet equilibrium_winners(const Histogram& h);
AltSet equilibrium_winners(const Counts& c);

Rational adversarial_loss(const Histogram& h, const Utility& u);
// Loss in units of 1/u.den; no validation, for enumeration loops.
std::int64_t adversarial_loss_scaled(const Counts& c, const ScaledUtility& u);

}  // namespace itervote
