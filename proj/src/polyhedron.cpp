#include "itervote/polyhedron.hpp"

namespace itervote {

namespace {

// Row of s_a - s_b in ranking-count variables.
std::array<int, 6> score_difference(int a, int b) {
    std::array<int, 6> row{};
    for (int r = 0; r < kRankings; ++r) {
        if (top_of(r) == a) row[r] += 1;
        if (top_of(r) == b) row[r] -= 1;
    }
    return row;
}

}  // namespace

bool TiePolyhedron::contains(const Counts& x) const {
    for (std::size_t i = 0; i < A.size(); ++i) {
        long lhs = 0;
        for (int r = 0; r < kRankings; ++r) lhs += static_cast<long>(A[i][r]) * x[r];
        if (lhs > b[i]) return false;
    }
    return true;
}

TiePolyhedron build_tie_polyhedron(AltSet W, int winner) {
    if (W == 0 || W > 7) throw invalid_argument("alternative subset out of range");
    if (winner < 1 || winner > 3 || !(W & alt_bit(winner - 1)))
        throw invalid_argument("winner variant must belong to W");
    TiePolyhedron P;
    P.W = W;
    P.winner = winner;
    const int w = winner - 1;
    // members ordered before the winner trail it by one vote, later members equal it
    auto delta = [&](int c) { return c < w ? 1 : 0; };
    for (int a = 0; a < kAlts; ++a)
        for (int b = 0; b < kAlts; ++b) {
            if (a == b || !(W & alt_bit(a)) || !(W & alt_bit(b))) continue;
            P.A.push_back(score_difference(a, b));
            P.b.push_back(delta(b) - delta(a));
        }
    for (int out = 0; out < kAlts; ++out) {
        if (W & alt_bit(out)) continue;
        for (int v = 0; v < kAlts; ++v) {
            if (!(W & alt_bit(v))) continue;
            P.A.push_back(score_difference(out, v));
            P.b.push_back(-(1 + (out < w ? 1 : 0)) + delta(v));
        }
    }
    return P;
}

std::vector<TiePolyhedron> tie_polyhedra(AltSet W) {
    std::vector<TiePolyhedron> out;
    for (int c : to_list(W)) out.push_back(build_tie_polyhedron(W, c));
    return out;
}

}  // namespace itervote
