#pragma once

#include "itervote/core.hpp"

namespace itervote {

// A x <= b over ranking counts in canonical order.
struct TiePolyhedron {
    AltSet W = 0;
    int winner = 0;  // 1-based, the truthful plurality winner this variant encodes
    std::vector<std::array<int, 6>> A;
    std::vector<int> b;

    bool contains(const Counts& x) const;
};

TiePolyhedron build_tie_polyhedron(AltSet W, int winner);

// All |W| winner variants; a histogram has PW(truthful) = W iff it lies in one of them.
std::vector<TiePolyhedron> tie_polyhedra(AltSet W);

}  // namespace itervote
