#pragma once

#include "itervote/rates.hpp"

#include <random>

namespace itervote::testing {

// Rankings topping each alternative (0-based).
constexpr int kTopPairs[3][2] = {{0, 4}, {1, 5}, {2, 3}};

inline void split(std::mt19937_64& rng, Probs& p, int alt, long total, long den) {
    const int a = kTopPairs[alt][0], b = kTopPairs[alt][1];
    long x;
    if (total % 2 == 0 && rng() % 4 == 0) {
        x = total / 2;
    } else {
        x = 1 + static_cast<long>(rng() % static_cast<unsigned long>(total - 1));
    }
    p[a] = Rational(x, den);
    p[b] = Rational(total - x, den);
    p[a].canonicalize();
    p[b].canonicalize();
}

// Strictly positive rational pi whose lambda values for the two members of W are equal and at least the third.
inline Probs random_two_way_pi(std::mt19937_64& rng, AltSet W, long den = 720) {
    std::vector<int> in = to_list(W);
    int out = 6 - in[0] - in[1];
    long lo = (den + 2) / 3, hi = (den - 2) / 2;
    long L = lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
    Probs p;
    split(rng, p, in[0] - 1, L, den);
    split(rng, p, in[1] - 1, L, den);
    split(rng, p, out - 1, den - 2 * L, den);
    return p;
}

// Strictly positive rational pi with lambda = (1/3, 1/3, 1/3).
inline Probs random_three_way_pi(std::mt19937_64& rng, long den = 720) {
    Probs p;
    for (int alt = 0; alt < 3; ++alt) split(rng, p, alt, den / 3, den);
    return p;
}

}  // namespace itervote::testing
