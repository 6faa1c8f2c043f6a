#include <doctest.h>

#include "itervote/core.hpp"

using namespace itervote;

TEST_SUITE("core") {

TEST_CASE("plurality winner breaks ties toward the lower index") {
    CHECK(plurality_winner({3, 3, 1}) == 0);
    CHECK(plurality_winner({0, 5, 5}) == 1);
    CHECK(plurality_winner({1, 2, 4}) == 2);
}

TEST_CASE("potential winners") {
    CHECK(potential_winners({2, 2, 1}) == from_list({1, 2}));
    CHECK(potential_winners({2, 2, 2}) == from_list({1, 2, 3}));
    CHECK(potential_winners({5, 3, 4}) == from_list({1}));
    // an earlier alternative one vote behind wins the tie after one more vote
    CHECK(potential_winners({4, 5, 0}) == from_list({1, 2}));

    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b)
            for (int c = 0; c <= 6; ++c) {
                Scores s{a, b, c};
                AltSet pw = potential_winners(s);
                CHECK((pw & alt_bit(plurality_winner(s))) != 0);
                CHECK(alt_count(pw) >= 1);
                CHECK(alt_count(pw) <= 3);
                // a member wins after receiving one extra vote
                for (int x : to_list(pw)) {
                    Scores t = s;
                    if (x - 1 != plurality_winner(s)) ++t[x - 1];
                    CHECK(plurality_winner(t) == x - 1);
                }
            }
}

TEST_CASE("pairwise counts") {
    Histogram h({1, 1, 1, 0, 0, 0});
    CHECK(pairwise_count(h, 2, 1) == 2);
    CHECK(pairwise_count(Histogram({9, 0, 0, 0, 0, 0}), 1, 3) == 9);
    CHECK(pairwise_count(Histogram({5, 5, 2, 0, 0, 0}), 2, 1) == 7);
    CHECK_THROWS_AS(pairwise_count(h, 2, 2), invalid_argument);

    Histogram g({3, 1, 4, 1, 5, 9});
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            if (a != b) CHECK(pairwise_count(g, a, b) + pairwise_count(g, b, a) == g.n());
}

TEST_CASE("social welfare") {
    Histogram h({1, 1, 1, 0, 0, 0});
    Utility u(2, 1, 0);
    CHECK(social_welfare(h, u, 1) == 2);
    CHECK(social_welfare(h, u, 3) == 3);
    Histogram g({3, 1, 4, 1, 5, 9});
    for (int c = 1; c <= 3; ++c) {
        CHECK(social_welfare(g, Utility(1, 1, 1), c) == g.n());
        Rational base = social_welfare(g, Utility(Rational(5, 2), 1, Rational(1, 3)), c);
        CHECK(social_welfare(g, Utility(5, 2, Rational(2, 3)), c) == 2 * base);
        CHECK(social_welfare(g, Utility(Rational(7, 2), 2, Rational(4, 3)), c) == base + g.n());
    }
}

TEST_CASE("truthful votes") {
    CHECK(truthful_votes(Histogram({1, 1, 1, 0, 0, 0})) == Scores{1, 1, 1});
    CHECK(truthful_votes(Histogram({0, 0, 0, 0, 4, 0})) == Scores{4, 0, 0});
    CHECK(truthful_votes(Histogram({5, 5, 2, 0, 0, 0})) == Scores{5, 5, 2});
}

TEST_CASE("canonical ranking table") {
    const int expected[6][3] = {{1, 2, 3}, {2, 3, 1}, {3, 2, 1}, {3, 1, 2}, {1, 3, 2}, {2, 1, 3}};
    for (int r = 0; r < 6; ++r)
        for (int k = 0; k < 3; ++k) CHECK(kOrder[r][k] + 1 == expected[r][k]);
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(Histogram({0, 0, 0, 0, 0, 0}), invalid_argument);
    CHECK_THROWS_AS(Histogram({1, -1, 0, 0, 0, 0}), invalid_argument);
    CHECK_THROWS_AS(Utility(1, 2, 0), invalid_argument);
    CHECK_THROWS_AS(Utility(1, 0, -1), invalid_argument);
    CHECK_NOTHROW(Utility(1, 1, 1));
    CHECK_NOTHROW(Utility(1, 0, 0));
    CHECK(set_name(from_list({1, 3})) == "{1,3}");
}

}
