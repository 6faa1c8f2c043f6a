#include <doctest.h>

#include "itervote/exact.hpp"
#include "itervote/rates.hpp"
#include "random_pi.hpp"

#include <cmath>

using namespace itervote;

namespace {

Probs q6(long a, long b, long c, long d, long e, long f, long den) {
    return {Rational(a, den), Rational(b, den), Rational(c, den), Rational(d, den), Rational(e, den), Rational(f, den)};
}

const Probs kIC = q6(1, 1, 1, 1, 1, 1, 6);
const Probs kPiPrime = q6(35, 25, 10, 10, 5, 15, 100);
const AltSet k12 = from_list({1, 2}), k13 = from_list({1, 3}), k23 = from_list({2, 3});

}  // namespace

TEST_SUITE("rates") {

TEST_CASE("lambda and argmax set") {
    auto l = lambda_vector(kPiPrime);
    CHECK(l[0] == Rational(2, 5));
    CHECK(l[1] == Rational(2, 5));
    CHECK(l[2] == Rational(1, 5));
    CHECK(w_star(kPiPrime) == k12);
    CHECK(w_star(kIC) == 7);
    Probs unanimous{1, 0, 0, 0, 0, 0};
    CHECK(lambda_vector(unanimous) == std::array<Rational, 3>{1, 0, 0});
    CHECK(w_star(unanimous) == from_list({1}));
}

TEST_CASE("rate class strings round-trip") {
    for (auto c : {RateClass::sqrt_n(Sign::Plus), RateClass::sqrt_n(Sign::Minus), RateClass::constant(Sign::Plus),
                   RateClass::constant(Sign::Minus), RateClass::bounded(), RateClass::inv_sqrt_n(), RateClass::inv_n(),
                   RateClass::exp_small(), RateClass::zero()})
        CHECK(RateClass::parse(c.str()) == c);
    CHECK(RateClass::constant(Sign::Minus).str() == "-Theta(1)");
    CHECK(RateClass::sqrt_n(Sign::Plus).str() == "+Theta(sqrt n)");
    CHECK_THROWS_AS(RateClass::parse("Theta(n)"), invalid_argument);
}

TEST_CASE("combination algebra") {
    CHECK(combine(RateClass::constant(Sign::Minus), RateClass::inv_sqrt_n()) == RateClass::constant(Sign::Minus));
    CHECK(combine(RateClass::constant(Sign::Minus), RateClass::constant(Sign::Plus)) == RateClass::bounded());
    CHECK(combine(RateClass::sqrt_n(Sign::Minus), RateClass::constant(Sign::Plus)) == RateClass::sqrt_n(Sign::Minus));
    CHECK(combine(RateClass::sqrt_n(Sign::Minus), RateClass::sqrt_n(Sign::Plus)).sign == Sign::PlusMinus);
    CHECK(combine(RateClass::exp_small(), RateClass::zero()) == RateClass::exp_small());
    CHECK(combine(RateClass::inv_n(), RateClass::inv_sqrt_n()) == RateClass::inv_sqrt_n());
}

TEST_CASE("two-way table rows") {
    Utility u(2, 1, 0);
    CHECK(classify_two_way(kIC, u, k12) == ParityRate{RateClass::constant(Sign::Minus), RateClass::constant(Sign::Minus)});
    // pi3 = pi4 and 4 pi1 + pi2 + 3 pi5 > 2
    Probs row1 = q6(40, 30, 5, 5, 5, 15, 100);
    CHECK(classify_two_way(row1, u, k12) == ParityRate{RateClass::constant(Sign::Plus), RateClass::constant(Sign::Minus)});
    // pi3 != pi4 and pi1 + 2 pi4 = pi2 + 2 pi3
    Probs row4 = q6(10, 30, 5, 15, 30, 10, 100);
    CHECK(classify_two_way(row4, u, k12) == ParityRate{RateClass::inv_sqrt_n(), RateClass::inv_sqrt_n()});
    Probs row5 = q6(20, 20, 15, 5, 20, 20, 100);
    CHECK(classify_two_way(row5, u, k12).even == RateClass::sqrt_n(Sign::Plus));
    Probs row6 = q6(30, 10, 12, 8, 10, 30, 100);
    CHECK(classify_two_way(row6, u, k12).even == RateClass::sqrt_n(Sign::Minus));
}

TEST_CASE("top-only utility regime") {
    Utility u(1, 0, 0);
    Probs row5 = q6(20, 20, 15, 5, 20, 20, 100);
    CHECK(classify_two_way(row5, u, k12) == ParityRate{RateClass::exp_small(), RateClass::exp_small()});
    Probs flipped = q6(20, 20, 5, 15, 20, 20, 100);
    CHECK(classify_two_way(flipped, u, k12) == ParityRate{RateClass::inv_sqrt_n(), RateClass::inv_sqrt_n()});
}

TEST_CASE("pairs outside the argmax set are exponentially small") {
    Utility u(2, 1, 0);
    CHECK(classify_two_way(kPiPrime, u, k13).even == RateClass::exp_small());
    CHECK(classify_two_way(kPiPrime, u, k23).odd == RateClass::exp_small());
    CHECK_THROWS_AS(classify_two_way(q6(1, 1, 1, 1, 2, 0, 6), u, k12), invalid_argument);
}

TEST_CASE("three-way classification") {
    Utility u(2, 1, 0);
    ThreeWayResult r = classify_three_way(kIC, u, 0);
    CHECK(r.case_index == 1);
    REQUIRE(r.f.has_value());
    CHECK(*r.f == 0);
    CHECK(r.g == "O(1/sqrt n)");
    CHECK(r.rate == RateClass::inv_sqrt_n());
    // pi1 < pi5 and pi2 < pi6 in the winner-3 case (n = 1 mod 3)
    Probs p = q6(1, 1, 2, 2, 3, 3, 12);
    ThreeWayResult e = classify_three_way(p, u, 1);
    CHECK(e.case_index == 3);
    CHECK(e.rate == RateClass::exp_small());
    CHECK(classify_three_way(kPiPrime, u, 0).rate == RateClass::exp_small());
    CHECK(three_way_case(0) == 1);
    CHECK(three_way_case(2) == 2);
    CHECK(three_way_case(1) == 3);
}

TEST_CASE("full reports") {
    Utility u(2, 1, 0);
    RateReport ic = classify_eadpoa(kIC, u);
    CHECK(ic.combined == RateClass::constant(Sign::Minus));
    CHECK(classify_eadpoa(kPiPrime, Utility(1, 1, 1)).combined == RateClass::zero());
    Probs unique = q6(50, 10, 10, 5, 20, 5, 100);
    CHECK(classify_eadpoa(unique, u).combined == RateClass::exp_small());
    // rate classes do not depend on the scale of u
    for (const Probs& p : {kIC, kPiPrime, unique})
        CHECK(classify_eadpoa(p, Utility(6, 3, 0)) == classify_eadpoa(p, u));
}

TEST_CASE("non-canonical rationals classify like canonical ones") {
    Probs raw = q6(35, 25, 10, 10, 5, 15, 100);
    Probs reduced{Rational(7, 20), Rational(1, 4), Rational(1, 10), Rational(1, 10), Rational(1, 20), Rational(3, 20)};
    CHECK(classify_eadpoa(raw, Utility(2, 1, 0)) == classify_eadpoa(reduced, Utility(2, 1, 0)));
    CHECK(w_star(raw) == k12);
}

TEST_CASE("JSON round trip") {
    for (const Probs& p : {kIC, kPiPrime, q6(20, 20, 15, 5, 20, 20, 100)}) {
        RateReport r = classify_eadpoa(p, Utility(2, 1, 0));
        CHECK(rate_report_from_json(rate_report_to_json(r)) == r);
    }
    RateReport eps = classify_eadpoa(kIC, Utility(2, 1, 0), Comparator(Rational(1, 1000000)));
    CHECK_FALSE(eps.warnings.empty());
    CHECK(rate_report_from_json(rate_report_to_json(eps)) == eps);
}

TEST_CASE("permuted and direct table columns agree") {
    std::mt19937_64 rng(3);
    Utility u(2, 1, 0), top(1, 0, 0);
    for (int i = 0; i < 2000; ++i) {
        Probs a = testing::random_two_way_pi(rng, k13);
        CHECK(classify_two_way(a, u, k13) == classify_two_way(permute_13(a), u, k12));
        CHECK(classify_two_way(a, top, k13) == classify_two_way(permute_13(a), top, k12));
        Probs b = testing::random_two_way_pi(rng, k23);
        CHECK(classify_two_way(b, u, k23) == classify_two_way(permute_23(b), u, k12));
        int fired = 0;
        two_way_row_direct(b, k23, UtilityRegime::SecondAboveThird, Comparator{}, &fired);
        CHECK(fired == 1);
    }
}

TEST_CASE("definite constant classes match the exact sign") {
    Utility u(2, 1, 0);
    auto ic = PreferenceDistribution::impartial_culture();
    CHECK(poa_bar(ic, u, 120, k12).exact < 0);
    CHECK(poa_bar(ic, u, 121, k12).exact < 0);
}

TEST_CASE("the sqrt(n) row can carry the opposite sign") {
    // satisfies the +Theta(sqrt n) row conditions, yet the exact values are negative and growing
    Probs p = q6(20, 20, 15, 5, 20, 20, 100);
    CHECK(classify_two_way(p, Utility(2, 1, 0), k12).even == RateClass::sqrt_n(Sign::Plus));
    PreferenceDistribution pi(p);
    double v40 = poa_bar(pi, Utility(2, 1, 0), 40, k12, Mode::Float).approx;
    double v160 = poa_bar(pi, Utility(2, 1, 0), 160, k12, Mode::Float).approx;
    CHECK(v40 < 0);
    CHECK(v160 < 1.5 * v40);
}

TEST_CASE("empirical rate fit") {
    auto ic = PreferenceDistribution::impartial_culture();
    std::vector<std::pair<int, double>> series;
    for (int n = 7; n <= 30; ++n) series.emplace_back(n, exact_eadpoa(ic, Utility(2, 1, 0), n, Mode::Float).value.approx);
    RateFit f = empirical_rate_fit(series);
    CHECK(f.even.sign == -1);
    CHECK(f.odd.sign == -1);

    std::vector<std::pair<int, double>> root;
    for (int n : {100, 200, 400, 800, 1600}) root.emplace_back(n, 3.0 * std::sqrt(n));
    RateFit g = empirical_rate_fit(root);
    CHECK(g.all.slope == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(g.verdict == "growth");

    std::vector<std::pair<int, double>> zeros{{10, 0.0}, {20, 0.0}, {30, 0.0}, {40, 0.0}};
    CHECK(empirical_rate_fit(zeros).insufficient);
    CHECK(empirical_rate_fit(zeros).verdict == "insufficient-data");
}

}
