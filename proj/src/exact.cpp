#include "itervote/exact.hpp"

#include "itervote/dynamics.hpp"
#include "itervote/numeric.hpp"
#include "itervote/parallel.hpp"

#include <cmath>
#include <limits>

namespace itervote {

PreferenceDistribution::PreferenceDistribution(std::array<Rational, 6> probs) : p(std::move(probs)) {
    Rational total = 0;
    for (auto& x : p) {
        x.canonicalize();
        if (x < 0) throw invalid_argument("negative ranking probability");
        total += x;
    }
    if (total != 1) throw invalid_argument("ranking probabilities must sum to 1, got " + total.get_str());
}

PreferenceDistribution PreferenceDistribution::impartial_culture() {
    Rational s(1, 6);
    return PreferenceDistribution({s, s, s, s, s, s});
}

bool PreferenceDistribution::strictly_positive() const {
    for (auto& x : p)
        if (x <= 0) return false;
    return true;
}

std::array<double, 6> PreferenceDistribution::as_double() const {
    std::array<double, 6> d{};
    for (int i = 0; i < 6; ++i) d[i] = p[i].get_d();
    return d;
}

mpz_class PreferenceDistribution::common_denominator() const {
    mpz_class d = 1;
    for (auto& x : p) d = lcm(d, mpz_class(x.get_den()));
    return d;
}

std::array<mpz_class, 6> PreferenceDistribution::numerators(const mpz_class& den) const {
    std::array<mpz_class, 6> out;
    for (int i = 0; i < 6; ++i) out[i] = p[i].get_num() * (den / p[i].get_den());
    return out;
}

void for_each_histogram(int n, const std::function<void(const Counts&)>& fn) {
    Counts c{};
    for (c[0] = 0; c[0] <= n; ++c[0])
        for (c[1] = 0; c[1] <= n - c[0]; ++c[1])
            for (c[2] = 0; c[2] <= n - c[0] - c[1]; ++c[2])
                for (c[3] = 0; c[3] <= n - c[0] - c[1] - c[2]; ++c[3])
                    for (c[4] = 0; c[4] <= n - c[0] - c[1] - c[2] - c[3]; ++c[4]) {
                        c[5] = n - c[0] - c[1] - c[2] - c[3] - c[4];
                        fn(c);
                    }
}

Rational histogram_probability(const PreferenceDistribution& pi, const Histogram& h) {
    int n = h.n();
    mpz_class coef;
    mpz_fac_ui(coef.get_mpz_t(), n);
    Rational prob = 1;
    for (int i = 0; i < 6; ++i) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), h.counts[i]);
        coef /= f;
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), pi.p[i].get_num_mpz_t(), h.counts[i]);
        mpz_pow_ui(den.get_mpz_t(), pi.p[i].get_den_mpz_t(), h.counts[i]);
        prob *= Rational(num, den);
    }
    prob *= coef;
    prob.canonicalize();
    return prob;
}

double histogram_log_probability(const std::array<double, 6>& pi, const Counts& c) {
    int n = 0;
    for (int x : c) n += x;
    long double lp = std::lgamma(static_cast<long double>(n) + 1);
    for (int i = 0; i < 6; ++i) {
        lp -= std::lgamma(static_cast<long double>(c[i]) + 1);
        if (c[i] > 0) {
            if (pi[i] <= 0) return -std::numeric_limits<double>::infinity();
            lp += c[i] * std::log(static_cast<long double>(pi[i]));
        }
    }
    return static_cast<double>(lp);
}

namespace {

Scores scores_of(const Counts& c) {
    Scores s{};
    for (int r = 0; r < kRankings; ++r) s[top_of(r)] += c[r];
    return s;
}

mpz_class pow_z(const mpz_class& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

void addmul_si(mpz_class& acc, const mpz_class& w, std::int64_t k) {
    if (k >= 0)
        mpz_addmul_ui(acc.get_mpz_t(), w.get_mpz_t(), static_cast<unsigned long>(k));
    else
        mpz_submul_ui(acc.get_mpz_t(), w.get_mpz_t(), static_cast<unsigned long>(-k));
}

double log_or_ninf(double x) { return x > 0 ? std::log(x) : -std::numeric_limits<double>::infinity(); }

// c * log(p) with 0 * log(0) = 0
long double xlogp(int c, double logp) { return c == 0 ? 0.0L : c * static_cast<long double>(logp); }

std::vector<Scores> score_vectors_with_pw(int n, AltSet W) {
    std::vector<Scores> out;
    for (int s1 = 0; s1 <= n; ++s1)
        for (int s2 = 0; s2 <= n - s1; ++s2) {
            Scores s{s1, s2, n - s1 - s2};
            if (potential_winners(s) == W) out.push_back(s);
        }
    return out;
}

void check_W(AltSet W) {
    if (W == 0 || W > 7) throw invalid_argument("alternative subset out of range");
    if (alt_count(W) < 2) throw invalid_argument("subset must contain at least two alternatives");
}

}  // namespace

EadpoaResult exact_eadpoa(const PreferenceDistribution& pi, const Utility& u, int n, Mode mode, int threads,
                          int bound) {
    if (n < 1) throw invalid_argument("n must be positive");
    if (n > bound)
        throw resource_limit("enumeration bound exceeded: n=" + std::to_string(n) + " > " + std::to_string(bound));
    ScaledUtility su(u);
    EadpoaResult res;
    res.n = n;
    res.mode = mode;
    const mpz_class D = pi.common_denominator();
    const auto num = pi.numerators(D);

    struct Slice {
        std::array<mpz_class, 8> acc;
        std::array<CompensatedSum, 8> facc;
    };
    std::vector<Slice> slices(n + 1);

    if (mode == Mode::Exact) {
        auto C = binomial_table(n);
        // T[i][m][k] = C(m,k) * num_i^k
        std::array<std::vector<std::vector<mpz_class>>, 6> T;
        for (int i = 0; i < 6; ++i) {
            std::vector<mpz_class> pw(n + 1);
            pw[0] = 1;
            for (int k = 1; k <= n; ++k) pw[k] = pw[k - 1] * num[i];
            T[i].resize(n + 1);
            for (int m = 0; m <= n; ++m) {
                T[i][m].resize(m + 1);
                for (int k = 0; k <= m; ++k) T[i][m][k] = C[m][k] * pw[k];
            }
        }
        auto lim = [&](int i, int rem) { return num[i] == 0 ? 0 : rem; };
        parallel_for(n + 1, threads, [&](int c1) {
            if (c1 > lim(0, n)) return;
            Slice& sl = slices[c1];
            Counts c{};
            c[0] = c1;
            mpz_class w1 = T[0][n][c1], w2, w3, w4, w5;
            int r1 = n - c1;
            for (c[1] = 0; c[1] <= lim(1, r1); ++c[1]) {
                w2 = w1 * T[1][r1][c[1]];
                int r2 = r1 - c[1];
                for (c[2] = 0; c[2] <= lim(2, r2); ++c[2]) {
                    w3 = w2 * T[2][r2][c[2]];
                    int r3 = r2 - c[2];
                    for (c[3] = 0; c[3] <= lim(3, r3); ++c[3]) {
                        w4 = w3 * T[3][r3][c[3]];
                        int r4 = r3 - c[3];
                        for (c[4] = 0; c[4] <= lim(4, r4); ++c[4]) {
                            c[5] = r4 - c[4];
                            if (c[5] > 0 && num[5] == 0) continue;
                            std::int64_t loss = adversarial_loss_scaled(c, su);
                            if (loss == 0) continue;
                            w5 = w4 * T[4][r4][c[4]];
                            w5 *= T[5][c[5]][c[5]];
                            addmul_si(sl.acc[potential_winners(scores_of(c))], w5, loss);
                        }
                    }
                }
            }
        });
        mpz_class denom = pow_z(D, n) * su.den;
        std::array<mpz_class, 8> tot;
        for (auto& sl : slices)
            for (int w = 0; w < 8; ++w) tot[w] += sl.acc[w];
        Rational value = 0;
        for (int w = 1; w < 8; ++w) {
            if (alt_count(static_cast<AltSet>(w)) < 2) continue;
            Rational v(tot[w], denom);
            v.canonicalize();
            value += v;
            res.per_W[static_cast<AltSet>(w)] = Value{mode, v, v.get_d()};
        }
        res.value = Value{mode, value, value.get_d()};
        return res;
    }

    const auto pd = pi.as_double();
    std::array<double, 6> lp{};
    for (int i = 0; i < 6; ++i) lp[i] = log_or_ninf(pd[i]);
    const auto lf = log_factorials(n);
    const double uden = su.den.get_d();
    auto lim = [&](int i, int rem) { return pd[i] == 0 ? 0 : rem; };
    parallel_for(n + 1, threads, [&](int c1) {
        if (c1 > lim(0, n)) return;
        Slice& sl = slices[c1];
        Counts c{};
        c[0] = c1;
        long double l1 = lf[n] - lf[c1] + xlogp(c1, lp[0]);
        int r1 = n - c1;
        for (c[1] = 0; c[1] <= lim(1, r1); ++c[1]) {
            long double l2 = l1 - lf[c[1]] + xlogp(c[1], lp[1]);
            int r2 = r1 - c[1];
            for (c[2] = 0; c[2] <= lim(2, r2); ++c[2]) {
                long double l3 = l2 - lf[c[2]] + xlogp(c[2], lp[2]);
                int r3 = r2 - c[2];
                for (c[3] = 0; c[3] <= lim(3, r3); ++c[3]) {
                    long double l4 = l3 - lf[c[3]] + xlogp(c[3], lp[3]);
                    int r4 = r3 - c[3];
                    for (c[4] = 0; c[4] <= lim(4, r4); ++c[4]) {
                        c[5] = r4 - c[4];
                        if (c[5] > 0 && pd[5] == 0) continue;
                        std::int64_t loss = adversarial_loss_scaled(c, su);
                        if (loss == 0) continue;
                        long double l = l4 - lf[c[4]] + xlogp(c[4], lp[4]) - lf[c[5]] + xlogp(c[5], lp[5]);
                        double w = static_cast<double>(std::exp(l));
                        sl.facc[potential_winners(scores_of(c))].add(w * static_cast<double>(loss) / uden);
                    }
                }
            }
        }
    });
    CompensatedSum total;
    for (int w = 1; w < 8; ++w) {
        if (alt_count(static_cast<AltSet>(w)) < 2) continue;
        CompensatedSum s;
        for (auto& sl : slices) s.add(sl.facc[w].value());
        total.add(s.value());
        res.per_W[static_cast<AltSet>(w)] = Value{mode, Rational(0), s.value()};
    }
    res.value = Value{mode, Rational(0), total.value()};
    return res;
}

Value poa_bar(const PreferenceDistribution& pi, const Utility& u, int n, AltSet W, Mode mode, int threads, int bound) {
    check_W(W);
    if (n < 1) throw invalid_argument("n must be positive");
    if (n > bound)
        throw resource_limit("poa_bar bound exceeded: n=" + std::to_string(n) + " > " + std::to_string(bound));
    ScaledUtility su(u);
    auto vecs = score_vectors_with_pw(n, W);
    const int nv = static_cast<int>(vecs.size());

    if (mode == Mode::Exact) {
        const mpz_class D = pi.common_denominator();
        const auto num = pi.numerators(D);
        std::vector<mpz_class> part(nv);
        // pairs of rankings sharing a top choice: (R1,R5), (R2,R6), (R4,R3) with c3 counting R3
        parallel_for(nv, threads, [&](int idx) {
            const Scores& s = vecs[idx];
            auto split = [&](int m, const mpz_class& a, const mpz_class& b) {
                std::vector<mpz_class> out(m + 1);
                for (int k = 0; k <= m; ++k) out[k] = binomial(m, k) * pow_z(a, k) * pow_z(b, m - k);
                return out;
            };
            auto A1 = split(s[0], num[0], num[4]);
            auto A2 = split(s[1], num[1], num[5]);
            auto A3 = split(s[2], num[2], num[3]);
            mpz_class acc1, acc2, acc3;
            Counts c{};
            for (int c1 = 0; c1 <= s[0]; ++c1) {
                if (A1[c1] == 0) continue;
                c[0] = c1;
                c[4] = s[0] - c1;
                acc2 = 0;
                for (int c2 = 0; c2 <= s[1]; ++c2) {
                    if (A2[c2] == 0) continue;
                    c[1] = c2;
                    c[5] = s[1] - c2;
                    acc3 = 0;
                    for (int c3 = 0; c3 <= s[2]; ++c3) {
                        if (A3[c3] == 0) continue;
                        c[2] = c3;
                        c[3] = s[2] - c3;
                        std::int64_t loss = adversarial_loss_scaled(c, su);
                        if (loss != 0) addmul_si(acc3, A3[c3], loss);
                    }
                    acc2 += A2[c2] * acc3;
                }
                acc1 += A1[c1] * acc2;
            }
            part[idx] = acc1 * binomial(n, s[0]) * binomial(n - s[0], s[1]);
        });
        mpz_class tot;
        for (auto& x : part) tot += x;
        Rational v(tot, pow_z(D, n) * su.den);
        v.canonicalize();
        return Value{mode, v, v.get_d()};
    }

    const auto pd = pi.as_double();
    const auto lf = log_factorials(n);
    const double uden = su.den.get_d();
    std::array<double, 3> lam{pd[0] + pd[4], pd[1] + pd[5], pd[2] + pd[3]};
    std::vector<double> part(nv, 0.0);
    parallel_for(nv, threads, [&](int idx) {
        const Scores& s = vecs[idx];
        long double lm = lf[n] - lf[s[0]] - lf[s[1]] - lf[s[2]];
        for (int k = 0; k < 3; ++k) lm += xlogp(s[k], log_or_ninf(lam[k]));
        if (!std::isfinite(static_cast<double>(lm))) return;
        auto split = [&](int m, double a, double b) {
            std::vector<double> out(m + 1, 0.0);
            double tot = a + b;
            double la = log_or_ninf(a / tot), lb = log_or_ninf(b / tot);
            for (int k = 0; k <= m; ++k) {
                long double l = lf[m] - lf[k] - lf[m - k] + xlogp(k, la) + xlogp(m - k, lb);
                out[k] = static_cast<double>(std::exp(l));
            }
            return out;
        };
        auto A1 = split(s[0], pd[0], pd[4]);
        auto A2 = split(s[1], pd[1], pd[5]);
        auto A3 = split(s[2], pd[2], pd[3]);
        CompensatedSum acc1;
        Counts c{};
        for (int c1 = 0; c1 <= s[0]; ++c1) {
            if (A1[c1] == 0) continue;
            c[0] = c1;
            c[4] = s[0] - c1;
            CompensatedSum acc2;
            for (int c2 = 0; c2 <= s[1]; ++c2) {
                if (A2[c2] == 0) continue;
                c[1] = c2;
                c[5] = s[1] - c2;
                CompensatedSum acc3;
                for (int c3 = 0; c3 <= s[2]; ++c3) {
                    if (A3[c3] == 0) continue;
                    c[2] = c3;
                    c[3] = s[2] - c3;
                    std::int64_t loss = adversarial_loss_scaled(c, su);
                    if (loss != 0) acc3.add(A3[c3] * static_cast<double>(loss));
                }
                acc2.add(A2[c2] * acc3.value());
            }
            acc1.add(A1[c1] * acc2.value());
        }
        part[idx] = static_cast<double>(std::exp(lm)) * acc1.value() / uden;
    });
    CompensatedSum tot;
    for (double x : part) tot.add(x);
    return Value{mode, Rational(0), tot.value()};
}

Value tie_probability(const PreferenceDistribution& pi, int n, AltSet W, Mode mode) {
    check_W(W);
    if (n < 1) throw invalid_argument("n must be positive");
    auto vecs = score_vectors_with_pw(n, W);
    if (mode == Mode::Exact) {
        const mpz_class D = pi.common_denominator();
        const auto num = pi.numerators(D);
        std::array<mpz_class, 3> L{num[0] + num[4], num[1] + num[5], num[2] + num[3]};
        mpz_class tot;
        for (auto& s : vecs)
            tot += binomial(n, s[0]) * binomial(n - s[0], s[1]) * pow_z(L[0], s[0]) * pow_z(L[1], s[1]) *
                   pow_z(L[2], s[2]);
        Rational v(tot, pow_z(D, n));
        v.canonicalize();
        return Value{mode, v, v.get_d()};
    }
    const auto pd = pi.as_double();
    const auto lf = log_factorials(n);
    std::array<double, 3> ll{log_or_ninf(pd[0] + pd[4]), log_or_ninf(pd[1] + pd[5]), log_or_ninf(pd[2] + pd[3])};
    CompensatedSum tot;
    for (auto& s : vecs) {
        long double l = lf[n] - lf[s[0]] - lf[s[1]] - lf[s[2]];
        for (int k = 0; k < 3; ++k) l += xlogp(s[k], ll[k]);
        tot.add(static_cast<double>(std::exp(l)));
    }
    return Value{mode, Rational(0), tot.value()};
}

}  // namespace itervote
