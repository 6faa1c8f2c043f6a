#include "itervote/verify.hpp"

#include "itervote/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace itervote {

std::string status_name(Status s) {
    switch (s) {
        case Status::ExactMatch: return "exact-match";
        case Status::WithinTolerance: return "within-tolerance";
        case Status::Violation: return "violation";
    }
    return "?";
}

bool all_pass(const std::vector<IdentityReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](auto& r) { return r.status != Status::Violation; });
}

namespace {

mpz_class pow2(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

Rational rpow(const Rational& b, unsigned long e) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), b.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), b.get_den_mpz_t(), e);
    return Rational(num, den);
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

std::string qs(const Rational& x) { return x.get_str(); }

// sum_{beta=lo}^{hi} C(N,beta) p^beta (1-p)^(N-beta) [beta]
Rational binomial_partial_sum(int N, int lo, int hi, bool weighted, const Rational& p) {
    Rational s = 0;
    Rational one_minus = 1 - p;
    for (int b = std::max(lo, 0); b <= std::min(hi, N); ++b) {
        Rational term = Rational(binomial(N, b)) * rpow(p, b) * rpow(one_minus, N - b);
        if (weighted) term *= b;
        s += term;
    }
    s.canonicalize();
    return s;
}

struct HalfSum {
    int N;
    int lo;
    int hi;
    bool weighted;
    bool upper;  // range sits above the mean at p = 1/2
    Rational rhs;
};

HalfSum half_sum(int k, int q) {
    mpz_class c1 = q >= 1 ? binomial(2 * q - 1, q - 1) : mpz_class(0);
    mpz_class c2 = binomial(2 * q, q);
    switch (k) {
        case 1: return {2 * q, q + 1, 2 * q, false, true, Rational(1, 2) - Rational(c1, pow2(2 * q))};
        case 2: return {2 * q, q + 1, 2 * q, true, true, Rational(q, 2)};
        case 3: return {2 * q + 1, 0, q, false, false, Rational(1, 2)};
        case 4:
            return {2 * q + 1, 0, q, true, false,
                    Rational(2 * q + 1, 4) - Rational(mpz_class(2 * q + 1) * c1, pow2(2 * q + 1))};
        case 5: return {2 * q + 1, q + 1, 2 * q + 1, false, true, Rational(1, 2)};
        case 6:
            return {2 * q + 1, q + 1, 2 * q + 1, true, true,
                    Rational(2 * q + 1, 4) + Rational(mpz_class(2 * q + 1) * c1, pow2(2 * q + 1))};
        case 7: return {2 * q, 0, q - 1, false, false, Rational(1, 2) - Rational(c2, pow2(2 * q + 1))};
        case 8: return {2 * q, 0, q - 1, true, false, Rational(q, 2) - Rational(mpz_class(q) * c2, pow2(2 * q))};
    }
    throw invalid_argument("identity index out of range");
}

// The part of the partial sum that must vanish as q grows when p != 1/2.
Rational vanishing_part(const HalfSum& h, const Rational& p) {
    Rational s = binomial_partial_sum(h.N, h.lo, h.hi, h.weighted, p);
    bool sum_vanishes = (h.upper && p < Rational(1, 2)) || (!h.upper && p > Rational(1, 2));
    if (sum_vanishes) return s;
    Rational mass = h.weighted ? Rational(h.N) * p : Rational(1);
    Rational t = mass - s;
    t.canonicalize();
    return t;
}

IdentityReport exact_report(std::string id, std::map<std::string, std::string> params, Rational lhs, Rational rhs) {
    lhs.canonicalize();
    rhs.canonicalize();
    IdentityReport r;
    r.identity_id = std::move(id);
    r.parameter = std::move(params);
    r.lhs = qs(lhs);
    r.rhs = qs(rhs);
    r.status = lhs == rhs ? Status::ExactMatch : Status::Violation;
    return r;
}

// Enclosure of pi: [kPiLo, kPiLo + 10^-60].
const mpz_class kPiLo("3141592653589793238462643383279502884197169399375105820974944");
const mpz_class kPiScale = [] {
    mpz_class s;
    mpz_ui_pow_ui(s.get_mpz_t(), 10, 60);
    return s;
}();

long double log_binom(const std::vector<long double>& lf, int n, int k) { return lf[n] - lf[k] - lf[n - k]; }

long double floor_q(const Rational& x) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return static_cast<long double>(f.get_si());
}

long ceil_q(const Rational& x) {
    mpz_class f;
    mpz_cdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return f.get_si();
}

}  // namespace

std::vector<IdentityReport> check_binomial_half_sums(int q, const Rational& p) {
    if (q < 1) throw invalid_argument("q must be at least 1");
    if (p <= 0 || p >= 1) throw invalid_argument("p must lie in (0, 1)");
    std::vector<IdentityReport> out;
    for (int k = 1; k <= 8; ++k) {
        HalfSum h = half_sum(k, q);
        std::map<std::string, std::string> params{{"q", std::to_string(q)}, {"p", qs(p)}};
        std::string id = "binomial-half-sum-" + std::to_string(k);
        if (p == Rational(1, 2)) {
            out.push_back(exact_report(id, params, binomial_partial_sum(h.N, h.lo, h.hi, h.weighted, p), h.rhs));
            continue;
        }
        Rational t1 = vanishing_part(h, p);
        Rational t2 = vanishing_part(half_sum(k, 2 * q), p);
        IdentityReport r;
        r.identity_id = id + "-decay";
        r.parameter = params;
        r.lhs = fmt(t2.get_d());
        r.rhs = fmt(t1.get_d());
        bool ok = t1 > 0 && t2 < t1;
        r.status = ok ? Status::WithinTolerance : Status::Violation;
        r.detail = "vanishing part at 2q vs q, ratio " + (t1 > 0 ? fmt(Rational(t2 / t1).get_d()) : std::string("inf"));
        out.push_back(r);
    }
    return out;
}

std::vector<IdentityReport> check_supplementary_sums(int q) {
    if (q < 1) throw invalid_argument("q must be at least 1");
    std::vector<IdentityReport> out;
    std::map<std::string, std::string> params{{"q", std::to_string(q)}};
    Rational half(1, 2);
    mpz_class c1 = binomial(2 * q - 1, q - 1);
    out.push_back(exact_report("odd-lower-half-mass", params, binomial_partial_sum(2 * q - 1, 0, q - 1, false, half),
                               Rational(1, 2)));
    out.push_back(exact_report("odd-lower-half-mean", params, binomial_partial_sum(2 * q - 1, 0, q - 1, true, half),
                               Rational(2 * q - 1, 4) - Rational(mpz_class(q) * c1, pow2(2 * q))));
    out.push_back(exact_report("even-upper-mass", params, binomial_partial_sum(2 * q, q + 1, 2 * q, false, half),
                               Rational(1, 2) - Rational(c1, pow2(2 * q))));
    return out;
}

IdentityReport check_alternating_sum(int u, int t) {
    if (u < 0 || t < 0 || t > u) throw invalid_argument("alternating sum needs 0 <= t <= u");
    mpz_class lhs = 0;
    for (int v = t; v <= u; ++v) lhs += binomial(u, v) * (u - 2 * v);
    return exact_report("alternating-binomial-sum", {{"u", std::to_string(u)}, {"t", std::to_string(t)}},
                        Rational(lhs), Rational(-mpz_class(t) * binomial(u, t)));
}

IdentityReport check_multinomial_square(int n, int q, const Rational& p1) {
    if (n <= 0 || n % 2) throw invalid_argument("n must be a positive even integer");
    if (q < 1 || 6 * q > n - 6) throw invalid_argument("q must lie in [1, n/6 - 1]");
    if (p1 <= 0 || p1 >= Rational(1, 2)) throw invalid_argument("p1 must lie in (0, 1/2)");
    Rational p3 = Rational(1, 2) - p1;
    int h = n / 2;
    mpz_class fn, fa, fq;
    mpz_fac_ui(fn.get_mpz_t(), n);
    mpz_fac_ui(fa.get_mpz_t(), h - q);
    mpz_fac_ui(fq.get_mpz_t(), q);
    Rational lhs = Rational(fn, fa * fa * fq * fq) * rpow(p1, n - 2 * q) * rpow(p3, 2 * q);
    Rational inner = Rational(binomial(h, q)) * rpow(2 * p1, h - q) * rpow(2 * p3, q);
    Rational rhs = Rational(binomial(n, h), pow2(n)) * inner * inner;
    return exact_report("multinomial-square", {{"n", std::to_string(n)}, {"q", std::to_string(q)}, {"p1", qs(p1)}},
                        lhs, rhs);
}

IdentityReport check_wallis_bounds(int n) {
    if (n < 1) throw invalid_argument("n must be positive");
    mpz_class c = binomial(2 * n, n);
    mpz_class c2 = c * c;
    mpz_class p16;
    mpz_ui_pow_ui(p16.get_mpz_t(), 16, n);
    const mpz_class pi_hi = kPiLo + 1;
    // upper: M^2 * 2(2n+1) <= pi ; lower: pi <= M^2 (2n+1)^2 / n, with M = 4^n / ((2n+1) C(2n,n))
    bool upper = 2 * p16 * kPiScale <= kPiLo * (2 * n + 1) * c2;
    bool lower = p16 * kPiScale >= pi_hi * n * c2;
    long double lf_m = 2.0L * n * std::log(2.0L) - std::log(2.0L * n + 1) -
                       (std::lgamma(2.0L * n + 1) - 2 * std::lgamma(static_cast<long double>(n) + 1));
    long double m = std::exp(lf_m);
    long double ub = std::sqrt(M_PIl / (2.0L * (2 * n + 1)));
    long double lb = std::sqrt(2.0L * n / (2 * n + 1)) * ub;
    IdentityReport r;
    r.identity_id = "wallis-sandwich";
    r.parameter = {{"n", std::to_string(n)}};
    r.lhs = fmt(static_cast<double>(m));
    r.rhs = "[" + fmt(static_cast<double>(lb)) + ", " + fmt(static_cast<double>(ub)) + "]";
    r.status = (upper && lower) ? Status::ExactMatch : Status::Violation;
    r.detail = "integer comparison against a 60-digit enclosure of pi";
    return r;
}

bool wallis_as_printed_holds(int n) {
    if (n < 1) throw invalid_argument("n must be positive");
    mpz_class c = binomial(2 * n, n);
    mpz_class c2 = c * c;
    mpz_class p16;
    mpz_ui_pow_ui(p16.get_mpz_t(), 16, n);
    // upper: 16^n pi <= 2(2n+1) C^2 ; lower: 4n C^2 <= pi 16^n
    bool upper = p16 * (kPiLo + 1) <= 2 * kPiScale * (2 * n + 1) * c2;
    bool lower = mpz_class(4 * n) * kPiScale * c2 <= p16 * kPiLo;
    return upper && lower;
}

std::vector<IdentityReport> check_trinomial_rate(const std::vector<int>& n_list, double tolerance) {
    std::vector<IdentityReport> out;
    double lo = INFINITY, hi = 0;
    for (int n : n_list) {
        if (n < 1 || n > 10000) throw invalid_argument("trinomial probe needs 1 <= n <= 10^4");
        long double l = std::lgamma(3.0L * n + 1) - 3 * std::lgamma(static_cast<long double>(n) + 1) -
                        3.0L * n * std::log(3.0L);
        double v = static_cast<double>(n * std::exp(l));
        IdentityReport r;
        r.identity_id = "trinomial-rate";
        r.parameter = {{"n", std::to_string(n)}};
        r.lhs = fmt(v);
        r.rhs = "n * value";
        r.status = Status::WithinTolerance;
        r.detail = n >= 50 ? "" : "informational (n < 50)";
        if (n >= 50) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        out.push_back(r);
    }
    IdentityReport s;
    s.identity_id = "trinomial-rate-stability";
    s.lhs = hi > 0 ? fmt(hi / lo) : "n/a";
    s.rhs = "<= " + fmt(1 + tolerance);
    s.status = (hi > 0 && hi / lo <= 1 + tolerance) ? Status::WithinTolerance : Status::Violation;
    s.detail = "max/min of n * value over n >= 50";
    out.push_back(s);
    return out;
}

double paired_multinomial_sum(int n, const Rational& p1, int q_lo, int q_hi) {
    if (n <= 0 || n % 2) throw invalid_argument("n must be a positive even integer");
    int h = n / 2;
    q_lo = std::max(q_lo, 0);
    q_hi = std::min(q_hi, h);
    if (q_lo > q_hi) return 0.0;
    Rational p3 = Rational(1, 2) - p1;
    if (n <= 400) {
        Rational s = 0;
        mpz_class fn;
        mpz_fac_ui(fn.get_mpz_t(), n);
        for (int q = q_lo; q <= q_hi; ++q) {
            mpz_class fa, fq;
            mpz_fac_ui(fa.get_mpz_t(), h - q);
            mpz_fac_ui(fq.get_mpz_t(), q);
            s += Rational(fn, fa * fa * fq * fq) * rpow(p1, n - 2 * q) * rpow(p3, 2 * q);
        }
        s.canonicalize();
        return s.get_d();
    }
    auto lf = log_factorials(n);
    long double l1 = std::log(static_cast<long double>(p1.get_d())), l3 = std::log(static_cast<long double>(p3.get_d()));
    CompensatedSum acc;
    for (int q = q_lo; q <= q_hi; ++q)
        acc.add(static_cast<double>(
            std::exp(lf[n] - 2 * lf[h - q] - 2 * lf[q] + (n - 2 * q) * l1 + 2 * q * l3)));
    return acc.value();
}

std::vector<IdentityReport> check_prob_bounds(const Rational& p1, const Rational& a, const Rational& b,
                                              const std::vector<int>& n_list) {
    if (p1 < Rational(1, 3) || p1 >= Rational(1, 2)) throw invalid_argument("p1 must lie in [1/3, 1/2)");
    if (!(a > 0 && a < b && b < Rational(1, 6))) throw invalid_argument("need 0 < a < b < 1/6");
    Rational p3 = Rational(1, 2) - p1;
    std::vector<IdentityReport> out;
    auto lower_sum = [&](int n) { return paired_multinomial_sum(n, p1, static_cast<int>(floor_q(a * n)), n / 6); };
    auto upper_sum = [&](int n) { return paired_multinomial_sum(n, p1, 0, static_cast<int>(ceil_q(b * n))); };
    auto probe = [&](const std::string& id, bool window, auto sum) {
        std::map<std::string, std::string> params{{"p1", qs(p1)}, {"a", qs(a)}, {"b", qs(b)}};
        if (window) {
            double lo = INFINITY, hi = 0;
            for (int n : n_list) {
                double v = n * sum(n);
                lo = std::min(lo, v);
                hi = std::max(hi, v);
                IdentityReport r{id, params, fmt(v), "n * sum", Status::WithinTolerance, "n=" + std::to_string(n)};
                r.parameter["n"] = std::to_string(n);
                out.push_back(r);
            }
            bool ok = hi > 0 && hi / lo <= 1.10;
            out.push_back({id + "-stability", params, fmt(hi / lo), "<= 1.1",
                           ok ? Status::WithinTolerance : Status::Violation, "max/min of n * sum"});
        } else {
            bool ok = true;
            for (int n : n_list) {
                double s1 = sum(n), s2 = sum(2 * n);
                double ratio = s1 > 0 ? s2 / s1 : 0.0;
                bool pass = ratio < 0.5;
                ok = ok && pass;
                IdentityReport r{id + "-decay", params, fmt(ratio), "< 0.5",
                                 pass ? Status::WithinTolerance : Status::Violation, "sum(2n)/sum(n)"};
                r.parameter["n"] = std::to_string(n);
                out.push_back(r);
            }
        }
    };
    probe("paired-multinomial-lower", p3 >= a, lower_sum);
    probe("paired-multinomial-upper", p3 <= b, upper_sum);
    return out;
}

std::string squared_binomial_name(SquaredBinomialSum which) {
    switch (which) {
        case SquaredBinomialSum::Centered: return "centered";
        case SquaredBinomialSum::CenteredLower: return "centered-lower";
        case SquaredBinomialSum::WeightedSquare: return "weighted-square";
        case SquaredBinomialSum::Weighted: return "weighted";
    }
    return "?";
}

double squared_binomial_exponent(SquaredBinomialSum which) {
    switch (which) {
        case SquaredBinomialSum::Centered:
        case SquaredBinomialSum::Weighted: return 1.0;
        case SquaredBinomialSum::CenteredLower:
        case SquaredBinomialSum::WeightedSquare: return 0.5;
    }
    return 0.0;
}

double evaluate_squared_binomial_sum(SquaredBinomialSum which, const Rational& p, int n) {
    if (n < 1 || n > 100000) throw invalid_argument("n must lie in [1, 10^5]");
    if (which == SquaredBinomialSum::CenteredLower) {
        if (p != Rational(2, 3)) throw invalid_argument("this sum is defined for p = 2/3 only");
    } else if (p <= 0 || p >= Rational(2, 3)) {
        throw invalid_argument("p must lie in (0, 2/3)");
    }
    const long double pd = p.get_d(), qd = 1.0L - pd;
    const long double npq = n * pd * qd, mean = n * pd, sd = std::sqrt(npq);
    auto lf = log_factorials(2 * n + 1);
    Rational np = p * n;
    long lo = 0, hi = n;
    if (which != SquaredBinomialSum::Centered) lo = static_cast<long>(floor_q(np / 2));
    if (which == SquaredBinomialSum::CenteredLower) hi = static_cast<long>(floor_q(np));
    const long double lp = std::log(pd), lq = std::log(qd);
    CompensatedSum acc;
    for (long k = lo; k <= hi; ++k) {
        long double lpmf = log_binom(lf, n, k) + k * lp + (n - k) * lq;
        long double x = (k - mean) / sd;
        long double term = std::exp(2 * lpmf);
        if (which == SquaredBinomialSum::WeightedSquare || which == SquaredBinomialSum::Weighted) {
            long double lg = 2.0L * k * std::log(2.0L) + 0.5L * std::log(npq) - std::log(2.0L * k + 1) -
                             log_binom(lf, 2 * k, k);
            term *= std::exp(lg);
        }
        term *= which == SquaredBinomialSum::WeightedSquare ? x * x : x;
        acc.add(static_cast<double>(term));
    }
    return acc.value();
}

std::vector<IdentityReport> check_squared_binomial_probe(SquaredBinomialSum which, const Rational& p,
                                                         const std::vector<int>& n_list, double growth) {
    std::vector<IdentityReport> out;
    const double alpha = squared_binomial_exponent(which);
    const double floor = 1e-12;
    double running_max = 0;
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        int n = n_list[i];
        double v = evaluate_squared_binomial_sum(which, p, n);
        double s = std::pow(static_cast<double>(n), alpha) * std::fabs(v);
        bool pass = i == 0 || s <= floor || s <= (1 + growth) * running_max;
        running_max = std::max(running_max, s);
        IdentityReport r;
        r.identity_id = "squared-binomial-" + squared_binomial_name(which);
        r.parameter = {{"p", qs(p)}, {"n", std::to_string(n)}};
        r.lhs = fmt(s);
        r.rhs = "n^" + fmt(alpha) + " * |value| bounded";
        r.status = pass ? Status::WithinTolerance : Status::Violation;
        r.detail = "value " + fmt(v);
        out.push_back(r);
    }
    return out;
}

double squared_binomial_range_sum(int n, double p, int k_lo, int k_hi) {
    k_lo = std::max(k_lo, 0);
    k_hi = std::min(k_hi, n);
    if (n < 0 || k_lo > k_hi) return 0.0;
    auto lf = log_factorials(n);
    const long double lp = std::log(static_cast<long double>(p)), lq = std::log(1.0L - p);
    CompensatedSum acc;
    for (int k = k_lo; k <= k_hi; ++k) {
        long double l = log_binom(lf, n, k) + (n - k) * lp + k * lq;
        acc.add(static_cast<double>(std::exp(2 * l)));
    }
    return acc.value();
}

std::vector<IdentityReport> check_hoeffding_squared(const Rational& p, const Rational& a, const Rational& b,
                                                    const std::vector<int>& n_list, double max_ratio) {
    if (p <= 0 || p >= 1) throw invalid_argument("p must lie in (0, 1)");
    if (!(a >= 0 && a < b && b <= 1)) throw invalid_argument("need 0 <= a < b <= 1");
    if (p >= a && p <= b) throw invalid_argument("p must lie outside [a, b]");
    std::vector<IdentityReport> out;
    std::vector<double> sums;
    for (int n : n_list)
        sums.push_back(squared_binomial_range_sum(n, p.get_d(), static_cast<int>(floor_q(a * n)),
                                                  static_cast<int>(ceil_q(b * n))));
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        IdentityReport r;
        r.identity_id = "squared-binomial-tail";
        r.parameter = {{"p", qs(p)}, {"a", qs(a)}, {"b", qs(b)}, {"n", std::to_string(n_list[i])}};
        r.lhs = fmt(sums[i]);
        if (i == 0) {
            r.rhs = "first ladder point";
            r.status = Status::WithinTolerance;
        } else {
            double ratio = sums[i - 1] > 0 ? sums[i] / sums[i - 1] : 0.0;
            r.rhs = "ratio " + fmt(ratio) + " < " + fmt(max_ratio);
            r.status = ratio < max_ratio ? Status::WithinTolerance : Status::Violation;
        }
        out.push_back(r);
    }
    return out;
}

const std::vector<std::string>& identity_suite_names() {
    static const std::vector<std::string> names{"binomial-sums", "supplementary-sums", "multinomial-square", "wallis",
                                                "trinomial",     "prob-bounds",        "squared-binomial",   "hoeffding"};
    return names;
}

namespace {

void append(std::vector<IdentityReport>& out, std::vector<IdentityReport> more) {
    out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

}  // namespace

std::vector<IdentityReport> run_identity_suite(const std::string& suite, const SuiteOptions& opts) {
    std::vector<IdentityReport> out;
    if (suite == "all") {
        for (const auto& name : identity_suite_names()) append(out, run_identity_suite(name, opts));
        return out;
    }
    if (suite == "binomial-sums") {
        for (int q = 1; q <= opts.q_max; ++q) append(out, check_binomial_half_sums(q, opts.p));
    } else if (suite == "supplementary-sums") {
        for (int q = 1; q <= opts.q_max; ++q) append(out, check_supplementary_sums(q));
        for (int u = 0; u <= opts.u_max; ++u)
            for (int t = 0; t <= u; ++t) out.push_back(check_alternating_sum(u, t));
    } else if (suite == "multinomial-square") {
        for (const Rational& p1 : {Rational(1, 3), Rational(2, 5), Rational(5, 12)})
            for (int n = 2; n <= opts.multinomial_n_max; n += 2)
                for (int q = 1; 6 * q <= n - 6; ++q) out.push_back(check_multinomial_square(n, q, p1));
    } else if (suite == "wallis") {
        for (int n = 1; n <= opts.wallis_n_max; ++n) out.push_back(check_wallis_bounds(n));
    } else if (suite == "trinomial") {
        append(out, check_trinomial_rate({10, 50, 100, 200, 400, 800, 1600, 3200, 6400, 10000}));
    } else if (suite == "prob-bounds") {
        const std::vector<int> ladder{120, 180, 240, 300, 360};
        append(out, check_prob_bounds(Rational(1, 3), Rational(1, 8), Rational(1, 7), ladder));
        append(out, check_prob_bounds(Rational(2, 5), Rational(1, 8), Rational(1, 7), ladder));
        append(out, check_prob_bounds(Rational(5, 12), Rational(1, 20), Rational(1, 10), ladder));
    } else if (suite == "squared-binomial") {
        const std::vector<int> ladder{100, 200, 400, 800, 1600, 3200, 6400};
        for (auto which : {SquaredBinomialSum::Centered, SquaredBinomialSum::WeightedSquare, SquaredBinomialSum::Weighted})
            for (const Rational& p : {Rational(1, 5), Rational(1, 2), Rational(3, 5)})
                append(out, check_squared_binomial_probe(which, p, ladder));
        append(out, check_squared_binomial_probe(SquaredBinomialSum::CenteredLower, Rational(2, 3), ladder));
    } else if (suite == "hoeffding") {
        const std::vector<int> ladder{100, 200, 400, 800};
        append(out, check_hoeffding_squared(Rational(1, 5), Rational(2, 5), Rational(3, 5), ladder));
        append(out, check_hoeffding_squared(Rational(9, 10), Rational(1, 5), Rational(7, 10), ladder));
        append(out, check_hoeffding_squared(Rational(1, 2), Rational(0), Rational(1, 4), ladder));
    } else {
        throw invalid_argument("unknown identity suite: " + suite);
    }
    return out;
}

}  // namespace itervote
