#include "itervote/rates.hpp"

#include <json.hpp>

#include <cmath>

namespace itervote {

namespace {

int rank_of(Magnitude m) {
    switch (m) {
        case Magnitude::Zero: return 0;
        case Magnitude::ExpSmall: return 1;
        case Magnitude::InvN: return 2;
        case Magnitude::InvSqrtN: return 3;
        case Magnitude::Const:
        case Magnitude::BoundedIndeterminate: return 4;
        case Magnitude::SqrtN: return 5;
    }
    return 0;
}

using Coef = std::array<int, 6>;

Rational dot(const Coef& c, const Probs& p) {
    Rational s = 0;
    for (int i = 0; i < 6; ++i)
        if (c[i]) s += c[i] * p[i];
    return s;
}

Probs canonical(Probs p) {
    for (auto& x : p) x.canonicalize();
    return p;
}

void require_positive(const Probs& p) {
    for (auto& x : p)
        if (x <= 0) throw invalid_argument("classifier requires a strictly positive distribution");
}

// Column layout of the two-way tables: (pa vs pb), 4*e0 + e1 + 3*e2 vs 2, (g0 + 2*g1) vs (g2 + 2*g3).
struct Column {
    int a, b;
    std::array<int, 3> e;
    std::array<int, 4> g;
};

Column column_for(AltSet W) {
    if (W == from_list({1, 2})) return {2, 3, {0, 1, 4}, {0, 3, 1, 2}};
    if (W == from_list({1, 3})) return {1, 5, {4, 2, 0}, {4, 5, 2, 1}};
    if (W == from_list({2, 3})) return {4, 0, {1, 3, 5}, {1, 0, 3, 4}};
    throw invalid_argument("two-way subset must be {1,2}, {1,3} or {2,3}");
}

}  // namespace

std::string RateClass::str() const {
    switch (magnitude) {
        case Magnitude::SqrtN:
            return sign == Sign::Plus ? "+Theta(sqrt n)" : sign == Sign::Minus ? "-Theta(sqrt n)" : "+-O(sqrt n)";
        case Magnitude::Const:
            return sign == Sign::Plus ? "+Theta(1)" : sign == Sign::Minus ? "-Theta(1)" : "Bounded";
        case Magnitude::BoundedIndeterminate: return "Bounded";
        case Magnitude::InvSqrtN: return "O(1/sqrt n)";
        case Magnitude::InvN: return "O(1/n)";
        case Magnitude::ExpSmall: return "ExpSmall";
        case Magnitude::Zero: return "Zero";
    }
    return "?";
}

RateClass RateClass::parse(const std::string& s) {
    if (s == "+Theta(sqrt n)") return sqrt_n(Sign::Plus);
    if (s == "-Theta(sqrt n)") return sqrt_n(Sign::Minus);
    if (s == "+-O(sqrt n)") return sqrt_n(Sign::PlusMinus);
    if (s == "+Theta(1)") return constant(Sign::Plus);
    if (s == "-Theta(1)") return constant(Sign::Minus);
    if (s == "Bounded") return bounded();
    if (s == "O(1/sqrt n)") return inv_sqrt_n();
    if (s == "O(1/n)") return inv_n();
    if (s == "ExpSmall") return exp_small();
    if (s == "Zero") return zero();
    throw invalid_argument("unknown rate class: " + s);
}

RateClass combine(const RateClass& a, const RateClass& b) {
    int ra = rank_of(a.magnitude), rb = rank_of(b.magnitude);
    if (ra != rb) return ra > rb ? a : b;
    if (a.magnitude == Magnitude::SqrtN) return a.sign == b.sign ? a : RateClass::sqrt_n(Sign::PlusMinus);
    if (ra == 4) {
        if (a.magnitude == Magnitude::Const && b.magnitude == Magnitude::Const && a.sign == b.sign &&
            a.sign != Sign::PlusMinus)
            return a;
        return RateClass::bounded();
    }
    return a;
}

int Comparator::sign(const Rational& x) const {
    if (eps_ && abs(x) <= *eps_) return 0;
    return sgn(x);
}

UtilityRegime utility_regime(const Utility& u) {
    if (u.degenerate()) return UtilityRegime::Degenerate;
    return u.u[1] > u.u[2] ? UtilityRegime::SecondAboveThird : UtilityRegime::TopOnly;
}

std::array<Rational, 3> lambda_vector(const Probs& p_in) {
    const Probs p = canonical(p_in);
    std::array<Rational, 3> l;
    for (int r = 0; r < kRankings; ++r) l[top_of(r)] += p[r];
    return l;
}

AltSet w_star(const Probs& p_in, const Comparator& cmp) {
    const Probs p = canonical(p_in);
    auto l = lambda_vector(p);
    int best = 0;
    for (int c = 1; c < 3; ++c)
        if (cmp.sign(l[c] - l[best]) > 0) best = c;
    AltSet w = 0;
    for (int c = 0; c < 3; ++c)
        if (cmp.sign(l[c] - l[best]) == 0) w |= alt_bit(c);
    return w;
}

Probs permute_13(const Probs& p) { return {p[4], p[2], p[1], p[5], p[0], p[3]}; }
Probs permute_23(const Probs& p) { return {p[1], p[3], p[4], p[0], p[5], p[2]}; }

int two_way_row_direct(const Probs& p_in, AltSet W, UtilityRegime regime, const Comparator& cmp, int* fired) {
    const Probs p = canonical(p_in);
    Column col = column_for(W);
    int d = cmp.sign(p[col.a] - p[col.b]);
    std::array<bool, 6> rows{};
    int nrows = 2;
    if (regime == UtilityRegime::TopOnly) {
        rows[0] = d <= 0;
        rows[1] = d > 0;
    } else {
        nrows = 6;
        int e = cmp.sign(4 * p[col.e[0]] + p[col.e[1]] + 3 * p[col.e[2]] - 2);
        int g = cmp.sign(p[col.g[0]] + 2 * p[col.g[1]] - p[col.g[2]] - 2 * p[col.g[3]]);
        rows[0] = d == 0 && e > 0;
        rows[1] = d == 0 && e < 0;
        rows[2] = d == 0 && e == 0;
        rows[3] = d != 0 && g == 0;
        rows[4] = (d > 0 && g < 0) || (d < 0 && g > 0);
        rows[5] = (d > 0 && g > 0) || (d < 0 && g < 0);
    }
    int row = 0, count = 0;
    for (int i = 0; i < nrows; ++i)
        if (rows[i]) {
            ++count;
            if (!row) row = i + 1;
        }
    if (fired) *fired = count;
    return row;
}

int two_way_row_via_permutation(const Probs& p_in, AltSet W, UtilityRegime regime, const Comparator& cmp) {
    const Probs p = canonical(p_in);
    AltSet w12 = from_list({1, 2});
    if (W == w12) return two_way_row_direct(p, w12, regime, cmp);
    if (W == from_list({1, 3})) return two_way_row_direct(permute_13(p), w12, regime, cmp);
    if (W == from_list({2, 3})) return two_way_row_direct(permute_23(p), w12, regime, cmp);
    throw invalid_argument("two-way subset must be {1,2}, {1,3} or {2,3}");
}

ParityRate two_way_rate_for_row(int row, UtilityRegime regime) {
    if (regime == UtilityRegime::Degenerate) return {RateClass::zero(), RateClass::zero()};
    if (regime == UtilityRegime::TopOnly) {
        if (row == 1) return {RateClass::inv_sqrt_n(), RateClass::inv_sqrt_n()};
        if (row == 2) return {RateClass::exp_small(), RateClass::exp_small()};
    } else {
        switch (row) {
            case 1: return {RateClass::constant(Sign::Plus), RateClass::constant(Sign::Minus)};
            case 2: return {RateClass::constant(Sign::Minus), RateClass::constant(Sign::Minus)};
            case 3: return {RateClass::inv_sqrt_n(), RateClass::constant(Sign::Minus)};
            case 4: return {RateClass::inv_sqrt_n(), RateClass::inv_sqrt_n()};
            case 5: return {RateClass::sqrt_n(Sign::Plus), RateClass::sqrt_n(Sign::Plus)};
            case 6: return {RateClass::sqrt_n(Sign::Minus), RateClass::sqrt_n(Sign::Minus)};
        }
    }
    throw std::logic_error("no two-way table row fired");
}

ParityRate classify_two_way(const Probs& p_in, const Utility& u, AltSet W, const Comparator& cmp) {
    const Probs p = canonical(p_in);
    require_positive(p);
    column_for(W);
    UtilityRegime regime = utility_regime(u);
    if (regime == UtilityRegime::Degenerate) return {RateClass::zero(), RateClass::zero()};
    if ((W & w_star(p, cmp)) != W) return {RateClass::exp_small(), RateClass::exp_small()};
    int fired = 0;
    int direct = two_way_row_direct(p, W, regime, cmp, &fired);
    if (fired != 1) throw std::logic_error("two-way table: " + std::to_string(fired) + " rows fired");
    int permuted = two_way_row_via_permutation(p, W, regime, cmp);
    if (direct != permuted)
        throw std::logic_error("two-way table: direct row " + std::to_string(direct) + " != permuted row " +
                               std::to_string(permuted));
    return two_way_rate_for_row(direct, regime);
}

int three_way_case(int residue) {
    switch (((residue % 3) + 3) % 3) {
        case 0: return 1;
        case 2: return 2;
        default: return 3;
    }
}

std::optional<Rational> three_way_f(const Probs& p_in, int i, const Comparator& cmp) {
    const Probs p = canonical(p_in);
    if (i < 1 || i > 3) throw invalid_argument("three-way case index must be 1, 2 or 3");
    // cells indexed [pi1 vs pi5][pi2 vs pi6][pi3 vs pi4] with 0 '=', 1 '>', 2 '<'
    struct Cell {
        std::array<Coef, 3> f;
        std::array<bool, 3> na;
    };
    const Coef A{1, 0, 0, 0, -1, 0};    // p1 - p5
    const Coef B{0, -1, 0, 0, 0, 1};    // p6 - p2
    const Coef C{0, 0, -5, 3, 0, 0};    // 3p4 - 5p3
    const Coef D{2, 0, -5, 1, 2, 0};    // 2p1 + 2p5 + p4 - 5p3
    const Coef E{1, -2, 2, 0, -1, 0};   // p1 + 2p3 - 2p2 - p5
    const Coef F{1, 0, -1, 0, 0, 0};    // p1 - p3
    const Coef G{0, 2, 1, -3, 0, 0};    // 2p2 + p3 - 3p4
    const Coef H{2, -3, 0, 0, 0, 1};    // 2p1 + p6 - 3p2
    const Coef I{-2, 1, 0, 0, 0, -3};   // p2 - 2p1 - 3p6
    const Coef J{1, -1, -1, 0, 0, 1};   // p1 + p6 - p2 - p3
    const Coef K{0, 1, 1, -3, 0, 0};    // p2 + p3 - 3p4
    const Coef L{-1, 0, 0, 0, 0, 1};    // p6 - p1
    const Coef M{0, 1, -1, 0, 0, 0};    // p2 - p3
    const Coef N{-1, 0, -1, 1, 0, 1};   // p4 + p6 - p1 - p3
    const Coef O{0, 1, 0, -1, 0, 0};    // p2 - p4
    const Coef P{0, 0, -1, 1, 0, 0};    // p4 - p3
    const Coef Q{1, 1, 0, -2, 0, 0};    // p1 + p2 - 2p4
    const Coef R{-2, 1, 0, 0, 0, 1};    // p2 + p6 - 2p1
    const Coef S{-2, 1, 0, 0, 1, 0};    // p2 + p5 - 2p1
    const Coef T{3, -2, 0, 0, -1, 0};   // 3p1 - 2p2 - p5
    const Coef U{2, -1, 0, -1, 0, 0};   // 2p1 - p2 - p4
    const Coef V{-2, 1, 0, 0, 0, -1};   // p2 - p6 - 2p1
    const Coef Z{};
    auto cell = [](Coef f1, Coef f2, Coef f3, bool na1 = false, bool na2 = false, bool na3 = false) {
        return Cell{{f1, f2, f3}, {na1, na2, na3}};
    };
    const Cell grid[3][3][3] = {
        {
            // pi1 = pi5
            {cell(A, B, C), cell(D, E, C), cell(F, G, C)},
            {cell(H, B, I), cell(J, E, I), cell(J, K, I)},
            {cell(L, B, M), cell(N, E, M), cell(Z, K, M, true)},
        },
        {
            // pi1 > pi5
            {cell(A, O, P), cell(D, Z, P, false, true), cell(F, Q, P)},
            {cell(H, O, R), cell(J, Z, R, false, true), cell(J, Q, R)},
            {cell(L, O, S), cell(N, Z, S, false, true), cell(Z, Q, S, true)},
        },
        {
            // pi1 < pi5
            {cell(A, T, F), cell(D, U, F), cell(F, U, F)},
            {cell(H, T, V), cell(J, U, V), cell(J, U, V)},
            {cell(L, T, Z, false, false, true), cell(N, U, Z, false, false, true), cell(Z, U, Z, true, false, true)},
        },
    };
    auto idx = [](int s) { return s == 0 ? 0 : s > 0 ? 1 : 2; };
    const Cell& c = grid[idx(cmp.sign(p[0] - p[4]))][idx(cmp.sign(p[1] - p[5]))][idx(cmp.sign(p[2] - p[3]))];
    if (c.na[i - 1]) return std::nullopt;
    return dot(c.f[i - 1], p);
}

ThreeWayResult classify_three_way(const Probs& p_in, const Utility& u, int residue, const Comparator& cmp) {
    const Probs p = canonical(p_in);
    require_positive(p);
    ThreeWayResult res;
    res.case_index = three_way_case(residue);
    const int i = res.case_index;
    UtilityRegime regime = utility_regime(u);
    if (regime == UtilityRegime::Degenerate) {
        res.rate = RateClass::zero();
        return res;
    }
    if (w_star(p, cmp) != 7) {
        res.rate = RateClass::exp_small();
        return res;
    }
    auto s = [&](int a, int b) { return cmp.sign(p[a - 1] - p[b - 1]); };
    if (regime == UtilityRegime::TopOnly) {
        bool small = false;
        if (i == 2) small = s(3, 4) <= 0;
        if (i == 3) small = (s(1, 5) >= 0 && s(2, 6) <= 0) || (s(1, 5) <= 0 && s(2, 6) >= 0);
        res.rate = small ? RateClass::inv_n() : RateClass::exp_small();
        return res;
    }
    bool expo = (i == 1 && s(2, 6) < 0 && s(3, 4) < 0) || (i == 2 && s(5, 1) < 0 && s(4, 3) < 0) ||
                (i == 3 && s(1, 5) < 0 && s(2, 6) < 0);
    if (expo) {
        res.rate = RateClass::exp_small();
        return res;
    }
    res.f = three_way_f(p, i, cmp);
    bool g_const = false;
    if (i == 1) g_const = cmp.sign(p[0] + p[2] - p[1] - p[4]) < 0;
    if (i == 2) g_const = cmp.sign(p[1] + p[2] - p[0] - p[5]) < 0;
    res.g = g_const ? "Theta(1)" : "O(1/sqrt n)";
    if (!res.f) {
        res.infeasible = true;
        res.rate = RateClass::bounded();
        return res;
    }
    int sf = cmp.sign(*res.f);
    if (sf > 0)
        res.rate = RateClass::constant(Sign::Plus);
    else if (sf < 0)
        res.rate = g_const ? RateClass::bounded() : RateClass::constant(Sign::Minus);
    else
        res.rate = g_const ? RateClass::constant(Sign::Plus) : RateClass::inv_sqrt_n();
    return res;
}

RateReport classify_eadpoa(const Probs& p_in, const Utility& u, const Comparator& cmp) {
    const Probs p = canonical(p_in);
    require_positive(p);
    RateReport r;
    r.lambda = lambda_vector(p);
    r.w_star = w_star(p, cmp);
    if (cmp.has_epsilon()) r.warnings.push_back("epsilon comparison policy active; table equalities are approximate");
    for (AltSet W : {from_list({1, 2}), from_list({1, 3}), from_list({2, 3})}) r.two_way[W] = classify_two_way(p, u, W, cmp);
    for (int res = 0; res < 3; ++res) {
        auto t = classify_three_way(p, u, res, cmp);
        r.three_way.per_residue[res] = t.rate;
        if (t.infeasible) r.warnings.push_back("three-way grid cell N/A reached for case " + std::to_string(t.case_index));
        if (!t.g.empty()) {
            r.f_values[t.case_index] = t.f;
            r.g_values[t.case_index] = t.g;
        }
    }
    for (int k = 0; k < 6; ++k) {
        RateClass c = r.three_way.per_residue[k % 3];
        for (auto& [W, pr] : r.two_way) c = combine(c, k % 2 == 0 ? pr.even : pr.odd);
        r.per_subsequence[k] = c;
    }
    r.combined = r.per_subsequence[0];
    for (int k = 1; k < 6; ++k) r.combined = combine(r.combined, r.per_subsequence[k]);
    return r;
}

using nlohmann::json;

std::string rate_report_to_json(const RateReport& r, int indent) {
    json j;
    j["lambda"] = json::array();
    for (auto& x : r.lambda) j["lambda"].push_back(x.get_str());
    j["w_star"] = to_list(r.w_star);
    json per = json::object();
    for (auto& [W, pr] : r.two_way) per[set_name(W)] = {{"even", pr.even.str()}, {"odd", pr.odd.str()}};
    json tw = json::object();
    for (int k = 0; k < 3; ++k) tw["n%3=" + std::to_string(k)] = r.three_way.per_residue[k].str();
    per["{1,2,3}"] = tw;
    j["per_W"] = per;
    json sub = json::object();
    for (int k = 0; k < 6; ++k) sub["n%6=" + std::to_string(k)] = r.per_subsequence[k].str();
    j["per_subsequence"] = sub;
    j["combined"] = r.combined.str();
    json fv = json::object(), gv = json::object();
    for (auto& [i, f] : r.f_values) fv[std::to_string(i)] = f ? json(f->get_str()) : json("N/A");
    for (auto& [i, g] : r.g_values) gv[std::to_string(i)] = g;
    j["f_values"] = fv;
    j["g_values"] = gv;
    j["warnings"] = r.warnings;
    return j.dump(indent);
}

RateReport rate_report_from_json(const std::string& text) {
    json j = json::parse(text);
    RateReport r;
    for (int k = 0; k < 3; ++k) r.lambda[k] = Rational(j.at("lambda").at(k).get<std::string>());
    for (auto& x : r.lambda) x.canonicalize();
    r.w_star = from_list(j.at("w_star").get<std::vector<int>>());
    for (auto& [key, val] : j.at("per_W").items()) {
        if (key == "{1,2,3}") {
            for (int k = 0; k < 3; ++k)
                r.three_way.per_residue[k] = RateClass::parse(val.at("n%3=" + std::to_string(k)).get<std::string>());
            continue;
        }
        std::vector<int> alts;
        for (char ch : key)
            if (ch >= '1' && ch <= '3') alts.push_back(ch - '0');
        r.two_way[from_list(alts)] = {RateClass::parse(val.at("even").get<std::string>()),
                                      RateClass::parse(val.at("odd").get<std::string>())};
    }
    for (int k = 0; k < 6; ++k)
        r.per_subsequence[k] = RateClass::parse(j.at("per_subsequence").at("n%6=" + std::to_string(k)).get<std::string>());
    r.combined = RateClass::parse(j.at("combined").get<std::string>());
    for (auto& [key, val] : j.at("f_values").items()) {
        std::string s = val.get<std::string>();
        if (s == "N/A")
            r.f_values[std::stoi(key)] = std::nullopt;
        else {
            Rational q(s);
            q.canonicalize();
            r.f_values[std::stoi(key)] = q;
        }
    }
    for (auto& [key, val] : j.at("g_values").items()) r.g_values[std::stoi(key)] = val.get<std::string>();
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    return r;
}

static SlopeFit fit_points(const std::vector<std::pair<int, double>>& pts, int min_points) {
    SlopeFit f;
    std::vector<std::pair<double, double>> xy;
    int pos = 0, neg = 0;
    for (auto& [n, v] : pts) {
        if (v == 0.0 || !std::isfinite(v) || n <= 0) continue;
        xy.emplace_back(std::log(static_cast<double>(n)), std::log(std::fabs(v)));
        (v > 0 ? pos : neg)++;
    }
    f.points = static_cast<int>(xy.size());
    f.sign = (pos && !neg) ? 1 : (neg && !pos) ? -1 : 0;
    if (f.points < min_points || f.points < 2) return f;
    double mx = 0, my = 0;
    for (auto& [x, y] : xy) {
        mx += x;
        my += y;
    }
    mx /= f.points;
    my /= f.points;
    double sxx = 0, sxy = 0;
    for (auto& [x, y] : xy) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    if (sxx == 0) return f;
    f.sufficient = true;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    return f;
}

RateFit empirical_rate_fit(const std::vector<std::pair<int, double>>& series, int min_points) {
    RateFit r;
    std::vector<std::pair<int, double>> even, odd;
    for (auto& pt : series) (pt.first % 2 == 0 ? even : odd).push_back(pt);
    r.all = fit_points(series, min_points);
    r.even = fit_points(even, min_points);
    r.odd = fit_points(odd, min_points);
    r.insufficient = !r.all.sufficient && !r.even.sufficient && !r.odd.sufficient;
    if (r.insufficient) {
        r.verdict = "insufficient-data";
        return r;
    }
    const SlopeFit& best = r.all.sufficient ? r.all : (r.even.sufficient ? r.even : r.odd);
    r.verdict = best.slope > 0.2 ? "growth" : best.slope < -0.2 ? "decay" : "flat";
    return r;
}

}  // namespace itervote
