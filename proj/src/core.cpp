#include "itervote/core.hpp"

#include <numeric>

namespace itervote {

std::vector<int> to_list(AltSet s) {
    std::vector<int> out;
    for (int c = 0; c < kAlts; ++c)
        if (s & alt_bit(c)) out.push_back(c + 1);
    return out;
}

AltSet from_list(const std::vector<int>& v) {
    AltSet s = 0;
    for (int c : v) {
        if (c < 1 || c > 3) throw invalid_argument("alternative out of range: " + std::to_string(c));
        s |= alt_bit(c - 1);
    }
    return s;
}

std::string set_name(AltSet s) {
    std::string out = "{";
    for (int c : to_list(s)) {
        if (out.size() > 1) out += ",";
        out += std::to_string(c);
    }
    return out + "}";
}

Histogram::Histogram(const Counts& c) : counts(c) {
    for (int x : c)
        if (x < 0) throw invalid_argument("negative ranking count");
    if (n() < 1) throw invalid_argument("histogram must contain at least one agent");
}

int Histogram::n() const { return std::accumulate(counts.begin(), counts.end(), 0); }

Utility::Utility(Rational u1, Rational u2, Rational u3) : u{std::move(u1), std::move(u2), std::move(u3)} {
    for (auto& x : u) x.canonicalize();
    bool ordered = u[0] >= u[1] && u[1] >= u[2] && u[2] >= 0;
    if (!ordered || (!degenerate() && !(u[0] > u[2])))
        throw invalid_argument("utility must satisfy u1 >= u2 >= u3 >= 0 with u1 > u3, or be constant");
}

ScaledUtility::ScaledUtility(const Utility& ut) {
    den = 1;
    for (auto& x : ut.u) den = lcm(den, mpz_class(x.get_den()));
    for (int k = 0; k < 3; ++k) {
        mpz_class v = ut.u[k].get_num() * (den / ut.u[k].get_den());
        if (!v.fits_slong_p() || abs(v) > mpz_class("1000000000000"))
            throw invalid_argument("utility numerators too large after scaling");
        num[k] = v.get_si();
    }
}

int plurality_winner(const Scores& s) {
    int w = 0;
    for (int c = 1; c < kAlts; ++c)
        if (s[c] > s[w]) w = c;
    return w;
}

AltSet potential_winners(const Scores& s) {
    int f = plurality_winner(s);
    AltSet pw = alt_bit(f);
    for (int c = 0; c < kAlts; ++c) {
        if (c == f) continue;
        if ((c < f && s[c] == s[f] - 1) || (c > f && s[c] == s[f])) pw |= alt_bit(c);
    }
    return pw;
}

int pairwise_count(const Histogram& h, int a, int b) {
    if (a == b) throw invalid_argument("pairwise_count requires distinct alternatives");
    if (a < 1 || a > 3 || b < 1 || b > 3) throw invalid_argument("alternative out of range");
    int total = 0;
    for (int r = 0; r < kRankings; ++r)
        if (prefers(r, a - 1, b - 1)) total += h.counts[r];
    return total;
}

Rational social_welfare(const Histogram& h, const Utility& u, int c) {
    if (c < 1 || c > 3) throw invalid_argument("alternative out of range");
    Rational sw = 0;
    for (int r = 0; r < kRankings; ++r) sw += h.counts[r] * u.u[rank_position(r, c - 1)];
    return sw;
}

Scores truthful_votes(const Histogram& h) {
    Scores s{};
    for (int r = 0; r < kRankings; ++r) s[top_of(r)] += h.counts[r];
    return s;
}

std::int64_t social_welfare_scaled(const Counts& c, const ScaledUtility& u, int alt) {
    std::int64_t sw = 0;
    for (int r = 0; r < kRankings; ++r) sw += c[r] * u.num[rank_position(r, alt)];
    return sw;
}

}  // namespace itervote
