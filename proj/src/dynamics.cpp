#include "itervote/dynamics.hpp"

#include <algorithm>
#include <unordered_map>

namespace itervote {

Scores DynState::scores() const {
    Scores s{};
    for (auto& row : votes)
        for (int c = 0; c < kAlts; ++c) s[c] += row[c];
    return s;
}

DynState truthful_state(const Histogram& h) {
    DynState s;
    for (int r = 0; r < kRankings; ++r) s.votes[r][top_of(r)] = h.counts[r];
    return s;
}

int best_response_target(int r, int x, const Scores& s) {
    int f = plurality_winner(s);
    AltSet reach = static_cast<AltSet>((potential_winners(s) & ~alt_bit(x)) | alt_bit(f));
    for (int k = 0; k < kAlts; ++k) {
        int c = kOrder[r][k];
        if (reach & alt_bit(c)) return c == f ? -1 : c;
    }
    return -1;
}

static void check_consistent(const DynState& s, const Histogram& h) {
    for (int r = 0; r < kRankings; ++r) {
        int row = 0;
        for (int c = 0; c < kAlts; ++c) {
            if (s.votes[r][c] < 0) throw invalid_argument("negative vote count in state");
            row += s.votes[r][c];
        }
        if (row != h.counts[r]) throw invalid_argument("state does not match histogram");
    }
}

std::vector<BrMove> legal_moves(const DynState& s, const Histogram& h) {
    check_consistent(s, h);
    Scores sc = s.scores();
    std::vector<BrMove> out;
    for (int r = 0; r < kRankings; ++r)
        for (int x = 0; x < kAlts; ++x) {
            if (s.votes[r][x] == 0) continue;
            int y = best_response_target(r, x, sc);
            if (y >= 0) out.push_back({r + 1, x + 1, y + 1});
        }
    return out;
}

DynState apply_move(const DynState& s, const BrMove& m) {
    DynState t = s;
    --t.votes[m.ranking - 1][m.from - 1];
    ++t.votes[m.ranking - 1][m.to - 1];
    return t;
}

namespace {

struct StateHash {
    std::size_t operator()(const DynState& s) const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto& row : s.votes)
            for (int v : row) h = (h ^ static_cast<std::uint64_t>(v)) * 1099511628211ull;
        return h;
    }
};

class Explorer {
public:
    explicit Explorer(const Histogram& h) : h_(h) {}

    int visit(const DynState& s) {
        auto it = depth_.find(s);
        if (it != depth_.end()) {
            if (it->second < 0) throw std::logic_error("best-response cycle detected");
            return it->second;
        }
        depth_[s] = -1;
        Scores sc = s.scores();
        AltSet pw = potential_winners(sc);
        auto moves = legal_moves(s, h_);
        int d = 0;
        if (moves.empty()) {
            stats.winners |= alt_bit(plurality_winner(sc));
        } else {
            for (auto& m : moves) {
                DynState t = apply_move(s, m);
                ++stats.transitions;
                AltSet pw_next = potential_winners(t.scores());
                if ((pw_next & ~pw) != 0) ++stats.monotonicity_violations;
                d = std::max(d, 1 + visit(t));
            }
        }
        depth_[s] = d;
        return d;
    }

    OracleStats stats;
    std::size_t states() const { return depth_.size(); }

private:
    const Histogram& h_;
    std::unordered_map<DynState, int, StateHash> depth_;
};

}  // namespace

OracleStats run_br_oracle(const Histogram& h, int max_n) {
    if (h.n() > max_n)
        throw resource_limit("oracle bound exceeded: n=" + std::to_string(h.n()) + " > " + std::to_string(max_n));
    Explorer ex(h);
    ex.stats.max_depth = ex.visit(truthful_state(h));
    ex.stats.states = ex.states();
    return ex.stats;
}

AltSet br_equilibrium_winners_oracle(const Histogram& h, int max_n) { return run_br_oracle(h, max_n).winners; }

static int majority_winner(const Counts& c, int a, int b) {
    if (a > b) std::swap(a, b);
    int ab = 0, ba = 0;
    for (int r = 0; r < kRankings; ++r) (prefers(r, a, b) ? ab : ba) += c[r];
    return ab >= ba ? a : b;
}

AltSet equilibrium_winners(const Counts& c) {
    Scores s{};
    for (int r = 0; r < kRankings; ++r) s[top_of(r)] += c[r];
    int f = plurality_winner(s);
    if (alt_count(potential_winners(s)) == 1) return alt_bit(f);
    AltSet ew = 0;
    for (int r = 0; r < kRankings; ++r) {
        if (c[r] == 0) continue;
        int x = top_of(r);
        if (best_response_target(r, x, s) < 0) continue;
        int a = (x + 1) % 3, b = (x + 2) % 3;
        ew |= alt_bit(majority_winner(c, a, b));
    }
    return ew ? ew : alt_bit(f);
}

AltSet equilibrium_winners(const Histogram& h) { return equilibrium_winners(h.counts); }

std::int64_t adversarial_loss_scaled(const Counts& c, const ScaledUtility& u) {
    Scores s{};
    for (int r = 0; r < kRankings; ++r) s[top_of(r)] += c[r];
    int f = plurality_winner(s);
    AltSet ew = equilibrium_winners(c);
    if (ew == alt_bit(f)) return 0;
    std::int64_t worst = INT64_MAX;
    for (int a = 0; a < kAlts; ++a)
        if (ew & alt_bit(a)) worst = std::min(worst, social_welfare_scaled(c, u, a));
    return social_welfare_scaled(c, u, f) - worst;
}

Rational adversarial_loss(const Histogram& h, const Utility& u) {
    Scores s = truthful_votes(h);
    int f = plurality_winner(s);
    AltSet ew = equilibrium_winners(h);
    Rational worst;
    bool first = true;
    for (int a : to_list(ew)) {
        Rational sw = social_welfare(h, u, a);
        if (first || sw < worst) worst = sw;
        first = false;
    }
    return social_welfare(h, u, f + 1) - worst;
}

}  // namespace itervote
