#include "itervote/montecarlo.hpp"

#include "itervote/dynamics.hpp"
#include "itervote/parallel.hpp"

#include <cmath>
#include <algorithm>
#include <functional>
#include <limits>
#include <random>

namespace itervote {

namespace {

constexpr std::int64_t kBlockSize = 4096;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Count, mean and sum of squared deviations; merged with Chan's formula.
struct Moments {
    double count = 0.0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        count += 1.0;
        double d = x - mean;
        mean += d / count;
        m2 += d * (x - mean);
    }
};

Moments merge(const Moments& a, const Moments& b) {
    if (a.count == 0) return b;
    if (b.count == 0) return a;
    Moments r;
    r.count = a.count + b.count;
    double d = b.mean - a.mean;
    r.mean = a.mean + d * (b.count / r.count);
    r.m2 = a.m2 + b.m2 + d * d * (a.count * b.count / r.count);
    return r;
}

Moments reduce(const std::vector<Moments>& blocks, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return blocks[lo];
    std::size_t mid = lo + (hi - lo) / 2;
    return merge(reduce(blocks, lo, mid), reduce(blocks, mid, hi));
}

EstimateResult estimate(std::int64_t samples, std::uint64_t seed, int threads,
                        const std::function<double(std::int64_t)>& draw) {
    if (samples < 2) throw invalid_argument("samples must be at least 2");
    const std::int64_t nblocks = (samples + kBlockSize - 1) / kBlockSize;
    if (nblocks > std::numeric_limits<int>::max()) throw resource_limit("too many samples");
    std::vector<Moments> blocks(nblocks);
    parallel_for(static_cast<int>(nblocks), threads <= 0 ? default_threads() : threads, [&](int b) {
        Moments m;
        const std::int64_t end = std::min<std::int64_t>(samples, (b + 1) * kBlockSize);
        for (std::int64_t i = b * kBlockSize; i < end; ++i) m.add(draw(i));
        blocks[b] = m;
    });
    Moments all = reduce(blocks, 0, blocks.size());
    EstimateResult r;
    r.mean = all.mean;
    r.std_error = std::sqrt(all.m2 / (all.count - 1)) / std::sqrt(all.count);
    r.samples = samples;
    r.seed = seed;
    return r;
}

}  // namespace

SampleStream::SampleStream(std::uint64_t seed, std::uint64_t index)
    : state_(mix64(seed ^ mix64(index + 0x9e3779b97f4a7c15ULL))) {}

SampleStream::result_type SampleStream::operator()() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
}

Histogram sample_histogram(const PreferenceDistribution& pi, int n, SampleStream& stream) {
    if (n < 1) throw invalid_argument("n must be positive");
    const auto p = pi.as_double();
    Counts c{};
    int left = n;
    double mass = 1.0;
    for (int r = 0; r < kRankings - 1 && left > 0; ++r) {
        if (p[r] <= 0.0) continue;
        double q = mass > 0.0 ? std::min(1.0, p[r] / mass) : 1.0;
        std::binomial_distribution<int> bin(left, q);
        c[r] = bin(stream);
        left -= c[r];
        mass -= p[r];
    }
    // the remaining votes go to the last ranking with positive mass
    int last = kRankings - 1;
    while (last > 0 && p[last] <= 0.0) --last;
    c[last] += left;
    return Histogram(c);
}

EstimateResult estimate_eadpoa(const PreferenceDistribution& pi, const Utility& u, int n, std::int64_t samples,
                               std::uint64_t seed, int threads) {
    ScaledUtility su(u);
    const double den = su.den.get_d();
    EstimateResult r = estimate(samples, seed, threads, [&](std::int64_t i) {
        SampleStream s(seed, static_cast<std::uint64_t>(i));
        Histogram h = sample_histogram(pi, n, s);
        return static_cast<double>(adversarial_loss_scaled(h.counts, su)) / den;
    });
    r.n = n;
    r.pi = pi.p;
    r.u = u;
    return r;
}

EstimateResult estimate_tie_probability(const PreferenceDistribution& pi, int n, AltSet W, std::int64_t samples,
                                        std::uint64_t seed, int threads) {
    if (W == 0 || W > 7) throw invalid_argument("alternative subset out of range");
    if (alt_count(W) < 2) throw invalid_argument("tie probability needs |W| >= 2");
    EstimateResult r = estimate(samples, seed, threads, [&](std::int64_t i) {
        SampleStream s(seed, static_cast<std::uint64_t>(i));
        Histogram h = sample_histogram(pi, n, s);
        return potential_winners(truthful_votes(h)) == W ? 1.0 : 0.0;
    });
    r.n = n;
    r.pi = pi.p;
    r.W = W;
    return r;
}

}  // namespace itervote
