#pragma once

#include "itervote/core.hpp"
#include "itervote/exact.hpp"

#include <cstdint>
#include <optional>

namespace itervote {

// splitmix64; one independent stream per (seed, sample index).
class SampleStream {
public:
    using result_type = std::uint64_t;
    SampleStream(std::uint64_t seed, std::uint64_t index);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }
    result_type operator()();

private:
    std::uint64_t state_;
};

struct EstimateResult {
    double mean = 0.0;
    double std_error = 0.0;  // sample standard deviation / sqrt(samples)
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
    int n = 0;
    std::array<Rational, 6> pi;
    std::optional<Utility> u;
    std::optional<AltSet> W;
};

Histogram sample_histogram(const PreferenceDistribution& pi, int n, SampleStream& stream);

EstimateResult estimate_eadpoa(const PreferenceDistribution& pi, const Utility& u, int n, std::int64_t samples,
                               std::uint64_t seed, int threads = 0);

// Estimates Pr(PW(truthful) = W); W needs at least two members.
EstimateResult estimate_tie_probability(const PreferenceDistribution& pi, int n, AltSet W, std::int64_t samples,
                                        std::uint64_t seed, int threads = 0);

}  // namespace itervote
