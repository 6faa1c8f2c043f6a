#pragma once

#include "itervote/core.hpp"
#include "itervote/exact.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace itervote::cli {

// Parses "a/b", integers and decimals ("0.35") into exact rationals.
Rational parse_rational(const std::string& text);
std::vector<Rational> parse_rational_list(const std::string& text, std::size_t expected);

struct NRange {
    int lo = 0;
    int hi = 0;
    int step = 1;
    std::vector<int> values() const;
};
// "12", "4..12" or "4..12:2"
NRange parse_n_range(const std::string& text);

struct ExperimentConfig {
    std::optional<std::array<Rational, 6>> pi;
    std::optional<std::array<Rational, 3>> u;
    std::optional<NRange> n;
    Mode mode = Mode::Exact;
    std::uint64_t seed = 1;
    std::int64_t samples = 100000;
    std::optional<int> threads;
    std::string output;          // empty: stdout
    std::string format = "csv";  // csv | json
    std::optional<AltSet> W;
};

// Keys: pi, u, n, mode, seed, samples, threads, output, format, W. Values may be strings or numbers;
// pi and u may also be arrays.
ExperimentConfig load_config_file(const std::string& path);

PreferenceDistribution make_distribution(const std::array<Rational, 6>& p);
AltSet parse_alt_set(const std::string& text);  // "1,2" or "{1,2}"
Mode parse_mode(const std::string& text);

}  // namespace itervote::cli
