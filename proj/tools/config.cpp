#include "config.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace itervote::cli {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

int parse_int(const std::string& s) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw invalid_argument("not an integer: '" + s + "'");
    }
    if (pos != s.size()) throw invalid_argument("not an integer: '" + s + "'");
    return v;
}

std::string scalar_text(const nlohmann::json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    if (j.is_number()) {
        std::ostringstream os;
        os.precision(17);
        os << j.get<double>();
        return os.str();
    }
    throw invalid_argument("expected a string or number in config, got " + j.dump());
}

std::string list_text(const nlohmann::json& j) {
    if (!j.is_array()) return scalar_text(j);
    std::string out;
    for (const auto& x : j) {
        if (!out.empty()) out += ",";
        out += scalar_text(x);
    }
    return out;
}

template <std::size_t N>
std::array<Rational, N> to_array(const std::vector<Rational>& v) {
    std::array<Rational, N> a;
    std::copy(v.begin(), v.end(), a.begin());
    return a;
}

}  // namespace

Rational parse_rational(const std::string& raw) {
    std::string s = trim(raw);
    if (s.empty()) throw invalid_argument("empty rational");
    auto bad = [&] { return invalid_argument("not a rational number: '" + raw + "'"); };
    if (s.find_first_not_of("0123456789+-/.") != std::string::npos) throw bad();
    if (auto dot = s.find('.'); dot != std::string::npos) {
        if (s.find('/') != std::string::npos || s.find('.', dot + 1) != std::string::npos) throw bad();
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        if (digits.empty() || digits == "-" || digits == "+") throw bad();
        if (digits[0] == '+') digits.erase(0, 1);
        mpz_class num, den;
        if (num.set_str(digits, 10) != 0) throw bad();
        mpz_ui_pow_ui(den.get_mpz_t(), 10, s.size() - dot - 1);
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    if (s[0] == '+') s.erase(0, 1);
    Rational r;
    if (r.set_str(s, 10) != 0 || r.get_den() == 0) throw bad();
    r.canonicalize();
    return r;
}

std::vector<Rational> parse_rational_list(const std::string& text, std::size_t expected) {
    std::vector<Rational> out;
    for (const auto& part : split(text, ',')) out.push_back(parse_rational(part));
    if (out.size() != expected)
        throw invalid_argument("expected " + std::to_string(expected) + " values, got " + std::to_string(out.size()));
    return out;
}

std::vector<int> NRange::values() const {
    std::vector<int> out;
    for (int n = lo; n <= hi; n += step) out.push_back(n);
    return out;
}

NRange parse_n_range(const std::string& raw) {
    std::string s = trim(raw);
    NRange r;
    std::string span = s;
    if (auto colon = s.find(':'); colon != std::string::npos) {
        span = s.substr(0, colon);
        r.step = parse_int(trim(s.substr(colon + 1)));
    }
    if (auto dots = span.find(".."); dots != std::string::npos) {
        r.lo = parse_int(trim(span.substr(0, dots)));
        r.hi = parse_int(trim(span.substr(dots + 2)));
    } else {
        r.lo = r.hi = parse_int(span);
    }
    if (r.lo < 1 || r.hi < r.lo || r.step < 1) throw invalid_argument("invalid n range: '" + raw + "'");
    return r;
}

AltSet parse_alt_set(const std::string& raw) {
    std::string s = raw;
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '{' || c == '}' || c == ' '; }), s.end());
    std::vector<int> alts;
    for (const auto& part : split(s, ',')) {
        int a = parse_int(part);
        if (a < 1 || a > 3) throw invalid_argument("alternatives are 1, 2 and 3");
        alts.push_back(a);
    }
    return from_list(alts);
}

Mode parse_mode(const std::string& text) {
    if (text == "exact") return Mode::Exact;
    if (text == "float") return Mode::Float;
    throw invalid_argument("mode must be 'exact' or 'float'");
}

PreferenceDistribution make_distribution(const std::array<Rational, 6>& p) { return PreferenceDistribution(p); }

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_argument("cannot open config file " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw invalid_argument("config file is not valid JSON: " + std::string(e.what()));
    }
    if (!j.is_object()) throw invalid_argument("config file must hold a JSON object");
    ExperimentConfig c;
    for (const auto& [key, value] : j.items()) {
        if (key == "pi") {
            std::string text = list_text(value);
            c.pi = text == "ic" ? PreferenceDistribution::impartial_culture().p
                                : to_array<6>(parse_rational_list(text, 6));
        } else if (key == "u") {
            c.u = to_array<3>(parse_rational_list(list_text(value), 3));
        } else if (key == "n") {
            c.n = parse_n_range(scalar_text(value));
        } else if (key == "mode") {
            c.mode = parse_mode(scalar_text(value));
        } else if (key == "seed") {
            c.seed = std::stoull(scalar_text(value));
        } else if (key == "samples") {
            c.samples = std::stoll(scalar_text(value));
        } else if (key == "threads") {
            c.threads = parse_int(scalar_text(value));
        } else if (key == "output") {
            c.output = scalar_text(value);
        } else if (key == "format") {
            c.format = scalar_text(value);
        } else if (key == "W") {
            c.W = parse_alt_set(list_text(value));
        } else {
            throw invalid_argument("unknown config key: " + key);
        }
    }
    return c;
}

}  // namespace itervote::cli
