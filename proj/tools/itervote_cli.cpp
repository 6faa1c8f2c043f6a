#include "config.hpp"

#include "itervote/dynamics.hpp"
#include "itervote/exact.hpp"
#include "itervote/montecarlo.hpp"
#include "itervote/parallel.hpp"
#include "itervote/rates.hpp"
#include "itervote/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace itervote;
using nlohmann::json;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitResource = 3;

struct Table {
    std::vector<std::string> comments;
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;
};

std::string cell_text(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string dbl(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw invalid_argument("cannot write " + path);
    out << text;
}

void write_table(const Table& t, const std::string& format, const std::string& path) {
    std::ostringstream os;
    if (format == "json") {
        json rows = json::array();
        for (const auto& r : t.rows) {
            json o = json::object();
            for (std::size_t i = 0; i < t.columns.size(); ++i) o[t.columns[i]] = r[i];
            rows.push_back(o);
        }
        os << json{{"description", t.comments}, {"rows", rows}}.dump(2) << "\n";
    } else {
        for (const auto& c : t.comments) os << "# " << c << "\n";
        for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
        os << "\n";
        for (const auto& r : t.rows) {
            for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << cell_text(r[i]);
            os << "\n";
        }
    }
    emit(os.str(), path);
}

json value_cell(const Value& v) { return v.mode == Mode::Exact ? json(v.exact.get_str()) : json(dbl(v.approx)); }

// Flags shared by the subcommands; empty strings mean "not given".
struct CommonFlags {
    std::string config, pi, u, n, mode, W, output, format;
    std::string seed, samples;
    int threads = 0;

    void add(CLI::App* app, bool with_u, bool with_sampling, bool with_W) {
        app->add_option("--config", config, "JSON config file; flags override it");
        app->add_option("--pi", pi, "six probabilities (a/b, integers or decimals) or 'ic'");
        if (with_u) app->add_option("--u", u, "utility vector u1,u2,u3");
        app->add_option("--n", n, "n, lo..hi or lo..hi:step");
        app->add_option("--mode", mode, "exact or float");
        if (with_W) app->add_option("--W", W, "alternative subset, e.g. 1,2");
        if (with_sampling) {
            app->add_option("--seed", seed, "64-bit seed");
            app->add_option("--samples", samples, "number of samples");
        }
        app->add_option("--threads", threads, "worker count (capped by ITERVOTE_THREADS)");
        app->add_option("--output,-o", output, "output path (default stdout)");
        app->add_option("--format", format, "csv or json");
    }

    cli::ExperimentConfig resolve() const {
        cli::ExperimentConfig c = config.empty() ? cli::ExperimentConfig{} : cli::load_config_file(config);
        if (!pi.empty()) {
            if (pi == "ic") {
                c.pi = PreferenceDistribution::impartial_culture().p;
            } else {
                auto v = cli::parse_rational_list(pi, 6);
                c.pi = std::array<Rational, 6>{v[0], v[1], v[2], v[3], v[4], v[5]};
            }
        }
        if (!u.empty()) {
            auto v = cli::parse_rational_list(u, 3);
            c.u = std::array<Rational, 3>{v[0], v[1], v[2]};
        }
        if (!n.empty()) c.n = cli::parse_n_range(n);
        if (!mode.empty()) c.mode = cli::parse_mode(mode);
        if (!W.empty()) c.W = cli::parse_alt_set(W);
        if (!seed.empty()) c.seed = std::stoull(seed);
        if (!samples.empty()) c.samples = std::stoll(samples);
        if (threads > 0) c.threads = threads;
        if (!output.empty()) c.output = output;
        if (!format.empty()) c.format = format;
        if (c.format != "csv" && c.format != "json") throw invalid_argument("format must be csv or json");
        return c;
    }
};

int worker_count(const cli::ExperimentConfig& c) {
    int cap = default_threads();
    if (!c.threads) return cap;
    return std::getenv("ITERVOTE_THREADS") ? std::min(*c.threads, cap) : *c.threads;
}

PreferenceDistribution need_pi(const cli::ExperimentConfig& c) {
    if (!c.pi) throw invalid_argument("--pi is required");
    return cli::make_distribution(*c.pi);
}

Utility need_u(const cli::ExperimentConfig& c) {
    if (!c.u) throw invalid_argument("--u is required");
    return Utility((*c.u)[0], (*c.u)[1], (*c.u)[2]);
}

std::vector<int> need_n(const cli::ExperimentConfig& c) {
    if (!c.n) throw invalid_argument("--n is required");
    return c.n->values();
}

std::string pi_text(const std::array<Rational, 6>& p) {
    std::string s;
    for (const auto& x : p) s += (s.empty() ? "" : ",") + x.get_str();
    return s;
}

std::string u_text(const Utility& u) { return u.u[0].get_str() + "," + u.u[1].get_str() + "," + u.u[2].get_str(); }

int run_exact(const CommonFlags& f, int bound) {
    auto c = f.resolve();
    auto pi = need_pi(c);
    auto u = need_u(c);
    Table t;
    t.comments = {"itervote exact: expected additive dynamic price of anarchy and its split by potential-winner set",
                  "pi=" + pi_text(pi.p) + " u=" + u_text(u),
                  "columns: n; mode (exact|float); eadpoa (a/b in exact mode); eadpoa_float; "
                  "poabar_12, poabar_13, poabar_23, poabar_123 (contribution of profiles with that potential-winner set)"};
    t.columns = {"n", "mode", "eadpoa", "eadpoa_float", "poabar_12", "poabar_13", "poabar_23", "poabar_123"};
    for (int n : need_n(c)) {
        EadpoaResult r = exact_eadpoa(pi, u, n, c.mode, worker_count(c), bound);
        std::vector<json> row{n, c.mode == Mode::Exact ? "exact" : "float", value_cell(r.value), dbl(r.value.approx)};
        for (AltSet W : {AltSet(3), AltSet(5), AltSet(6), AltSet(7)}) row.push_back(value_cell(r.per_W.at(W)));
        t.rows.push_back(row);
    }
    write_table(t, c.format, c.output);
    return 0;
}

int run_poabar(const CommonFlags& f, int bound) {
    auto c = f.resolve();
    auto pi = need_pi(c);
    auto u = need_u(c);
    AltSet W = c.W.value_or(AltSet(3));
    Table t;
    t.comments = {"itervote poabar: expected loss restricted to profiles whose potential-winner set is W",
                  "pi=" + pi_text(pi.p) + " u=" + u_text(u) + " W=" + set_name(W),
                  "columns: n; W; mode; poabar (a/b in exact mode); poabar_float"};
    t.columns = {"n", "W", "mode", "poabar", "poabar_float"};
    for (int n : need_n(c)) {
        Value v = poa_bar(pi, u, n, W, c.mode, worker_count(c), bound);
        t.rows.push_back({n, set_name(W), c.mode == Mode::Exact ? "exact" : "float", value_cell(v), dbl(v.approx)});
    }
    write_table(t, c.format, c.output);
    return 0;
}

int run_classify(const CommonFlags& f, const std::string& epsilon) {
    auto c = f.resolve();
    auto pi = need_pi(c);
    auto u = need_u(c);
    Comparator cmp = epsilon.empty() ? Comparator{} : Comparator(cli::parse_rational(epsilon));
    RateReport r = classify_eadpoa(pi.p, u, cmp);
    emit(rate_report_to_json(r) + "\n", c.output);
    return 0;
}

int run_simulate(const CommonFlags& f) {
    auto c = f.resolve();
    auto pi = need_pi(c);
    auto u = need_u(c);
    Table t;
    t.comments = {"itervote simulate: Monte Carlo estimate of the expected additive dynamic price of anarchy",
                  "pi=" + pi_text(pi.p) + " u=" + u_text(u),
                  "columns: n; samples; seed; mean; stderr (sample standard deviation / sqrt(samples))"};
    t.columns = {"n", "samples", "seed", "mean", "stderr"};
    for (int n : need_n(c)) {
        EstimateResult r = estimate_eadpoa(pi, u, n, c.samples, c.seed, worker_count(c));
        t.rows.push_back({n, r.samples, std::to_string(r.seed), dbl(r.mean), dbl(r.std_error)});
    }
    write_table(t, c.format, c.output);
    return 0;
}

int run_tieprob(const CommonFlags& f) {
    auto c = f.resolve();
    auto pi = need_pi(c);
    AltSet W = c.W.value_or(AltSet(3));
    const bool sampled = !f.samples.empty();
    Table t;
    t.comments = {"itervote tieprob: probability that the truthful potential-winner set equals W",
                  "pi=" + pi_text(pi.p) + " W=" + set_name(W),
                  "columns: n; W; method (exact|float|sampled); probability; probability_float; stderr (sampled only)"};
    t.columns = {"n", "W", "method", "probability", "probability_float", "stderr"};
    for (int n : need_n(c)) {
        if (sampled) {
            EstimateResult r = estimate_tie_probability(pi, n, W, c.samples, c.seed, worker_count(c));
            t.rows.push_back({n, set_name(W), "sampled", dbl(r.mean), dbl(r.mean), dbl(r.std_error)});
        } else {
            Value v = tie_probability(pi, n, W, c.mode);
            t.rows.push_back({n, set_name(W), c.mode == Mode::Exact ? "exact" : "float", value_cell(v), dbl(v.approx), ""});
        }
    }
    write_table(t, c.format, c.output);
    return 0;
}

struct VerifyFlags {
    std::string suite = "all";
    SuiteOptions opts;
    std::string p;
    std::string output, format = "csv";
    bool quiet = false;
};

int run_verify(const VerifyFlags& v) {
    SuiteOptions opts = v.opts;
    if (!v.p.empty()) opts.p = cli::parse_rational(v.p);
    std::vector<IdentityReport> reports = run_identity_suite(v.suite, opts);
    Table t;
    t.comments = {"itervote verify: suite " + v.suite,
                  "columns: identity; parameters (key=value;...); lhs; rhs; status (exact-match|within-tolerance|violation); detail"};
    t.columns = {"identity", "parameters", "lhs", "rhs", "status", "detail"};
    std::size_t violations = 0;
    for (const auto& r : reports) {
        if (r.status == Status::Violation) ++violations;
        if (v.quiet && r.status != Status::Violation) continue;
        std::string params;
        for (const auto& [k, val] : r.parameter) params += (params.empty() ? "" : ";") + k + "=" + val;
        t.rows.push_back({r.identity_id, params, r.lhs, r.rhs, status_name(r.status), r.detail});
    }
    if (v.format != "csv" && v.format != "json") throw invalid_argument("format must be csv or json");
    write_table(t, v.format, v.output);
    std::cerr << v.suite << ": " << reports.size() << " checks, " << violations << " violations\n";
    return violations ? kExitViolation : 0;
}

struct OracleFlags {
    int n_max = 8;
    int random = 0;
    int random_n_max = 14;
    std::uint64_t seed = 1;
    std::string output, format = "csv";
};

int run_oracle_check(const OracleFlags& o) {
    if (o.n_max > kDefaultOracleBound || o.random_n_max > kDefaultOracleBound)
        throw resource_limit("oracle is limited to n <= " + std::to_string(kDefaultOracleBound));
    struct Tally {
        long histograms = 0, mismatches = 0, transitions = 0, violations = 0;
        std::size_t states = 0;
        int max_depth = 0;
    };
    std::map<int, Tally> per_n;
    auto check = [&](const Counts& cnt) {
        Histogram h(cnt);
        OracleStats s = run_br_oracle(h);
        Tally& t = per_n[h.n()];
        ++t.histograms;
        if (s.winners != equilibrium_winners(h)) ++t.mismatches;
        t.states += s.states;
        t.transitions += static_cast<long>(s.transitions);
        t.violations += static_cast<long>(s.monotonicity_violations);
        t.max_depth = std::max(t.max_depth, s.max_depth);
    };
    for (int n = 1; n <= o.n_max; ++n) for_each_histogram(n, check);
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<int> pick_n(1, std::max(1, o.random_n_max));
    for (int i = 0; i < o.random; ++i) {
        int n = pick_n(rng);
        Counts cnt{};
        std::uniform_int_distribution<int> pick_r(0, kRankings - 1);
        for (int k = 0; k < n; ++k) ++cnt[pick_r(rng)];
        check(cnt);
    }
    Table t;
    t.comments = {"itervote oracle-check: closed-form equilibrium winners against exhaustive best-response search",
                  "columns: n; histograms; mismatches; states; transitions; max_depth; monotonicity_violations"};
    t.columns = {"n", "histograms", "mismatches", "states", "transitions", "max_depth", "monotonicity_violations"};
    long bad = 0;
    for (const auto& [n, s] : per_n) {
        t.rows.push_back({n, s.histograms, s.mismatches, s.states, s.transitions, s.max_depth, s.violations});
        bad += s.mismatches + s.violations;
    }
    write_table(t, o.format, o.output);
    return bad ? kExitViolation : 0;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    return out;
}

int run_ratefit(const std::string& input, std::string column, int min_points, const std::string& output) {
    std::ifstream in(input);
    if (!in) throw invalid_argument("cannot open " + input);
    std::string line;
    std::vector<std::string> header;
    std::vector<std::pair<int, double>> series;
    int n_col = -1, v_col = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto cells = split_csv_line(line);
        if (header.empty()) {
            header = cells;
            for (std::size_t i = 0; i < header.size(); ++i) {
                if (header[i] == "n") n_col = static_cast<int>(i);
                if (header[i] == column) v_col = static_cast<int>(i);
            }
            if (column.empty()) {
                for (const char* name : {"eadpoa_float", "poabar_float", "probability_float", "mean"})
                    for (std::size_t i = 0; i < header.size() && v_col < 0; ++i)
                        if (header[i] == name) v_col = static_cast<int>(i);
                if (v_col >= 0) column = header[v_col];
            }
            if (n_col < 0 || v_col < 0) throw invalid_argument("input needs an 'n' column and a value column");
            continue;
        }
        if (static_cast<int>(cells.size()) <= std::max(n_col, v_col)) throw invalid_argument("short row: " + line);
        series.emplace_back(std::stoi(cells[n_col]), cli::parse_rational(cells[v_col]).get_d());
    }
    RateFit fit = empirical_rate_fit(series, min_points);
    auto slope = [](const SlopeFit& s) {
        json j{{"sufficient", s.sufficient}, {"points", s.points}, {"sign", s.sign}};
        if (s.sufficient) {
            j["slope"] = s.slope;
            j["intercept"] = s.intercept;
        }
        return j;
    };
    json out{{"column", column},          {"verdict", fit.verdict},  {"all", slope(fit.all)},
             {"even", slope(fit.even)},   {"odd", slope(fit.odd)},   {"insufficient", fit.insufficient}};
    emit(out.dump(2) + "\n", output);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"itervote: iterative plurality voting dynamics and price-of-anarchy tools"};
    app.require_subcommand(1);

    CommonFlags exact_f, poabar_f, classify_f, simulate_f, tieprob_f;
    int exact_bound = kDefaultEnumerationBound, poabar_bound = kDefaultPoaBarBound;
    std::string epsilon;

    auto* exact = app.add_subcommand("exact", "exact EADPoA and per-W split over an n range");
    exact_f.add(exact, true, false, false);
    exact->add_option("--bound", exact_bound, "enumeration bound on n");

    auto* poabar = app.add_subcommand("poabar", "tie-constrained PoA-bar(W) series");
    poabar_f.add(poabar, true, false, true);
    poabar->add_option("--bound", poabar_bound, "enumeration bound on n");

    auto* classify = app.add_subcommand("classify", "asymptotic rate report as JSON");
    classify_f.add(classify, true, false, false);
    classify->add_option("--epsilon", epsilon, "treat |x| <= epsilon as equality");

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo EADPoA estimate");
    simulate_f.add(simulate, true, true, false);

    auto* tieprob = app.add_subcommand("tieprob", "probability that the potential-winner set equals W");
    tieprob_f.add(tieprob, false, true, true);

    VerifyFlags vf;
    auto* verify = app.add_subcommand("verify", "combinatorial identity and probability-bound suites");
    verify->add_option("--suite", vf.suite, "suite name or 'all'");
    verify->add_option("--qmax", vf.opts.q_max, "largest q for the binomial sums");
    verify->add_option("--umax", vf.opts.u_max, "largest u for the alternating sum");
    verify->add_option("--nmax", vf.opts.multinomial_n_max, "largest even n for the multinomial square");
    verify->add_option("--wallis-nmax", vf.opts.wallis_n_max, "largest n for the Wallis sandwich");
    verify->add_option("--p", vf.p, "success probability for the binomial sums");
    verify->add_option("--output,-o", vf.output, "output path (default stdout)");
    verify->add_option("--format", vf.format, "csv or json");
    verify->add_flag("--violations-only", vf.quiet, "print only violating rows");

    OracleFlags of;
    auto* oracle = app.add_subcommand("oracle-check", "closed-form equilibrium winners against exhaustive search");
    oracle->add_option("--nmax", of.n_max, "check every histogram with n up to this");
    oracle->add_option("--random", of.random, "additional random histograms");
    oracle->add_option("--random-nmax", of.random_n_max, "largest n for random histograms");
    oracle->add_option("--seed", of.seed, "seed for random histograms");
    oracle->add_option("--output,-o", of.output, "output path (default stdout)");
    oracle->add_option("--format", of.format, "csv or json");

    std::string rf_input, rf_column, rf_output;
    int rf_min_points = 4;
    auto* ratefit = app.add_subcommand("ratefit", "log-log slope fit of a produced CSV series");
    ratefit->add_option("--input", rf_input, "CSV produced by another subcommand")->required();
    ratefit->add_option("--column", rf_column, "value column (default: first float column)");
    ratefit->add_option("--min-points", rf_min_points, "minimum points per fit");
    ratefit->add_option("--output,-o", rf_output, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    try {
        if (*exact) return run_exact(exact_f, exact_bound);
        if (*poabar) return run_poabar(poabar_f, poabar_bound);
        if (*classify) return run_classify(classify_f, epsilon);
        if (*simulate) return run_simulate(simulate_f);
        if (*tieprob) return run_tieprob(tieprob_f);
        if (*verify) return run_verify(vf);
        if (*oracle) return run_oracle_check(of);
        if (*ratefit) return run_ratefit(rf_input, rf_column, rf_min_points, rf_output);
    } catch (const resource_limit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const infeasible_condition& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::out_of_range& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
