#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "itervote/dynamics.hpp"
#include "itervote/exact.hpp"
#include "itervote/montecarlo.hpp"
#include "itervote/rates.hpp"
#include "itervote/verify.hpp"

namespace py = pybind11;
using namespace itervote;

namespace {

// Rationals cross the boundary as "a/b" strings.
Rational to_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw invalid_argument("not a rational: " + s);
    r.canonicalize();
    return r;
}

std::array<Rational, 6> to_probs(const std::vector<std::string>& pi) {
    if (pi.size() != 6) throw invalid_argument("pi needs 6 entries");
    std::array<Rational, 6> p;
    for (int i = 0; i < 6; ++i) p[i] = to_rational(pi[i]);
    return p;
}

Utility to_utility(const std::vector<std::string>& u) {
    if (u.size() != 3) throw invalid_argument("u needs 3 entries");
    return Utility(to_rational(u[0]), to_rational(u[1]), to_rational(u[2]));
}

Counts to_counts(const std::vector<int>& c) {
    if (c.size() != 6) throw invalid_argument("counts need 6 entries");
    Counts out;
    std::copy(c.begin(), c.end(), out.begin());
    return out;
}

Mode to_mode(const std::string& m) {
    if (m == "exact") return Mode::Exact;
    if (m == "float") return Mode::Float;
    throw invalid_argument("mode must be 'exact' or 'float'");
}

py::dict value_dict(const Value& v) {
    py::dict d;
    d["exact"] = v.mode == Mode::Exact ? py::object(py::str(v.exact.get_str())) : py::object(py::none());
    d["float"] = v.approx;
    return d;
}

py::dict estimate_dict(const EstimateResult& e) {
    py::dict d;
    d["mean"] = e.mean;
    d["stderr"] = e.std_error;
    d["samples"] = e.samples;
    d["seed"] = e.seed;
    d["n"] = e.n;
    return d;
}

}  // namespace

PYBIND11_MODULE(_itervote, m) {
    m.doc() = "iterative plurality voting dynamics and price-of-anarchy tools";

    py::register_exception<invalid_argument>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<resource_limit>(m, "ResourceLimit", PyExc_RuntimeError);
    py::register_exception<infeasible_condition>(m, "InfeasibleCondition", PyExc_ValueError);

    m.def("potential_winners", [](const std::vector<int>& c) {
        return to_list(potential_winners(truthful_votes(Histogram(to_counts(c)))));
    });
    m.def("equilibrium_winners", [](const std::vector<int>& c) { return to_list(equilibrium_winners(to_counts(c))); });
    m.def("equilibrium_winners_oracle", [](const std::vector<int>& c, int max_n) {
        return to_list(br_equilibrium_winners_oracle(Histogram(to_counts(c)), max_n));
    }, py::arg("counts"), py::arg("max_n") = kDefaultOracleBound);
    m.def("adversarial_loss", [](const std::vector<int>& c, const std::vector<std::string>& u) {
        return adversarial_loss(Histogram(to_counts(c)), to_utility(u)).get_str();
    });

    m.def("exact_eadpoa", [](const std::vector<std::string>& pi, const std::vector<std::string>& u, int n,
                             const std::string& mode, int threads) {
        EadpoaResult r;
        {
            py::gil_scoped_release release;
            r = exact_eadpoa(PreferenceDistribution(to_probs(pi)), to_utility(u), n, to_mode(mode), threads);
        }
        py::dict d = value_dict(r.value);
        py::dict per_w;
        for (const auto& [W, v] : r.per_W) per_w[py::str(set_name(W))] = value_dict(v);
        d["per_W"] = per_w;
        return d;
    }, py::arg("pi"), py::arg("u"), py::arg("n"), py::arg("mode") = "exact", py::arg("threads") = 0);
    m.def("poa_bar", [](const std::vector<std::string>& pi, const std::vector<std::string>& u, int n,
                        const std::vector<int>& W, const std::string& mode) {
        Value v;
        {
            py::gil_scoped_release release;
            v = poa_bar(PreferenceDistribution(to_probs(pi)), to_utility(u), n, from_list(W), to_mode(mode));
        }
        return value_dict(v);
    }, py::arg("pi"), py::arg("u"), py::arg("n"), py::arg("W"), py::arg("mode") = "exact");
    m.def("tie_probability", [](const std::vector<std::string>& pi, int n, const std::vector<int>& W,
                                const std::string& mode) {
        return value_dict(tie_probability(PreferenceDistribution(to_probs(pi)), n, from_list(W), to_mode(mode)));
    }, py::arg("pi"), py::arg("n"), py::arg("W"), py::arg("mode") = "exact");

    m.def("classify_json", [](const std::vector<std::string>& pi, const std::vector<std::string>& u,
                              const std::optional<std::string>& epsilon) {
        Comparator cmp = epsilon ? Comparator(to_rational(*epsilon)) : Comparator{};
        return rate_report_to_json(classify_eadpoa(to_probs(pi), to_utility(u), cmp));
    }, py::arg("pi"), py::arg("u"), py::arg("epsilon") = py::none());
    m.def("rate_fit", [](const std::vector<std::pair<int, double>>& series, int min_points) {
        RateFit f = empirical_rate_fit(series, min_points);
        auto fit = [](const SlopeFit& s) {
            py::dict d;
            d["sufficient"] = s.sufficient;
            d["points"] = s.points;
            d["slope"] = s.slope;
            d["sign"] = s.sign;
            return d;
        };
        py::dict d;
        d["all"] = fit(f.all);
        d["even"] = fit(f.even);
        d["odd"] = fit(f.odd);
        d["verdict"] = f.verdict;
        return d;
    }, py::arg("series"), py::arg("min_points") = 4);

    m.def("estimate_eadpoa", [](const std::vector<std::string>& pi, const std::vector<std::string>& u, int n,
                                std::int64_t samples, std::uint64_t seed, int threads) {
        EstimateResult e;
        {
            py::gil_scoped_release release;
            e = estimate_eadpoa(PreferenceDistribution(to_probs(pi)), to_utility(u), n, samples, seed, threads);
        }
        return estimate_dict(e);
    }, py::arg("pi"), py::arg("u"), py::arg("n"), py::arg("samples"), py::arg("seed") = 1, py::arg("threads") = 0);

    m.def("identity_suites", &identity_suite_names);
    m.def("run_identity_suite", [](const std::string& suite, int q_max, int u_max) {
        SuiteOptions opts;
        opts.q_max = q_max;
        opts.u_max = u_max;
        std::vector<IdentityReport> reports;
        {
            py::gil_scoped_release release;
            reports = run_identity_suite(suite, opts);
        }
        py::list out;
        for (const auto& r : reports) {
            py::dict d;
            d["identity"] = r.identity_id;
            d["parameters"] = r.parameter;
            d["lhs"] = r.lhs;
            d["rhs"] = r.rhs;
            d["status"] = status_name(r.status);
            d["detail"] = r.detail;
            out.append(d);
        }
        return out;
    }, py::arg("suite"), py::arg("q_max") = 300, py::arg("u_max") = 300);
}
