#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tworay/checks.hpp"
#include "tworay/engine.hpp"
#include "tworay/golden.hpp"

namespace py = pybind11;
using namespace tworay;

namespace {

Scenario scenario_for(const std::string& kind, std::optional<i64> g_min, std::optional<i64> g_max,
                      bool geometric, bool curated) {
    Scenario s;
    if (kind == "point") s = Scenario::point();
    else if (kind == "conic") s = Scenario::conic();
    else if (kind == "line") s = Scenario::line();
    else if (kind == "general-curve") s = Scenario::general_curve();
    else throw std::invalid_argument("unknown scenario kind: " + kind);
    if (g_min) s.g_min = *g_min;
    if (g_max) s.g_max = *g_max;
    s.geometric_rules = geometric;
    s.curated_constraints = curated;
    return s;
}

py::dict row_dict(const TableRow& r) {
    py::dict d;
    d["g"] = r.g;
    d["type"] = std::string(to_string(r.type));
    d["subtype"] = r.subtype == Subtype::None ? py::object(py::none())
                                              : py::object(py::str(std::string(to_string(r.subtype))));
    d["alpha"] = r.dc.alpha;
    d["beta"] = r.dc.beta;
    d["d3"] = r.d3;
    if (r.type == RayType::E1 || r.type == RayType::E2) {
        d["rw"] = r.rw;
        d["kw3"] = r.kw3;
    }
    if (r.type == RayType::E1) {
        d["kwb"] = r.kwb;
        d["gb"] = r.gb;
    }
    if (r.type == RayType::C) d["deg_delta"] = r.deg_delta;
    if (r.type == RayType::D) d["dk2"] = r.dk2;
    return d;
}

py::dict survivor_dict(const SurvivorRecord& r) {
    py::dict d;
    d["type"] = std::string(to_string(r.type));
    d["g"] = r.g;
    d["d"] = r.d;
    d["h"] = r.h;
    d["alpha"] = r.alpha;
    d["beta"] = r.beta;
    if (r.type == RayType::E1) {
        d["gamma"] = r.gamma;
        d["v"] = r.v;
    }
    d["excluded"] = r.excluded;
    if (r.excluded) {
        d["rule"] = std::string(to_string(r.rule));
        d["citation"] = r.citation;
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact-integer two-ray-game verification engine for Fano threefolds";

    py::class_<Center>(m, "Center")
        .def_static("point", &Center::point)
        .def_static("curve", &Center::curve, py::arg("d"), py::arg("h"))
        .def_property_readonly("is_point", &Center::is_point)
        .def_readonly("d", &Center::d)
        .def_readonly("h", &Center::h);

    py::class_<YInvariants>(m, "YInvariants")
        .def(py::init([](i64 i3, i64 i2, i64 i1, i64 e3) {
                 return YInvariants{i3, i2, i1, e3};
             }),
             py::arg("i3"), py::arg("i2"), py::arg("i1"), py::arg("e3"))
        .def_readonly("i3", &YInvariants::i3)
        .def_readonly("i2", &YInvariants::i2)
        .def_readonly("i1", &YInvariants::i1)
        .def_readonly("e3", &YInvariants::e3)
        .def("__repr__", [](const YInvariants& v) {
            return "YInvariants(i3=" + std::to_string(v.i3) + ", i2=" + std::to_string(v.i2) +
                   ", i1=" + std::to_string(v.i1) + ", e3=" + std::to_string(v.e3) + ")";
        })
        .def("__eq__", [](const YInvariants& a, const YInvariants& b) { return a == b; })
        .def("as_tuple", [](const YInvariants& v) { return py::make_tuple(v.i3, v.i2, v.i1, v.e3); });

    m.def("blowup_invariants", &blowup_invariants, py::arg("g"), py::arg("center"));
    m.def(
        "triple_product",
        [](const YInvariants& inv, std::pair<i64, i64> p1, std::pair<i64, i64> p2,
           std::pair<i64, i64> p3) { return triple_product(inv, p1, p2, p3); },
        py::arg("inv"), py::arg("p1"), py::arg("p2"), py::arg("p3"));
    m.def(
        "d_intersections",
        [](const YInvariants& inv, i64 alpha, i64 beta) {
            const DTriple t = d_intersections(inv, {alpha, beta});
            return py::make_tuple(t.d3, t.d2k, t.dk2);
        },
        py::arg("inv"), py::arg("alpha"), py::arg("beta"));
    m.def(
        "omega_d_squared",
        [](const YInvariants& inv, i64 alpha, i64 beta) {
            return omega_d_squared(inv, {alpha, beta});
        },
        py::arg("inv"), py::arg("alpha"), py::arg("beta"));
    m.def("chi_minus_k", &chi_minus_k, py::arg("inv"));
    m.def(
        "chi_exceptional",
        [](const YInvariants& inv, i64 h) { return chi_exceptional(inv, h); }, py::arg("inv"),
        py::arg("h"));
    m.def("chi_exceptional_rational", &chi_exceptional_rational, py::arg("inv"));
    m.def(
        "section_lower_bound",
        [](const YInvariants& inv, const Center& c) { return section_lower_bound(inv, c); },
        py::arg("inv"), py::arg("center"));
    m.def("rr_h0", &rr_h0, py::arg("g"), py::arg("m"));
    m.def("allowed_hw3", &allowed_hw3, py::arg("beta"), py::arg("w_max"));
    m.def(
        "e1_derived",
        [](const YInvariants& inv, i64 alpha, i64 beta) {
            const E1Derived r = e1_derived(inv, {alpha, beta});
            return py::make_tuple(r.kw3, r.kwb, r.two_gb_minus_2, r.d3);
        },
        py::arg("inv"), py::arg("alpha"), py::arg("beta"));
    m.def("e2_target_volume", &e2_target_volume, py::arg("inv"));

    m.def(
        "flop_table",
        [](const std::string& kind, std::optional<i64> g_min, std::optional<i64> g_max,
           bool geometric) {
            const Scenario s = scenario_for(kind, g_min, g_max, geometric, true);
            py::list out;
            for (const TableRow& r : flop_table(s)) out.append(row_dict(r));
            return out;
        },
        py::arg("kind"), py::arg("g_min") = std::nullopt, py::arg("g_max") = std::nullopt,
        py::arg("geometric") = true);
    m.def(
        "golden_table",
        [](const std::string& kind) {
            py::list out;
            for (const TableRow& r : golden::table(scenario_for(kind, {}, {}, true, true).kind))
                out.append(row_dict(r));
            return out;
        },
        py::arg("kind"));
    m.def(
        "divcont_solutions",
        [](const std::string& kind) {
            const Scenario s = scenario_for(kind, {}, {}, true, true);
            py::list out;
            for (const DivContSolution& x : divcont_solutions(s))
                out.append(py::make_tuple(x.g, x.alpha, x.beta));
            return out;
        },
        py::arg("kind"));
    m.def(
        "divcont_parity_witness",
        [](const std::string& kind, i64 g, i64 alpha, i64 beta) {
            const Scenario s = scenario_for(kind, {}, {}, true, true);
            const ParityWitness w = divcont_parity_witness(s, {g, alpha, beta});
            return py::make_tuple(w.omega_sq, std::string(to_string(w.obstruction)));
        },
        py::arg("kind"), py::arg("g"), py::arg("alpha"), py::arg("beta"));
    m.def(
        "nonfano_search",
        [](bool curated, bool geometric, int bound_scale) {
            Scenario s = Scenario::general_curve();
            s.curated_constraints = curated;
            s.geometric_rules = geometric;
            const Verdict v = nonfano_search(s, bound_scale);
            py::dict out;
            const auto listify = [](const std::vector<SurvivorRecord>& recs) {
                py::list l;
                for (const auto& r : recs) l.append(survivor_dict(r));
                return l;
            };
            out["e1"] = listify(v.e1);
            out["type_c"] = listify(v.type_c);
            out["type_e"] = listify(v.type_e);
            out["type_d"] = listify(v.type_d);
            out["all_excluded"] = v.all_excluded();
            return out;
        },
        py::arg("curated") = true, py::arg("geometric") = true, py::arg("bound_scale") = 1);
    m.def(
        "gbound_scan",
        [](i64 g_max, const std::string& kind) {
            return gbound_scan(g_max, scenario_for(kind, {}, {}, true, true).kind);
        },
        py::arg("g_max") = 40, py::arg("kind") = "conic");
    m.def(
        "identity_sweep", [] { return identity_sweep(); },
        "Check -D^2.(-K)*alpha + D^3 = d*beta*(beta-alpha)*(alpha+beta) + "
        "(2h-2)*beta*(alpha+beta)^2 on the default grid");
    m.def(
        "verify",
        [](int bounds_scale) {
            py::list checks;
            bool all = true;
            for (const CheckResult& c : run_verify_checks(bounds_scale)) {
                py::dict d;
                d["check"] = c.name;
                d["pass"] = c.pass;
                d["detail"] = c.detail;
                checks.append(d);
                all = all && c.pass;
            }
            return py::make_tuple(all, checks);
        },
        py::arg("bounds_scale") = 1);
}
