#include "hhcalc/scenarios.hpp"

#include <utility>

#include "hhcalc/equivariant.hpp"
#include "hhcalc/errors.hpp"
#include "hhcalc/hkr.hpp"
#include "hhcalc/hodge.hpp"
#include "hhcalc/json_io.hpp"
#include "hhcalc/orbifold.hpp"
#include "hhcalc/sod.hpp"

namespace hhcalc {

namespace {

/* The quartic fourfold X in P^5 and the double cover Y of P^5 branched in it:
 * diamonds, homology, the residual components after removing the exceptional
 * line bundles, the Calabi-Yau shift on C_Y, the Z/2 splitting solve with its
 * irreducible degree-3 ambiguity, and the Serre-descriptor arithmetic. */
constexpr const char* kQuarticFourfold = R"json({
  "name": "quartic-fourfold",
  "steps": [
    {
      "name": "hodge-diamond-X",
      "op": "hodge_hypersurface",
      "inputs": {"spec": {"weights": [1, 1, 1, 1, 1, 1], "degree": 4}},
      "expect": {"dim": 4, "h": [[1, 0, 0, 0, 0], [0, 1, 0, 21, 0], [0, 0, 142, 0, 0],
                                 [0, 21, 0, 1, 0], [0, 0, 0, 0, 1]]},
      "origin": "middle Hodge row (0,21,142,21,0) of a smooth quartic fourfold via the Jacobian-ring Poincare series"
    },
    {
      "name": "hodge-diamond-Y",
      "op": "hodge_hypersurface",
      "inputs": {"spec": {"weights": [1, 1, 1, 1, 1, 1, 2], "degree": 4}},
      "expect": {"dim": 5, "h": [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 1, 0], [0, 0, 1, 90, 0, 0],
                                 [0, 0, 90, 1, 0, 0], [0, 1, 0, 0, 1, 0], [0, 0, 0, 0, 0, 1]]},
      "origin": "double cover of P^5 branched in the quartic, modeled as a weighted hypersurface with weights (1^6,2)"
    },
    {
      "name": "hh-homology-X",
      "op": "hh_homology",
      "inputs": {"diamond": {"dim": 4, "h": [[1, 0, 0, 0, 0], [0, 1, 0, 21, 0],
                                             [0, 0, 142, 0, 0], [0, 21, 0, 1, 0],
                                             [0, 0, 0, 0, 1]]}},
      "expect": {"dims": {"-2": 21, "0": 146, "2": 21}},
      "origin": "summing the diamond along p - q = n"
    },
    {
      "name": "hh-homology-Y",
      "op": "hh_homology",
      "inputs": {"diamond": {"dim": 5, "h": [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 1, 0],
                                             [0, 0, 1, 90, 0, 0], [0, 0, 90, 1, 0, 0],
                                             [0, 1, 0, 0, 1, 0], [0, 0, 0, 0, 0, 1]]}},
      "expect": {"dims": {"-3": 1, "-1": 90, "0": 6, "1": 90, "3": 1}},
      "origin": "summing the double-cover diamond along p - q = n"
    },
    {
      "name": "residual-CX",
      "op": "sod_residual",
      "inputs": {"spec": {"total": {"dims": {"-2": 21, "0": 146, "2": 21}, "kind": "homology"},
                          "exceptional_count": 2}},
      "expect": {"dims": {"-2": 21, "0": 144, "2": 21}},
      "origin": "homology additivity after removing the two exceptional line bundles O, O(1)"
    },
    {
      "name": "residual-CY",
      "op": "sod_residual",
      "inputs": {"spec": {"total": {"dims": {"-3": 1, "-1": 90, "0": 6, "1": 90, "3": 1},
                                    "kind": "homology"},
                          "exceptional_count": 4}},
      "expect": {"dims": {"-3": 1, "-1": 90, "0": 2, "1": 90, "3": 1}},
      "origin": "homology additivity after removing the four exceptional line bundles O,...,O(3)"
    },
    {
      "name": "cy-shift-CY",
      "op": "cy_shift",
      "inputs": {"hh": {"dims": {"-3": 1, "-1": 90, "0": 2, "1": 90, "3": 1}}, "n": 3},
      "expect": {"dims": {"0": 1, "2": 90, "3": 2, "4": 90, "6": 1}},
      "origin": "the residual component of the double cover is Calabi-Yau with Serre functor [3]"
    },
    {
      "name": "split-CX",
      "op": "solve_z2_split",
      "inputs": {"known_cg": {"dims": {"0": 1, "2": 90, "3": 2, "4": 90, "6": 1}},
                 "hh_hom": {"dims": {"-2": 21, "0": 144, "2": 21}},
                 "n": 3},
      "expect": {"hh_coh": {"lo": {"dims": {"0": 1, "2": 90, "4": 90, "6": 1}},
                            "hi": {"dims": {"0": 1, "2": 90, "3": 2, "4": 90, "6": 1}}},
                 "invariant_hom": {"lo": {"dims": {}}, "hi": {"dims": {"0": 2}}}},
      "origin": "one-pass interval propagation; the degree-3 slack 0 <= d <= 2 is genuinely unresolved by dimension bookkeeping"
    },
    {
      "name": "deformation-90",
      "op": "deformation_dim",
      "inputs": {"spec": {"weights": [1, 1, 1, 1, 1, 1], "degree": 4}},
      "expect": 90,
      "origin": "first-order deformations of the quartic fourfold: the degree-4 graded piece of its Jacobian ring"
    },
    {
      "name": "fractional-cy-CX",
      "op": "fractional_cy_relation",
      "inputs": {"serre": {"shift_n": 3, "twist_order_q": 2}},
      "expect": {"p": 6, "q": 2},
      "origin": "squaring S = sigma o [3] with sigma an involution"
    },
    {
      "name": "invariant-serre",
      "op": "invariant_serre",
      "inputs": {"serre": {"shift_n": 3, "twist_order_q": 2}},
      "expect": {"shift_n": 3, "twist_order_q": 1},
      "origin": "the invariant category absorbs the twist and becomes Calabi-Yau with shift 3"
    }
  ]
})json";

/* The quartic K3 and the Enriques surface: both Hochschild routes on the K3,
 * the torsion-canonical Enriques fixture, the balance forcing the invariant
 * part of HH_*(Enriques) to be everything, and the same statement through the
 * orbifold aggregator for the fixed-point-free covering involution. */
constexpr const char* kEnriquesK3 = R"json({
  "name": "enriques-k3",
  "steps": [
    {
      "name": "hodge-K3",
      "op": "hodge_hypersurface",
      "inputs": {"spec": {"weights": [1, 1, 1, 1], "degree": 4}},
      "expect": {"dim": 2, "h": [[1, 0, 1], [0, 20, 0], [1, 0, 1]]},
      "origin": "quartic K3 surface: 19 primitive middle classes plus the hyperplane class"
    },
    {
      "name": "hh-homology-K3",
      "op": "hh_homology",
      "inputs": {"diamond": {"dim": 2, "h": [[1, 0, 1], [0, 20, 0], [1, 0, 1]]}},
      "expect": {"dims": {"-2": 1, "0": 22, "2": 1}},
      "origin": "summing the K3 diamond along p - q = n"
    },
    {
      "name": "hh-cohomology-K3",
      "op": "cy_shift",
      "inputs": {"hh": {"dims": {"-2": 1, "0": 22, "2": 1}}, "n": 2},
      "expect": {"dims": {"0": 1, "2": 22, "4": 1}},
      "origin": "a K3 surface is Calabi-Yau of dimension 2"
    },
    {
      "name": "k3-polyvectors",
      "op": "polyvectors_trivial_canonical",
      "inputs": {"diamond": {"dim": 2, "h": [[1, 0, 1], [0, 20, 0], [1, 0, 1]]}},
      "expect": {"dim": 2, "table": {"0,0": 1, "0,2": 1, "1,1": 20, "2,0": 1, "2,2": 1}},
      "origin": "trivial canonical bundle folds the diamond onto the polyvector square"
    },
    {
      "name": "k3-chain-closes",
      "op": "hh_cohomology_from_polyvectors",
      "inputs": {"table": {"dim": 2, "table": {"0,0": 1, "0,2": 1, "1,1": 20, "2,0": 1,
                                               "2,2": 1}}},
      "expect": {"dims": {"0": 1, "2": 22, "4": 1}},
      "origin": "polyvector route agrees with the Calabi-Yau shift route (exhaustive cross-check)"
    },
    {
      "name": "enriques-cohomology",
      "op": "hh_cohomology_from_polyvectors",
      "inputs": {"table": {"dim": 2, "table": {"0,0": 1, "1,1": 10, "2,2": 1}}},
      "expect": {"dims": {"0": 1, "2": 10, "4": 1}},
      "origin": "torsion-canonical polyvector table of the Enriques surface (shipped fixture)"
    },
    {
      "name": "enriques-homology",
      "op": "hh_homology",
      "inputs": {"diamond": {"dim": 2, "h": [[1, 0, 0], [0, 10, 0], [0, 0, 1]]}},
      "expect": {"dims": {"0": 12}},
      "origin": "the Enriques diamond is concentrated on the diagonal, so homology sits in degree 0"
    },
    {
      "name": "k3-minus-enriques",
      "op": "subtract",
      "inputs": {"a": {"dims": {"0": 1, "2": 22, "4": 1}}, "b": {"dims": {"0": 1, "2": 10, "4": 1}}},
      "expect": {"dims": {"2": 12}},
      "origin": "the residual summand of the equivariant splitting must make the two cohomology tables balance"
    },
    {
      "name": "invariant-forced",
      "op": "shift",
      "inputs": {"v": {"dims": {"2": 12}}, "m": 2},
      "expect": {"dims": {"0": 12}},
      "origin": "undoing the [-2] shift lands the residual summand in homology degree 0 with the full dimension 12: the involution acts trivially on HH_* of the Enriques surface"
    },
    {
      "name": "orbifold-enriques",
      "op": "orbifold_hh",
      "inputs": {"data": [
        {"label": "1", "codim": 0,
         "table": {"0,0": 1, "0,2": 1, "1,1": 20, "2,0": 1, "2,2": 1},
         "invariant": {"lo": {"dims": {"0": 1, "2": 10, "4": 1}},
                       "hi": {"dims": {"0": 1, "2": 10, "4": 1}}}},
        {"label": "sigma", "codim": 0, "table": {}}
      ]},
      "expect": {"lo": {"dims": {"0": 1, "2": 10, "4": 1}},
                 "hi": {"dims": {"0": 1, "2": 10, "4": 1}}},
      "origin": "fixed-point-free covering involution of the Enriques surface: only the identity element contributes, through its invariants"
    }
  ]
})json";

json execute_step(const std::string& op, const json& inputs, const std::string& path) {
    if (op == "hodge_hypersurface")
        return diamond_to_json(
            hodge_hypersurface(variety_spec_from_json(inputs.at("spec"), path + ".spec")));
    if (op == "hh_homology")
        return dims_to_json(hh_homology(diamond_from_json(inputs.at("diamond"), path + ".diamond")));
    if (op == "cy_shift")
        return dims_to_json(cy_shift(dims_from_json(inputs.at("hh"), path + ".hh"),
                                     inputs.at("n").get<int>()));
    if (op == "sod_residual")
        return dims_to_json(residual(sod_spec_from_json(inputs.at("spec"), path + ".spec")));
    if (op == "solve_z2_split")
        return z2_split_to_json(
            solve_z2_split(dims_from_json(inputs.at("known_cg"), path + ".known_cg"),
                           dims_from_json(inputs.at("hh_hom"), path + ".hh_hom"),
                           inputs.at("n").get<int>()));
    if (op == "deformation_dim")
        return dim_to_json(
            deformation_dim(variety_spec_from_json(inputs.at("spec"), path + ".spec")));
    if (op == "fractional_cy_relation") {
        const auto [p, q] =
            fractional_cy_relation(serre_from_json(inputs.at("serre"), path + ".serre"));
        return json{{"p", p}, {"q", q}};
    }
    if (op == "invariant_serre")
        return serre_to_json(invariant_serre(serre_from_json(inputs.at("serre"), path + ".serre")));
    if (op == "polyvectors_trivial_canonical")
        return polyvectors_to_json(polyvectors_trivial_canonical(
            diamond_from_json(inputs.at("diamond"), path + ".diamond")));
    if (op == "hh_cohomology_from_polyvectors")
        return dims_to_json(hh_cohomology_from_polyvectors(
            polyvectors_from_json(inputs.at("table"), path + ".table")));
    if (op == "subtract")
        return dims_to_json(subtract(dims_from_json(inputs.at("a"), path + ".a"),
                                     dims_from_json(inputs.at("b"), path + ".b")));
    if (op == "shift")
        return dims_to_json(shift(dims_from_json(inputs.at("v"), path + ".v"),
                                  inputs.at("m").get<int>()));
    if (op == "orbifold_hh")
        return interval_to_json(
            orbifold_hh(fixed_locus_data_from_json(inputs.at("data"), path + ".data")));
    throw SchemaError(path, "unknown operation \"" + op + "\"");
}

const json& scenario_table() {
    static const json table = [] {
        json t = json::object();
        for (const char* text : {kQuarticFourfold, kEnriquesK3}) {
            json s = json::parse(text);
            const std::string name = s.at("name").get<std::string>();
            t[name] = std::move(s);
        }
        return t;
    }();
    return table;
}

} // namespace

std::vector<std::string> scenario_names() {
    std::vector<std::string> names;
    for (const auto& [name, s] : scenario_table().items()) names.push_back(name);
    return names;
}

ScenarioReport run_scenario(const std::string& name) {
    const json& table = scenario_table();
    auto it = table.find(name);
    if (it == table.end()) throw UnknownScenarioError(name);

    ScenarioReport report;
    report.scenario = name;
    report.all_passed = true;
    const json& steps = it->at("steps");
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const json& step = steps[i];
        const std::string path = "$.steps[" + std::to_string(i) + "].inputs";
        StepResult r;
        r.name = step.at("name").get<std::string>();
        r.op = step.at("op").get<std::string>();
        r.origin = step.at("origin").get<std::string>();
        r.expected = step.at("expect");
        try {
            r.actual = execute_step(r.op, step.at("inputs"), path);
            r.passed = (r.actual == r.expected);
            if (!r.passed) r.message = "expected and actual values differ";
        } catch (const std::exception& e) {
            r.passed = false;
            r.message = e.what();
        }
        report.all_passed = report.all_passed && r.passed;
        report.steps.push_back(std::move(r));
    }
    return report;
}

json report_to_json(const ScenarioReport& report) {
    json steps = json::array();
    for (const auto& s : report.steps) {
        json step{{"name", s.name}, {"op", s.op},         {"origin", s.origin},
                  {"passed", s.passed}, {"expected", s.expected}, {"actual", s.actual}};
        if (!s.message.empty()) step["message"] = s.message;
        steps.push_back(std::move(step));
    }
    return {{"scenario", report.scenario},
            {"all_passed", report.all_passed},
            {"steps", std::move(steps)}};
}

std::string format_report(const ScenarioReport& report) {
    std::string out = "scenario " + report.scenario + "\n";
    std::size_t passed = 0;
    for (const auto& s : report.steps) {
        out += s.passed ? "  [pass] " : "  [FAIL] ";
        out += s.name;
        if (!s.passed) {
            out += " (" + (s.message.empty() ? std::string("mismatch") : s.message) + ")";
            if (!s.actual.is_null()) out += "\n         actual   " + s.actual.dump();
            out += "\n         expected " + s.expected.dump();
        }
        out += "\n";
        if (s.passed) ++passed;
    }
    out += std::to_string(passed) + "/" + std::to_string(report.steps.size()) + " steps passed\n";
    return out;
}

} // namespace hhcalc
