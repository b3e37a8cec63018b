#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hhcalc/equivariant.hpp"
#include "hhcalc/errors.hpp"
#include "hhcalc/hkr.hpp"
#include "hhcalc/hodge.hpp"
#include "hhcalc/json_io.hpp"
#include "hhcalc/orbifold.hpp"
#include "hhcalc/scenarios.hpp"
#include "hhcalc/sod.hpp"
#include "hhcalc/text_format.hpp"

namespace {

using hhcalc::json;

// Note recorded with cohomological outputs: the dimension formulas assume it
// but cannot check it.
constexpr const char* kCharNote = "char(k) = 0, or char(k) >= dim(X) for the "
                                  "polyvector translation; not verified";

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw hhcalc::SchemaError("$", "cannot open \"" + path + "\"");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

json load_document(const std::string& path) {
    return hhcalc::parse_document(read_text(path));
}

/* Weights syntax: comma-separated positive integers with optional repetition,
 * "1,1,1,1,1,1" == "1^6"; "1^6,2" is six ones and a two. */
std::vector<int> parse_weights(const std::string& text) {
    std::vector<int> weights;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        int w = 0, count = 1;
        const auto caret = token.find('^');
        try {
            std::size_t used = 0;
            w = std::stoi(token.substr(0, caret), &used);
            if (used != (caret == std::string::npos ? token.size() : caret)) throw std::invalid_argument(token);
            if (caret != std::string::npos) {
                count = std::stoi(token.substr(caret + 1), &used);
                if (used != token.size() - caret - 1) throw std::invalid_argument(token);
            }
        } catch (const std::exception&) {
            throw hhcalc::SchemaError("--weights", "\"" + token + "\" is not w or w^count");
        }
        if (w < 1 || count < 1)
            throw hhcalc::SchemaError("--weights", "weights and counts must be positive");
        weights.insert(weights.end(), static_cast<std::size_t>(count), w);
    }
    if (weights.empty()) throw hhcalc::SchemaError("--weights", "no weights given");
    return weights;
}

void emit(const json& doc, const std::string& format, const std::string& text) {
    if (format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

int run(int argc, char** argv) {
    CLI::App app{"hhcalc: exact Hochschild homology/cohomology dimension calculator for "
                 "hypersurfaces, semiorthogonal components, and group quotients"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    // hodge
    auto* hodge = app.add_subcommand("hodge", "Hodge diamond of a (weighted) hypersurface");
    hodge->fallthrough();
    std::string hodge_weights;
    int hodge_degree = 0;
    hodge->add_option("--weights", hodge_weights, "ambient weights, e.g. 1^6 or 1^6,2")->required();
    hodge->add_option("--degree", hodge_degree, "hypersurface degree")->required();

    // hh
    auto* hh = app.add_subcommand("hh", "Hochschild homology/cohomology dimensions");
    hh->fallthrough();
    std::string hh_weights, hh_diamond, hh_polyvectors;
    int hh_degree = 0, hh_cy = 0;
    bool hh_cy_set = false;
    auto* hh_w = hh->add_option("--weights", hh_weights, "compute the diamond from a hypersurface spec");
    auto* hh_d = hh->add_option("--degree", hh_degree, "hypersurface degree");
    auto* hh_dia = hh->add_option("--diamond", hh_diamond, "Hodge diamond JSON file (- for stdin)");
    auto* hh_pv = hh->add_option("--polyvectors", hh_polyvectors,
                                 "polyvector table JSON file (- for stdin); cohomology route");
    auto* hh_cy_opt = hh->add_option("--cy", hh_cy, "Calabi-Yau shift n: also emit HH^* = HH_*[-n]");
    hh_w->needs(hh_d);
    hh_d->needs(hh_w);
    hh_dia->excludes(hh_w)->excludes(hh_pv);
    hh_pv->excludes(hh_w)->excludes(hh_cy_opt);

    // sod residual
    auto* sod = app.add_subcommand("sod", "semiorthogonal decomposition bookkeeping");
    sod->fallthrough();
    sod->require_subcommand(1);
    auto* sod_res = sod->add_subcommand("residual", "subtract known components from the total");
    sod_res->fallthrough();
    std::string sod_file;
    sod_res->add_option("spec", sod_file, "SodSpec JSON file (- for stdin)")->required();

    // split
    auto* split = app.add_subcommand("split", "solve the Z/2 invariant-category splitting");
    split->fallthrough();
    std::string split_file;
    split->add_option("input", split_file,
                      "JSON file with known_cg, hh_hom, n (- for stdin)")
        ->required();

    // serre
    auto* serre = app.add_subcommand("serre", "Serre-descriptor arithmetic");
    serre->fallthrough();
    std::string serre_file;
    int serre_n = 0, serre_q = 1;
    auto* serre_pos = serre->add_option("input", serre_file, "SerreDescriptor JSON file (- for stdin)");
    auto* serre_n_opt = serre->add_option("--shift-n", serre_n, "shift part of S = sigma o [n]");
    auto* serre_q_opt = serre->add_option("--twist-q", serre_q, "order of the twist sigma");
    serre_pos->excludes(serre_n_opt)->excludes(serre_q_opt);

    // orbifold
    auto* orbifold = app.add_subcommand("orbifold", "aggregate fixed-locus data into HH^* bounds");
    orbifold->fallthrough();
    std::string orbifold_file;
    orbifold->add_option("data", orbifold_file, "fixed-locus data JSON file (- for stdin)")
        ->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run a built-in regression scenario");
    verify->fallthrough();
    std::string scenario;
    verify->add_option("scenario", scenario, "scenario name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints the message or requested help text
        return code == 0 ? 0 : 2;
    }
    hh_cy_set = hh_cy_opt->count() > 0;

    if (*hodge) {
        hhcalc::VarietySpec spec{parse_weights(hodge_weights), hodge_degree};
        const hhcalc::HodgeDiamond d = hodge_hypersurface(spec);
        json doc = hhcalc::diamond_to_json(d);
        doc["assumes"] = kCharNote;
        emit(doc, format, hhcalc::format_diamond(d));
        return 0;
    }

    if (*hh) {
        json doc;
        std::string text;
        if (hh_pv->count() > 0) {
            const auto table = hhcalc::polyvectors_from_json(load_document(hh_polyvectors), "$");
            const auto coh = hhcalc::hh_cohomology_from_polyvectors(table);
            doc["hh_cohomology"] = hhcalc::dims_to_json(coh, "cohomology");
            text = "HH^*  " + hhcalc::format_dims(coh) + "\n";
        } else {
            hhcalc::GradedDims hom;
            if (hh_dia->count() > 0) {
                hom = hhcalc::hh_homology(hhcalc::diamond_from_json(load_document(hh_diamond), "$"));
            } else if (hh_w->count() > 0) {
                hom = hhcalc::hh_homology(
                    hodge_hypersurface(hhcalc::VarietySpec{parse_weights(hh_weights), hh_degree}));
            } else {
                throw hhcalc::SchemaError(
                    "hh", "needs --weights/--degree, --diamond, or --polyvectors");
            }
            doc["hh_homology"] = hhcalc::dims_to_json(hom, "homology");
            text = "HH_*  " + hhcalc::format_dims(hom) + "\n";
            if (hh_cy_set) {
                const auto coh = hhcalc::cy_shift(hom, hh_cy);
                doc["hh_cohomology"] = hhcalc::dims_to_json(coh, "cohomology");
                text += "HH^*  " + hhcalc::format_dims(coh) + "  (Calabi-Yau shift " +
                        std::to_string(hh_cy) + ")\n";
            }
        }
        doc["assumes"] = kCharNote;
        emit(doc, format, text);
        return 0;
    }

    if (*sod) {
        const auto spec = hhcalc::sod_spec_from_json(load_document(sod_file), "$");
        const auto rest = hhcalc::residual(spec);
        emit(hhcalc::dims_to_json(rest, "homology"), format,
             "HH_* residual  " + hhcalc::format_dims(rest) + "\n");
        return 0;
    }

    if (*split) {
        const json doc = load_document(split_file);
        const auto known = hhcalc::dims_from_json(doc.at("known_cg"), "$.known_cg");
        const auto hom = hhcalc::dims_from_json(doc.at("hh_hom"), "$.hh_hom");
        if (!doc.contains("n") || !doc.at("n").is_number_integer())
            throw hhcalc::SchemaError("$.n", "expected an integer shift");
        const auto result = hhcalc::solve_z2_split(known, hom, doc.at("n").get<int>());
        emit(hhcalc::z2_split_to_json(result), format,
             "HH^*                 " + hhcalc::format_interval(result.hh_coh) + "\n" +
                 "invariant (homology) " + hhcalc::format_interval(result.invariant_hom) + "\n");
        return 0;
    }

    if (*serre) {
        hhcalc::SerreDescriptor s;
        if (serre_pos->count() > 0) {
            s = hhcalc::serre_from_json(load_document(serre_file), "$");
        } else {
            if (serre_q < 1) throw hhcalc::SchemaError("--twist-q", "twist order must be >= 1");
            s = hhcalc::SerreDescriptor{serre_n, serre_q};
        }
        const auto inv = hhcalc::invariant_serre(s);
        const auto [p, q] = hhcalc::fractional_cy_relation(s);
        json doc{{"invariant_serre", hhcalc::serre_to_json(inv)},
                 {"fractional_cy", json{{"p", p}, {"q", q}}}};
        emit(doc, format,
             "invariant category Serre functor: [" + std::to_string(inv.shift_n) + "]\n" +
                 "fractional Calabi-Yau: S^" + std::to_string(q) + " = [" + std::to_string(p) +
                 "]\n");
        return 0;
    }

    if (*orbifold) {
        const auto data = hhcalc::fixed_locus_data_from_json(load_document(orbifold_file), "$");
        const auto bounds = hhcalc::orbifold_hh(data);
        emit(hhcalc::interval_to_json(bounds), format,
             "HH^* orbifold  " + hhcalc::format_interval(bounds) + "\n");
        return 0;
    }

    if (*verify) {
        const auto report = hhcalc::run_scenario(scenario);
        emit(hhcalc::report_to_json(report), format, hhcalc::format_report(report));
        return report.all_passed ? 0 : 1;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const hhcalc::SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const hhcalc::ComputationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
