#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lts/cochain.hpp"
#include "lts/cohomology.hpp"
#include "lts/deformation.hpp"
#include "lts/error.hpp"
#include "lts/fixtures.hpp"
#include "lts/io.hpp"
#include "lts/lie_triple_system.hpp"
#include "lts/random.hpp"
#include "lts/representation.hpp"
#include "lts/rota_baxter.hpp"

namespace lts::cli {

using io::json;

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2 };

namespace detail {

inline std::filesystem::path dir_of(const std::string& file) {
    auto p = std::filesystem::path(file).parent_path();
    return p.empty() ? std::filesystem::path(".") : p;
}

inline LieTripleSystem load_algebra(const std::string& f) { return io::algebra_from_json(io::read_json_file(f)); }
inline Representation load_representation(const std::string& f) {
    return io::representation_from_json(io::read_json_file(f), dir_of(f));
}
inline Action load_action(const std::string& f) { return io::action_from_json(io::read_json_file(f), dir_of(f)); }
inline RelativeRBO load_rbo(const std::string& f) { return io::rbo_from_json(io::read_json_file(f), dir_of(f)); }
inline RBOHomomorphism load_hom(const std::string& f) { return io::homomorphism_from_json(io::read_json_file(f), dir_of(f)); }
inline Cochain load_cochain(const std::string& f, const RelativeRBO& rbo) {
    return io::cochain_from_json(io::read_json_file(f), rbo.Lprime().dim(), rbo.L().dim());
}

inline json optional_vector(const std::optional<Cochain>& c) {
    return c ? io::vector_to_json(c->coeffs) : json(nullptr);
}

inline std::optional<json> fixture_json(const std::string& name) {
    if (name == "lts3") return io::algebra_to_json(fixtures::lts3());
    if (name == "lts4") return io::algebra_to_json(fixtures::lts4());
    if (name == "rbo3_P") return io::rbo_to_json(fixtures::rbo3_P());
    if (name == "rbo4_P") return io::rbo_to_json(fixtures::rbo4_P());
    return std::nullopt;
}

}  // namespace detail

/// Runs one command line (without the program name). The JSON result goes to
/// `out`, diagnostics to `err`. Exit status: 0 success, 1 verification
/// failure, 2 input or usage error.
inline int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with Lie triple systems and relative Rota-Baxter operators", "ltsrb"};
    app.require_subcommand(1);

    std::string weight_text;
    std::uint64_t seed = 20240601;
    int degree = 1;
    bool strict = false;
    bool degree_override = false;
    bool all_weights = false;
    std::string convention_text = "definition";
    std::string span_text;
    std::size_t samples = 100;
    std::string file1, file2, file3;

    int status = kOk;
    std::function<void()> action;

    auto emit = [&](const json& j) { out << io::dump(j); };
    auto weight_or = [&](const Scalar& fallback) { return weight_text.empty() ? fallback : parse_scalar(weight_text); };
    auto report_status = [&](const Report& r) {
        if (!r.ok()) status = kVerificationFailed;
    };

    auto add = [&](CLI::App* group, const std::string& name, const std::string& help, std::vector<std::string*> files,
                   std::function<void()> body) {
        auto* sub = group->add_subcommand(name, help);
        static const char* labels[] = {"file", "second", "third"};
        for (std::size_t i = 0; i < files.size(); ++i) sub->add_option(labels[i], *files[i], "input")->required();
        sub->callback([&action, body] { action = body; });
        return sub;
    };

    // lts
    auto* lts_cmd = app.add_subcommand("lts", "Lie triple system checks")->require_subcommand(1);
    add(lts_cmd, "verify", "check the axioms", {&file1}, [&] {
        const auto r = verify_lts(detail::load_algebra(file1));
        emit(io::report_to_json(r));
        report_status(r);
    });
    add(lts_cmd, "center", "center C(L)", {&file1}, [&] {
        const auto c = center(detail::load_algebra(file1));
        emit({{"center", io::subspace_to_json(SubspaceBasis::span(c.ambient_dim(), c.vectors()))}, {"dim", c.dim()}});
    });
    add(lts_cmd, "derived", "derived algebra L^1", {&file1}, [&] {
        const auto c = derived_algebra(detail::load_algebra(file1));
        emit({{"derived", io::subspace_to_json(c)}, {"dim", c.dim()}});
    });
    add(lts_cmd, "subsystem", "closure of a span under the bracket", {&file1}, [&] {
        const auto L = detail::load_algebra(file1);
        json spec;
        try {
            spec = json::parse(span_text);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("--span: ") + e.what());
        }
        const auto S = io::span_from_json(spec, L.dim());
        const bool sub = is_subsystem(L, S);
        emit({{"subsystem", sub}, {"abelian", sub && is_abelian_subsystem(L, S)}});
    })->add_option("--span", span_text, "JSON array of spanning vectors")->required();

    // rep
    auto* rep_cmd = app.add_subcommand("rep", "representations and actions")->require_subcommand(1);
    add(rep_cmd, "verify", "check the representation identities", {&file1}, [&] {
        const auto r = verify_representation(detail::load_representation(file1));
        emit(io::report_to_json(r));
        report_status(r);
    });
    add(rep_cmd, "action", "check both systems, the representation and the action conditions", {&file1}, [&] {
        const auto r = verify_action_data(detail::load_action(file1));
        emit(io::report_to_json(r));
        report_status(r);
    });
    add(rep_cmd, "adjoint", "adjoint representation of an algebra", {&file1},
        [&] { emit(io::representation_to_json(adjoint_representation(detail::load_algebra(file1)))); });

    // sd
    auto* sd_cmd = app.add_subcommand("sd", "semidirect products")->require_subcommand(1);
    add(sd_cmd, "build", "semidirect product of an action", {&file1}, [&] {
        emit(io::algebra_to_json(semidirect_product(detail::load_action(file1), weight_or(Scalar(0)))));
    })->add_option("--weight", weight_text, "weight lambda (default 0)");

    // rbo
    auto* rbo_cmd = app.add_subcommand("rbo", "relative Rota-Baxter operators")->require_subcommand(1);
    auto load_weighted = [&] {
        auto r = detail::load_rbo(file1);
        r.weight = weight_or(r.weight);
        return r;
    };
    auto* check_cmd = add(rbo_cmd, "check", "operator identity on all basis triples", {&file1}, [&] {
        const auto r = load_weighted();
        const Report rep = all_weights ? check_rbo_all_weights(r.action, r.T) : check_rbo(r);
        json j = io::report_to_json(rep);
        j["failure_count"] = rep.count();
        emit(j);
        report_status(rep);
    });
    check_cmd->add_option("--weight", weight_text, "override the weight stored in the file");
    check_cmd->add_flag("--all-weights", all_weights, "check the constant and weight parts separately");
    add(rbo_cmd, "graph", "graph of T in the semidirect product", {&file1}, [&] {
        const auto r = load_weighted();
        emit({{"graph", io::subspace_to_json(graph_subsystem(r))}, {"subsystem", graph_is_subsystem(r)}});
    })->add_option("--weight", weight_text, "override the weight stored in the file");
    add(rbo_cmd, "descendent", "descendent system on L'", {&file1}, [&] {
        emit(io::algebra_to_json(descendent_lts(load_weighted())));
    })->add_option("--weight", weight_text, "override the weight stored in the file");
    add(rbo_cmd, "nijenhuis", "lift of T and its Nijenhuis check on the semidirect product", {&file1}, [&] {
        const auto r = load_weighted();
        const LinearMap lift = nijenhuis_lift(r.action, r.T);
        const Report rep = nijenhuis_check(semidirect_bracket(r.action, r.weight), lift);
        json j = io::report_to_json(rep);
        j["lift"] = io::matrix_to_json(lift.matrix());
        emit(j);
        report_status(rep);
    })->add_option("--weight", weight_text, "override the weight stored in the file");
    add(rbo_cmd, "hom", "homomorphism conditions between two operators", {&file1}, [&] {
        const auto r = check_rbo_homomorphism(detail::load_hom(file1));
        emit(io::report_to_json(r));
        report_status(r);
    });
    auto* survey_cmd = add(rbo_cmd, "survey", "random maps: operator identity vs graph vs Nijenhuis lift", {&file1}, [&] {
        const auto base = load_weighted();
        RandomSource rng(seed);
        const LieTripleSystem sd = semidirect_bracket(base.action, base.weight);
        std::size_t operators = 0, disagreements = 0;
        for (std::size_t s = 0; s < samples; ++s) {
            const RelativeRBO r(base.action, base.weight,
                                LinearMap(rng.mixed_sparsity_matrix(base.L().dim(), base.Lprime().dim())));
            const bool is_op = check_rbo(r).ok();
            const bool graph = is_subsystem(sd, graph_subsystem(r));
            const bool nij = nijenhuis_check(sd, nijenhuis_lift(r.action, r.T)).ok();
            operators += is_op ? 1 : 0;
            if (is_op != graph || is_op != nij) ++disagreements;
        }
        emit({{"samples", samples}, {"operators", operators}, {"disagreements", disagreements}, {"seed", seed}});
        if (disagreements > 0) status = kVerificationFailed;
    });
    survey_cmd->add_option("--seed", seed, "random seed");
    survey_cmd->add_option("--samples", samples, "number of random maps");
    survey_cmd->add_option("--weight", weight_text, "override the weight stored in the file");

    // coh
    auto* coh_cmd = app.add_subcommand("coh", "cohomology of an operator")->require_subcommand(1);
    auto* group_cmd = add(coh_cmd, "group", "dimensions of Z, B and H", {&file1}, [&] {
        CohomologyOptions opts;
        opts.convention = parse_sign_convention(convention_text);
        opts.allow_degree_five = degree_override;
        const auto r = cohomology_group(load_weighted(), degree, opts);
        json j = {{"degree", r.degree}, {"dim_Z", r.dim_cocycles}, {"dim_B", r.dim_coboundaries}, {"dim_H", r.dim_H}};
        if (r.finding) {
            j["finding"] = *r.finding;
            err << "note: " << *r.finding << "\n";
        }
        emit(j);
    });
    group_cmd->add_option("--degree", degree, "1 or 3 (5 with --max-degree-override)");
    group_cmd->add_option("--sign-convention", convention_text, "definition or alternate");
    group_cmd->add_flag("--max-degree-override", degree_override, "allow degree 5");
    group_cmd->add_option("--weight", weight_text, "override the weight stored in the file");
    add(coh_cmd, "cocycle", "closedness of a degree-1 cochain", {&file1, &file2}, [&] {
        const auto r = detail::load_rbo(file1);
        const auto rep = one_cocycle_check(r, detail::load_cochain(file2, r));
        emit(io::report_to_json(rep));
        report_status(rep);
    });
    add(coh_cmd, "coboundary", "differential of a cochain", {&file1, &file2}, [&] {
        const auto r = detail::load_rbo(file1);
        emit(io::cochain_to_json(coboundary_T(r, detail::load_cochain(file2, r), parse_sign_convention(convention_text))));
    })->add_option("--sign-convention", convention_text, "definition or alternate");
    add(coh_cmd, "map", "transport a cochain along a homomorphism", {&file1, &file2}, [&] {
        const auto h = detail::load_hom(file1);
        const auto hr = check_rbo_homomorphism(h);
        if (!hr.ok()) {
            emit(io::report_to_json(hr));
            status = kVerificationFailed;
            return;
        }
        emit(io::cochain_to_json(cochain_map_p(h, detail::load_cochain(file2, h.from))));
    });

    // def
    auto* def_cmd = app.add_subcommand("def", "infinitesimal deformations")->require_subcommand(1);
    add(def_cmd, "check", "coefficient equations and classification", {&file1, &file2}, [&] {
        const auto r = detail::load_rbo(file1);
        const InfinitesimalDeformation d(r, detail::load_cochain(file2, r));
        const Report rep = check_deformation(d);
        const bool cocycle = one_cocycle_check(r, d.direction).ok();
        json cls = nullptr;
        if (cocycle) cls = io::vector_to_json(deformation_cocycle_class(d).coordinates);
        emit({{"order_t", rep.count_rule("order-t") == 0},
              {"order_t2", rep.count_rule("order-t2") == 0},
              {"order_t3", rep.count_rule("order-t3") == 0},
              {"cocycle", cocycle},
              {"class", cls},
              {"trivial_witness", detail::optional_vector(is_trivial_deformation(d, strict))}});
        report_status(rep);
    })->add_flag("--strict", strict, "also require the theta and D compatibilities");
    add(def_cmd, "class", "cohomology class of the direction", {&file1, &file2}, [&] {
        const auto r = detail::load_rbo(file1);
        const InfinitesimalDeformation d(r, detail::load_cochain(file2, r));
        if (!one_cocycle_check(r, d.direction).ok()) {
            emit({{"cocycle", false}, {"class", nullptr}});
            status = kVerificationFailed;
            return;
        }
        emit({{"cocycle", true}, {"class", io::vector_to_json(deformation_cocycle_class(d).coordinates)}});
    });
    add(def_cmd, "equiv", "search for an equivalence witness", {&file1, &file2, &file3}, [&] {
        const auto r = detail::load_rbo(file1);
        const InfinitesimalDeformation d1(r, detail::load_cochain(file2, r));
        const InfinitesimalDeformation d2(r, detail::load_cochain(file3, r));
        const auto w = find_equivalence_witness(d1, d2, strict);
        emit({{"equivalent", w.has_value()}, {"witness", detail::optional_vector(w)}});
    })->add_flag("--strict", strict, "also require the theta and D compatibilities");
    add(def_cmd, "trivial", "search for a triviality witness", {&file1, &file2}, [&] {
        const auto r = detail::load_rbo(file1);
        const auto w = is_trivial_deformation(InfinitesimalDeformation(r, detail::load_cochain(file2, r)), strict);
        emit({{"trivial", w.has_value()}, {"witness", detail::optional_vector(w)}});
    })->add_flag("--strict", strict, "also require the theta and D compatibilities");

    // fixtures
    auto* fx_cmd = app.add_subcommand("fixtures", "bundled examples")->require_subcommand(1);
    add(fx_cmd, "list", "list bundled examples", {}, [&] {
        json arr = json::array();
        for (const auto& f : fixtures::list_fixtures()) arr.push_back({{"name", f.name}, {"kind", f.kind}, {"note", f.note}});
        emit({{"fixtures", arr}});
    });
    add(fx_cmd, "show", "print one example", {&file1}, [&] {
        const auto j = detail::fixture_json(file1);
        if (!j) throw ParseError("unknown fixture '" + file1 + "'");
        emit(*j);
    });
    add(fx_cmd, "export", "write every example into a directory", {&file1}, [&] {
        std::filesystem::create_directories(file1);
        json written = json::array();
        for (const auto& f : fixtures::list_fixtures()) {
            const auto path = std::filesystem::path(file1) / (f.name + ".json");
            io::write_text_file(path, io::dump(*detail::fixture_json(f.name)));
            written.push_back(path.filename().string());
        }
        emit({{"written", written}});
    });

    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kInputError;
    }
    if (!action) {
        err << "error: no command given\n";
        return kInputError;
    }
    try {
        action();
    } catch (const HypothesisError& e) {
        err << "error: " << e.what() << "\n";
        return kVerificationFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed input: " << e.what() << "\n";
        return kInputError;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return status;
}

}  // namespace lts::cli
