#include "frameposet/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "frameposet/json_io.hpp"
#include "frameposet/version.hpp"

namespace frameposet {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json parse_json(const std::string& text, const std::string& path) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError("malformed JSON in " + path + ": " + e.what());
    }
}

struct Emitter {
    std::string input_bytes;
    std::optional<std::uint64_t> seed;
    Tolerance tol;
    std::string out_path;

    void emit(json result) const {
        json envelope;
        envelope["tool"] = "frameposet";
        envelope["version"] = kVersion;
        envelope["input_hash"] = "fnv1a:" + fnv1a_hex(input_bytes);
        if (seed) envelope["seed"] = *seed;
        envelope["tolerance"] = json{{"absolute", tol.absolute}, {"relative", tol.relative}};
        envelope["result"] = std::move(result);
        const std::string text = envelope.dump(2) + "\n";
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw ValidationError("cannot open output file: " + out_path);
            out << text;
        }
    }
};

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot open output file: " + path);
    out << text;
}

// Inputs holding either a frame or a poset are disambiguated by their keys.
Poset poset_from_input(const json& j, const Tolerance& tol) {
    if (j.contains("sets")) return poset_from_json(j);
    if (j.contains("vectors")) {
        FactorPosetOptions opts;
        opts.tol = tol;
        return factor_poset(frame_from_json(j), opts);
    }
    throw ValidationError("input is neither a poset ({\"sets\":..}) nor a frame "
                          "({\"vectors\":..})");
}

} // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"Combinatorial tight-subframe structure of finite frames"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    double tol_abs = 1e-9, tol_rel = 1e-9;
    app.add_option("--tol-abs", tol_abs, "absolute tolerance (float mode)")
        ->capture_default_str();
    app.add_option("--tol-rel", tol_rel, "relative tolerance (float mode)")
        ->capture_default_str();

    // poset
    auto* cmd_poset = app.add_subcommand("poset", "factor poset of a frame");
    std::string poset_in, poset_out, poset_dot;
    bool strip_zeros = false, use_mitm = false;
    int poset_limit = 24;
    cmd_poset->add_option("input", poset_in, "frame JSON file")->required();
    cmd_poset->add_option("--out", poset_out, "output path (default stdout)");
    cmd_poset->add_option("--dot", poset_dot, "also write the Hasse diagram as DOT");
    cmd_poset->add_flag("--strip-zeros", strip_zeros, "drop zero vectors instead of rejecting");
    cmd_poset->add_flag("--mitm", use_mitm, "meet-in-the-middle scan for 24 < k <= 40");
    cmd_poset->add_option("--limit", poset_limit, "direct 2^k scan cap")->capture_default_str();

    // empty-cover
    auto* cmd_ec = app.add_subcommand("empty-cover", "minimal nonempty poset elements");
    std::string ec_in, ec_out;
    cmd_ec->add_option("input", ec_in, "poset or frame JSON file")->required();
    cmd_ec->add_option("--out", ec_out, "output path (default stdout)");

    // inverse
    auto* cmd_inv = app.add_subcommand("inverse", "construct a frame realizing a poset");
    std::string inv_in, inv_out;
    int inv_rows = 2, inv_dim = 2;
    bool inv_full_spark = false;
    std::optional<long long> inv_max_norm;
    std::optional<std::uint64_t> inv_seed;
    long long inv_max_norm_raw = -1;
    std::uint64_t inv_seed_raw = 0;
    cmd_inv->add_option("input", inv_in, "poset JSON file")->required();
    cmd_inv->add_option("--rows", inv_rows, "1: scaled-basis construction, 2: general")
        ->check(CLI::IsMember({1, 2}))
        ->capture_default_str();
    cmd_inv->add_flag("--full-spark", inv_full_spark, "require a full spark frame");
    cmd_inv->add_option("--dim", inv_dim, "target dimension (>=3 emits the feasibility "
                                          "system and runs the best-effort heuristic)")
        ->capture_default_str();
    auto* inv_norm_opt = cmd_inv->add_option("--max-norm", inv_max_norm_raw,
                                             "witness search bound override");
    auto* inv_seed_opt = cmd_inv->add_option("--seed", inv_seed_raw,
                                             "heuristic seed (required for --dim >= 3)");
    cmd_inv->add_option("--out", inv_out, "output path (default stdout)");

    // project
    auto* cmd_proj = app.add_subcommand("project", "poset-preserving dimension reduction");
    std::string proj_in, proj_out;
    int proj_dim = 2;
    std::uint64_t proj_seed = 0;
    cmd_proj->add_option("input", proj_in, "frame JSON file")->required();
    cmd_proj->add_option("--to-dim", proj_dim, "target dimension")->required();
    cmd_proj->add_option("--seed", proj_seed, "RNG seed")->required();
    cmd_proj->add_option("--out", proj_out, "output path (default stdout)");

    // scalings
    auto* cmd_scal = app.add_subcommand("scalings", "minimal scalings / scaling polytope");
    std::string scal_in, scal_out;
    int scal_limit = 14;
    cmd_scal->add_option("input", scal_in, "frame JSON file")->required();
    cmd_scal->add_option("--limit", scal_limit, "vector-count cap")->capture_default_str();
    cmd_scal->add_option("--out", scal_out, "output path (default stdout)");

    // classify-scaling
    auto* cmd_cls = app.add_subcommand("classify-scaling", "prime / non-prime verdict");
    std::string cls_in, cls_w, cls_out;
    cmd_cls->add_option("input", cls_in, "frame JSON file")->required();
    cmd_cls->add_option("--w", cls_w, "scaling JSON file")->required();
    cmd_cls->add_option("--out", cls_out, "output path (default stdout)");

    // signings
    auto* cmd_sign = app.add_subcommand("signings", "all signings and forced relations");
    std::string sign_in, sign_out;
    cmd_sign->add_option("input", sign_in, "poset or frame JSON file")->required();
    cmd_sign->add_option("--out", sign_out, "output path (default stdout)");

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "census of R^2 factor posets");
    int enum_k = 4;
    std::string enum_out;
    long long enum_max_norm_raw = -1;
    cmd_enum->add_option("--k", enum_k, "number of vectors (2..7)")->required();
    auto* enum_norm_opt = cmd_enum->add_option("--max-norm", enum_max_norm_raw,
                                               "sup-norm bound override");
    cmd_enum->add_option("--out", enum_out, "output path (default stdout)");

    // census-check
    auto* cmd_check = app.add_subcommand("census-check",
                                         "verify bounds and necessary conditions over a census");
    int check_k = 4;
    std::string check_out;
    cmd_check->add_option("--k", check_k, "number of vectors (2..7)")->required();
    cmd_check->add_option("--out", check_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    const Tolerance tol{tol_abs, tol_rel};
    try {
        if (*cmd_poset) {
            Emitter em{read_file(poset_in), std::nullopt, tol, poset_out};
            Frame f = frame_from_json(parse_json(em.input_bytes, poset_in));
            if (strip_zeros) f = strip_zero_vectors(f, tol);
            FactorPosetOptions opts;
            opts.tol = tol;
            opts.direct_limit = poset_limit;
            opts.meet_in_middle = use_mitm;
            const Poset p = factor_poset(f, opts);
            json result;
            result["poset"] = poset_to_json(p);
            json ec = json::array();
            for (IndexSet s : empty_cover(p)) ec.push_back(index_set_to_json(s));
            result["empty_cover"] = std::move(ec);
            if (!poset_dot.empty()) write_text(poset_dot, hasse_dot(p));
            em.emit(std::move(result));
        } else if (*cmd_ec) {
            Emitter em{read_file(ec_in), std::nullopt, tol, ec_out};
            const Poset p = poset_from_input(parse_json(em.input_bytes, ec_in), tol);
            json result;
            json ec = json::array();
            for (IndexSet s : empty_cover(p)) ec.push_back(index_set_to_json(s));
            result["empty_cover"] = std::move(ec);
            em.emit(std::move(result));
        } else if (*cmd_inv) {
            if (*inv_norm_opt) inv_max_norm = inv_max_norm_raw;
            if (*inv_seed_opt) inv_seed = inv_seed_raw;
            Emitter em{read_file(inv_in), inv_seed, tol, inv_out};
            const Poset p = poset_from_json(parse_json(em.input_bytes, inv_in));
            json result;
            if (inv_dim <= 2) {
                InverseOptions opts;
                opts.rows = inv_rows;
                opts.max_norm = inv_max_norm;
                const InverseResult res =
                    inv_full_spark ? inverse_full_spark_r2(p, opts) : inverse_frame_r2(p, opts);
                result["frame"] = frame_to_json(res.frame);
                result["v"] = res.v;
                if (!res.w.empty()) result["w"] = res.w;
            } else {
                if (!inv_seed)
                    throw ValidationError("inverse --dim >= 3 requires --seed");
                result["system"] = feasibility_to_json(build_feasibility_system(p, inv_dim));
                HeuristicOptions hopts;
                hopts.seed = *inv_seed;
                hopts.tol = tol;
                const auto frame = solve_inverse_heuristic(p, inv_dim, hopts);
                json heur;
                heur["found"] = frame.has_value();
                heur["note"] = "best-effort heuristic; absence of a solution is inconclusive";
                if (frame) heur["frame"] = frame_to_json(*frame);
                result["heuristic"] = std::move(heur);
                if (!frame) {
                    em.emit(std::move(result));
                    throw InconclusiveError("heuristic found no realizing frame "
                                            "(not a proof of infeasibility)");
                }
            }
            em.emit(std::move(result));
        } else if (*cmd_proj) {
            Emitter em{read_file(proj_in), proj_seed, tol, proj_out};
            const Frame f = frame_from_json(parse_json(em.input_bytes, proj_in));
            json result;
            if (f.n >= 3)
                result["tight_projections"] =
                    projection_report_to_json(find_tight_projections(f, tol), f.field);
            ReduceOptions ropts;
            ropts.tol = tol;
            const Frame reduced = reduce_dimension_preserving_poset(f, proj_dim, proj_seed, ropts);
            result["projected_frame"] = frame_to_json(reduced);
            FactorPosetOptions fpo;
            fpo.tol = tol;
            result["poset"] = poset_to_json(factor_poset(reduced, fpo));
            em.emit(std::move(result));
        } else if (*cmd_scal) {
            Emitter em{read_file(scal_in), std::nullopt, tol, scal_out};
            const Frame f = frame_from_json(parse_json(em.input_bytes, scal_in));
            ScalabilityOptions opts;
            opts.tol = tol;
            opts.k_limit = scal_limit;
            const ScalingPolytope poly = minimal_scalings(f, opts);
            json result = polytope_to_json(poly);
            result["scalability_poset"] = poset_to_json(scalability_poset(f, opts));
            em.emit(std::move(result));
        } else if (*cmd_cls) {
            Emitter em{read_file(cls_in), std::nullopt, tol, cls_out};
            const Frame f = frame_from_json(parse_json(em.input_bytes, cls_in));
            const json wj = parse_json(read_file(cls_w), cls_w);
            const std::vector<Scalar> w = scaling_from_json(wj, f);
            ScalabilityOptions opts;
            opts.tol = tol;
            const ClassifyResult res = classify_scaling(f, w, opts);
            json result;
            result["verdict"] = res.prime ? "prime" : "non-prime";
            if (res.tight_witness)
                result["tight_subset_witness"] = index_set_to_json(*res.tight_witness);
            em.emit(std::move(result));
        } else if (*cmd_sign) {
            Emitter em{read_file(sign_in), std::nullopt, tol, sign_out};
            const Poset p = poset_from_input(parse_json(em.input_bytes, sign_in), tol);
            const auto signings = all_signings(p);
            json result;
            json list = json::array();
            for (const auto& s : signings) list.push_back(s.str());
            result["signings"] = std::move(list);
            result["count"] = static_cast<int>(signings.size());
            if (!signings.empty()) {
                const ForcedSignRelations rel = forced_sign_relations(p);
                json forced;
                json eq = json::array(), ne = json::array();
                for (auto [i, j] : rel.equal_pairs) eq.push_back(json::array({i, j}));
                for (auto [i, j] : rel.unequal_pairs) ne.push_back(json::array({i, j}));
                forced["equal_pairs"] = std::move(eq);
                forced["unequal_pairs"] = std::move(ne);
                forced["unique_signing"] = rel.unique_signing;
                result["forced"] = std::move(forced);
            }
            em.emit(std::move(result));
        } else if (*cmd_enum) {
            std::ostringstream args;
            args << "enumerate --k " << enum_k;
            Emitter em{args.str(), std::nullopt, tol, enum_out};
            CensusOptions opts;
            if (*enum_norm_opt) opts.max_norm = enum_max_norm_raw;
            em.emit(census_to_json(enumerate_factor_posets_r2(enum_k, opts)));
        } else if (*cmd_check) {
            std::ostringstream args;
            args << "census-check --k " << check_k;
            Emitter em{args.str(), std::nullopt, tol, check_out};
            const CensusResult census = enumerate_factor_posets_r2(check_k);
            json violations = json::array();
            int tight_classes = 0;
            for (const auto& e : census.entries) {
                const auto closed = is_span_closed(e.poset);
                if (!closed.closed)
                    violations.push_back(json{{"kind", "span-closure"},
                                              {"poset", poset_to_json(e.poset)}});
                if (!satisfies_closure_condition(e.poset).ok)
                    violations.push_back(json{{"kind", "closure-condition"},
                                              {"poset", poset_to_json(e.poset)}});
                if (e.poset.contains(full_set(e.poset.k))) {
                    ++tight_classes;
                    if (!check_furedi_bound(e.poset))
                        violations.push_back(json{{"kind", "furedi-bound"},
                                                  {"poset", poset_to_json(e.poset)}});
                }
                if (empty_cover(e.poset).size() > extremal_ec_size(std::max(check_k, 4)) &&
                    check_k >= 4)
                    violations.push_back(json{{"kind", "empty-cover-conjecture"},
                                              {"poset", poset_to_json(e.poset)}});
            }
            json result;
            result["k"] = check_k;
            result["classes"] = static_cast<int>(census.entries.size());
            result["tight_classes"] = tight_classes;
            result["violations"] = violations;
            result["verdict"] = violations.empty() ? "none found" : "VIOLATIONS FOUND";
            em.emit(std::move(result));
        }
        return 0;
    } catch (const InconclusiveError& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return 4;
    } catch (const ResourceCapError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace frameposet
