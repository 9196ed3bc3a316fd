#include "bm/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bm/classpoly.hpp"
#include "bm/exact.hpp"
#include "bm/formula.hpp"
#include "bm/gadgets.hpp"
#include "bm/generators.hpp"
#include "bm/graph.hpp"
#include "bm/kernel.hpp"
#include "bm/pipeline.hpp"
#include "bm/report.hpp"
#include "bm/structure.hpp"
#include "bm/vc.hpp"

namespace bm {

namespace {

using nlohmann::json;

Instance load_instance(const std::string& path) {
    if (path == "-") return parse_instance(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_instance(in);
}

Formula load_formula(const std::string& path) {
    if (path == "-") return parse_formula(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_formula(in);
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    f << text;
}

json trace_to_json(const KernelTrace& trace) {
    json steps = json::array();
    for (const auto& s : trace.steps) {
        json js;
        js["rule"] = s.rule;
        json removed = json::array();
        for (int v : s.removed) removed.push_back(v + 1);
        js["removed"] = std::move(removed);
        if (s.anchor >= 0) js["anchor"] = s.anchor + 1;
        json forb = json::array();
        for (auto [u, v] : s.added_forbidden) forb.push_back({u + 1, v + 1});
        js["added_forbidden"] = std::move(forb);
        json oon = json::array();
        for (int v : s.old_of_new) oon.push_back(v + 1);
        js["old_of_new"] = std::move(oon);
        steps.push_back(std::move(js));
    }
    return json{{"steps", std::move(steps)}};
}

json labels_to_json(const std::map<std::string, int>& labels) {
    json j = json::object();
    for (const auto& [name, id] : labels) j[name] = id + 1;
    return j;
}

struct SolveOutcome {
    std::optional<Certificate> certificate;
    std::optional<Witness> witness;
    std::uint64_t nodes = 0;
};

SolveOutcome dispatch_solve(const Instance& inst, const std::string& algorithm, int d, int k,
                            const std::string& cover_file, bool check_class,
                            std::uint64_t pool_budget) {
    SolveOutcome out;
    if (algorithm == "exact") {
        SolveStats stats;
        out.certificate = solve_exact(inst, d, &stats);
        out.nodes = stats.nodes;
    } else if (algorithm == "brute") {
        out.certificate = solve_brute(inst, d);
    } else if (algorithm == "vc") {
        if (d != 1) throw std::invalid_argument("--algorithm vc requires d = 1");
        if (!inst.forbidden.empty())
            throw std::invalid_argument("--algorithm vc does not accept forbidden edges");
        std::vector<int> cover;
        if (!cover_file.empty()) {
            std::ifstream in(cover_file);
            if (!in) throw std::runtime_error("cannot open '" + cover_file + "'");
            int v;
            while (in >> v) cover.push_back(v - 1);
        } else {
            for (int budget = 0; budget <= inst.graph.num_vertices(); ++budget)
                if (auto c = find_vertex_cover(inst.graph, budget)) {
                    cover = *c;
                    break;
                }
        }
        VcStats stats;
        out.certificate = solve_vc(inst.graph, cover, &stats);
        out.nodes = stats.branch_nodes;
    } else if (algorithm == "domset") {
        if (d != 1) throw std::invalid_argument("--algorithm domset requires d = 1");
        if (!inst.forbidden.empty())
            throw std::invalid_argument("--algorithm domset does not accept forbidden edges");
        auto res = solve_domset(inst.graph, k);
        if (res.status == DomsetResult::Status::no_domset)
            throw std::invalid_argument("no dominating set of size <= " + std::to_string(k));
        out.certificate = std::move(res.certificate);
    } else if (algorithm == "p5free") {
        if (d != 1) throw std::invalid_argument("--algorithm p5free requires d = 1");
        if (!inst.forbidden.empty())
            throw std::invalid_argument("--algorithm p5free does not accept forbidden edges");
        if (check_class && !is_P5_free(inst.graph))
            throw std::invalid_argument("input is not P5-free");
        out.certificate = solve_p5_free(inst.graph);
    } else if (algorithm == "triangle") {
        if (d != 1) throw std::invalid_argument("--algorithm triangle requires d = 1");
        if (check_class && all_odd_cycles_are_triangles(inst.graph) != TriState::yes)
            throw std::invalid_argument("input has an odd cycle longer than a triangle");
        auto res = solve_triangle_only(inst);
        if (res.status == TriangleOnlyResult::Status::promise_violation)
            throw std::invalid_argument("input has an odd cycle longer than a triangle");
        out.certificate = std::move(res.certificate);
    } else if (algorithm == "auto") {
        auto res = solve_auto(inst, d, pool_budget);
        out.certificate = std::move(res.certificate);
        out.witness = std::move(res.witness);
        out.nodes = res.nodes;
    } else {
        throw std::invalid_argument("unknown algorithm '" + algorithm + "'");
    }
    return out;
}

int cmd_solve(const Instance& inst, const std::string& algorithm, int d, int k,
              const std::string& cover_file, bool check_class, std::uint64_t pool_budget,
              std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    auto outcome = dispatch_solve(inst, algorithm, d, k, cover_file, check_class, pool_budget);
    const auto stop = std::chrono::steady_clock::now();

    RunReport report;
    report.algorithm = algorithm;
    report.answer = outcome.certificate ? "yes" : "no";
    report.certificate = outcome.certificate;
    report.no_witness = outcome.witness;
    report.nodes_explored = outcome.nodes;
    report.time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    report.input_digest = instance_digest(inst);

    if (outcome.certificate && verify_certificate(inst, *outcome.certificate, d) != VerifyResult::ok)
        throw std::logic_error("internal error: produced certificate does not verify");

    out << report_to_json(report).dump(2) << '\n';
    err << (outcome.certificate ? "YES" : "NO") << " (" << algorithm << ", "
        << report.time_ms << " ms)\n";
    return outcome.certificate ? 0 : 1;
}

void emit_corpus(const std::string& dir, std::uint64_t seed, std::ostream& err) {
    auto dump = [&](const std::string& name, const std::string& text) {
        std::ofstream f(dir + "/" + name);
        if (!f) throw std::runtime_error("cannot write to '" + dir + "'");
        f << text;
        err << "wrote " << dir << "/" << name << "\n";
    };
    for (int i = 0; i < 5; ++i) {
        dump("subcubic_" + std::to_string(i) + ".bm",
             emit_instance(random_subcubic(20 + 2 * i, seed + i)));
        dump("cograph_" + std::to_string(i) + ".bm",
             emit_instance(random_cograph(15 + i, seed + 100 + i)));
        dump("chordal_" + std::to_string(i) + ".bm",
             emit_instance(random_chordal(15 + i, seed + 200 + i)));
        dump("block_" + std::to_string(i) + ".bm",
             emit_instance(random_block_composed(18 + i, seed + 300 + i, 20)));
        dump("planted_vc_" + std::to_string(i) + ".bm",
             emit_instance(random_planted_vc(20 + i, 5, seed + 400 + i).instance));
        dump("formula_" + std::to_string(i) + ".cnf",
             emit_formula(random_sat3_formula(5, 4, seed + 500 + i)));
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"bipartizing matching toolkit"};
    app.require_subcommand(1);

    // solve
    std::string solve_path, solve_alg = "auto", cover_file;
    int solve_d = 1, solve_k = 3;
    bool check_class = false;
    std::uint64_t pool_budget = kDefaultPoolBudget;
    auto* solve = app.add_subcommand("solve", "decide whether a matching can bipartize the input");
    solve->add_option("file", solve_path, "instance file ('-' for stdin)")->required();
    solve->add_option("--algorithm", solve_alg,
                      "auto|exact|brute|vc|domset|p5free|triangle");
    solve->add_option("--d", solve_d, "defect bound: each vertex keeps at most d same-colored neighbors");
    solve->add_option("--k", solve_k, "dominating-set budget for --algorithm domset");
    solve->add_option("--cover-file", cover_file, "vertex cover (1-based ids) for --algorithm vc");
    solve->add_flag("--check-class", check_class, "verify class membership before the class solvers");
    solve->add_option("--pool-budget", pool_budget, "node budget for the odd-pool detector");

    // verify
    std::string verify_instance, verify_cert;
    int verify_d = 1;
    auto* verify = app.add_subcommand("verify", "check a certificate against an instance");
    verify->add_option("instance", verify_instance)->required();
    verify->add_option("certificate", verify_cert, "certificate JSON file")->required();
    verify->add_option("--d", verify_d);

    // kernelize
    std::string kern_path, kern_out, trace_out;
    auto* kern = app.add_subcommand("kernelize", "shrink an instance by the reduction rules");
    kern->add_option("file", kern_path)->required();
    kern->add_option("--out", kern_out, "kernel edge-list output (default stdout)");
    kern->add_option("--trace-out", trace_out, "trace JSON output");

    // nd
    std::string nd_path;
    auto* ndc = app.add_subcommand("nd", "print the neighborhood-diversity decomposition");
    ndc->add_option("file", nd_path)->required();

    // generate
    std::string gen_kind, gen_out, labels_out, gen_formula_path;
    std::uint64_t gen_seed = 0;
    int gen_k = 5, gen_size = 3, gen_n = 20, gen_vars = 5, gen_clauses = 4, gen_vc = 5;
    int gen_maxdeg = 3, forb_rate = 0;
    bool gen_modified = false, gen_sat3 = false;
    bool seed_given = false;
    auto* gen = app.add_subcommand("generate", "emit gadgets, reductions, formulas, or corpora");
    gen->add_option("kind", gen_kind,
                    "head|pool|clause|variable|reduction|formula|subcubic|maxdeg|planted-vc|"
                    "cograph|chordal|block|corpus")
        ->required();
    gen->add_option("--seed", gen_seed)->each([&](const std::string&) { seed_given = true; });
    gen->add_option("--out", gen_out, "output file (default stdout)");
    gen->add_option("--labels-out", labels_out, "label-map JSON sidecar");
    gen->add_option("--k", gen_k, "pool parameter");
    gen->add_option("--size", gen_size, "clause size (2 or 3)");
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--vars", gen_vars);
    gen->add_option("--clauses", gen_clauses);
    gen->add_option("--vc", gen_vc, "planted cover size");
    gen->add_option("--max-degree", gen_maxdeg);
    gen->add_option("--forbidden-rate", forb_rate, "percent of edges forbidden (block corpus)");
    gen->add_option("--formula", gen_formula_path, "build the reduction from this formula file");
    gen->add_flag("--modified", gen_modified, "degree-4 variable gadget");
    gen->add_flag("--sat3", gen_sat3, "emit an occurrence-limited formula");

    // export-dot
    std::string dot_path;
    auto* dot = app.add_subcommand("export-dot", "emit DOT drawing source");
    dot->add_option("file", dot_path)->required();

    std::vector<const char*> argv;
    argv.push_back("bm");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (solve->parsed())
            return cmd_solve(load_instance(solve_path), solve_alg, solve_d, solve_k, cover_file,
                             check_class, pool_budget, out, err);

        if (verify->parsed()) {
            auto inst = load_instance(verify_instance);
            std::ifstream certf(verify_cert);
            if (!certf) throw std::runtime_error("cannot open '" + verify_cert + "'");
            json j = json::parse(certf);
            auto cert = certificate_from_json(j, inst.graph.num_vertices());
            auto result = verify_certificate(inst, cert, verify_d);
            out << json{{"verdict", to_string(result)}}.dump(2) << '\n';
            err << (result == VerifyResult::ok ? "certificate verifies\n"
                                               : "certificate rejected\n");
            return result == VerifyResult::ok ? 0 : 1;
        }

        if (kern->parsed()) {
            auto inst = load_instance(kern_path);
            auto kr = kernelize(inst);
            if (kr.decided_no) {
                out << json{{"answer", "no"}, {"rule", kr.no_rule}}.dump(2) << '\n';
                err << "NO by reduction rule " << kr.no_rule << "\n";
                return 1;
            }
            write_text(kern_out, emit_instance(kr.kernel), out);
            if (!trace_out.empty()) {
                std::ofstream tf(trace_out);
                if (!tf) throw std::runtime_error("cannot write '" + trace_out + "'");
                tf << trace_to_json(kr.trace).dump(2) << '\n';
            }
            err << "kernel: " << kr.kernel.graph.num_vertices() << " vertices, "
                << kr.kernel.graph.num_edges() << " edges, " << kr.trace.steps.size()
                << " steps\n";
            return 0;
        }

        if (ndc->parsed()) {
            auto inst = load_instance(nd_path);
            auto part = nd_decompose(inst.graph);
            json types = json::array(), kinds = json::array();
            for (std::size_t i = 0; i < part.types.size(); ++i) {
                json members = json::array();
                for (int v : part.types[i]) members.push_back(v + 1);
                types.push_back(std::move(members));
                kinds.push_back(part.kinds[i] == NDPartition::Kind::clique        ? "clique"
                                : part.kinds[i] == NDPartition::Kind::independent ? "independent"
                                                                                  : "both");
            }
            out << json{{"nd", part.size()}, {"types", types}, {"kinds", kinds}}.dump(2) << '\n';
            err << "nd = " << part.size() << "\n";
            return 0;
        }

        if (gen->parsed()) {
            auto emit_gadget = [&](const LabeledGadget& gadget) {
                write_text(gen_out, emit_instance(make_instance(gadget.graph)), out);
                if (!labels_out.empty())
                    write_text(labels_out, labels_to_json(gadget.labels).dump(2) + "\n", out);
            };
            auto need_seed = [&] {
                if (!seed_given)
                    throw std::invalid_argument("--seed is required for randomized generators");
            };
            if (gen_kind == "head") emit_gadget(build_head());
            else if (gen_kind == "pool") emit_gadget(build_pool(gen_k));
            else if (gen_kind == "pool-minus-border") emit_gadget(build_pool_minus_border(gen_k));
            else if (gen_kind == "clause") emit_gadget(build_clause_gadget(gen_size));
            else if (gen_kind == "variable") emit_gadget(build_variable_gadget(gen_modified));
            else if (gen_kind == "reduction") {
                Formula f;
                if (!gen_formula_path.empty()) {
                    f = load_formula(gen_formula_path);
                } else {
                    need_seed();
                    f = random_sat3_formula(gen_vars, gen_clauses, gen_seed);
                }
                emit_gadget(build_reduction(f));
            } else if (gen_kind == "formula") {
                need_seed();
                auto f = gen_sat3 ? random_sat3_formula(gen_vars, gen_clauses, gen_seed)
                                  : random_formula(gen_vars, gen_clauses, gen_seed);
                write_text(gen_out, emit_formula(f), out);
            } else if (gen_kind == "subcubic") {
                need_seed();
                write_text(gen_out, emit_instance(random_subcubic(gen_n, gen_seed)), out);
            } else if (gen_kind == "maxdeg") {
                need_seed();
                write_text(gen_out, emit_instance(random_max_degree(gen_n, gen_maxdeg, gen_seed)),
                           out);
            } else if (gen_kind == "planted-vc") {
                need_seed();
                write_text(gen_out,
                           emit_instance(random_planted_vc(gen_n, gen_vc, gen_seed).instance),
                           out);
            } else if (gen_kind == "cograph") {
                need_seed();
                write_text(gen_out, emit_instance(random_cograph(gen_n, gen_seed)), out);
            } else if (gen_kind == "chordal") {
                need_seed();
                write_text(gen_out, emit_instance(random_chordal(gen_n, gen_seed)), out);
            } else if (gen_kind == "block") {
                need_seed();
                write_text(gen_out,
                           emit_instance(random_block_composed(gen_n, gen_seed, forb_rate)), out);
            } else if (gen_kind == "corpus") {
                need_seed();
                if (gen_out.empty())
                    throw std::invalid_argument("generate corpus requires --out <dir>");
                emit_corpus(gen_out, gen_seed, err);
            } else {
                throw std::invalid_argument("unknown generate kind '" + gen_kind + "'");
            }
            return 0;
        }

        if (dot->parsed()) {
            out << export_dot(load_instance(dot_path));
            return 0;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace bm
