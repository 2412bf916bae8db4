#include <CLI11.hpp>

#include <atomic>
#include <iostream>
#include <thread>

#include "surfrig/json_io.hpp"

using namespace surfrig;

namespace {

Surface load_surface(const std::string& spec) {
    if (!spec.empty() && spec[0] == '@') return surface_from_json(load_json_file(spec.substr(1)));
    return parse_surface_spec(spec);
}

void emit(const Json& j) { std::cout << dump_json(j); }

int cmd_check(const std::string& in, int k) {
    SimpleGraph g = graph_from_json(load_json_file(in));
    SparsityVerdict verdict = is_sparse(g, k);
    Json j;
    j["k"] = k;
    j["n"] = g.n;
    j["m"] = g.edge_count();
    j["sparse"] = verdict.sparse;
    j["tight"] = verdict.tight;
    j["witness"] = verdict.witness ? Json(*verdict.witness) : Json(nullptr);
    emit(j);
    std::cerr << "(2," << k << ")-tight: " << (verdict.tight ? "yes" : "no") << " (n=" << g.n
              << ", m=" << g.edge_count() << ")\n";
    return verdict.tight ? 0 : 1;
}

int cmd_reduce(const std::string& in, int k, const std::string& out, bool replay_check) {
    SimpleGraph g = graph_from_json(load_json_file(in));
    SparsityVerdict verdict = is_sparse(g, k);
    if (!verdict.tight) {
        Json j;
        j["error"] = "input graph is not (2,k)-tight";
        j["k"] = k;
        j["sparse"] = verdict.sparse;
        j["tight"] = false;
        emit(j);
        std::cerr << "not (2," << k << ")-tight; nothing to reduce\n";
        return 1;
    }
    Certificate cert = reduce(g, k);
    Json j = certificate_to_json(cert);
    if (replay_check) {
        if (replay(cert) != g) {
            std::cerr << "replay check failed: certificate does not reproduce the input\n";
            return 2;
        }
        j["replay_check"] = "ok";
    }
    emit(j);
    if (!out.empty()) write_json_file(out, j);
    std::cerr << "reduced to " << base_name(k) << " in " << cert.step_count() << " steps\n";
    return 0;
}

int cmd_generate(int n, int k, uint64_t seed, const std::string& out,
                 const std::string& cert_out) {
    Generated result = generate(n, k, seed);
    Json j;
    j["seed"] = seed;
    j["graph"] = graph_to_json(result.graph);
    j["certificate"] = certificate_to_json(result.certificate);
    emit(j);
    if (!out.empty()) write_json_file(out, graph_to_json(result.graph));
    if (!cert_out.empty()) write_json_file(cert_out, certificate_to_json(result.certificate));
    std::cerr << "generated (2," << k << ")-tight graph: n=" << result.graph.n
              << ", m=" << result.graph.edge_count() << "\n";
    return 0;
}

int cmd_rigidity(const std::string& in, const std::string& surface_spec, int trials,
                 uint64_t seed, const std::string& placement_path, bool force_float,
                 double tol_factor) {
    SimpleGraph g = graph_from_json(load_json_file(in));
    Surface s = load_surface(surface_spec);
    RigidityReport rep;
    if (placement_path.empty()) {
        rep = analyze(g, s, trials, seed);
    } else {
        Json pts = load_json_file(placement_path);
        if (!pts.is_array() || static_cast<int>(pts.size()) != g.n)
            throw std::invalid_argument("placement: expected an array of |V| points");
        bool all_exact = !force_float;
        for (const auto& p : pts) {
            if (!p.is_array() || p.size() != 3)
                throw std::invalid_argument("placement: each point is [x,y,z]");
            for (const auto& c : p)
                if (!c.is_string()) all_exact = false;
        }
        if (all_exact) {
            std::vector<Vec3Q> placement;
            for (const auto& p : pts)
                placement.push_back({rat_from_string(p[0].get<std::string>()),
                                     rat_from_string(p[1].get<std::string>()),
                                     rat_from_string(p[2].get<std::string>())});
            rep = analyze_placement(g, s, placement);
        } else {
            auto as_double = [](const Json& c) {
                return c.is_string() ? rat_from_string(c.get<std::string>()).get_d()
                                     : c.get<double>();
            };
            std::vector<std::array<double, 3>> placement;
            for (const auto& p : pts)
                placement.push_back({as_double(p[0]), as_double(p[1]), as_double(p[2])});
            rep = analyze_placement_float(g, s, placement, tol_factor);
        }
    }
    rep.seed = seed;
    Json j = report_to_json(rep);
    j["surface"] = s.spec_string;
    if (s.declared_type >= 0) {
        MaxwellResult gate = maxwell_check(g, s.declared_type);
        j["maxwell_tight"] = gate.tight;  // necessary count condition for isostaticity
        j["maxwell_witness"] = gate.witness ? Json(*gate.witness) : Json(nullptr);
    }
    emit(j);
    std::cerr << "rank " << rep.rank << "/" << rep.rows << ", "
              << (rep.isostatic ? "isostatic" : rep.independent ? "independent, not isostatic"
                                                                : "dependent")
              << " (" << rep.strength << ")\n";
    return rep.isostatic ? 0 : 1;
}

int cmd_type(const std::string& surface_spec, int trials, uint64_t seed) {
    Surface s = load_surface(surface_spec);
    int k = compute_type(s, trials, seed);
    Json j;
    j["surface"] = s.spec_string;
    j["k"] = k;
    j["trials"] = trials;
    j["seed"] = seed;
    j["strength"] = "evidence";  // the minimum over trials converges to k from above
    emit(j);
    std::cerr << "freedom number: " << k << "\n";
    return 0;
}

struct VerifyTrial {
    int n = 0, m = 0, steps = 0, rank = 0, rows = 0;
    bool replay_ok = false, isostatic = false, independent = false, pass = false;
    std::string strength;
};

int cmd_verify(int n, int k, int trials, const std::string& surface_spec, uint64_t seed,
               const std::string& expect) {
    if (trials <= 0) throw std::invalid_argument("verify: trials must be positive");
    Surface s = load_surface(surface_spec);
    const int lo = base_graph(k).n;
    if (n < lo) throw std::invalid_argument("verify: n is below the base graph size");

    // Trial parameters come off the seed stream up front, so the fan-out
    // below cannot perturb them and reruns are byte-identical.
    Rng rng(seed);
    struct Params {
        int nt;
        uint64_t gen_seed, analyze_seed;
    };
    std::vector<Params> params;
    for (int t = 0; t < trials; ++t) {
        int nt;
        do {
            nt = lo + static_cast<int>(rng.below(n - lo + 1));
        } while (k == 2 && (nt == 2 || nt == 3));
        uint64_t gen_seed = rng.next();
        uint64_t analyze_seed = rng.next();
        params.push_back({nt, gen_seed, analyze_seed});
    }

    auto run_trial = [&](const Params& p) {
        Generated gen = generate(p.nt, k, p.gen_seed);
        Certificate cert = reduce(gen.graph, k);
        VerifyTrial r;
        r.replay_ok = replay(cert) == gen.graph;
        RigidityReport rep = analyze(gen.graph, s, 3, p.analyze_seed);
        r.n = gen.graph.n;
        r.m = gen.graph.edge_count();
        r.steps = cert.step_count();
        r.rank = rep.rank;
        r.rows = rep.rows;
        r.isostatic = rep.isostatic;
        r.independent = rep.independent;
        r.strength = rep.strength;
        if (expect == "isostatic")
            r.pass = r.replay_ok && rep.isostatic && rep.strength == "certified";
        else
            r.pass = r.replay_ok && !rep.independent;
        return r;
    };

    // Fan out concurrently; results are collected by trial index.
    std::vector<VerifyTrial> outcomes(trials);
    const int workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                        static_cast<unsigned>(trials)));
    std::atomic<int> cursor{0};
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            try {
                while (true) {
                    int t = cursor.fetch_add(1);
                    if (t >= trials) break;
                    outcomes[t] = run_trial(params[t]);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& thread : threads) thread.join();
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);

    Json results = Json::array();
    int passed = 0;
    for (int t = 0; t < trials; ++t) {
        const VerifyTrial& o = outcomes[t];
        if (o.pass) ++passed;
        Json r;
        r["trial"] = t;
        r["n"] = o.n;
        r["m"] = o.m;
        r["steps"] = o.steps;
        r["replay_ok"] = o.replay_ok;
        r["rank"] = o.rank;
        r["rows"] = o.rows;
        r["isostatic"] = o.isostatic;
        r["independent"] = o.independent;
        r["strength"] = o.strength;
        r["pass"] = o.pass;
        results.push_back(std::move(r));
    }
    Json j;
    j["surface"] = s.spec_string;
    j["k"] = k;
    j["expect"] = expect;
    j["trials"] = trials;
    j["pass"] = passed;
    j["fail"] = trials - passed;
    j["seed"] = seed;
    j["results"] = std::move(results);
    emit(j);
    std::cerr << passed << "/" << trials << " trials matched expectation '" << expect << "'\n";
    return passed == trials ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"(2,k)-sparsity, constructive reduction and surface rigidity toolkit"};
    app.require_subcommand(1);

    std::string in, out, cert_out, surface_spec, placement, expect = "isostatic";
    int k = 1, n = 0, trials = 0;
    uint64_t seed = 0;
    bool replay_check = false, force_float = false;
    double tol_factor = 1.0;

    auto* check = app.add_subcommand("check", "decide (2,k)-sparsity/tightness of a graph");
    check->add_option("--in", in, "graph JSON file")->required();
    check->add_option("--k", k, "sparsity parameter (0..3)")->required();

    auto* reduce_cmd = app.add_subcommand("reduce", "reduce a tight graph to its base graph");
    reduce_cmd->add_option("--in", in, "graph JSON file")->required();
    reduce_cmd->add_option("--k", k, "sparsity parameter (1..3)")->required();
    reduce_cmd->add_option("--out", out, "certificate output file");
    reduce_cmd->add_flag("--replay-check", replay_check, "replay the certificate and compare");

    auto* gen = app.add_subcommand("generate", "random (2,k)-tight graph with certificate");
    gen->add_option("--n", n, "target vertex count")->required();
    gen->add_option("--k", k, "sparsity parameter (1..3)")->required();
    gen->add_option("--seed", seed, "random seed (default 0)");
    gen->add_option("--out", out, "graph output file");
    gen->add_option("--cert-out", cert_out, "certificate output file");

    auto* rig = app.add_subcommand("rigidity", "rigidity matrix rank analysis on a surface");
    rig->add_option("--in", in, "graph JSON file")->required();
    rig->add_option("--surface", surface_spec, "surface spec, e.g. torus:R=2,r=1 or @custom.json")
        ->required();
    rig->add_option("--trials", trials, "placements to sample (default 3)");
    rig->add_option("--seed", seed, "random seed (default 0)");
    rig->add_option("--placement", placement, "placement JSON file (skips sampling)");
    rig->add_flag("--float", force_float, "force the floating SVD path");
    rig->add_option("--tol-factor", tol_factor, "scale for the float rank threshold");

    auto* type_cmd = app.add_subcommand("type", "freedom number of a surface");
    type_cmd->add_option("--surface", surface_spec, "surface spec")->required();
    type_cmd->add_option("--trials", trials, "placements per complete graph (default 5)");
    type_cmd->add_option("--seed", seed, "random seed (default 0)");

    auto* verify = app.add_subcommand("verify", "generate, reduce and analyze random graphs");
    verify->add_option("--n", n, "max vertex count")->required();
    verify->add_option("--k", k, "sparsity parameter (1..3)")->required();
    verify->add_option("--trials", trials, "number of graphs")->required();
    verify->add_option("--surface", surface_spec, "surface spec")->required();
    verify->add_option("--seed", seed, "random seed (default 0)");
    verify->add_option("--expect", expect, "isostatic | dependent")
        ->check(CLI::IsMember({"isostatic", "dependent"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) return cmd_check(in, k);
        if (reduce_cmd->parsed()) return cmd_reduce(in, k, out, replay_check);
        if (gen->parsed()) return cmd_generate(n, k, seed, out, cert_out);
        if (rig->parsed())
            return cmd_rigidity(in, surface_spec, trials > 0 ? trials : 3, seed, placement,
                                force_float, tol_factor);
        if (type_cmd->parsed()) return cmd_type(surface_spec, trials > 0 ? trials : 5, seed);
        if (verify->parsed()) return cmd_verify(n, k, trials, surface_spec, seed, expect);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
