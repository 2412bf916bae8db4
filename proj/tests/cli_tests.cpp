// Exercises the built CLI binary end to end: exit codes, JSON output shape,
// and seed reproducibility. The binary path arrives as argv[1].

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "surfrig/json_io.hpp"

using namespace surfrig;

namespace {

int failures = 0;

#define CHECK_MSG(cond, msg)                                                          \
    do {                                                                              \
        if (!(cond)) {                                                                \
            std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << msg       \
                      << "\n";                                                        \
            ++failures;                                                               \
        }                                                                             \
    } while (0)

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <binary>\n";
        return 1;
    }
    const std::string bin = argv[1];
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "surfrig_cli_tests";
    fs::create_directories(dir);

    auto path = [&](const std::string& name) { return (dir / name).string(); };
    write_json_file(path("k5e.json"), graph_to_json(k5_minus_e()));
    write_json_file(path("k5.json"), graph_to_json(complete_graph(5)));
    write_json_file(path("k4.json"), graph_to_json(complete_graph(4)));
    write_json_file(path("k4k4.json"), graph_to_json(k4_join_k4()));
    {
        std::ofstream bad(path("bad.json"));
        bad << "{ not json";
    }

    // check: exit codes 0 / 1 / 2
    auto tight = run(bin + " check --in " + path("k5e.json") + " --k 1");
    CHECK_MSG(tight.exit_code == 0, "check tight graph exits 0");
    CHECK_MSG(Json::parse(tight.out)["tight"] == true, "check reports tight");

    auto loose = run(bin + " check --in " + path("k5.json") + " --k 1");
    CHECK_MSG(loose.exit_code == 1, "check non-tight graph exits 1");
    CHECK_MSG(!Json::parse(loose.out)["witness"].is_null(), "violating subgraph reported");

    CHECK_MSG(run(bin + " check --in " + path("missing.json") + " --k 1").exit_code == 2,
              "missing file exits 2");
    CHECK_MSG(run(bin + " check --in " + path("bad.json") + " --k 1").exit_code == 2,
              "malformed JSON exits 2");
    CHECK_MSG(run(bin + " check --in " + path("k5e.json") + " --k 9").exit_code == 2,
              "bad k exits 2");
    CHECK_MSG(run(bin + " bogus").exit_code == 2, "unknown subcommand exits 2");

    // reduce
    auto red = run(bin + " reduce --in " + path("k4k4.json") + " --k 1 --replay-check --out " +
                   path("cert.json"));
    CHECK_MSG(red.exit_code == 0, "reduce succeeds on K4 join K4");
    {
        Json cert = Json::parse(red.out);
        CHECK_MSG(cert["steps"].size() == 1, "one-step certificate");
        CHECK_MSG(cert["steps"][0]["op"] == "vertex_to_4cycle", "vertex-to-4-cycle step");
        CHECK_MSG(cert["replay_check"] == "ok", "replay check annotates output");
        Certificate parsed = certificate_from_json(load_json_file(path("cert.json")));
        CHECK_MSG(replay(parsed) == k4_join_k4(), "written certificate replays");
    }
    auto red0 = run(bin + " reduce --in " + path("k5e.json") + " --k 1");
    CHECK_MSG(red0.exit_code == 0, "reduce base graph");
    CHECK_MSG(Json::parse(red0.out)["steps"].empty(), "zero-step certificate");
    CHECK_MSG(run(bin + " reduce --in " + path("k5.json") + " --k 1").exit_code == 1,
              "reduce non-tight exits 1");

    // Edge-joined target: the certificate nests the second component.
    {
        SimpleGraph joined = edge_join(k4_join_k4(), k5_minus_e(), 1, 2).graph;
        write_json_file(path("joined.json"), graph_to_json(joined));
        auto redj = run(bin + " reduce --in " + path("joined.json") + " --k 1 --replay-check");
        CHECK_MSG(redj.exit_code == 0, "reduce edge-joined graph");
        Certificate cert = certificate_from_json(Json::parse(redj.out));
        CHECK_MSG(replay(cert) == joined, "nested certificate replays through files");
    }

    // generate: determinism and validity
    auto gen1 = run(bin + " generate --n 9 --k 1 --seed 3");
    auto gen2 = run(bin + " generate --n 9 --k 1 --seed 3");
    CHECK_MSG(gen1.exit_code == 0, "generate succeeds");
    CHECK_MSG(gen1.out == gen2.out, "same seed gives byte-identical output");
    {
        Json j = Json::parse(gen1.out);
        SimpleGraph g = graph_from_json(j["graph"]);
        CHECK_MSG(is_sparse(g, 1).tight, "generated graph is tight");
        CHECK_MSG(replay(certificate_from_json(j["certificate"])) == g,
                  "emitted certificate replays to the graph");
    }
    CHECK_MSG(run(bin + " generate --n 2 --k 1").exit_code == 2, "unreachable n exits 2");
    {
        auto gen_files = run(bin + " generate --n 7 --k 2 --seed 5 --out " + path("gen.json") +
                             " --cert-out " + path("gencert.json"));
        CHECK_MSG(gen_files.exit_code == 0, "generate with file outputs");
        SimpleGraph g = graph_from_json(load_json_file(path("gen.json")));
        CHECK_MSG(is_sparse(g, 2).tight, "written graph is tight");
        CHECK_MSG(replay(certificate_from_json(load_json_file(path("gencert.json")))) == g,
                  "written certificate replays to the written graph");
    }

    // rigidity
    auto sphere = run(bin + " rigidity --in " + path("k4.json") + " --surface sphere");
    CHECK_MSG(sphere.exit_code == 1, "K4 on sphere is not isostatic");
    CHECK_MSG(Json::parse(sphere.out)["rank"] == 9, "rank 9 on sphere");

    auto cyl = run(bin + " rigidity --in " + path("k4.json") + " --surface cylinder:r=1");
    CHECK_MSG(cyl.exit_code == 0, "K4 on cylinder is isostatic");
    {
        Json j = Json::parse(cyl.out);
        CHECK_MSG(j["rank"] == 10, "rank 10 on cylinder");
        CHECK_MSG(j["strength"] == "certified", "exact full rank certifies");
    }
    CHECK_MSG(run(bin + " rigidity --in " + path("k4.json") + " --surface nope").exit_code == 2,
              "unknown surface exits 2");

    // rigidity with explicit placements (exact, then forced float)
    {
        Json pts = Json::array();
        Rng rng(77);
        Surface cylinder = preset("cylinder");
        for (const auto& p : sample_placement(cylinder, 4, rng))
            pts.push_back(Json::array(
                {rat_to_string(p[0]), rat_to_string(p[1]), rat_to_string(p[2])}));
        write_json_file(path("pts.json"), pts);
        auto exact = run(bin + " rigidity --in " + path("k4.json") +
                         " --surface cylinder:r=1 --placement " + path("pts.json"));
        CHECK_MSG(exact.exit_code == 0, "exact placement path");
        CHECK_MSG(Json::parse(exact.out)["strength"] == "certified", "exact path certifies");

        auto fl = run(bin + " rigidity --in " + path("k4.json") +
                      " --surface cylinder:r=1 --float --placement " + path("pts.json"));
        CHECK_MSG(Json::parse(fl.out)["rank"] == 10, "float path rank");
        CHECK_MSG(Json::parse(fl.out)["strength"] == "evidence", "float path never certifies");
    }

    // exact placements must satisfy the surface equation exactly
    {
        Json off = Json::array();
        for (int i = 0; i < 4; ++i)
            off.push_back(Json::array({std::to_string(i + 2), "0", "0"}));
        write_json_file(path("off.json"), off);
        CHECK_MSG(run(bin + " rigidity --in " + path("k4.json") +
                      " --surface cylinder:r=1 --placement " + path("off.json"))
                          .exit_code == 2,
                  "off-surface exact placement exits 2");
        Json two = Json::array();
        two.push_back(Json::array({"1", "0", "0"}));
        two.push_back(Json::array({"1", "0", "1"}));
        write_json_file(path("two.json"), two);
        CHECK_MSG(run(bin + " rigidity --in " + path("k4.json") +
                      " --surface cylinder:r=1 --placement " + path("two.json"))
                          .exit_code == 2,
                  "wrong point count exits 2");
    }

    // custom surface file
    {
        Json custom;
        custom["name"] = "unit_sphere";
        custom["poly"] = Json::parse(R"({"2,0,0":"1","0,2,0":"1","0,0,2":"1","0,0,0":"-1"})");
        custom["type"] = 3;
        write_json_file(path("surf.json"), custom);
        Json pts = Json::array();
        Rng rng(5);
        Surface sph = preset("sphere");
        for (const auto& p : sample_placement(sph, 4, rng))
            pts.push_back(Json::array(
                {rat_to_string(p[0]), rat_to_string(p[1]), rat_to_string(p[2])}));
        write_json_file(path("spts.json"), pts);
        auto custom_run = run(bin + " rigidity --in " + path("k4.json") + " --surface @" +
                              path("surf.json") + " --placement " + path("spts.json"));
        CHECK_MSG(custom_run.exit_code == 1, "K4 dependent on custom sphere");
        CHECK_MSG(Json::parse(custom_run.out)["rank"] == 9, "custom surface exact rank");
    }

    // type
    auto type_run = run(bin + " type --surface ellipsoid --trials 2 --seed 1");
    CHECK_MSG(type_run.exit_code == 0, "type runs");
    CHECK_MSG(Json::parse(type_run.out)["k"] == 0, "ellipsoid has type 0");

    // verify: the two headline runs, 25 trials each
    auto ver = run(bin + " verify --n 12 --k 1 --trials 25 --surface torus:R=2,r=1 --seed 1");
    CHECK_MSG(ver.exit_code == 0, "verify isostatic on torus");
    CHECK_MSG(Json::parse(ver.out)["pass"] == 25, "25/25 torus trials certified isostatic");

    auto ver_dep = run(bin + " verify --n 12 --k 1 --trials 25 --surface sphere:r=1 --seed 1" +
                       std::string(" --expect dependent"));
    CHECK_MSG(ver_dep.exit_code == 0, "verify dependent on sphere");
    CHECK_MSG(Json::parse(ver_dep.out)["pass"] == 25, "25/25 sphere trials dependent-evidence");

    CHECK_MSG(run(bin + " verify --n 8 --k 1 --trials 0 --surface sphere:r=1").exit_code == 2,
              "zero trials exits 2");
    // (2,1)-tight graphs cannot be isostatic on the sphere: every trial fails.
    auto mismatch = run(bin + " verify --n 8 --k 1 --trials 2 --surface sphere:r=1 --seed 4");
    CHECK_MSG(mismatch.exit_code == 1, "expectation mismatch exits 1");
    CHECK_MSG(Json::parse(mismatch.out)["pass"] == 0, "no trial passes the wrong expectation");

    // seed reproducibility across the sampling subcommands
    auto rig_a = run(bin + " rigidity --in " + path("k4k4.json") + " --surface cone --seed 9");
    auto rig_b = run(bin + " rigidity --in " + path("k4k4.json") + " --surface cone --seed 9");
    CHECK_MSG(rig_a.out == rig_b.out, "rigidity output is byte-identical for a fixed seed");
    auto ver_b = run(bin + " verify --n 12 --k 1 --trials 25 --surface torus:R=2,r=1 --seed 1");
    CHECK_MSG(ver.out == ver_b.out, "verify output is byte-identical for a fixed seed");
    auto type_b = run(bin + " type --surface ellipsoid --trials 2 --seed 1");
    CHECK_MSG(type_run.out == type_b.out, "type output is byte-identical for a fixed seed");

    if (failures == 0) std::cout << "cli_tests: all checks passed\n";
    return failures == 0 ? 0 : 1;
}
