#include "surfrig/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace surfrig {

namespace {

int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer())
        throw std::invalid_argument(std::string("json: expected integer for ") + what);
    return j.get<int>();
}

std::vector<int> as_int_list(const Json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string("json: expected array for ") + what);
    std::vector<int> out;
    for (const auto& item : j) out.push_back(as_int(item, what));
    return out;
}

} // namespace

Json graph_to_json(const SimpleGraph& g) {
    Json j;
    j["n"] = g.n;
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges) edges.push_back(Json::array({u, v}));
    j["edges"] = std::move(edges);
    return j;
}

SimpleGraph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("json: graph needs 'n' and 'edges'");
    int n = as_int(j["n"], "n");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("json: each edge must be a pair");
        edges.emplace_back(as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint"));
    }
    return make_graph(n, edges);
}

namespace {

Json step_to_json(const ConstructionStep& step) {
    Json j;
    j["op"] = move_kind_name(step.kind);
    Json params;
    switch (step.kind) {
        case MoveKind::Henneberg1:
            params["v1"] = step.a;
            params["v2"] = step.b;
            break;
        case MoveKind::Henneberg2:
            params["v1"] = step.a;
            params["v2"] = step.b;
            params["v3"] = step.c;
            break;
        case MoveKind::VertexToK4: {
            params["v"] = step.a;
            Json assignment = Json::array();
            for (const auto& [x, corner] : step.assignment)
                assignment.push_back(Json::array({x, corner}));
            params["assignment"] = std::move(assignment);
            break;
        }
        case MoveKind::VertexTo4Cycle:
            params["v1"] = step.a;
            params["v2"] = step.b;
            params["v3"] = step.c;
            params["moved"] = step.moved;
            break;
        case MoveKind::VertexSplit:
            params["v"] = step.a;
            params["u"] = step.b;
            params["moved"] = step.moved;
            break;
        case MoveKind::EdgeJoin: {
            params["g"] = step.a;
            params["h"] = step.b;
            Json component;
            component["base_relabel"] = step.component ? step.component->base_relabel
                                                       : std::vector<int>{};
            Json steps = Json::array();
            if (step.component)
                for (const auto& sub : step.component->steps) steps.push_back(step_to_json(sub));
            component["steps"] = std::move(steps);
            params["component"] = std::move(component);
            break;
        }
    }
    j["params"] = std::move(params);
    if (!step.relabel.empty()) j["relabel"] = step.relabel;
    return j;
}

ConstructionStep step_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("op") || !j.contains("params"))
        throw std::invalid_argument("json: step needs 'op' and 'params'");
    ConstructionStep step;
    step.kind = move_kind_from_name(j["op"].get<std::string>());
    const Json& params = j["params"];
    switch (step.kind) {
        case MoveKind::Henneberg1:
            step.a = as_int(params.at("v1"), "v1");
            step.b = as_int(params.at("v2"), "v2");
            break;
        case MoveKind::Henneberg2:
            step.a = as_int(params.at("v1"), "v1");
            step.b = as_int(params.at("v2"), "v2");
            step.c = as_int(params.at("v3"), "v3");
            break;
        case MoveKind::VertexToK4:
            step.a = as_int(params.at("v"), "v");
            for (const auto& entry : params.at("assignment")) {
                if (!entry.is_array() || entry.size() != 2)
                    throw std::invalid_argument("json: assignment entries are pairs");
                step.assignment.emplace_back(as_int(entry[0], "neighbor"), as_int(entry[1], "corner"));
            }
            break;
        case MoveKind::VertexTo4Cycle:
            step.a = as_int(params.at("v1"), "v1");
            step.b = as_int(params.at("v2"), "v2");
            step.c = as_int(params.at("v3"), "v3");
            step.moved = as_int_list(params.at("moved"), "moved");
            break;
        case MoveKind::VertexSplit:
            step.a = as_int(params.at("v"), "v");
            step.b = as_int(params.at("u"), "u");
            step.moved = as_int_list(params.at("moved"), "moved");
            break;
        case MoveKind::EdgeJoin: {
            step.a = as_int(params.at("g"), "g");
            step.b = as_int(params.at("h"), "h");
            const Json& component = params.at("component");
            step.component = std::make_shared<SubCertificate>();
            step.component->base_relabel = as_int_list(component.at("base_relabel"), "base_relabel");
            for (const auto& sub : component.at("steps"))
                step.component->steps.push_back(step_from_json(sub));
            break;
        }
    }
    if (j.contains("relabel")) step.relabel = as_int_list(j["relabel"], "relabel");
    return step;
}

} // namespace

Json certificate_to_json(const Certificate& cert) {
    Json j;
    j["k"] = cert.k;
    j["base"] = base_name(cert.k);
    j["base_relabel"] = cert.base_relabel;
    Json steps = Json::array();
    for (const auto& step : cert.steps) steps.push_back(step_to_json(step));
    j["steps"] = std::move(steps);
    return j;
}

Certificate certificate_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("steps"))
        throw std::invalid_argument("json: certificate needs 'k' and 'steps'");
    Certificate cert;
    cert.k = as_int(j["k"], "k");
    if (j.contains("base") && j["base"].get<std::string>() != base_name(cert.k))
        throw std::invalid_argument("json: certificate base does not match k");
    if (j.contains("base_relabel"))
        cert.base_relabel = as_int_list(j["base_relabel"], "base_relabel");
    for (const auto& step : j["steps"]) cert.steps.push_back(step_from_json(step));
    return cert;
}

Json report_to_json(const RigidityReport& rep) {
    Json j;
    j["rank"] = rep.rank;
    j["nullity"] = rep.nullity;
    j["rows"] = rep.rows;
    j["independent"] = rep.independent;
    j["isostatic"] = rep.isostatic;
    j["strength"] = rep.strength;
    j["basis"] = rep.basis;
    j["k"] = rep.k;
    j["flex_dim_internal"] = rep.flex_dim_internal;
    j["trials"] = rep.trials_used;
    j["seed"] = rep.seed;
    return j;
}

Surface surface_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("poly"))
        throw std::invalid_argument("json: custom surface needs 'poly'");
    Surface s;
    s.name = j.contains("name") ? j["name"].get<std::string>() : "custom";
    for (const auto& [key, value] : j["poly"].items()) {
        std::array<int, 3> mono{};
        if (std::sscanf(key.c_str(), "%d,%d,%d", &mono[0], &mono[1], &mono[2]) != 3)
            throw std::invalid_argument("json: poly keys are 'i,j,k' exponent triples");
        if (mono[0] < 0 || mono[1] < 0 || mono[2] < 0)
            throw std::invalid_argument("json: negative exponent");
        s.poly.add_term(mono, rat_from_string(value.get<std::string>()));
    }
    if (s.poly.is_zero()) throw std::invalid_argument("json: surface polynomial is zero");
    if (j.contains("type") && !j["type"].is_null()) s.declared_type = as_int(j["type"], "type");
    s.has_sampler = false;
    s.spec_string = "custom:" + s.name;
    return s;
}

Json poly_to_json(const Polynomial3& poly) {
    Json j;
    for (const auto& [mono, coeff] : poly.terms()) {
        char key[48];
        std::snprintf(key, sizeof(key), "%d,%d,%d", mono[0], mono[1], mono[2]);
        j[key] = rat_to_string(coeff);
    }
    return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << dump_json(j);
}

} // namespace surfrig
