#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "chibound/graph.hpp"

namespace chibound {

// Canonical JSON form: {"edges":[[u,v],...],"n":..,"name":..} with u<v in each
// pair and pairs sorted lexicographically. nlohmann objects are key-sorted, so
// dump() of this form is bit-exact and usable in golden tests.
inline nlohmann::json graph_to_json(const graph& g) {
    nlohmann::json j;
    j["n"] = g.n;
    auto edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (g.name.empty())
        j["name"] = nullptr;
    else
        j["name"] = g.name;
    return j;
}

inline graph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw input_error("graph json: expected object with n and edges");
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw input_error("graph json: edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::string name;
    if (j.contains("name") && !j.at("name").is_null()) name = j.at("name").get<std::string>();
    return build_graph(n, edges, name);
}

inline std::string graph_to_string(const graph& g) { return graph_to_json(g).dump(); }

inline graph graph_from_string(const std::string& s) {
    return graph_from_json(nlohmann::json::parse(s));
}

inline void write_graph_file(const graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot open for writing: " + path);
    out << graph_to_string(g) << "\n";
}

inline graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open: " + path);
    nlohmann::json j;
    in >> j;
    return graph_from_json(j);
}

// DIMACS-like ".col": "p edge n m" header, "e u v" lines, 1-based vertices.
inline graph read_dimacs(std::istream& in, std::string name = "") {
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        char tag;
        ls >> tag;
        if (tag == 'p') {
            std::string fmt;
            long m = 0;
            if (!(ls >> fmt >> n >> m) || fmt != "edge") throw input_error("dimacs: bad problem line");
        } else if (tag == 'e') {
            int u, v;
            if (!(ls >> u >> v)) throw input_error("dimacs: bad edge line");
            if (n < 0) throw input_error("dimacs: edge before problem line");
            if (u < 1 || v < 1 || u > n || v > n) throw input_error("dimacs: vertex out of range");
            if (u != v) edges.emplace_back(u - 1, v - 1);
        }
    }
    if (n < 0) throw input_error("dimacs: missing problem line");
    return build_graph(n, edges, std::move(name));
}

inline graph read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open: " + path);
    return read_dimacs(in, path);
}

} // namespace chibound
