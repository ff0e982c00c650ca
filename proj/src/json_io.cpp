#include "hst/json_io.hpp"
#include "hst/error.hpp"

#include <fstream>
#include <sstream>

namespace hst {

using nlohmann::json;

nlohmann::json triangulation_to_json(const Triangulation& t) {
    json j;
    j["schema"] = kSchema;
    j["m"] = t.vertex_set().size();
    j["labels"] = t.vertex_set();
    j["n"] = t.dim();
    j["simplices"] = t.simplices();
    return j;
}

Triangulation triangulation_from_json(const nlohmann::json& j) {
    if (!j.is_object() || j.value("schema", "") != kSchema)
        throw UnknownFormat("triangulation: expected schema \"hst/1\"");
    LabelSet labels = j.at("labels").get<LabelSet>();
    int n = j.at("n").get<int>();
    auto simplices = j.at("simplices").get<std::vector<Simplex>>();
    if (j.contains("m") && j.at("m").get<std::size_t>() != labels.size())
        throw UnknownFormat("triangulation: m does not match label count");
    if (!is_strictly_increasing(labels))
        throw UnknownFormat("triangulation: labels must be strictly increasing");
    return Triangulation(labels, n, std::move(simplices));
}

nlohmann::json poset_to_json(const HSTPoset& p) {
    json j;
    j["schema"] = kSchema;
    j["m"] = p.vertex_set.size();
    j["n"] = p.n;
    json nodes = json::array();
    for (const auto& t : p.nodes) {
        json node;
        node["simplices"] = t.simplices();
        node["internal"] = t.internal_set();
        nodes.push_back(std::move(node));
    }
    j["nodes"] = std::move(nodes);
    json covers = json::array();
    for (auto [a, b] : p.covers) covers.push_back(json::array({a, b}));
    j["covers"] = std::move(covers);
    return j;
}

nlohmann::json flip_chain_to_json(const std::vector<FlipWitness>& chain) {
    json j;
    j["schema"] = kSchema;
    json ws = json::array();
    for (const auto& w : chain) {
        json e;
        e["removed"] = w.removed;
        if (w.inserted) e["inserted"] = *w.inserted;
        else e["inserted"] = nullptr;
        ws.push_back(std::move(e));
    }
    j["witnesses"] = std::move(ws);
    return j;
}

nlohmann::json relabel_map_to_json(const RelabelMap& map) {
    json pairs = json::array();
    for (auto [from, to] : map) pairs.push_back(json::array({from, to}));
    json j;
    j["map"] = std::move(pairs);
    return j;
}

Triangulation read_triangulation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UnknownFormat("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw UnknownFormat("malformed JSON in " + path + ": " + e.what());
    }
    try {
        return triangulation_from_json(j);
    } catch (const json::exception& e) {
        throw UnknownFormat("bad triangulation object in " + path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw UnknownFormat("cannot open file for writing: " + path);
    out << contents;
}

std::string dump_canonical(const nlohmann::json& j) { return j.dump(2) + "\n"; }

} // namespace hst
