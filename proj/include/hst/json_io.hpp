#pragma once

#include "hst/flips.hpp"
#include "hst/orders.hpp"
#include "hst/triangulation.hpp"
#include "hst/vertex_ops.hpp"

#include <json.hpp>

#include <string>

namespace hst {

// Versioned JSON surface ("schema": "hst/1"). Every emitter produces
// byte-stable canonical output and every parser accepts its own output.
inline constexpr const char* kSchema = "hst/1";

nlohmann::json triangulation_to_json(const Triangulation& t);
Triangulation triangulation_from_json(const nlohmann::json& j);

nlohmann::json poset_to_json(const HSTPoset& p);
nlohmann::json flip_chain_to_json(const std::vector<FlipWitness>& chain);
nlohmann::json relabel_map_to_json(const RelabelMap& map);

Triangulation read_triangulation_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

std::string dump_canonical(const nlohmann::json& j);

} // namespace hst
