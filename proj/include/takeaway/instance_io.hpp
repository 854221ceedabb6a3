#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "takeaway/position.hpp"

namespace takeaway {

/// Instance documents look like
///   {"vertices":["S","A","B"],"edges":[["A","B"],["S","A","B"]]}
/// Names are 1-16 visible ASCII characters. Vertex ids follow declaration
/// order.
Position parse_instance(std::string_view text);
Position instance_from_json(const nlohmann::json& doc);

/// Byte-exact form: vertices in ascending id order, edge members in ascending
/// id order, edges in lexicographic order, no whitespace.
std::string serialize_instance(const Position& p);
nlohmann::json instance_to_json(const Position& p);

Position load_instance(const std::filesystem::path& path);
void save_instance(const std::filesystem::path& path, const Position& p);

bool is_valid_vertex_name(std::string_view name) noexcept;

}  // namespace takeaway
