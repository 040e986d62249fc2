#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace sure::detail {

// Objects keep document order so strict readers can preserve it.
using json = nlohmann::ordered_json;
using ordered_json = nlohmann::ordered_json;

// Parses `text`; syntax errors become Error("syntax_error") naming the line
// and column.
json parse_document(std::string_view text, std::string_view what);

// Strict-mode field access. `path` is a JSON-path-like location used in
// error messages, e.g. "key_goals[2].sub_goals[0]".
void expect_object(const json& value, const std::string& path);
void reject_unknown_fields(const json& object,
                           std::initializer_list<std::string_view> allowed,
                           const std::string& path);
const json& require_field(const json& object, std::string_view key,
                          const std::string& path);
std::string require_string(const json& object, std::string_view key,
                           const std::string& path);
const json& require_array(const json& object, std::string_view key,
                          const std::string& path);
double require_number(const json& object, std::string_view key,
                      const std::string& path);
std::int64_t require_integer(const json& object, std::string_view key,
                             const std::string& path);
std::vector<std::string> require_string_array(const json& object,
                                              std::string_view key,
                                              const std::string& path);

std::string join_path(const std::string& parent, std::string_view key);
std::string index_path(const std::string& parent, std::size_t index);

}  // namespace sure::detail
