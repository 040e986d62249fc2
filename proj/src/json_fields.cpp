#include "json_fields.hpp"

#include <algorithm>

#include "sure/error.hpp"

namespace sure::detail {

namespace {

std::string where(const std::string& path) {
  return path.empty() ? std::string("<root>") : path;
}

}  // namespace

json parse_document(std::string_view text, std::string_view what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
    offset = std::min(offset, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error("syntax_error", std::string(what) + ": syntax error at line " +
                                    std::to_string(line) + ", column " +
                                    std::to_string(column) + " (byte " +
                                    std::to_string(e.byte) + ")");
  }
}

std::string join_path(const std::string& parent, std::string_view key) {
  if (parent.empty()) return std::string(key);
  return parent + "." + std::string(key);
}

std::string index_path(const std::string& parent, std::size_t index) {
  return parent + "[" + std::to_string(index) + "]";
}

void expect_object(const json& value, const std::string& path) {
  if (!value.is_object()) {
    throw Error("wrong_type", where(path) + ": expected an object");
  }
}

void reject_unknown_fields(const json& object,
                           std::initializer_list<std::string_view> allowed,
                           const std::string& path) {
  for (const auto& item : object.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) ==
        allowed.end()) {
      throw Error("unknown_field", join_path(path, item.key()) +
                                       ": unknown field \"" + item.key() +
                                       "\"");
    }
  }
}

const json& require_field(const json& object, std::string_view key,
                          const std::string& path) {
  auto it = object.find(std::string(key));
  if (it == object.end()) {
    throw Error("missing_field", join_path(path, key) + ": required field \"" +
                                     std::string(key) + "\" is missing");
  }
  return *it;
}

std::string require_string(const json& object, std::string_view key,
                           const std::string& path) {
  const json& v = require_field(object, key, path);
  if (!v.is_string()) {
    throw Error("wrong_type", join_path(path, key) + ": expected a string");
  }
  return v.get<std::string>();
}

const json& require_array(const json& object, std::string_view key,
                          const std::string& path) {
  const json& v = require_field(object, key, path);
  if (!v.is_array()) {
    throw Error("wrong_type", join_path(path, key) + ": expected an array");
  }
  return v;
}

double require_number(const json& object, std::string_view key,
                      const std::string& path) {
  const json& v = require_field(object, key, path);
  if (!v.is_number()) {
    throw Error("wrong_type", join_path(path, key) + ": expected a number");
  }
  return v.get<double>();
}

std::int64_t require_integer(const json& object, std::string_view key,
                             const std::string& path) {
  const json& v = require_field(object, key, path);
  if (!v.is_number_integer()) {
    throw Error("wrong_type", join_path(path, key) + ": expected an integer");
  }
  return v.get<std::int64_t>();
}

std::vector<std::string> require_string_array(const json& object,
                                              std::string_view key,
                                              const std::string& path) {
  const json& arr = require_array(object, key, path);
  std::vector<std::string> out;
  out.reserve(arr.size());
  const std::string base = join_path(path, key);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_string()) {
      throw Error("wrong_type", index_path(base, i) + ": expected a string");
    }
    out.push_back(arr[i].get<std::string>());
  }
  return out;
}

}  // namespace sure::detail
