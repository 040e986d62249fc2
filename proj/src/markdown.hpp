#pragma once

#include <string>
#include <string_view>

namespace sure::detail {

// Table-cell safe text: pipes escaped, line breaks flattened to spaces.
inline std::string md_cell(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '|') {
      out += "\\|";
    } else if (c == '\n' || c == '\r') {
      out.push_back(' ');
    } else {
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace sure::detail
