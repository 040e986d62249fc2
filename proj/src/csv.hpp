#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace sure::detail {

struct CsvRow {
  std::size_t line = 0;  // 1-based line where the record starts
  std::vector<std::string> fields;
};

// RFC 4180 style reader: comma separator, double-quote quoting with ""
// escapes, LF or CRLF record ends. A leading UTF-8 BOM is dropped and
// completely empty lines are skipped. Throws Error("malformed_csv") on an
// unterminated quote or stray characters after a closing quote.
std::vector<CsvRow> read_csv(std::string_view text);

// Quotes a field when it contains a comma, quote, CR or LF.
std::string csv_field(std::string_view value);

}  // namespace sure::detail
