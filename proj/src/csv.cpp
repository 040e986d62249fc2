#include "csv.hpp"

#include "sure/error.hpp"

namespace sure::detail {

std::vector<CsvRow> read_csv(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) {
    text.remove_prefix(3);
  }

  std::vector<CsvRow> rows;
  CsvRow row;
  std::string field;
  std::size_t line = 1;
  std::size_t i = 0;
  bool record_started = false;

  auto end_field = [&] {
    row.fields.push_back(std::move(field));
    field.clear();
  };
  auto end_record = [&] {
    end_field();
    // A lone empty field is a blank line.
    if (!(row.fields.size() == 1 && row.fields[0].empty())) {
      rows.push_back(std::move(row));
    }
    row = CsvRow{};
    record_started = false;
  };

  while (i < text.size()) {
    if (!record_started) {
      row.line = line;
      record_started = true;
    }
    char c = text[i];
    if (c == '"' && field.empty()) {
      // Quoted field.
      const std::size_t open_line = line;
      ++i;
      bool closed = false;
      while (i < text.size()) {
        char d = text[i];
        if (d == '"') {
          if (i + 1 < text.size() && text[i + 1] == '"') {
            field.push_back('"');
            i += 2;
            continue;
          }
          ++i;
          closed = true;
          break;
        }
        if (d == '\n') ++line;
        field.push_back(d);
        ++i;
      }
      if (!closed) {
        throw Error("malformed_csv", "line " + std::to_string(open_line) +
                                         ": unterminated quoted field");
      }
      if (i < text.size() && text[i] != ',' && text[i] != '\n' &&
          !(text[i] == '\r' && i + 1 < text.size() && text[i + 1] == '\n') &&
          text[i] != '\r') {
        throw Error("malformed_csv",
                    "line " + std::to_string(line) +
                        ": unexpected character after closing quote");
      }
      continue;
    }
    if (c == ',') {
      end_field();
      ++i;
      continue;
    }
    if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
      end_record();
      i += 2;
      ++line;
      continue;
    }
    if (c == '\n') {
      end_record();
      ++i;
      ++line;
      continue;
    }
    field.push_back(c);
    ++i;
  }
  if (record_started) {
    end_record();
  }
  return rows;
}

std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(value);
  }
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace sure::detail
