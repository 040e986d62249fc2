#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace sure {

// Reads a whole file as bytes. Throws Error("io_error") when unreadable.
std::string read_file(const std::filesystem::path& path);

// Writes to a sibling temporary file and renames it over `path`, so a failed
// write never leaves a partial file behind.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

}  // namespace sure
