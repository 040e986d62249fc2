#include "sure/io.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

#include "sure/error.hpp"

namespace sure {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("io_error", "cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    throw Error("io_error", "failed reading " + path.string());
  }
  return std::move(buf).str();
}

void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream outf(tmp, std::ios::binary | std::ios::trunc);
    if (!outf) {
      throw Error("io_error", "cannot write " + tmp.string());
    }
    outf.write(content.data(), static_cast<std::streamsize>(content.size()));
    outf.flush();
    if (!outf) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw Error("io_error", "failed writing " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw Error("io_error",
                "cannot move output into place at " + path.string() + ": " +
                    ec.message());
  }
}

}  // namespace sure
