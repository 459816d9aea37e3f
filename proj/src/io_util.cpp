#include "splitdit/io_util.hpp"

#include <fstream>
#include <sstream>

#include "splitdit/errors.hpp"

namespace splitdit {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    raise(ErrorKind::MissingArtifact, "cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    raise(ErrorKind::MissingArtifact, "cannot write " + path.string());
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

std::string hash_file_hex(const std::filesystem::path& path) {
  return content_hash_hex(read_file(path));
}

}  // namespace splitdit
