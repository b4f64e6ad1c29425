#include "procat/workspace.hpp"

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <fstream>

#include <fcntl.h>
#include <unistd.h>

namespace procat {

Workspace::Workspace(std::filesystem::path dir) : dir_(std::move(dir)) { std::filesystem::create_directories(dir_); }

Workspace Workspace::from_env() {
  const char* env = std::getenv("PROCAT_WORKSPACE");
  return Workspace(env && *env ? std::filesystem::path(env) : std::filesystem::path(".procat"));
}

std::string Workspace::id_for(const std::string& kind, const Json& j) { return kind + "-" + hash_hex(canonical(j)); }

std::filesystem::path Workspace::path_of(const std::string& id) const {
  if (id.empty() || id.find('/') != std::string::npos || id[0] == '.') throw PreconditionError("bad object id " + id);
  return dir_ / (id + ".json");
}

std::string Workspace::put(const std::string& kind, const Json& j) {
  const std::string id = id_for(kind, j);
  const auto target = path_of(id);
  const std::string body = canonical(j);
  if (std::filesystem::exists(target)) {
    if (canonical(get(id)) != body) throw InvariantViolation("hash collision on " + id);
    return id;
  }
  static std::atomic<unsigned> counter{0};
  const auto tmp = dir_ / (".tmp-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
  {
    const int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_EXCL, 0644);
    if (fd < 0) throw std::runtime_error("cannot create " + tmp.string() + ": " + std::strerror(errno));
    std::size_t off = 0;
    while (off < body.size()) {
      const ssize_t w = ::write(fd, body.data() + off, body.size() - off);
      if (w < 0) {
        ::close(fd);
        ::unlink(tmp.c_str());
        throw std::runtime_error("write failed for " + id);
      }
      off += static_cast<std::size_t>(w);
    }
    ::fsync(fd);
    ::close(fd);
  }
  // link() refuses to replace an existing file: first writer wins
  const int rc = ::link(tmp.c_str(), target.c_str());
  const int err = errno;
  ::unlink(tmp.c_str());
  if (rc != 0 && err != EEXIST) throw std::runtime_error("cannot store " + id + ": " + std::strerror(err));
  if (rc != 0 && canonical(get(id)) != body) throw InvariantViolation("hash collision on " + id);
  return id;
}

bool Workspace::contains(const std::string& id) const {
  try {
    return std::filesystem::exists(path_of(id));
  } catch (const PreconditionError&) {
    return false;
  }
}

Json Workspace::get(const std::string& id) const {
  if (!contains(id)) throw PreconditionError("unknown object id " + id);
  return read_json_file(path_of(id).string());
}

std::vector<std::string> Workspace::ids() const {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(dir_)) {
    const auto name = e.path().filename().string();
    if (name[0] != '.' && e.path().extension() == ".json") out.push_back(e.path().stem().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Json load_input(const Workspace& ws, const std::string& ref) {
  if (ws.contains(ref)) return ws.get(ref);
  return read_json_file(ref);
}

}  // namespace procat
