#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "procat/io.hpp"

namespace procat {

/// Content-addressed, append-only store of JSON objects. Ids are
/// "<kind>-<fnv1a of the canonical JSON>". Concurrent writers of the same
/// object race on an atomic link; the first one wins and later writers
/// see identical content.
class Workspace {
 public:
  explicit Workspace(std::filesystem::path dir);
  /// $PROCAT_WORKSPACE, or ./.procat when unset.
  static Workspace from_env();

  const std::filesystem::path& dir() const { return dir_; }
  static std::string id_for(const std::string& kind, const Json& j);
  /// Stores the object (no-op when present) and returns its id.
  std::string put(const std::string& kind, const Json& j);
  bool contains(const std::string& id) const;
  Json get(const std::string& id) const;
  std::vector<std::string> ids() const;

 private:
  std::filesystem::path path_of(const std::string& id) const;
  std::filesystem::path dir_;
};

/// A workspace id when the store has it, otherwise a JSON file path.
Json load_input(const Workspace& ws, const std::string& ref);

}  // namespace procat
