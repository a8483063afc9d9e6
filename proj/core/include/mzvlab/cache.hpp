#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mzvlab/linalg.hpp"
#include "mzvlab/matrices.hpp"
#include "mzvlab/period.hpp"

namespace mzvlab {

struct CacheKey {
  std::string artifact;  ///< "matrix", "basis", "lifted"
  std::string family;    ///< family or kind name
  int weight = 0;
  int j = 0;

  /// File name; embeds the library and schema versions so stale entries are
  /// never matched.
  [[nodiscard]] std::string file_name() const;
};

struct CacheEntryInfo {
  std::string file;
  std::uintmax_t bytes = 0;
  bool valid = false;  ///< header parsed and checksum matched
};

/// Directory of checksummed payload files. Writes go to a temporary file
/// that is renamed into place, so readers never see a partial entry.
class Cache {
 public:
  explicit Cache(std::filesystem::path dir);

  /// --cache-dir, else $MZVLAB_CACHE, else $XDG_CACHE_HOME/mzvlab, else
  /// ~/.cache/mzvlab.
  static std::filesystem::path default_dir();

  [[nodiscard]] const std::filesystem::path& dir() const { return dir_; }

  /// Payload if present and intact. Corrupt entries read as missing.
  [[nodiscard]] std::optional<std::string> load(const CacheKey& key) const;
  /// Throws std::runtime_error when the directory is not writable.
  void store(const CacheKey& key, std::string_view payload) const;

  [[nodiscard]] std::vector<CacheEntryInfo> entries() const;
  /// Removes every entry and stray temporary file; returns the count removed.
  std::size_t clear() const;

  /// Test hook, called between writing the temporary file and the rename.
  /// Throwing from it simulates a crash mid-write.
  static void set_fault_hook(std::function<void(const std::filesystem::path& temp)> hook);

 private:
  std::filesystem::path dir_;
};

std::uint32_t crc32_of(std::string_view data);

/// Memoizing wrappers: with a null cache they just compute.
QMatrix matrix_through_cache(const Cache* cache, Family f, int weight, int j);
PeriodBasis period_basis_through_cache(const Cache* cache, PeriodKind kind, int weight);
LiftedBasis lifted_basis_through_cache(const Cache* cache, LiftedFamily family, int weight);

}  // namespace mzvlab
