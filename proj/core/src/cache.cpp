#include "mzvlab/cache.hpp"

#include <zlib.h>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "mzvlab/serialize.hpp"
#include "mzvlab/version.hpp"

namespace mzvlab {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kMagic = "mzvlab-cache";
constexpr std::string_view kSuffix = ".entry";
constexpr std::string_view kTempMarker = ".tmp-";

std::mutex& hook_mutex() {
  static std::mutex m;
  return m;
}

std::function<void(const fs::path&)>& fault_hook() {
  static std::function<void(const fs::path&)> hook;
  return hook;
}

std::string sanitize(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') out += c;
    else if (c == '+') out += "plus";
    else out += '_';
  }
  return out;
}

std::string header(std::string_view payload) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s %d %s %08x %zu\n", kMagic.data(), kSchemaVersion, kVersion,
                crc32_of(payload), payload.size());
  return buf;
}

// Splits a stored file into its payload, or nullopt if the header, size or
// checksum disagree.
std::optional<std::string> unwrap(const std::string& raw) {
  const auto nl = raw.find('\n');
  if (nl == std::string::npos) return std::nullopt;
  std::istringstream h(raw.substr(0, nl));
  std::string magic, version, crc_hex;
  int schema = 0;
  std::size_t size = 0;
  if (!(h >> magic >> schema >> version >> crc_hex >> size)) return std::nullopt;
  if (magic != kMagic || schema != kSchemaVersion || version != kVersion) return std::nullopt;
  std::string payload = raw.substr(nl + 1);
  if (payload.size() != size) return std::nullopt;
  char want[16];
  std::snprintf(want, sizeof want, "%08x", crc32_of(payload));
  if (crc_hex != want) return std::nullopt;
  return payload;
}

std::optional<std::string> read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string temp_suffix() {
  static std::atomic<unsigned> counter{0};
  std::random_device rd;
  std::ostringstream os;
  os << kTempMarker << std::hash<std::thread::id>{}(std::this_thread::get_id()) % 100000 << '-' << rd() % 100000
     << '-' << counter++;
  return os.str();
}

}  // namespace

std::uint32_t crc32_of(std::string_view data) {
  uLong crc = ::crc32(0L, Z_NULL, 0);
  crc = ::crc32(crc, reinterpret_cast<const Bytef*>(data.data()), static_cast<uInt>(data.size()));
  return static_cast<std::uint32_t>(crc);
}

std::string CacheKey::file_name() const {
  std::ostringstream os;
  os << sanitize(artifact) << '-' << sanitize(family) << "-w" << weight << "-j" << j << "-v" << sanitize(kVersion)
     << "-s" << kSchemaVersion << kSuffix;
  return os.str();
}

Cache::Cache(fs::path dir) : dir_(std::move(dir)) {}

fs::path Cache::default_dir() {
  if (const char* env = std::getenv("MZVLAB_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "mzvlab";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "mzvlab";
  return fs::temp_directory_path() / "mzvlab-cache";
}

std::optional<std::string> Cache::load(const CacheKey& key) const {
  const auto raw = read_file(dir_ / key.file_name());
  if (!raw) return std::nullopt;
  return unwrap(*raw);
}

void Cache::store(const CacheKey& key, std::string_view payload) const {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw std::runtime_error("cache: cannot create " + dir_.string() + ": " + ec.message());
  const fs::path target = dir_ / key.file_name();
  const fs::path temp = dir_ / (key.file_name() + temp_suffix());
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cache: cannot write in " + dir_.string());
    out << header(payload) << payload;
    out.flush();
    if (!out) {
      fs::remove(temp, ec);
      throw std::runtime_error("cache: write failed in " + dir_.string());
    }
  }
  {
    std::function<void(const fs::path&)> hook;
    {
      std::lock_guard lock(hook_mutex());
      hook = fault_hook();
    }
    if (hook) hook(temp);
  }
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp, ec);
    throw std::runtime_error("cache: rename failed in " + dir_.string());
  }
}

std::vector<CacheEntryInfo> Cache::entries() const {
  std::vector<CacheEntryInfo> out;
  std::error_code ec;
  if (!fs::is_directory(dir_, ec)) return out;
  for (const auto& e : fs::directory_iterator(dir_, ec)) {
    const std::string name = e.path().filename().string();
    if (!e.is_regular_file() || name.size() < kSuffix.size() ||
        name.compare(name.size() - kSuffix.size(), kSuffix.size(), kSuffix) != 0) {
      continue;
    }
    const auto raw = read_file(e.path());
    out.push_back({name, e.file_size(ec), raw && unwrap(*raw).has_value()});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.file < b.file; });
  return out;
}

std::size_t Cache::clear() const {
  std::size_t removed = 0;
  std::error_code ec;
  if (!fs::is_directory(dir_, ec)) return 0;
  std::vector<fs::path> doomed;
  for (const auto& e : fs::directory_iterator(dir_, ec)) {
    const std::string name = e.path().filename().string();
    if (name.find(kSuffix) != std::string::npos) doomed.push_back(e.path());
  }
  for (const auto& p : doomed) removed += fs::remove(p, ec) ? 1 : 0;
  return removed;
}

void Cache::set_fault_hook(std::function<void(const fs::path&)> hook) {
  std::lock_guard lock(hook_mutex());
  fault_hook() = std::move(hook);
}

namespace {

template <typename T, typename Compute, typename Encode, typename Decode>
T through(const Cache* cache, const CacheKey& key, Compute compute, Encode encode, Decode decode) {
  if (cache) {
    if (auto hit = cache->load(key)) {
      try {
        return decode(*hit);
      } catch (const FormatError&) {
        // fall through and overwrite
      }
    }
  }
  T value = compute();
  if (cache) {
    try {
      cache->store(key, encode(value));
    } catch (const std::runtime_error&) {
      // an unwritable cache only costs recomputation
    }
  }
  return value;
}

}  // namespace

QMatrix matrix_through_cache(const Cache* cache, Family f, int weight, int j) {
  const int jj = family_uses_j(f) ? j : 0;
  return through<QMatrix>(
      cache, {"matrix", family_name(f), weight, jj}, [&] { return *cached_matrix(f, weight, j); },
      [](const QMatrix& m) { return matrix_to_json(m, {}, -1); }, [](const std::string& s) { return matrix_from_json(s); });
}

PeriodBasis period_basis_through_cache(const Cache* cache, PeriodKind kind, int weight) {
  return through<PeriodBasis>(
      cache, {"basis", period_kind_name(kind), weight, 0}, [&] { return cached_period_basis(kind, weight); },
      [](const PeriodBasis& b) { return period_basis_to_json(b, -1); },
      [](const std::string& s) { return period_basis_from_json(s); });
}

LiftedBasis lifted_basis_through_cache(const Cache* cache, LiftedFamily family, int weight) {
  return through<LiftedBasis>(
      cache, {"lifted", lifted_family_name(family), weight, 0}, [&] { return lifted_basis(family, weight); },
      [](const LiftedBasis& b) { return lifted_basis_to_json(b, -1); },
      [](const std::string& s) { return lifted_basis_from_json(s); });
}

}  // namespace mzvlab
