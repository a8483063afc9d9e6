#include "mzvlab/matrices.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "mzvlab/error.hpp"
#include "mzvlab/kernels.hpp"

namespace mzvlab {
namespace {

struct FamilyName {
  Family family;
  const char* name;
};

constexpr FamilyName kFamilyNames[] = {
    {Family::kC3, "C3"},         {Family::kB3, "B3"},     {Family::kE3, "E3"},
    {Family::kB3hat, "B3hat"},   {Family::kE3hat, "E3hat"}, {Family::kL, "L"},
    {Family::kC2depth2, "C2depth2"}, {Family::kB2, "B2"}, {Family::kB2hat, "B2hat"},
    {Family::kCeee, "Ceee"},     {Family::kH3, "H3"},     {Family::kC2diag, "C2diag"},
};

void require_even(int weight, Family f) {
  require(weight % 2 == 0, family_name(f) + " requires an even weight, got " + std::to_string(weight));
}

void require_odd(int weight, Family f) {
  require(weight % 2 != 0, family_name(f) + " requires an odd weight, got " + std::to_string(weight));
}

template <typename Entry>
QMatrix fill(IndexSet rows, IndexSet cols, Entry entry) {
  QMatrix m(std::move(rows), std::move(cols));
  for (std::size_t r = 0; r < m.nrows(); ++r) {
    for (std::size_t c = 0; c < m.ncols(); ++c) m(r, c) = entry(m.rows()[r], m.cols()[c]);
  }
  return m;
}

Rational b3_entry(const Index& m, const Index& n) {
  if (m[0] != n[0]) return Rational(0);
  return Rational(e_coeff(Index{m[1], m[2]}, Index{n[1], n[2]}));
}

Rational e_entry(const Index& m, const Index& n) { return Rational(e_coeff(m, n)); }

}  // namespace

std::string family_name(Family f) {
  for (const auto& fn : kFamilyNames) {
    if (fn.family == f) return fn.name;
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (const auto& fn : kFamilyNames) {
    if (name == fn.name) return fn.family;
  }
  throw ContractViolation("unknown matrix family '" + std::string(name) + "'");
}

bool family_uses_j(Family f) { return f == Family::kC3 || f == Family::kE3 || f == Family::kH3; }

QMatrix build_matrix(Family f, int weight, int j) {
  require(weight >= 1, "build_matrix: weight must be positive");
  if (family_uses_j(f)) require(j >= 1 && j <= 3, "build_matrix: j must be 1, 2 or 3");
  switch (f) {
    case Family::kC3:
      require_even(weight, f);
      return fill(almost_totally_odd(weight, 3), almost_totally_odd(weight, j),
                  [](const Index& m, const Index& n) { return Rational(c_coeff_fast(m, n)); });
    case Family::kB3:
      require_even(weight, f);
      return fill(almost_totally_odd(weight, 3), almost_totally_odd(weight, 3), b3_entry);
    case Family::kE3:
      require_even(weight, f);
      return fill(almost_totally_odd(weight, 3), almost_totally_odd(weight, j), e_entry);
    case Family::kB3hat:
      require_even(weight, f);
      return fill(extended_ooe(weight), extended_ooe(weight), b3_entry);
    case Family::kE3hat:
      require_even(weight, f);
      return fill(extended_ooe(weight), extended_ooe(weight), e_entry);
    case Family::kL:
      require_even(weight, f);
      return fill(extended_ooe(weight), extended_ooe(weight), [](const Index& m, const Index& n) {
        return Rational(e_coeff(m, n) - (m == n ? 1 : 0));
      });
    case Family::kC2depth2:
      require_even(weight, f);
      return fill(index_set(weight, "oo"), index_set(weight, "aa"), e_entry);
    case Family::kB2:
      require_odd(weight, f);
      return fill(index_set(weight, "oe"), index_set(weight, "oe"), e_entry);
    case Family::kB2hat:
      require_odd(weight, f);
      return fill(index_set(weight, "oe0"), index_set(weight, "oe0"), e_entry);
    case Family::kCeee:
      require_even(weight, f);
      return fill(almost_totally_odd(weight, 3), index_set(weight, "eee"),
                  [](const Index& m, const Index& n) { return Rational(c_coeff_fast(m, n)); });
    case Family::kH3:
      require_even(weight, f);
      return fill(index_set(weight, "aae"), almost_totally_odd(weight, j),
                  [](const Index& m, const Index& n) { return Rational(h_coeff(m, n)); });
    case Family::kC2diag:
      require_even(weight, f);
      return fill(almost_totally_odd(weight, 3), index_set(weight, "aae"),
                  [](const Index& m, const Index& k) {
                    if (m[2] != k[2]) return Rational(0);
                    return Rational(e_coeff(Index{m[0], m[1]}, Index{k[0], k[1]}));
                  });
  }
  throw ContractViolation("build_matrix: unhandled family");
}

namespace {

struct MatrixCache {
  std::shared_mutex mutex;
  std::map<std::tuple<int, int, int>, std::shared_ptr<const QMatrix>> entries;
};

MatrixCache& matrix_cache() {
  static MatrixCache cache;
  return cache;
}

}  // namespace

std::shared_ptr<const QMatrix> cached_matrix(Family f, int weight, int j) {
  const auto key = std::make_tuple(static_cast<int>(f), weight, family_uses_j(f) ? j : 0);
  MatrixCache& cache = matrix_cache();
  {
    std::shared_lock lock(cache.mutex);
    const auto it = cache.entries.find(key);
    if (it != cache.entries.end()) return it->second;
  }
  auto built = std::make_shared<const QMatrix>(build_matrix(f, weight, j));
  std::unique_lock lock(cache.mutex);
  const auto [it, inserted] = cache.entries.emplace(key, std::move(built));
  return it->second;
}

void clear_matrix_cache() {
  MatrixCache& cache = matrix_cache();
  std::unique_lock lock(cache.mutex);
  cache.entries.clear();
}

QMatrix assemble_b3_blocks(int weight, bool hat) {
  require(weight % 2 == 0, "assemble_b3_blocks: weight must be even");
  const IndexSet labels = hat ? extended_ooe(weight) : almost_totally_odd(weight, 3);
  QMatrix out(labels, labels);
  for (int first = 3; weight - first >= (hat ? 3 : 5); first += 2) {
    const QMatrix block = build_matrix(hat ? Family::kB2hat : Family::kB2, weight - first);
    const auto prepend = [first](const Index& i) { return Index{first, i[0], i[1]}; };
    embed_block(out, block, prepend, prepend);
  }
  return out;
}

QMatrix assemble_c2_blocks(int weight) {
  require(weight % 2 == 0, "assemble_c2_blocks: weight must be even");
  QMatrix out(almost_totally_odd(weight, 3), index_set(weight, "aae"));
  for (int last = 2; weight - last >= 6; last += 2) {
    const QMatrix block = build_matrix(Family::kC2depth2, weight - last);
    const auto append = [last](const Index& i) { return Index{i[0], i[1], last}; };
    embed_block(out, block, append, append);
  }
  return out;
}

}  // namespace mzvlab
