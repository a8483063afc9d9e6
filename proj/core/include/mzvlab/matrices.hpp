#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "mzvlab/error.hpp"
#include "mzvlab/linalg.hpp"

namespace mzvlab {

enum class Family {
  kC3,        ///< c(m; n), rows ooe, cols I^(j)
  kB3,        ///< delta(m1; n1) e(m2,m3; n2,n3) on ooe x ooe
  kE3,        ///< e(m; n), rows ooe, cols I^(j)
  kB3hat,     ///< B3 on the extended set ooe0
  kE3hat,     ///< E3 on the extended set ooe0
  kL,         ///< e - delta on ooe0
  kC2depth2,  ///< e(m1,m2; n1,n2), rows oo, cols aa (even weight)
  kB2,        ///< e on oe x oe (odd weight)
  kB2hat,     ///< e on oe0 x oe0 (odd weight)
  kCeee,      ///< c(m; n), rows ooe, cols eee
  kH3,        ///< h(m; n), rows aae, cols I^(j)
  kC2diag,    ///< e(m1,m2; k1,k2) delta(m3; k3), rows ooe, cols aae
};

std::string family_name(Family f);
Family parse_family(std::string_view name);
/// True for families whose columns depend on j.
bool family_uses_j(Family f);

/// Builds a matrix family at a weight. `j` defaults to 3 where it matters.
/// Throws ContractViolation on a weight of the wrong parity.
QMatrix build_matrix(Family f, int weight, int j = 3);

/// Same matrix, memoized per (family, weight, j). Safe for concurrent callers.
std::shared_ptr<const QMatrix> cached_matrix(Family f, int weight, int j = 3);
void clear_matrix_cache();

/// Copies `block` into `target` at the positions of its own labels, which
/// must all occur in `target`'s row and column sets (after `row_map` /
/// `col_map` relabelling).
template <typename RowMap, typename ColMap>
void embed_block(QMatrix& target, const QMatrix& block, RowMap row_map, ColMap col_map) {
  for (std::size_t r = 0; r < block.nrows(); ++r) {
    const long tr = target.rows().find(row_map(block.rows()[r]));
    require(tr >= 0, "embed_block: row label " + block.rows()[r].str() + " not in target");
    for (std::size_t c = 0; c < block.ncols(); ++c) {
      const long tc = target.cols().find(col_map(block.cols()[c]));
      require(tc >= 0, "embed_block: column label " + block.cols()[c].str() + " not in target");
      target(static_cast<std::size_t>(tr), static_cast<std::size_t>(tc)) = block(r, c);
    }
  }
}

/// diag(B_{k-3}, B_{k-5}, ..., B_5) laid out on ooe x ooe (hat = false), or
/// diag(B^_{k-3}, ..., B^_3) on ooe0 x ooe0 (hat = true).
QMatrix assemble_b3_blocks(int weight, bool hat);
/// diag(C_{k-2}, ..., C_6) laid out on ooe x aae, grouping by the last entry.
QMatrix assemble_c2_blocks(int weight);

}  // namespace mzvlab
