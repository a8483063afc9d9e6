#pragma once

#include <string>
#include <vector>

#include "mzvlab/index.hpp"
#include "mzvlab/rational.hpp"

namespace mzvlab {

/// A vector of rationals whose coordinates are labelled by an IndexSet.
struct LabelledVector {
  IndexSet labels;
  std::vector<Rational> values;

  LabelledVector() = default;
  explicit LabelledVector(IndexSet l) : labels(std::move(l)), values(labels.size()) {}
  LabelledVector(IndexSet l, std::vector<Rational> v);

  [[nodiscard]] std::size_t size() const { return values.size(); }
  [[nodiscard]] bool is_zero() const;
  /// Entry at `idx`; zero when `idx` is not a label.
  [[nodiscard]] Rational at(const Index& idx) const;
  void set(const Index& idx, const Rational& v);

  /// Keeps only coordinates whose label is in `target` (others must be zero
  /// unless `allow_drop`); missing labels become zero.
  [[nodiscard]] LabelledVector restricted_to(const IndexSet& target, bool allow_drop = true) const;

  friend bool operator==(const LabelledVector& a, const LabelledVector& b);
};

/// Scales `v` to a primitive integer vector whose first nonzero entry is
/// positive.
std::vector<Rational> canonical_direction(std::vector<Rational> v);

/// True when a = c * b for some nonzero rational c (both nonzero), or both zero.
bool proportional(const std::vector<Rational>& a, const std::vector<Rational>& b);

}  // namespace mzvlab
