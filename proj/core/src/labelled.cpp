#include "mzvlab/labelled.hpp"

#include "mzvlab/error.hpp"

namespace mzvlab {

LabelledVector::LabelledVector(IndexSet l, std::vector<Rational> v)
    : labels(std::move(l)), values(std::move(v)) {
  require(labels.size() == values.size(), "LabelledVector: label/value size mismatch");
}

bool LabelledVector::is_zero() const {
  for (const auto& v : values) {
    if (!v.is_zero()) return false;
  }
  return true;
}

Rational LabelledVector::at(const Index& idx) const {
  const long pos = labels.find(idx);
  return pos < 0 ? Rational(0) : values[static_cast<std::size_t>(pos)];
}

void LabelledVector::set(const Index& idx, const Rational& v) {
  const long pos = labels.find(idx);
  require(pos >= 0, "LabelledVector::set: label " + idx.str() + " not present");
  values[static_cast<std::size_t>(pos)] = v;
}

LabelledVector LabelledVector::restricted_to(const IndexSet& target, bool allow_drop) const {
  LabelledVector out(target);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const long pos = target.find(labels[i]);
    if (pos < 0) {
      require(allow_drop || values[i].is_zero(),
              "restricted_to: nonzero entry at " + labels[i].str() + " outside target set");
      continue;
    }
    out.values[static_cast<std::size_t>(pos)] = values[i];
  }
  return out;
}

bool operator==(const LabelledVector& a, const LabelledVector& b) {
  return a.labels.members() == b.labels.members() && a.values == b.values;
}

std::vector<Rational> canonical_direction(std::vector<Rational> v) {
  scale_to_primitive(v);
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    if (x.sign() < 0) {
      for (auto& y : v) y = -y;
    }
    break;
  }
  return v;
}

bool proportional(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) return false;
  Rational ratio;
  bool have_ratio = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() != b[i].is_zero()) return false;
    if (a[i].is_zero()) continue;
    const Rational r = a[i] / b[i];
    if (!have_ratio) {
      ratio = r;
      have_ratio = true;
    } else if (r != ratio) {
      return false;
    }
  }
  return true;
}

}  // namespace mzvlab
