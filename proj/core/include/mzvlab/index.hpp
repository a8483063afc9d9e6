#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace mzvlab {

/// A tuple (n_1, ..., n_r) of integers, 1 <= r <= 3.
class Index {
 public:
  static constexpr std::size_t kMaxDepth = 3;

  Index() = default;
  Index(std::initializer_list<int> parts);
  explicit Index(const std::vector<int>& parts);

  /// Parses "(n1,n2,n3)" (whitespace tolerated).
  static Index parse(std::string_view text);

  [[nodiscard]] std::size_t depth() const { return depth_; }
  [[nodiscard]] int operator[](std::size_t i) const { return parts_[i]; }
  [[nodiscard]] int weight() const;
  [[nodiscard]] std::string str() const;

  friend bool operator==(const Index&, const Index&) = default;
  /// Lexicographic; shorter tuples first when one is a prefix of the other.
  friend std::strong_ordering operator<=>(const Index& a, const Index& b);

 private:
  std::array<int, kMaxDepth> parts_{};
  std::uint8_t depth_ = 0;
};

/// Per-slot constraint of an index pattern.
enum class Slot : std::uint8_t {
  kOdd,          ///< odd, > 1
  kEven,         ///< even, >= 2
  kAny,          ///< any integer >= 2
  kEvenOrZero,   ///< even, >= 0
};

using Pattern = std::vector<Slot>;

/// Parses patterns such as "ooe", "aae", "oe0" ("e0" is the even-or-zero slot).
Pattern parse_pattern(std::string_view text);
std::string pattern_string(const Pattern& p);
bool slot_accepts(Slot s, int value);

/// All tuples of a given weight matching a pattern, in ascending
/// lexicographic order.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(int weight, Pattern pattern, std::vector<Index> members);

  [[nodiscard]] int weight() const { return weight_; }
  [[nodiscard]] const Pattern& pattern() const { return pattern_; }
  [[nodiscard]] const std::vector<Index>& members() const { return members_; }
  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] bool empty() const { return members_.empty(); }
  [[nodiscard]] const Index& operator[](std::size_t i) const { return members_[i]; }
  /// Position of `idx`, or -1.
  [[nodiscard]] long find(const Index& idx) const;

  [[nodiscard]] auto begin() const { return members_.begin(); }
  [[nodiscard]] auto end() const { return members_.end(); }

 private:
  int weight_ = 0;
  Pattern pattern_;
  std::vector<Index> members_;
};

IndexSet index_set(int weight, const Pattern& pattern);
IndexSet index_set(int weight, std::string_view pattern);

/// The j-th almost totally odd depth-3 indices (even entry in slot j).
IndexSet almost_totally_odd(int weight, int j);
/// I_k(o o e0): the depth-3 set extended by (n1, n2, 0).
IndexSet extended_ooe(int weight);

}  // namespace mzvlab
