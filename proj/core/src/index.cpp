#include "mzvlab/index.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "mzvlab/error.hpp"

namespace mzvlab {

Index::Index(std::initializer_list<int> parts) : Index(std::vector<int>(parts)) {}

Index::Index(const std::vector<int>& parts) {
  require(!parts.empty() && parts.size() <= kMaxDepth, "Index: depth must be 1..3");
  std::copy(parts.begin(), parts.end(), parts_.begin());
  depth_ = static_cast<std::uint8_t>(parts.size());
}

Index Index::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  require(i < text.size() && text[i] == '(', "Index::parse: expected '('");
  ++i;
  while (true) {
    skip_ws();
    int v = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    require(ec == std::errc(), "Index::parse: expected integer in '" + std::string(text) + "'");
    i = static_cast<std::size_t>(ptr - text.data());
    parts.push_back(v);
    skip_ws();
    require(i < text.size(), "Index::parse: unterminated tuple");
    if (text[i] == ')') break;
    require(text[i] == ',', "Index::parse: expected ','");
    ++i;
  }
  return Index(parts);
}

int Index::weight() const {
  int w = 0;
  for (std::size_t i = 0; i < depth_; ++i) w += parts_[i];
  return w;
}

std::string Index::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < depth_; ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::strong_ordering operator<=>(const Index& a, const Index& b) {
  const std::size_t n = std::min(a.depth_, b.depth_);
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.parts_[i] <=> b.parts_[i]; c != 0) return c;
  }
  return a.depth_ <=> b.depth_;
}

Pattern parse_pattern(std::string_view text) {
  Pattern p;
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'o': p.push_back(Slot::kOdd); break;
      case 'a': p.push_back(Slot::kAny); break;
      case 'e':
        if (i + 1 < text.size() && text[i + 1] == '0') {
          p.push_back(Slot::kEvenOrZero);
          ++i;
        } else {
          p.push_back(Slot::kEven);
        }
        break;
      default:
        throw ContractViolation("parse_pattern: unknown slot '" + std::string(1, text[i]) + "'");
    }
  }
  require(!p.empty() && p.size() <= Index::kMaxDepth, "parse_pattern: length must be 1..3");
  return p;
}

std::string pattern_string(const Pattern& p) {
  std::string s;
  for (Slot slot : p) {
    switch (slot) {
      case Slot::kOdd: s += 'o'; break;
      case Slot::kEven: s += 'e'; break;
      case Slot::kAny: s += 'a'; break;
      case Slot::kEvenOrZero: s += "e0"; break;
    }
  }
  return s;
}

bool slot_accepts(Slot s, int v) {
  switch (s) {
    case Slot::kOdd: return v > 1 && v % 2 == 1;
    case Slot::kEven: return v >= 2 && v % 2 == 0;
    case Slot::kAny: return v >= 2;
    case Slot::kEvenOrZero: return v >= 0 && v % 2 == 0;
  }
  return false;
}

IndexSet::IndexSet(int weight, Pattern pattern, std::vector<Index> members)
    : weight_(weight), pattern_(std::move(pattern)), members_(std::move(members)) {}

long IndexSet::find(const Index& idx) const {
  const auto it = std::lower_bound(members_.begin(), members_.end(), idx);
  if (it == members_.end() || !(*it == idx)) return -1;
  return static_cast<long>(it - members_.begin());
}

namespace {

void enumerate(const Pattern& p, std::size_t slot, int remaining, std::vector<int>& cur,
               std::vector<Index>& out) {
  if (slot + 1 == p.size()) {
    if (slot_accepts(p[slot], remaining)) {
      cur.push_back(remaining);
      out.emplace_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    if (!slot_accepts(p[slot], v)) continue;
    cur.push_back(v);
    enumerate(p, slot + 1, remaining - v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

IndexSet index_set(int weight, const Pattern& pattern) {
  require(weight >= 0, "index_set: weight must be non-negative");
  require(!pattern.empty() && pattern.size() <= Index::kMaxDepth,
          "index_set: pattern length must be 1..3");
  std::vector<Index> members;
  std::vector<int> cur;
  enumerate(pattern, 0, weight, cur, members);
  return IndexSet(weight, pattern, std::move(members));
}

IndexSet index_set(int weight, std::string_view pattern) {
  return index_set(weight, parse_pattern(pattern));
}

IndexSet almost_totally_odd(int weight, int j) {
  require(j >= 1 && j <= 3, "almost_totally_odd: j must be 1, 2 or 3");
  static constexpr std::string_view patterns[] = {"eoo", "oeo", "ooe"};
  return index_set(weight, patterns[j - 1]);
}

IndexSet extended_ooe(int weight) { return index_set(weight, "ooe0"); }

}  // namespace mzvlab
