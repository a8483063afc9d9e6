#include "mzvlab/serialize.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "mzvlab/error.hpp"
#include "mzvlab/version.hpp"

namespace mzvlab {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

Rational parse_rational(const std::string& s) {
  try {
    return Rational::parse(s);
  } catch (const std::exception& e) {
    throw FormatError("bad rational '" + s + "': " + e.what());
  }
}

Index parse_index(const std::string& s) {
  try {
    return Index::parse(s);
  } catch (const std::exception& e) {
    throw FormatError("bad index '" + s + "': " + e.what());
  }
}

Pattern parse_pattern_or_empty(const std::string& s) {
  if (s.empty()) return {};
  try {
    return parse_pattern(s);
  } catch (const std::exception& e) {
    throw FormatError("bad pattern '" + s + "': " + e.what());
  }
}

IndexSet make_set(int weight, Pattern pattern, std::vector<Index> members) {
  if (!std::is_sorted(members.begin(), members.end()) ||
      std::adjacent_find(members.begin(), members.end()) != members.end()) {
    throw FormatError("labels must be strictly ascending");
  }
  return IndexSet(weight, std::move(pattern), std::move(members));
}

int weight_of(const std::vector<Index>& members) { return members.empty() ? 0 : members.front().weight(); }

ordered_json set_json(const IndexSet& s) {
  ordered_json labels = ordered_json::array();
  for (const auto& i : s) labels.push_back(i.str());
  return {{"pattern", pattern_string(s.pattern())}, {"labels", labels}};
}

IndexSet set_from_json(const json& j, int weight) {
  std::vector<Index> members;
  for (const auto& l : j.at("labels")) members.push_back(parse_index(l.get<std::string>()));
  return make_set(weight, parse_pattern_or_empty(j.value("pattern", std::string())), std::move(members));
}

template <std::size_t N>
ordered_json poly_json(const LaurentPoly<N, Rational>& p) {
  ordered_json out = ordered_json::array();
  for (const auto& [ex, c] : p.terms()) {
    out.push_back({{"exp", std::vector<int>(ex.begin(), ex.end())}, {"coef", c.str()}});
  }
  return out;
}

template <std::size_t N>
LaurentPoly<N, Rational> poly_from_json(const json& j) {
  LaurentPoly<N, Rational> p;
  for (const auto& t : j) {
    const auto ex = t.at("exp").get<std::vector<int>>();
    if (ex.size() != N) throw FormatError("polynomial exponent has the wrong arity");
    typename LaurentPoly<N, Rational>::Exponent e{};
    std::copy(ex.begin(), ex.end(), e.begin());
    p.add_term(e, parse_rational(t.at("coef").get<std::string>()));
  }
  return p;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

// Wraps nlohmann's lookup errors so callers see a single exception type.
template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw FormatError(std::string("unexpected JSON layout: ") + e.what());
  }
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> csv_fields(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  if (quoted) throw FormatError("unterminated quote in CSV line");
  out.push_back(std::move(cur));
  return out;
}

std::string dump(const ordered_json& j, int indent) { return j.dump(indent) + "\n"; }

}  // namespace

std::string matrix_to_csv(const QMatrix& m) {
  std::ostringstream os;
  os << "\"\"";
  for (const auto& c : m.cols()) os << ',' << csv_quote(c.str());
  os << '\n';
  for (std::size_t r = 0; r < m.nrows(); ++r) {
    os << csv_quote(m.rows()[r].str());
    for (std::size_t c = 0; c < m.ncols(); ++c) os << ',' << m(r, c).str();
    os << '\n';
  }
  return os.str();
}

QMatrix matrix_from_csv(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line != "\r") lines.push_back(csv_fields(line));
    pos = end + 1;
  }
  if (lines.empty()) throw FormatError("empty CSV");
  std::vector<Index> cols;
  for (std::size_t i = 1; i < lines[0].size(); ++i) cols.push_back(parse_index(lines[0][i]));
  std::vector<Index> rows;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    if (lines[r].size() != cols.size() + 1) throw FormatError("CSV row " + std::to_string(r) + " has the wrong width");
    rows.push_back(parse_index(lines[r][0]));
  }
  const int w = weight_of(rows.empty() ? cols : rows);
  QMatrix m(make_set(w, {}, rows), make_set(weight_of(cols), {}, cols));
  for (std::size_t r = 1; r < lines.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) m(r - 1, c) = parse_rational(lines[r][c + 1]);
  }
  return m;
}

std::string matrix_to_json(const QMatrix& m, std::string_view id, int indent) {
  ordered_json entries = ordered_json::array();
  for (std::size_t r = 0; r < m.nrows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.ncols(); ++c) row.push_back(m(r, c).str());
    entries.push_back(std::move(row));
  }
  ordered_json j;
  if (!id.empty()) j["id"] = std::string(id);
  j["weight"] = m.rows().weight();
  j["rows"] = set_json(m.rows());
  j["cols"] = set_json(m.cols());
  j["entries"] = std::move(entries);
  return dump(j, indent);
}

QMatrix matrix_from_json(std::string_view text) {
  const json j = parse_json(text);
  return guarded([&] {
    const int w = j.at("weight").get<int>();
    IndexSet rows = set_from_json(j.at("rows"), w);
    IndexSet cols = set_from_json(j.at("cols"), w);
    QMatrix m(rows, cols);
    const auto& entries = j.at("entries");
    if (entries.size() != m.nrows()) throw FormatError("matrix JSON has the wrong number of rows");
    for (std::size_t r = 0; r < m.nrows(); ++r) {
      if (entries[r].size() != m.ncols()) throw FormatError("matrix JSON row has the wrong width");
      for (std::size_t c = 0; c < m.ncols(); ++c) m(r, c) = parse_rational(entries[r][c].get<std::string>());
    }
    return m;
  });
}

std::string kernel_to_json(const KernelBasis& k, int indent) {
  ordered_json vectors = ordered_json::array();
  for (const auto& v : k.vectors) {
    ordered_json vals = ordered_json::array();
    for (const auto& x : v.values) vals.push_back(x.str());
    vectors.push_back(std::move(vals));
  }
  ordered_json j;
  j["matrix"] = k.matrix_id;
  j["side"] = k.side == Side::kLeft ? "left" : "right";
  j["dim"] = k.dim();
  j["labels"] = k.vectors.empty() ? ordered_json::array() : set_json(k.vectors.front().labels)["labels"];
  j["vectors"] = std::move(vectors);
  return dump(j, indent);
}

std::string period_basis_to_json(const PeriodBasis& b, int indent) {
  ordered_json basis = ordered_json::array();
  for (const auto& p : b.basis) basis.push_back(poly_json(p));
  ordered_json j;
  j["kind"] = period_kind_name(b.kind);
  j["weight"] = b.weight;
  j["dim"] = b.dim();
  j["basis"] = std::move(basis);
  return dump(j, indent);
}

PeriodBasis period_basis_from_json(std::string_view text) {
  const json j = parse_json(text);
  return guarded([&] {
    PeriodBasis b{parse_period_kind(j.at("kind").get<std::string>()), j.at("weight").get<int>(), {}};
    for (const auto& p : j.at("basis")) b.basis.push_back(poly_from_json<2>(p));
    if (b.basis.size() != j.at("dim").get<std::size_t>()) throw FormatError("basis size disagrees with dim");
    return b;
  });
}

std::string lifted_basis_to_json(const LiftedBasis& b, int indent) {
  ordered_json basis = ordered_json::array();
  for (const auto& p : b.basis) basis.push_back(poly_json(p));
  ordered_json j;
  j["kind"] = lifted_family_name(b.family);
  j["weight"] = b.weight;
  j["dim"] = b.dim();
  j["basis"] = std::move(basis);
  return dump(j, indent);
}

LiftedBasis lifted_basis_from_json(std::string_view text) {
  const json j = parse_json(text);
  return guarded([&] {
    LiftedBasis b{parse_lifted_family(j.at("kind").get<std::string>()), j.at("weight").get<int>(), {}};
    for (const auto& p : j.at("basis")) b.basis.push_back(poly_from_json<3>(p));
    if (b.basis.size() != j.at("dim").get<std::size_t>()) throw FormatError("basis size disagrees with dim");
    return b;
  });
}

namespace {

ordered_json approx_json(const Approx& a) {
  return {{"value", a.value_str()}, {"bound", a.bound_str()}, {"digits", a.digits}};
}

}  // namespace

std::string relation_report_to_json(const RelationReport& r, int indent) {
  ordered_json rels = ordered_json::array();
  for (const auto& rel : r.relations) {
    ordered_json terms = ordered_json::array();
    for (const auto& t : rel.terms) terms.push_back({{"term", t.str()}, {"index", t.args.str()}, {"coef", t.coef.str()}});
    ordered_json one;
    one["origin"] = rel.origin;
    one["terms"] = std::move(terms);
    if (rel.residual) {
      one["residual"] = approx_json(*rel.residual);
      one["holds"] = relation_holds(*rel.residual, r.threshold);
    }
    rels.push_back(std::move(one));
  }
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["version"] = kVersion;
  j["kind"] = r.kind;
  j["weight"] = r.weight;
  j["numeric"] = r.numeric;
  if (r.numeric) j["threshold"] = r.threshold;
  j["relations"] = std::move(rels);
  return dump(j, indent);
}

std::string suite_report_to_json(const SuiteReport& r, int indent) {
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
  }
  ordered_json tables = ordered_json::array();
  for (const auto& t : r.tables) tables.push_back({{"name", t.name}, {"header", t.header}, {"rows", t.rows}});
  ordered_json residuals = ordered_json::array();
  for (const auto& x : r.residuals) {
    residuals.push_back({{"label", x.label}, {"value", x.value}, {"bound", x.bound}, {"holds", x.holds}});
  }
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["version"] = kVersion;
  j["suite"] = r.suite;
  j["params"] = std::move(params);
  j["status"] = status_name(r.status);
  j["checks"] = std::move(checks);
  j["tables"] = std::move(tables);
  j["residuals"] = std::move(residuals);
  j["notes"] = r.notes;
  return dump(j, indent);
}

std::string suite_report_to_text(const SuiteReport& r) {
  std::ostringstream os;
  os << "suite " << r.suite << ": " << status_name(r.status) << '\n';
  for (const auto& [k, v] : r.params) os << "  " << k << " = " << v << '\n';
  for (const auto& c : r.checks) {
    os << "  [" << status_name(c.status) << "] " << c.name;
    if (!c.detail.empty() && c.status != Status::kPass) os << "  (" << c.detail << ')';
    os << '\n';
  }
  for (const auto& t : r.tables) {
    std::vector<std::size_t> width(t.header.size(), 0);
    for (std::size_t i = 0; i < t.header.size(); ++i) width[i] = t.header[i].size();
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    os << "  table " << t.name << '\n';
    const auto print_row = [&](const std::vector<std::string>& row) {
      os << "   ";
      for (std::size_t i = 0; i < row.size(); ++i) {
        const std::size_t w = i < width.size() ? width[i] : 0;
        os << ' ' << std::string(w > row[i].size() ? w - row[i].size() : 0, ' ') << row[i];
      }
      os << '\n';
    };
    print_row(t.header);
    for (const auto& row : t.rows) print_row(row);
  }
  for (const auto& x : r.residuals) {
    os << "  residual " << x.label << ": " << x.value << " (bound " << x.bound << ")" << (x.holds ? "" : " FAILS") << '\n';
  }
  for (const auto& n : r.notes) os << "  note: " << n << '\n';
  return os.str();
}

}  // namespace mzvlab
