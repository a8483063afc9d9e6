#include "mzvlab_cli/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "mzvlab/cache.hpp"
#include "mzvlab/error.hpp"
#include "mzvlab/linalg.hpp"
#include "mzvlab/matrices.hpp"
#include "mzvlab/period.hpp"
#include "mzvlab/serialize.hpp"
#include "mzvlab/suites.hpp"
#include "mzvlab/version.hpp"

namespace mzvlab::cli {

namespace {

struct Options {
  std::string cache_dir;
  bool no_cache = false;

  std::string family;
  int weight = 0;
  int max_weight = 0;
  int j = 3;
  bool j_given = false;
  std::string format;
  std::string output;
  std::string side = "left";
  std::string kind;
  std::string suite;
  int digits = 30;
  bool numeric = true;
  bool strict = false;
  long plain = 0;
  int n1 = 0;
  int n2 = 0;
  std::string cache_action;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  int matrix() {
    const Family f = parse_family(o_.family);
    const QMatrix m = matrix_through_cache(cache(), f, o_.weight, o_.j);
    const std::string fmt = o_.format.empty() ? "csv" : o_.format;
    emit(fmt == "json" ? matrix_to_json(m, matrix_id(f)) : matrix_to_csv(m));
    return kExitPass;
  }

  int kernel() {
    const Family f = parse_family(o_.family);
    const QMatrix m = matrix_through_cache(cache(), f, o_.weight, o_.j);
    const KernelBasis k = o_.side == "left" ? left_kernel(m, matrix_id(f)) : right_kernel(m, matrix_id(f));
    if (o_.format == "json") {
      emit(kernel_to_json(k));
      return kExitPass;
    }
    std::ostringstream os;
    os << o_.side << " kernel of " << k.matrix_id << ": dim " << k.dim() << '\n';
    if (!k.vectors.empty()) {
      os << "labels:";
      for (const auto& l : k.vectors.front().labels) os << ' ' << l.str();
      os << '\n';
    }
    for (const auto& v : k.vectors) {
      os << '(';
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v.values[i].str();
      os << ")\n";
    }
    emit(os.str());
    return kExitPass;
  }

  int basis() {
    std::optional<PeriodKind> period;
    std::optional<LiftedFamily> lifted;
    try {
      period = parse_period_kind(o_.kind);
    } catch (const ContractViolation&) {
      lifted = parse_lifted_family(o_.kind);
    }
    std::ostringstream os;
    if (period) {
      const PeriodBasis b = period_basis_through_cache(cache(), *period, o_.weight);
      if (o_.format == "json") {
        emit(period_basis_to_json(b));
        return kExitPass;
      }
      os << period_kind_name(b.kind) << " weight " << b.weight << ": dim " << b.dim() << '\n';
      for (const auto& p : b.basis) os << p.str() << '\n';
    } else {
      const LiftedBasis b = lifted_basis_through_cache(cache(), *lifted, o_.weight);
      if (o_.format == "json") {
        emit(lifted_basis_to_json(b));
        return kExitPass;
      }
      os << lifted_family_name(b.family) << " weight " << b.weight << ": dim " << b.dim() << '\n';
      for (const auto& p : b.basis) os << p.str() << '\n';
    }
    emit(os.str());
    return kExitPass;
  }

  int relations() {
    const PrecisionBudget budget =
        o_.plain > 0 ? PrecisionBudget::plain(o_.plain, 1e-9) : PrecisionBudget::with_digits(o_.digits);
    std::vector<RelationReport> reports;
    if (o_.kind == "even") {
      reports.push_back(relation_even_weight(o_.weight, o_.numeric, budget));
    } else if (o_.kind == "odd-i" || o_.kind == "odd-ii") {
      reports.push_back(
          relation_odd_weight(o_.weight, o_.kind == "odd-i" ? OddPart::kI : OddPart::kII, o_.numeric, budget));
    } else if (o_.n1 > 0 || o_.n2 > 0) {
      reports.push_back(parity_depth2(o_.n1, o_.n2, o_.numeric, budget));
    } else {
      require(o_.weight % 2 != 0, "parity2 needs an odd --weight or --n1/--n2");
      for (int a = 1; o_.weight - a >= 2; ++a) reports.push_back(parity_depth2(a, o_.weight - a, o_.numeric, budget));
    }
    bool ok = true;
    std::ostringstream os;
    for (const auto& r : reports) {
      ok = ok && r.all_hold();
      if (o_.format == "json") {
        os << relation_report_to_json(r);
        continue;
      }
      if (r.relations.empty()) os << r.kind << " weight " << r.weight << ": no relations\n";
      for (const auto& rel : r.relations) {
        os << rel.str() << '\n';
        if (rel.residual) {
          os << "  residual " << rel.residual->value_str() << "  bound " << rel.residual->bound_str()
             << (relation_holds(*rel.residual, r.threshold) ? "" : "  (exceeds threshold)") << '\n';
        }
      }
    }
    emit(os.str());
    return ok ? kExitPass : kExitFail;
  }

  int verify(const std::string& suite) {
    SuiteParams p;
    p.weight = o_.weight;
    p.max_weight = o_.max_weight;
    p.j = o_.j_given ? o_.j : 0;
    p.digits = o_.digits;
    p.numeric = o_.numeric;
    const SuiteReport r = run_suite(suite, p);
    emit(o_.format == "json" ? suite_report_to_json(r) : suite_report_to_text(r));
    switch (r.status) {
      case Status::kPass: return kExitPass;
      case Status::kFail: return kExitFail;
      case Status::kMismatch:
        if (o_.strict) return kExitMismatchStrict;
        err_ << "warning: conjectural checks mismatched in suite " << suite << '\n';
        return kExitPass;
    }
    return kExitFail;
  }

  int cache_cmd() {
    const Cache c(cache_path());
    if (o_.cache_action == "dir") {
      out_ << c.dir().string() << '\n';
      return kExitPass;
    }
    if (o_.cache_action == "clear") {
      const std::size_t n = c.clear();
      // a probe write proves the directory is usable
      std::error_code ec;
      std::filesystem::create_directories(c.dir(), ec);
      if (ec || !is_writable(c.dir())) {
        err_ << "error: cache directory " << c.dir().string() << " is not writable\n";
        return kExitFail;
      }
      out_ << "removed " << n << " entries from " << c.dir().string() << '\n';
      return kExitPass;
    }
    const auto entries = c.entries();
    out_ << "cache " << c.dir().string() << ": " << entries.size() << " entries\n";
    for (const auto& e : entries) out_ << "  " << e.file << "  " << e.bytes << " bytes" << (e.valid ? "" : "  (corrupt)") << '\n';
    return kExitPass;
  }

 private:
  const Cache* cache() {
    if (o_.no_cache) return nullptr;
    if (!cache_) cache_ = std::make_unique<Cache>(cache_path());
    return cache_.get();
  }

  std::filesystem::path cache_path() const {
    return o_.cache_dir.empty() ? Cache::default_dir() : std::filesystem::path(o_.cache_dir);
  }

  static bool is_writable(const std::filesystem::path& dir) {
    const auto probe = dir / ".mzvlab-probe";
    {
      std::ofstream f(probe);
      if (!f) return false;
    }
    std::error_code ec;
    std::filesystem::remove(probe, ec);
    return true;
  }

  std::string matrix_id(Family f) const {
    std::string id = family_name(f) + "_" + std::to_string(o_.weight);
    if (family_uses_j(f)) id += "^(" + std::to_string(o_.j) + ")";
    return id;
  }

  void emit(const std::string& text) {
    if (o_.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(o_.output, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + o_.output);
    f << text;
  }

  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
  std::unique_ptr<Cache> cache_;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact depth-2/depth-3 multiple zeta value and period polynomial laboratory", "mzvlab"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--cache-dir", o.cache_dir, "Cache directory (default: $MZVLAB_CACHE or the user cache dir)");
  app.add_flag("--no-cache", o.no_cache, "Compute everything without touching the cache");

  const auto family_names = std::vector<std::string>{"C3", "B3", "E3", "B3hat", "E3hat", "L",
                                                     "C2depth2", "B2", "B2hat", "Ceee", "H3", "C2diag"};
  const auto add_matrix_opts = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "Matrix family")->required()->check(CLI::IsMember(family_names));
    sub->add_option("--weight", o.weight, "Weight")->required()->check(CLI::PositiveNumber);
    sub->add_option("--j", o.j, "Slot of the even entry for C3/E3/H3")->check(CLI::Range(1, 3));
    sub->add_option("--output", o.output, "Write to a file instead of stdout");
  };

  auto* matrix = app.add_subcommand("matrix", "Print an exact labelled matrix");
  add_matrix_opts(matrix);
  matrix->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* kernel = app.add_subcommand("kernel", "Canonical kernel basis of a matrix");
  add_matrix_opts(kernel);
  kernel->add_option("--side", o.side, "left or right")->check(CLI::IsMember({"left", "right"}));
  kernel->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* basis = app.add_subcommand("basis", "Period polynomial or lifted family basis");
  basis->add_option("--kind", o.kind, "W+0, W-, W+full, cusp-even, P+, Q+, Q-, Phat+")
      ->required()
      ->check(CLI::IsMember({"W+0", "W-", "W+full", "cusp-even", "P+", "Q+", "Q-", "Phat+"}));
  basis->add_option("--weight", o.weight, "Even weight")->required();
  basis->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  basis->add_option("--output", o.output, "Write to a file instead of stdout");

  auto* relations = app.add_subcommand("relations", "Emit relations among double zeta values");
  relations->add_option("--kind", o.kind, "even, odd-i, odd-ii or parity2")
      ->required()
      ->check(CLI::IsMember({"even", "odd-i", "odd-ii", "parity2"}));
  relations->add_option("--weight", o.weight, "Weight");
  relations->add_option("--n1", o.n1, "First argument (parity2)");
  relations->add_option("--n2", o.n2, "Second argument (parity2)");
  relations->add_option("--digits", o.digits, "Working digits")->check(CLI::Range(10, 2000));
  relations->add_flag("--numeric,!--exact", o.numeric, "Attach numeric residuals (default) or skip them");
  relations->add_option("--plain", o.plain, "Use plain summation to N terms with a 1e-9 target");
  relations->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  relations->add_option("--output", o.output, "Write to a file instead of stdout");

  std::string suite_names_help;
  for (const auto& s : suite_names()) suite_names_help += (suite_names_help.empty() ? "" : ", ") + s;
  const auto add_verify_opts = [&](CLI::App* sub) {
    sub->add_option("--weight", o.weight, "Single weight (suites that sweep weights)");
    sub->add_option("--max-weight", o.max_weight, "Upper bound of the sweep");
    sub->add_option("--j", o.j, "Restrict to one slot j")->check(CLI::Range(1, 3));
    sub->add_option("--digits", o.digits, "Working digits for numeric checks")->check(CLI::Range(10, 2000));
    sub->add_flag("--numeric,!--exact", o.numeric, "Run numeric checks (default) or only exact ones");
    sub->add_flag("--strict", o.strict, "Exit 3 when a conjectural check mismatches");
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output", o.output, "Write to a file instead of stdout");
  };
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", o.suite, suite_names_help)->required()->check(CLI::IsMember(suite_names()));
  add_verify_opts(verify);

  auto* conjectures = app.add_subcommand("conjectures", "Dimension conjecture sweep (the conjectures suite)");
  add_verify_opts(conjectures);

  auto* cache = app.add_subcommand("cache", "Inspect or clear the on-disk cache");
  cache->add_option("action", o.cache_action, "status, clear or dir")
      ->required()
      ->check(CLI::IsMember({"status", "clear", "dir"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  o.j_given = verify->count("--j") + conjectures->count("--j") > 0;
  Runner runner(o, out, err);
  try {
    if (*matrix) return runner.matrix();
    if (*kernel) return runner.kernel();
    if (*basis) return runner.basis();
    if (*relations) return runner.relations();
    if (*verify) return runner.verify(o.suite);
    if (*conjectures) return runner.verify("conjectures");
    if (*cache) return runner.cache_cmd();
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace mzvlab::cli
