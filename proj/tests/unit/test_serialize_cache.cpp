#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "mzvlab/cache.hpp"
#include "mzvlab/error.hpp"
#include "mzvlab/linalg.hpp"
#include "mzvlab/matrices.hpp"
#include "mzvlab/period.hpp"
#include "mzvlab/serialize.hpp"
#include "mzvlab/suites.hpp"
#include "mzvlab/version.hpp"

namespace fs = std::filesystem;
using namespace mzvlab;

namespace {

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("mzvlab-test-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  [[nodiscard]] const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

QMatrix rational_sample() {
  QMatrix m = build_matrix(Family::kC3, 14, 2);
  m(0, 0) = Rational(-691, 2730);
  m(1, 2) = Rational(BigInt("123456789012345678901234567890"), BigInt(7));
  return m;
}

}  // namespace

TEST(Csv, BitExactRoundTrip) {
  for (const QMatrix& m : {build_matrix(Family::kB2, 11), build_matrix(Family::kC3, 12, 3), rational_sample(),
                           build_matrix(Family::kH3, 16, 1)}) {
    const std::string text = matrix_to_csv(m);
    const QMatrix back = matrix_from_csv(text);
    EXPECT_EQ(back, m);
    ASSERT_EQ(back.nrows(), m.nrows());
    for (std::size_t r = 0; r < m.nrows(); ++r) EXPECT_EQ(back.rows()[r], m.rows()[r]);
    EXPECT_EQ(matrix_to_csv(back), text);
  }
  const std::string b11 = matrix_to_csv(build_matrix(Family::kB2, 11));
  EXPECT_EQ(b11.substr(0, b11.find('\n')), R"x("","(3,8)","(5,6)","(7,4)","(9,2)")x");
  EXPECT_NE(b11.find(R"x("(3,8)",0,0,0,-2)x"), std::string::npos);
}

TEST(Csv, MalformedInputIsRejected) {
  EXPECT_THROW(matrix_from_csv(""), FormatError);
  EXPECT_THROW(matrix_from_csv("\"\",\"(1,2)\"\n\"(1,2)\",1/0\n"), FormatError);
  EXPECT_THROW(matrix_from_csv("\"\",\"(1,2)\"\n\"(1,2)\",abc\n"), FormatError);
  EXPECT_THROW(matrix_from_csv("\"\",\"(1,2)\",\"(2,1)\"\n\"(1,2)\",1\n"), FormatError);
  EXPECT_THROW(matrix_from_csv("\"\",\"(2,1)\",\"(1,2)\"\n\"(1,2)\",1,2\n"), FormatError);
}

TEST(Json, MatrixRoundTripAndShape) {
  for (const QMatrix& m : {build_matrix(Family::kC3, 12, 3), rational_sample(), build_matrix(Family::kB2hat, 9)}) {
    const std::string text = matrix_to_json(m, "sample");
    EXPECT_EQ(matrix_from_json(text), m);
    EXPECT_EQ(matrix_to_json(matrix_from_json(text), "sample"), text);
    const std::string compact = matrix_to_json(m, {}, -1);
    EXPECT_EQ(compact.find('\n'), compact.size() - 1);
    EXPECT_EQ(matrix_from_json(compact), m);
  }
  EXPECT_THROW(matrix_from_json("{"), FormatError);
  EXPECT_THROW(matrix_from_json(R"({"weight":12})"), FormatError);
}

TEST(Json, KernelAndBases) {
  const std::string k = kernel_to_json(left_kernel(build_matrix(Family::kC3, 12, 3), "C3/12/3"));
  EXPECT_NE(k.find("\"side\": \"left\""), std::string::npos);
  EXPECT_NE(k.find("\"20\""), std::string::npos);
  EXPECT_NE(k.find("\"-63\""), std::string::npos);

  for (PeriodKind kind : {PeriodKind::kEvenRestricted, PeriodKind::kOdd, PeriodKind::kCuspEven}) {
    const PeriodBasis b = period_basis(kind, 24);
    const PeriodBasis back = period_basis_from_json(period_basis_to_json(b));
    EXPECT_EQ(back.kind, b.kind);
    EXPECT_EQ(back.weight, b.weight);
    EXPECT_EQ(back.basis, b.basis);
  }
  for (LiftedFamily fam : {LiftedFamily::kPPlus, LiftedFamily::kQPlus, LiftedFamily::kQMinus, LiftedFamily::kPHatPlus}) {
    const LiftedBasis b = lifted_basis(fam, 22);
    const LiftedBasis back = lifted_basis_from_json(lifted_basis_to_json(b));
    EXPECT_EQ(back.family, b.family);
    EXPECT_EQ(back.basis, b.basis);
  }
  EXPECT_THROW(period_basis_from_json(R"({"kind":"W+0","weight":12,"dim":1,"basis":[[{"exp":[1],"coef":"1"}]]})"),
               FormatError);
}

TEST(Json, ReportsCarrySchemaAndVersion) {
  const RelationReport rel = relation_even_weight(12, true, PrecisionBudget{});
  const std::string rj = relation_report_to_json(rel);
  EXPECT_NE(rj.find("\"schema\": 1"), std::string::npos);
  EXPECT_NE(rj.find("\"version\": \"" + std::string(kVersion) + "\""), std::string::npos);
  EXPECT_NE(rj.find("\"digits\""), std::string::npos);
  const SuiteReport s = run_suite("factorization", SuiteParams{0, 12});
  const std::string sj = suite_report_to_json(s);
  EXPECT_NE(sj.find("\"suite\": \"factorization\""), std::string::npos);
  EXPECT_NE(sj.find("\"status\": \"pass\""), std::string::npos);
  EXPECT_NE(suite_report_to_text(s).find("factorization"), std::string::npos);
}

TEST(Cache, KeyEmbedsVersionAndSchema) {
  const CacheKey key{"matrix", "C3", 12, 3};
  const std::string name = key.file_name();
  EXPECT_EQ(name.rfind("matrix-C3-w12-j3-v", 0), 0U);
  EXPECT_NE(name.find("-s1"), std::string::npos);
  EXPECT_NE(CacheKey({"matrix", "C3", 12, 2}).file_name(), name);
}

TEST(Cache, StoreLoadEntriesAndClear) {
  TempDir dir;
  const Cache cache(dir.path() / "nested");
  const CacheKey key{"matrix", "B2", 11, 0};
  EXPECT_FALSE(cache.load(key).has_value());
  cache.store(key, "payload\nwith lines\n");
  EXPECT_EQ(cache.load(key), std::optional<std::string>("payload\nwith lines\n"));
  ASSERT_EQ(cache.entries().size(), 1U);
  EXPECT_TRUE(cache.entries()[0].valid);
  EXPECT_EQ(cache.clear(), 1U);
  EXPECT_TRUE(cache.entries().empty());
  EXPECT_FALSE(cache.load(key).has_value());
}

TEST(Cache, InterruptedWriteLeavesNoVisibleEntry) {
  TempDir dir;
  const Cache cache(dir.path());
  const CacheKey key{"matrix", "C3", 12, 3};
  Cache::set_fault_hook([](const fs::path&) { throw std::runtime_error("injected crash"); });
  EXPECT_THROW(cache.store(key, "first"), std::runtime_error);
  Cache::set_fault_hook(nullptr);
  EXPECT_FALSE(cache.load(key).has_value());
  EXPECT_TRUE(cache.entries().empty());

  cache.store(key, "old");
  Cache::set_fault_hook([](const fs::path&) { throw std::runtime_error("injected crash"); });
  EXPECT_THROW(cache.store(key, "new"), std::runtime_error);
  Cache::set_fault_hook(nullptr);
  EXPECT_EQ(cache.load(key), std::optional<std::string>("old"));
}

TEST(Cache, CorruptEntriesAreMissesAndGetRepaired) {
  TempDir dir;
  const Cache cache(dir.path());
  const QMatrix fresh = matrix_through_cache(&cache, Family::kC3, 12, 3);
  ASSERT_EQ(cache.entries().size(), 1U);
  const fs::path file = dir.path() / cache.entries()[0].file;
  std::string raw = slurp(file);
  const std::size_t pos = raw.find("\"42\"");
  ASSERT_NE(pos, std::string::npos);
  raw[pos + 1] = '7';
  std::ofstream(file, std::ios::binary | std::ios::trunc) << raw;
  EXPECT_FALSE(cache.entries()[0].valid);
  EXPECT_EQ(matrix_through_cache(&cache, Family::kC3, 12, 3), fresh);
  EXPECT_TRUE(cache.entries()[0].valid);

  std::ofstream(file, std::ios::binary | std::ios::trunc) << "mzvlab-cache 1 garbage";
  EXPECT_EQ(matrix_through_cache(&cache, Family::kC3, 12, 3), fresh);
}

TEST(Cache, TransparentForEveryArtifact) {
  TempDir dir;
  const Cache cache(dir.path());
  for (int pass = 0; pass < 2; ++pass) {
    EXPECT_EQ(matrix_through_cache(&cache, Family::kL, 16, 0), build_matrix(Family::kL, 16));
    EXPECT_EQ(matrix_through_cache(nullptr, Family::kL, 16, 0), build_matrix(Family::kL, 16));
    EXPECT_EQ(period_basis_through_cache(&cache, PeriodKind::kCuspEven, 26).basis,
              period_basis(PeriodKind::kCuspEven, 26).basis);
    EXPECT_EQ(lifted_basis_through_cache(&cache, LiftedFamily::kQMinus, 24).basis,
              lifted_basis(LiftedFamily::kQMinus, 24).basis);
  }
  EXPECT_EQ(cache.entries().size(), 3U);
}

TEST(Cache, UnwritableDirectoryThrows) {
  const Cache cache("/proc/mzvlab-cannot-exist");
  EXPECT_THROW(cache.store({"matrix", "B2", 11, 0}, "x"), std::runtime_error);
}

TEST(Cache, Crc32KnownValue) { EXPECT_EQ(crc32_of("123456789"), 0xCBF43926U); }
