#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hyll/checkpoint.hpp"
#include "hyll/errors.hpp"
#include "hyll/output.hpp"
#include "hyll/sweep.hpp"

using namespace hyll;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir(const std::string& tag) {
    path = std::filesystem::temp_directory_path() / ("hyll_test_" + tag);
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string str() const { return path.string(); }
};

}  // namespace

TEST_CASE("checkpoint round trip is bit exact") {
  TempDir dir("roundtrip");
  const PrecisionContext ctx = make_context(42, Rational(2));
  const Pencil p = assemble(enumerate(2), ctx, AssemblyMode::exact);
  checkpoint_write(p, dir.str());

  const Pencil back = checkpoint_read(dir.str(), 2);
  CHECK(back.n == p.n);
  CHECK(back.meta.omega == p.meta.omega);
  CHECK(back.meta.k == p.meta.k);
  CHECK(back.meta.Z == p.meta.Z);
  CHECK(back.meta.digits == p.meta.digits);
  CHECK(back.meta.fingerprint == p.meta.fingerprint);
  CHECK(back.S.identical(p.S));
  CHECK(back.H.identical(p.H));
  CHECK(!back.has_exact());

  const auto header = checkpoint_peek(dir.str(), 2);
  REQUIRE(header.has_value());
  CHECK(header->n == p.n);
  CHECK(header->fingerprint == p.meta.fingerprint);
  CHECK(!checkpoint_peek(dir.str(), 7).has_value());
}

TEST_CASE("tampered fingerprint refuses to resume") {
  TempDir dir("tamper");
  const PrecisionContext ctx = make_context(40, Rational(2));
  const Pencil p = assemble(enumerate(1), ctx, AssemblyMode::exact);
  checkpoint_write(p, dir.str());

  // flip one fingerprint hex digit in the header
  const std::string path = checkpoint_path(dir.str(), 1);
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  in.close();
  std::string text = buffer.str();
  const std::size_t pos = text.find(p.meta.fingerprint);
  REQUIRE(pos != std::string::npos);
  text[pos] = text[pos] == '0' ? '1' : '0';
  std::ofstream out(path);
  out << text;
  out.close();

  RunConfig config;
  config.omega_max = 2;
  config.precision.fixed_digits = 40;
  config.checkpoint_dir = dir.str();
  config.resume = true;
  CHECK_THROWS_AS(sweep(config), CheckpointError);  // fingerprint mismatch surfaces
}

TEST_CASE("resumed sweep equals a clean sweep") {
  TempDir clean_dir("clean");
  TempDir resume_dir("resume");

  RunConfig clean;
  clean.omega_max = 4;
  clean.precision.fixed_digits = 40;
  clean.threads = 2;
  clean.checkpoint_dir = clean_dir.str();
  const StudyReport clean_report = sweep(clean);

  RunConfig partial = clean;
  partial.omega_max = 2;
  partial.checkpoint_dir = resume_dir.str();
  sweep(partial);

  RunConfig resumed = clean;
  resumed.checkpoint_dir = resume_dir.str();
  resumed.resume = true;
  const StudyReport resumed_report = sweep(resumed);

  CHECK(report_to_json(clean_report) == report_to_json(resumed_report));
  CHECK(report_to_csv(clean_report) == report_to_csv(resumed_report));
  REQUIRE(clean_report.records.size() == resumed_report.records.size());
  for (std::size_t i = 0; i < clean_report.records.size(); ++i)
    CHECK(clean_report.records[i].energy.identical(resumed_report.records[i].energy));

  // and the checkpoints written along the way are byte-identical
  for (int w = 0; w <= 4; ++w) {
    std::ifstream a(checkpoint_path(clean_dir.str(), w));
    std::ifstream b(checkpoint_path(resume_dir.str(), w));
    REQUIRE(a.good());
    REQUIRE(b.good());
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());
  }
}

TEST_CASE("resume refuses digit mismatches") {
  TempDir dir("digits");
  RunConfig partial;
  partial.omega_max = 1;
  partial.precision.fixed_digits = 40;
  partial.checkpoint_dir = dir.str();
  sweep(partial);

  RunConfig wrong = partial;
  wrong.omega_max = 2;
  wrong.precision.fixed_digits = 50;
  wrong.resume = true;
  CHECK_THROWS_AS(sweep(wrong), CheckpointError);
}

TEST_CASE("precision policy") {
  PrecisionPolicy p;
  CHECK(p.digits_for(0) == 50);
  CHECK(p.digits_for(6) == 50);
  CHECK(p.digits_for(7) == 51);
  CHECK(p.digits_for(12) == 66);
  p.fixed_digits = 44;
  CHECK(p.digits_for(12) == 44);
  CHECK(p.escalate(44) == 66);
  const Real tol = p.tol_for(50);
  CHECK(tol == pow10(-40, bits_for_digits(50)));
}
