#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "hankel/cli.hpp"

using hankel::Command;
using hankel::Json;
using hankel::OutputFormat;
using hankel::RunConfig;

namespace {

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("hankel_verify_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunConfig quick_verify_star() {
  RunConfig config;
  config.command = Command::VerifyStar;
  config.resolution = 32;
  config.rounds = 25;
  return config;
}

}  // namespace

TEST_CASE("verify-star emits a report with the sharp bound") {
  const auto out = temp_path("star.json");
  RunConfig config = quick_verify_star();
  config.output_path = out.string();
  REQUIRE(hankel::run(config) == hankel::kExitOk);

  const Json doc = hankel::parse_report_file(out.string());
  CHECK(doc["class"] == "star");
  CHECK(std::abs(doc["bound_numeric"].get<double>() - 4.0 / 9.0) < 1e-6);
  CHECK(doc["bound_closed_form"].get<double>() == 4.0 / 9.0);
  CHECK(doc["argmax"]["y"].get<double>() > 0.9);
  CHECK(doc["face_table"].size() == 6);
  CHECK(doc["edge_table"].size() == 12);
  CHECK_FALSE(doc.contains("wall_time_ms"));
  std::filesystem::remove(out);
}

TEST_CASE("verify-qstar reports the q-dependent bound") {
  const auto out = temp_path("qstar.json");
  RunConfig config;
  config.command = Command::VerifyQStar;
  config.q_values = {0.5};
  config.resolution = 32;
  config.rounds = 25;
  config.output_path = out.string();
  REQUIRE(hankel::run(config) == hankel::kExitOk);

  const Json doc = hankel::parse_report_file(out.string());
  CHECK(doc["class"] == "qstar-lemniscate");
  CHECK(doc["q"].get<double>() == 0.5);
  CHECK(std::abs(doc["bound_numeric"].get<double>() - 9.0 / 49.0) < 1e-6);
  std::filesystem::remove(out);
}

TEST_CASE("invalid configurations exit with status 2") {
  RunConfig bad_q;
  bad_q.command = Command::VerifyQStar;
  bad_q.q_values = {1.5};
  CHECK(hankel::run(bad_q) == hankel::kExitConfigInvalid);

  RunConfig missing_q;
  missing_q.command = Command::VerifyQStar;
  CHECK(hankel::run(missing_q) == hankel::kExitConfigInvalid);

  RunConfig bad_res = quick_verify_star();
  bad_res.resolution = 1;
  CHECK(hankel::run(bad_res) == hankel::kExitConfigInvalid);

  RunConfig no_samples;
  no_samples.command = Command::Sample;
  no_samples.samples = 0;
  CHECK(hankel::run(no_samples) == hankel::kExitConfigInvalid);
}

TEST_CASE("unwritable output path exits with status 5") {
  RunConfig config = quick_verify_star();
  config.output_path = "/nonexistent-dir/report.json";
  CHECK(hankel::run(config) == hankel::kExitIoFailure);
}

TEST_CASE("a re-read report reproduces bound_numeric bit-exactly") {
  const auto out = temp_path("roundtrip.json");
  RunConfig config = quick_verify_star();
  config.output_path = out.string();
  REQUIRE(hankel::run(config) == hankel::kExitOk);

  const auto report = hankel::verify_sharp_bound(hankel::ClassTag::star(), 32, 25);
  const Json doc = hankel::parse_report_file(out.string());
  CHECK(doc["bound_numeric"].get<double>() == report.max_value);
  CHECK(doc["tolerance"].get<double>() == report.tolerance_estimate);
  std::filesystem::remove(out);
}

TEST_CASE("identical configs produce byte-identical reports") {
  const auto out1 = temp_path("det1.json");
  const auto out2 = temp_path("det2.json");

  RunConfig config;
  config.command = Command::VerifyQStar;
  config.q_values = {0.5};
  config.resolution = 24;
  config.rounds = 20;
  config.output_path = out1.string();
  REQUIRE(hankel::run(config) == hankel::kExitOk);
  config.output_path = out2.string();
  REQUIRE(hankel::run(config) == hankel::kExitOk);
  CHECK(slurp(out1) == slurp(out2));

  RunConfig sample;
  sample.command = Command::Sample;
  sample.samples = 2000;
  sample.seed = 42;
  sample.output_path = out1.string();
  REQUIRE(hankel::run(sample) == hankel::kExitOk);
  sample.output_path = out2.string();
  REQUIRE(hankel::run(sample) == hankel::kExitOk);
  CHECK(slurp(out1) == slurp(out2));

  std::filesystem::remove(out1);
  std::filesystem::remove(out2);
}

TEST_CASE("sample campaign reports zero violations and echoes the seed") {
  const auto out = temp_path("sample.json");
  RunConfig config;
  config.command = Command::Sample;
  config.q_values = {0.5};
  config.samples = 3000;
  config.seed = 1234;
  config.output_path = out.string();
  REQUIRE(hankel::run(config) == hankel::kExitOk);

  const Json doc = hankel::parse_report_file(out.string());
  CHECK(doc["samples"]["count"].get<std::size_t>() == 3000);
  CHECK(doc["samples"]["seed"].get<std::uint64_t>() == 1234);
  CHECK(doc["samples"]["violations"].get<std::size_t>() == 0);
  CHECK(doc["samples"]["max_observed_h3"].get<double>() <= 9.0 / 49.0 + 1e-9);
  CHECK_FALSE(doc["samples"]["a5_flagged"].get<bool>());
  std::filesystem::remove(out);
}

TEST_CASE("extremal reports the sharp coefficients") {
  const auto out = temp_path("extremal.json");
  RunConfig config;
  config.command = Command::Extremal;
  config.output_path = out.string();
  REQUIRE(hankel::run(config) == hankel::kExitOk);

  const Json doc = hankel::parse_report_file(out.string());
  CHECK(doc["coefficients"]["a2"].get<double>() == 0.0);
  CHECK(std::abs(doc["coefficients"]["a4"].get<double>() - 2.0 / 3.0) < 1e-15);
  CHECK(std::abs(doc["extremal_h3"].get<double>() - 4.0 / 9.0) < 1e-15);
  std::filesystem::remove(out);
}

TEST_CASE("sweep emits one record per q with decreasing bounds") {
  const auto out = temp_path("sweep.json");
  RunConfig config;
  config.command = Command::Sweep;
  config.resolution = 16;
  config.rounds = 18;
  config.output_path = out.string();
  REQUIRE(hankel::run(config) == hankel::kExitOk);

  const Json doc = hankel::parse_report_file(out.string());
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 9);
  double prev = std::numeric_limits<double>::infinity();
  for (const auto& rec : doc) {
    const double bound = rec["bound_closed_form"].get<double>();
    CHECK(bound < prev);
    prev = bound;
  }
  std::filesystem::remove(out);
}

TEST_CASE("CSV output renders the face and edge tables") {
  const auto out = temp_path("tables.csv");
  RunConfig config;
  config.command = Command::FaceTable;
  config.resolution = 16;
  config.rounds = 15;
  config.output_format = OutputFormat::Csv;
  config.output_path = out.string();
  REQUIRE(hankel::run(config) == hankel::kExitOk);

  const std::string csv = slurp(out);
  std::size_t lines = 0;
  for (char c : csv) lines += c == '\n';
  CHECK(lines == 1 + 6 + 12);  // header + faces + edges
  CHECK(csv.rfind("class,q,table,id,max,p,x,y\n", 0) == 0);

  // a report without tables renders as a header-only file
  RunConfig extremal;
  extremal.command = Command::Extremal;
  extremal.output_format = OutputFormat::Csv;
  extremal.output_path = out.string();
  REQUIRE(hankel::run(extremal) == hankel::kExitOk);
  CHECK(slurp(out) == "class,q,table,id,max,p,x,y\n");
  std::filesystem::remove(out);
}

#ifdef HANKEL_VERIFY_BIN
TEST_CASE("the installed binary honors the exit-status contract") {
  const std::string bin = HANKEL_VERIFY_BIN;
  auto exit_code = [&](const std::string& args) {
    const int raw = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  CHECK(exit_code("--help") == 0);
  CHECK(exit_code("verify-qstar --q 1.5") == 2);
  CHECK(exit_code("verify-qstar") == 2);
  CHECK(exit_code("no-such-command") == 2);
  CHECK(exit_code("extremal --q 0.5") == 0);

  const auto out = temp_path("bin_star.json");
  CHECK(exit_code("verify-star --resolution 16 --rounds 15 --out " + out.string()) == 0);
  const Json doc = hankel::parse_report_file(out.string());
  CHECK(std::abs(doc["bound_numeric"].get<double>() - 4.0 / 9.0) < 1e-6);
  std::filesystem::remove(out);
}

TEST_CASE("the binary names the (0,1) constraint for a bad q") {
  const std::string bin = HANKEL_VERIFY_BIN;
  const auto err = temp_path("stderr.txt");
  const int raw =
      std::system((bin + " verify-qstar --q 1.5 2> " + err.string() + " >/dev/null").c_str());
  CHECK(WEXITSTATUS(raw) == 2);
  CHECK(slurp(err).find("(0,1)") != std::string::npos);
  std::filesystem::remove(err);
}
#endif
