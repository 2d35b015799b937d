#include "entlab/experiments.hpp"

#include "entlab/spectra.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>

using namespace entlab;
using nlohmann::json;

namespace {

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

void write_file(const std::filesystem::path& p, const std::string& body) {
  std::ofstream out(p);
  out << body;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_SUITE("experiments") {

TEST_CASE("kind names round-trip") {
  for (const char* name : {"sample-entropy", "tail", "min-ent", "scan-subspace", "ef-gap", "sdc",
                           "sdc-rates", "distill", "cuts", "net-audit"}) {
    CHECK(kind_name(parse_kind(name)) == name);
  }
  CHECK_THROWS_AS(parse_kind("no-such-kind"), config_error);
}

TEST_CASE("digest depends on results-relevant fields only") {
  ExperimentConfig a;
  a.seed = 7;
  ExperimentConfig b = a;
  b.workers = 8;
  b.out = "/tmp/somewhere";
  b.format = "json";
  CHECK(a.digest() == b.digest());
  CHECK(a.digest().size() == 16);

  ExperimentConfig c = a;
  c.seed = 8;
  CHECK(a.digest() != c.digest());
  ExperimentConfig d = a;
  d.trials = a.trials + 1;
  CHECK(a.digest() != d.digest());
}

TEST_CASE("canonical_json is parseable and excludes io fields") {
  ExperimentConfig c;
  c.out = "/tmp/x";
  c.workers = 4;
  json j = json::parse(c.canonical_json());
  CHECK(j["kind"] == "sample-entropy");
  CHECK(!j.contains("out"));
  CHECK(!j.contains("workers"));
  CHECK(!j.contains("format"));
}

TEST_CASE("load_config round-trip and unknown-key rejection") {
  auto p = temp_path("entlab_test_config.json");
  write_file(p, R"({"kind": "tail", "d_a": 3, "d_b": 3, "alpha": 0.4, "trials": 10, "seed": 5})");
  ExperimentConfig c = load_config(p.string());
  CHECK(c.kind == ExperimentKind::Tail);
  CHECK(c.d_a == 3);
  CHECK(c.alpha == doctest::Approx(0.4));
  CHECK(c.trials == 10);
  CHECK(c.seed == 5);

  auto bad = temp_path("entlab_test_config_bad.json");
  write_file(bad, R"({"kind": "tail", "bogus": 1})");
  CHECK_THROWS_AS(load_config(bad.string()), config_error);

  auto mangled = temp_path("entlab_test_config_mangled.json");
  write_file(mangled, "{not json");
  CHECK_THROWS_AS(load_config(mangled.string()), config_error);
  CHECK_THROWS_AS(load_config("/nonexistent/entlab.json"), config_error);
  std::filesystem::remove(p);
  std::filesystem::remove(bad);
  std::filesystem::remove(mangled);
}

TEST_CASE("validate catches bad configs") {
  ExperimentConfig c;
  c.kind = ExperimentKind::Tail;
  c.d_a = 2;
  c.d_b = 8;
  CHECK_THROWS_AS(c.validate(), config_error);
  c.d_a = 3;
  c.d_b = 3;
  CHECK_NOTHROW(c.validate());
  c.alpha = -1.0;
  CHECK_THROWS_AS(c.validate(), config_error);

  ExperimentConfig d;
  d.kind = ExperimentKind::Distill;
  d.n_parties = 2;
  CHECK_THROWS_AS(d.validate(), config_error);

  ExperimentConfig e;
  e.trials = 0;
  CHECK_THROWS_AS(e.validate(), config_error);
  e.trials = 1;
  e.format = "xml";
  CHECK_THROWS_AS(e.validate(), config_error);
}

TEST_CASE("sample-entropy run shape and summary") {
  ExperimentConfig c;
  c.kind = ExperimentKind::SampleEntropy;
  c.trials = 200;
  c.seed = 11;
  ResultRecord rec = run(c);
  CHECK(rec.config_digest == c.digest());

  // header comment + column line + one row per trial
  long lines = std::count(rec.csv.begin(), rec.csv.end(), '\n');
  CHECK(lines == 202);
  CHECK(rec.csv.rfind("# entlab sample-entropy v1", 0) == 0);
  CHECK(rec.csv.find("trial,entropy_bits\n") != std::string::npos);

  json s = json::parse(rec.summary_json);
  CHECK(s["config_digest"] == rec.config_digest);
  CHECK(s["summary"]["entropy_bits"]["n"] == 200);
  double mean = s["summary"]["entropy_bits"]["mean"].get<double>();
  CHECK(mean > 0.2);
  CHECK(mean < 1.0);
  CHECK(s["summary"]["page_lower_bound_bits"].get<double>() == doctest::Approx(0.278652).epsilon(1e-4));
}

TEST_CASE("worker count never changes the bytes") {
  ExperimentConfig c;
  c.kind = ExperimentKind::MinEnt;
  c.d_a = 2;
  c.d_b = 3;
  c.s = 2;
  c.trials = 12;
  c.restarts = 2;
  c.max_iters = 300;
  c.seed = 77;
  c.workers = 1;
  ResultRecord one = run(c);
  c.workers = 4;
  ResultRecord four = run(c);
  CHECK(one.csv == four.csv);
  CHECK(one.config_digest == four.config_digest);
}

TEST_CASE("tail run reports both events and the exponent") {
  ExperimentConfig c;
  c.kind = ExperimentKind::Tail;
  c.d_a = 3;
  c.d_b = 3;
  c.alpha = 0.4;
  c.trials = 300;
  c.seed = 3;
  ResultRecord rec = run(c);
  json s = json::parse(rec.summary_json)["summary"];
  double p_hat = s["empirical"]["p_hat"].get<double>();
  CHECK(p_hat <= s["tail_rhs"].get<double>() + 1e-12);  // the bound holds empirically
  CHECK(s["empirical"]["ci95_upper"].get<double>() >= p_hat);
  CHECK(s["below_mean_minus_alpha"].contains("p_hat"));
  double x = s["concentration_x"].get<double>();
  CHECK(x == doctest::Approx(8.0 * 0.16 / std::pow(std::log2(3.0), 2)));
}

TEST_CASE("run writes artifacts when out is set; plotdata follows") {
  auto stem = temp_path("entlab_test_artifact");
  ExperimentConfig c;
  c.kind = ExperimentKind::Tail;
  c.d_a = 3;
  c.d_b = 3;
  c.trials = 50;
  c.seed = 9;
  c.out = stem.string();
  ResultRecord rec = run(c);
  CHECK(slurp(stem.string() + ".csv") == rec.csv);
  json s = json::parse(slurp(stem.string() + ".json"));
  CHECK(s["artifact_version"] == kArtifactVersion);
  CHECK(s["kind"] == "tail");

  auto files = emit_plotdata(rec, stem.string());
  REQUIRE(files.size() == 1);
  std::string plot = slurp(files[0]);
  CHECK(plot.find("concentration_x,neg_ln_p_upper") != std::string::npos);
  std::filesystem::remove(stem.string() + ".csv");
  std::filesystem::remove(stem.string() + ".json");
  std::filesystem::remove(files[0]);
}

TEST_CASE("scan-subspace medians are monotone down to the full space") {
  ExperimentConfig c;
  c.kind = ExperimentKind::ScanSubspace;
  c.d_a = 2;
  c.d_b = 2;
  c.s_values = {1, 4};
  c.trials = 6;
  c.restarts = 3;
  c.max_iters = 500;
  c.seed = 21;
  json s = json::parse(run(c).summary_json)["summary"];
  REQUIRE(s["per_s"].size() == 2);
  double m1 = s["per_s"][0]["min_bits"]["median"].get<double>();
  double m4 = s["per_s"][1]["min_bits"]["median"].get<double>();
  CHECK(m4 < 1e-4);
  CHECK(m4 <= m1 + 1e-9);
}

TEST_CASE("sdc run matches the known rate lines") {
  ExperimentConfig c;
  c.kind = ExperimentKind::Sdc;
  c.d_a = 2;
  c.d_b = 2;
  c.trials = 40;
  c.seed = 5;
  ResultRecord rec = run(c);
  json s = json::parse(rec.summary_json)["summary"];
  CHECK(s["qubits_sent"].get<double>() == doctest::Approx(1.0));
  CHECK(s["ebits_consumed"].get<double>() == doctest::Approx(1.0));
  CHECK(s["fidelity"]["min"].get<double>() >= 0.5 - 1e-12);
  CHECK(s["fidelity"]["max"].get<double>() <= 1.0 + 1e-12);
}

TEST_CASE("cuts run emits one row per trial per cut with page bounds") {
  ExperimentConfig c;
  c.kind = ExperimentKind::Cuts;
  c.n_parties = 3;
  c.d = 2;
  c.trials = 5;
  c.seed = 2;
  ResultRecord rec = run(c);
  long lines = std::count(rec.csv.begin(), rec.csv.end(), '\n');
  CHECK(lines == 2 + 5 * 3);  // header + 3 cuts per trial
  json s = json::parse(rec.summary_json)["summary"];
  REQUIRE(s["per_cut"].size() == 3);
  for (const auto& cut : s["per_cut"]) {
    CHECK(cut["page_lower_bound_bits"].get<double>() ==
          doctest::Approx(page_lower_bound(BipartiteShape(2, 4))));
  }
}

TEST_CASE("net-audit slopes land near 2s") {
  ExperimentConfig c;
  c.kind = ExperimentKind::NetAudit;
  c.d_a = 2;
  c.d_b = 2;
  c.epsilons = {0.6, 0.45, 0.3};
  c.trials = 100;
  c.seed = 17;
  json s = json::parse(run(c).summary_json)["summary"];
  REQUIRE(s["scaling_fits"].size() == 3);
  for (const auto& fit : s["scaling_fits"]) {
    double slope = fit["slope"].get<double>();
    int expected = fit["expected_slope"].get<int>();
    CHECK(std::abs(slope - expected) < 0.5);
  }
}

}  // TEST_SUITE
