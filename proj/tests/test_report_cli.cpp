#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "grv/catalog.hpp"
#include "grv/cli.hpp"
#include "grv/report.hpp"
#include "grv/verifier.hpp"

using ojson = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run grv_run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = grv::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> keys(const ojson& j) {
  std::vector<std::string> k;
  for (auto it = j.begin(); it != j.end(); ++it) k.push_back(it.key());
  return k;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

grv::VerificationReport sample_report() {
  grv::VerificationReport r;
  r.seed = 3;
  grv::VerificationRecord a;
  a.entry_id = "x,\"y\"";
  a.params = {{"mu", 0.1}, {"a", 1.0 / 3.0}};
  a.lhs = 1.0 / 3.0;
  a.rhs = 0.1 + 0.2;
  a.abs_err = 1e-300;
  a.rel_err = NAN;
  a.status = grv::Status::quad_no_converge;
  a.evaluations = 17;
  r.records.push_back(a);
  r.tally();
  return r;
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("json schema and field order") {
    std::ostringstream os;
    grv::write_json(os, sample_report());
    const ojson j = ojson::parse(os.str());
    CHECK(keys(j) == std::vector<std::string>{"version", "seed", "tolerances", "records", "summary"});
    CHECK(j["version"] == std::string(grv::kToolVersion));
    CHECK(j["seed"] == 3);
    CHECK(keys(j["tolerances"]) == std::vector<std::string>{"rel_pass", "abs_floor", "quad_abs", "quad_rel", "quad_budget"});
    const ojson& rec = j["records"][0];
    CHECK(keys(rec) ==
          std::vector<std::string>{"id", "params", "lhs", "rhs", "abs_err", "rel_err", "status", "evaluations"});
    CHECK(rec["id"] == "x,\"y\"");
    CHECK(keys(rec["params"]) == std::vector<std::string>{"a", "mu"});
    // Shortest round-trip decimals restore the exact doubles.
    CHECK(rec["lhs"].get<double>() == 1.0 / 3.0);
    CHECK(rec["rhs"].get<double>() == 0.1 + 0.2);
    CHECK(rec["abs_err"].get<double>() == 1e-300);
    CHECK(rec["rel_err"].is_null());
    CHECK(rec["status"] == "quad_no_converge");
    CHECK(keys(j["summary"]) == std::vector<std::string>{"pass", "fail", "quad_no_converge", "skipped"});
    CHECK(j["summary"]["quad_no_converge"] == 1);
  }

  TEST_CASE("csv columns") {
    std::ostringstream os;
    grv::write_csv(os, sample_report());
    std::istringstream in(os.str());
    std::string header;
    std::string row;
    std::getline(in, header);
    std::getline(in, row);
    CHECK(header == "id,param_json,lhs,rhs,abs_err,rel_err,status,evaluations");
    CHECK(row.rfind("\"x,\"\"y\"\"\",\"{\"\"a\"\": ", 0) == 0);
    CHECK(row.find(",quad_no_converge,17") != std::string::npos);
  }

  TEST_CASE("text uses 15 significant digits") {
    std::ostringstream os;
    grv::write_text(os, sample_report());
    CHECK(os.str().find("lhs 0.333333333333333 ") != std::string::npos);
    CHECK(os.str().find("summary: pass 0, fail 0, quad_no_converge 1, skipped 0") != std::string::npos);
  }

  TEST_CASE("full report summary matches record tallies") {
    const auto report = grv::verify_all(42, 1, {});
    std::ostringstream os;
    grv::write_json(os, report);
    const ojson j = ojson::parse(os.str());
    long pass = 0;
    for (const auto& r : j["records"]) pass += r["status"] == "pass";
    CHECK(j["summary"]["pass"] == pass);
    CHECK(j["records"].size() == grv::catalog::entries().size());
  }
}

TEST_SUITE("cli") {
  TEST_CASE("list, show and eval accept every id") {
    const Run list = grv_run({"list", "--format", "json"});
    REQUIRE(list.code == 0);
    const ojson table = ojson::parse(list.out);
    CHECK(table.size() == grv::catalog::entries().size());
    CHECK(keys(table[0]) == std::vector<std::string>{"id", "category", "reference", "domain"});
    for (const auto& row : table) {
      const std::string id = row["id"];
      CAPTURE(id);
      CHECK(grv_run({"show", id}).code == 0);
      CHECK(grv_run({"eval", id}).code == 0);
    }
    const Run csv = grv_run({"list", "--format", "csv"});
    CHECK(csv.out.rfind("id,category,reference,domain\n", 0) == 0);
  }

  TEST_CASE("show 4.215.2") {
    const Run r = grv_run({"show", "4.215.2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("pi / (Gamma(mu) sin(mu pi))") != std::string::npos);
    CHECK(r.out.find("0 < mu < 1") != std::string::npos);
  }

  TEST_CASE("eval 3.381.4") {
    const Run r = grv_run({"eval", "3.381.4", "--params", "a=2.5,mu=1.7"});
    CHECK(r.code == 0);
    for (const char* field : {"lhs:", "rhs:", "rel_err:", "pass"}) CHECK(r.out.find(field) != std::string::npos);
    const Run j = grv_run({"eval", "3.381.4", "--params", "a=2.5,mu=1.7", "--format", "json"});
    const ojson rec = ojson::parse(j.out)["records"][0];
    CHECK(rec["status"] == "pass");
    CHECK(rec["rel_err"].get<double>() <= 1e-9);
  }

  TEST_CASE("eval with symbolic tokens") {
    const Run r = grv_run({"eval", "FUNC:recurrence", "--params", "a=pi"});
    CHECK(r.code == 0);
    CHECK(r.out.find("a = 3.14159265358979") != std::string::npos);
  }

  TEST_CASE("argument errors exit with 2") {
    const Run unknown = grv_run({"eval", "no.such"});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("did you mean") != std::string::npos);
    CHECK(grv_run({"show", "3.381.5"}).code == 2);
    CHECK(grv_run({}).code == 2);
    CHECK(grv_run({"frobnicate"}).code == 2);
    const Run bad_flag = grv_run({"verify", "--samples", "0"});
    CHECK(bad_flag.code == 2);
    CHECK(bad_flag.err.find("Usage") != std::string::npos);
    CHECK(grv_run({"verify", "--format", "xml"}).code == 2);
    CHECK(grv_run({"eval", "3.381.4", "--params", "a=-2,mu=1"}).code == 2);
    CHECK(grv_run({"eval", "3.381.4", "--params", "a"}).code == 2);
    CHECK(grv_run({"verify", "--id", "4.333", "--all"}).code == 2);
    CHECK(grv_run({"verify", "--rel-tol", "1e-8", "--abs-floor", "1e-13"}).code == 0);
    CHECK(grv_run({"--help"}).code == 0);
  }

  TEST_CASE("verify --all --seed 42 --samples 5 --format json") {
    const Run r = grv_run({"verify", "--all", "--seed", "42", "--samples", "5", "--format", "json"});
    CHECK(r.code == 0);
    const ojson j = ojson::parse(r.out);
    CHECK(j["summary"]["fail"] == 0);
    CHECK(j["records"].size() >= 280);
  }

  TEST_CASE("--out files are byte-identical across runs") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto a = dir / "grv_out_a.csv";
    const auto b = dir / "grv_out_b.csv";
    CHECK(grv_run({"verify", "--seed", "5", "--samples", "2", "--format", "csv", "--out", a.string()}).code == 0);
    CHECK(grv_run({"verify", "--seed", "5", "--samples", "2", "--format", "csv", "--out", b.string()}).code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a).rfind("id,param_json", 0) == 0);
    std::filesystem::remove(a);
    std::filesystem::remove(b);
  }

  TEST_CASE("verify selected ids") {
    const Run r = grv_run({"verify", "--id", "4.229.1", "--id", "3.328", "--samples", "3", "--format", "json"});
    CHECK(r.code == 0);
    const ojson j = ojson::parse(r.out);
    CHECK(j["records"].size() == 6);
    CHECK(j["records"][0]["id"] == "3.328");
  }

  TEST_CASE("GRV_QUAD_BUDGET overrides the evaluation budget") {
    ::setenv("GRV_QUAD_BUDGET", "50", 1);
    const Run r = grv_run({"verify", "--seed", "1", "--samples", "1", "--format", "json"});
    const ojson j = ojson::parse(r.out);
    CHECK(j["tolerances"]["quad_budget"] == 50);
    CHECK(j["summary"]["quad_no_converge"].get<long>() > 0);
    CHECK(j["summary"]["fail"] == 0);
    ::setenv("GRV_QUAD_BUDGET", "lots", 1);
    CHECK(grv_run({"verify", "--samples", "1"}).code == 2);
    ::unsetenv("GRV_QUAD_BUDGET");
  }

  TEST_CASE("selftest") {
    const Run r = grv_run({"selftest"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
  }
}
