#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "uqso/commands.hpp"
#include "uqso/json_io.hpp"
#include "uqso/reps.hpp"

using namespace uqso;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "uqso_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

TEST_CASE("pbw-reduce prints the normal form") {
  auto r = run({"pbw-reduce", "--n", "3", "I32*I21"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "q*I21*I32 - q^(1/2)*I31\n");
  auto m = run({"pbw-reduce", "--n", "3", "--variant", "minus", "I32*I21"});
  CHECK(m.out == "q^(-1)*I21*I32 - q^(-1/2)*Im31\n");
}

TEST_CASE("parse errors map to their exit codes") {
  auto syntax = run({"pbw-reduce", "--n", "4", "I43*("});
  CHECK(syntax.code == cli::exit_code_for(ErrorKind::SyntaxError));
  CHECK(syntax.err.find("column 5") != std::string::npos);
  auto index = run({"pbw-reduce", "--n", "3", "I43"});
  CHECK(index.code == cli::exit_code_for(ErrorKind::IndexError));
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"no-such-verb"}).code == cli::kUsage);
  CHECK(run({"assoc-fuzz", "--n", "4"}).code == cli::kUsage);
  CHECK(run({"params-sample", "--n", "4", "--k", "3"}).code == cli::kUsage);
  CHECK(run({"relations-verify", "--n", "3", "--variant", "sideways"}).code == cli::kUsage);
  CHECK(run({"psi-verify", "--two-j", "-1", "--q-re", "0.5"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("exit codes are distinct per error kind") {
  std::set<int> codes{cli::kOk, cli::kCheckFailed, cli::kUsage, cli::kInternal};
  for (int k = 0; k <= static_cast<int>(ErrorKind::Io); ++k)
    CHECK(codes.insert(cli::exit_code_for(static_cast<ErrorKind>(k))).second);
}

TEST_CASE("relation and commutation verbs") {
  auto path = scratch("relations.json");
  auto r = run({"relations-verify", "--n", "4", "--out", path.string()});
  CHECK(r.code == cli::kOk);
  auto report = io::read_json_file(path.string());
  REQUIRE(report.is_array());
  CHECK(report.size() == 5);
  for (const auto& item : report) {
    CHECK(item.at("exactZero").get<bool>());
    CHECK(item.at("residual").get<std::string>() == "0");
  }
  CHECK(run({"relations-verify", "--n", "4", "--classical"}).code == cli::kOk);
  CHECK(run({"commrel-verify", "--n", "4", "--variant", "minus"}).code == cli::kOk);
  CHECK(run({"relations-verify", "--n", "2"}).code == cli::exit_code_for(ErrorKind::InvalidArgument));
}

TEST_CASE("assoc-fuzz is deterministic in its seed") {
  auto a = run({"assoc-fuzz", "--n", "4", "--trials", "40", "--seed", "9"});
  auto b = run({"assoc-fuzz", "--n", "4", "--trials", "40", "--seed", "9"});
  CHECK(a.code == cli::kOk);
  CHECK(a.out == b.out);
  CHECK(a.out.find("trials: 40  failures: 0") != std::string::npos);
}

TEST_CASE("params-sample, rep-build, rep-verify, rep-commutant") {
  auto params = scratch("params.json"), rep = scratch("rep.json"), report = scratch("residuals.json");
  auto sampled = run({"params-sample", "--n", "4", "--k", "3", "--seed", "5", "--out", params.string()});
  CHECK(sampled.code == cli::kOk);
  auto stdout_copy = run({"params-sample", "--n", "4", "--k", "3", "--seed", "5"});
  CHECK(nlohmann::ordered_json::parse(stdout_copy.out) == nlohmann::ordered_json::parse(slurp(params)));

  auto omega = io::params_from_json(io::read_json_file(params.string()));
  CHECK(omega.n == 4);
  CHECK(omega.parameter_count() == 6);
  CHECK(io::params_to_json(omega) == io::read_json_file(params.string()));

  CHECK(run({"rep-build", "--params", params.string(), "--out", rep.string()}).code == cli::kOk);
  const std::string first = slurp(rep);
  CHECK(run({"rep-build", "--params", params.string(), "--out", rep.string()}).code == cli::kOk);
  CHECK(slurp(rep) == first);

  auto dump = io::read_json_file(rep.string());
  CHECK(dump.at("dim").get<int>() == 9);
  CHECK(dump.at("generators").size() == 3);
  auto ops = io::rep_from_json(dump);
  CHECK(ops[1].name == "I32");

  auto v = run({"rep-verify", "--rep", rep.string(), "--q-order", "3", "--commutant", "--out", report.string()});
  CHECK(v.code == cli::kOk);
  CHECK(v.out.find("commutant dimension: 1") != std::string::npos);
  auto json = io::read_json_file(report.string());
  REQUIRE(json.is_array());
  CHECK(json.size() == 6);
  CHECK(json.back().at("commutantDim").get<int>() == 1);
  for (std::size_t i = 0; i + 1 < json.size(); ++i)
    CHECK(json[i].at("residual").get<double>() < 1e-9);

  // The wrong q breaks the relations.
  CHECK(run({"rep-verify", "--rep", rep.string(), "--q-order", "5"}).code == cli::kCheckFailed);
  CHECK(run({"rep-commutant", "--rep", rep.string()}).code == cli::kOk);
}

TEST_CASE("file and format errors") {
  auto missing = run({"rep-build", "--params", "/nonexistent/params.json", "--out", scratch("x.json").string()});
  CHECK(missing.code == cli::exit_code_for(ErrorKind::Io));
  auto broken = scratch("broken.json");
  std::ofstream(broken) << "{\"n\": 3,";
  CHECK(run({"rep-build", "--params", broken.string(), "--out", scratch("y.json").string()}).code ==
        cli::exit_code_for(ErrorKind::InvalidArgument));
  auto wrong = scratch("wrong.json");
  std::ofstream(wrong) << "{\"n\": 3, \"orderK\": 3, \"mTop\": [], \"h\": [], \"c\": []}";
  CHECK(run({"rep-build", "--params", wrong.string(), "--out", scratch("z.json").string()}).code ==
        cli::exit_code_for(ErrorKind::InvalidArgument));
}

TEST_CASE("embed-verify and psi-verify") {
  auto path = scratch("embed.json");
  CHECK(run({"embed-verify", "--n", "3", "--samples", "4", "--out", path.string()}).code == cli::kOk);
  auto json = io::read_json_file(path.string());
  REQUIRE(json.is_array());
  CHECK(json.front().at("mode") == "symbolic");
  CHECK(json.front().at("residual").is_null());
  CHECK(json.back().at("mode") == "numeric");

  auto psi = run({"psi-verify", "--two-j", "3", "--q-re", "0.4", "--q-im", "0.9"});
  CHECK(psi.code == cli::kOk);
  CHECK(run({"verify-psi", "--two-j", "1", "--q-re", "0.7"}).code == cli::kOk);
  CHECK(run({"psi-verify", "--two-j", "1", "--q-re", "1"}).code == cli::exit_code_for(ErrorKind::DegenerateQ));
  CHECK(run({"psi-verify", "--two-j", "2", "--q-re", "0", "--q-im", "1"}).code ==
        cli::exit_code_for(ErrorKind::SingularDenominator));
}

TEST_CASE("the installed binary") {
  const std::string cmd = std::string(UQSO_CLI_PATH) + " pbw-reduce --n 3 \"I32*I21\" > " +
                          scratch("binary.txt").string();
  CHECK(std::system(cmd.c_str()) == 0);
  CHECK(slurp(scratch("binary.txt")) == "q*I21*I32 - q^(1/2)*I31\n");
}
