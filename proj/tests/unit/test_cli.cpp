#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "octopus/verify.hpp"

using namespace octopus;

namespace {

std::string temp_path(const std::string& name) {
  return std::string("cli_test_") + name;
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path);
  f << body;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("json round trips") {
  const auto p = Permutation::from_cycles(5, {{1, 3}, {2, 5}});
  CHECK(permutation_from_json(permutation_to_json(p)) == p);
  CHECK(partition_from_json(partition_to_json(Partition({3, 1}))) ==
        Partition({3, 1}));

  AlgebraElement a(4);
  a.add_term(Permutation::transposition(4, 1, 2), Rational(-3, 7));
  a.add_term(Permutation::from_cycles(4, {{1, 2, 3}}), 2);
  CHECK(algebra_from_json(algebra_to_json(a)) == a);

  TranspositionWeights W(4);
  W.set(1, 2, Rational(1, 3));
  W.set(2, 4, 1);
  CHECK(weights_from_json(weights_to_json(W)) == W);
}

TEST_CASE("weight file validation") {
  const std::string good = temp_path("good.json");
  write_file(good, R"({"n":3,"edges":[
    {"i":1,"j":3,"num":1,"den":1},
    {"i":2,"j":3,"num":1,"den":1}]})");
  const TranspositionWeights W = cli::load_weights(good);
  CHECK(W.weight(1, 3) == 1);
  CHECK(W.star_total() == 2);

  const std::string neg = temp_path("neg.json");
  write_file(neg, R"({"n":3,"edges":[{"i":1,"j":2,"num":-1,"den":2}]})");
  CHECK_THROWS_AS(cli::load_weights(neg), std::invalid_argument);

  const std::string dup = temp_path("dup.json");
  write_file(dup, R"({"n":3,"edges":[
    {"i":1,"j":2,"num":1,"den":2},
    {"i":2,"j":1,"num":1,"den":3}]})");
  CHECK_THROWS_AS(cli::load_weights(dup), std::invalid_argument);

  const std::string diag = temp_path("diag.json");
  write_file(diag, R"({"n":3,"edges":[{"i":2,"j":2,"num":1,"den":1}]})");
  CHECK_THROWS_AS(cli::load_weights(diag), std::invalid_argument);

  const std::string garbled = temp_path("garbled.json");
  write_file(garbled, "{not json");
  CHECK_THROWS_AS(cli::load_weights(garbled), std::invalid_argument);

  CHECK_THROWS_AS(cli::load_weights(temp_path("missing.json")),
                  std::invalid_argument);

  for (const auto& f : {good, neg, dup, diag, garbled})
    std::remove(f.c_str());
}

TEST_CASE("subcommand exit codes") {
  CHECK(cli::run({"tables"}) == 0);
  CHECK(cli::run({"lemma-w2", "--n", "3", "--trials", "3"}) == 0);
  CHECK(cli::run({"nonsense"}) == 2);
  CHECK(cli::run({}) == 2);
  CHECK(cli::run({"gap", "--n", "5"}) == 2);            // neither class nor weights
  CHECK(cli::run({"gap", "--class", "1,2"}) == 2);      // not weakly decreasing
  CHECK(cli::run({"octopus", "--weights", "no_such_file.json"}) == 2);
}

TEST_CASE("class-sum gap output") {
  const std::string out = temp_path("gap.txt");
  CHECK(cli::run({"gap", "--n", "5", "--class", "4,1", "--out", out}) == 0);
  const std::string text = read_file(out);
  CHECK(text.find("24") != std::string::npos);
  CHECK(text.find("30") != std::string::npos);
  CHECK(text.find("(2,2,1)") != std::string::npos);
  std::remove(out.c_str());
}

TEST_CASE("single-instance weight checks") {
  const std::string star = temp_path("star.json");
  write_file(star, R"({"n":3,"edges":[
    {"i":1,"j":3,"num":1,"den":1},
    {"i":2,"j":3,"num":1,"den":1}]})");
  CHECK(cli::run({"octopus", "--weights", star}) == 0);
  CHECK(cli::run({"interlace", "--weights", star}) == 0);
  CHECK(cli::run({"gap", "--weights", star}) == 0);
  std::remove(star.c_str());
}

TEST_CASE("identical arguments give identical bytes") {
  const std::string f1 = temp_path("rep1.json"), f2 = temp_path("rep2.json");
  const std::vector<std::string> base = {"aldous", "--n",    "4",
                                         "--trials", "5",    "--seed", "42",
                                         "--format", "json"};
  auto with_out = [&](const std::string& f) {
    auto v = base;
    v.push_back("--out");
    v.push_back(f);
    return v;
  };
  CHECK(cli::run(with_out(f1)) == 0);
  CHECK(cli::run(with_out(f2)) == 0);
  const std::string b1 = read_file(f1), b2 = read_file(f2);
  CHECK(!b1.empty());
  CHECK(b1 == b2);
  std::remove(f1.c_str());
  std::remove(f2.c_str());
}

TEST_CASE("seed resolution from the environment") {
  const std::string f1 = temp_path("env1.json"), f2 = temp_path("env2.json");
  setenv("OCTOPUS_LAB_SEED", "777", 1);
  CHECK(cli::run({"lemma-w2", "--n", "3", "--trials", "2", "--format", "json",
                  "--out", f1}) == 0);
  const Json j1 = Json::parse(read_file(f1));
  CHECK(j1.at("params").at("seed").get<std::uint64_t>() == 777);

  // an explicit seed wins over the environment
  CHECK(cli::run({"lemma-w2", "--n", "3", "--trials", "2", "--seed", "5",
                  "--format", "json", "--out", f2}) == 0);
  const Json j2 = Json::parse(read_file(f2));
  CHECK(j2.at("params").at("seed").get<std::uint64_t>() == 5);
  unsetenv("OCTOPUS_LAB_SEED");
  std::remove(f1.c_str());
  std::remove(f2.c_str());
}

TEST_SUITE_END();
