#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "fourierlab/cli.hpp"
#include "fourierlab/json_io.hpp"
#include "functions.hpp"

using fourierlab::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "fourierlab");
  std::ostringstream out, err;
  const int code = fourierlab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("sum prints the exact value") {
  const Result r = run({"sum", "(sin(n)/n)^2", "--mode", "exact"});
  CHECK(r.code == 0);
  CHECK(r.out.find("-1/2 + 1/2*pi") != std::string::npos);
  CHECK(r.out.find("1.0707963267948966192") != std::string::npos);

  const Result even = run({"sum", "sin(n)/n", "--index", "even", "--mode", "exact"});
  CHECK(even.out.find("-1/2 + 1/4*pi") != std::string::npos);
}

TEST_CASE("sum with x and a partial sum") {
  const Result r = run({"sum", "sin(n*x)/n", "--x", "1/2", "--mode", "both", "--N", "1000", "--digits", "12"});
  CHECK(r.code == 0);
  CHECK(r.out.find("-1/4 + 1/2*pi") != std::string::npos);
  CHECK(r.out.find("N = 1000") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"sum", "cos(n)/n"}).code == fourierlab::cli::not_closed_form);
  CHECK(run({"sum", "sin(n"}).code == fourierlab::cli::usage_error);
  CHECK(run({}).code == fourierlab::cli::usage_error);
  CHECK(run({"sum", "1/n^2", "--digits", "3"}).code == fourierlab::cli::usage_error);
  CHECK(run({"verify", "--id", "no-such-identity"}).code == fourierlab::cli::usage_error);
  CHECK(run({"recognize", "0.123456789012345"}).code == fourierlab::cli::verification_failed);
  CHECK(run({"crossing", "sin(n*x)^3/n", "sin(n*x)^4/n^2", "--bracket", "0.2:0.5", "--N", "1000"}).code != 0);
}

TEST_CASE("recognize") {
  const Result r = run({"recognize", "0.6780972450961724"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("-1/2 + 3/8*pi", 0) == 0);
  const Result j = run({"recognize", "--format", "json", "--", "-.392699"});
  CHECK(Json::parse(j.out)["text"] == "-1/8*pi");
}

TEST_CASE("verify output is deterministic without timing") {
  const std::vector<std::string> args = {"verify", "--id", "even-sinc-sum", "--id", "sawtooth-with-sinc-factor",
                                         "--format", "json"};
  const Result a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const Json j = Json::parse(a.out);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["status"] == "pass");
  CHECK_FALSE(j[0].contains("runtime_seconds"));
  CHECK(Json::parse(run({"verify", "--id", "even-sinc-sum", "--format", "json", "--timing"}).out)[0].contains(
      "runtime_seconds"));
}

TEST_CASE("catalog list") {
  const Result r = run({"catalog", "list", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out).size() >= 30);
}

TEST_CASE("coeffs and parseval read a function file") {
  const std::string path = "cli_test_kink.json";
  {
    std::ofstream f(path);
    f << fourierlab::to_json(testing::kink()).dump();
  }
  const Result c = run({"coeffs", path, "--format", "json"});
  CHECK(c.code == 0);
  CHECK(Json::parse(c.out)["sine"].size() == 1);
  const Result p = run({"parseval", path});
  CHECK(p.code == 0);
  CHECK(run({"coeffs", "missing-file.json"}).code == fourierlab::cli::usage_error);
  std::remove(path.c_str());
}

TEST_CASE("plot writes csv") {
  const Result r = run({"plot", "sin(n*x)/n", "--grid", "0.5:3:5", "--N", "2000"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("x,y\n", 0) == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) ++count;
  CHECK(count == 6);
}
