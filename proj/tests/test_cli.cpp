// Copyright 2026 The sdrcalc Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "sdrcalc/cli.hpp"
#include "sdrcalc/feas.hpp"
#include "sdrcalc/repfile.hpp"
#include "sdrcalc/sdrep.hpp"

namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = sdrcalc::cli_main(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data_file(const char* name) {
  return (fs::path(SDRCALC_DATA_DIR) / name).string();
}

std::string tmp_file(const char* name) {
  return (fs::temp_directory_path() / name).string();
}

std::string slurp(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(static_cast<bool>(in));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("help exits cleanly and names every subcommand") {
  CliRun r = run_cli({"--help"});
  CHECK(r.code == 0);
  for (const char* sub :
       {"info", "compose", "member", "export-sdpa", "rasterize", "sample"}) {
    CHECK(contains(r.out, sub));
  }
}

TEST_CASE("missing and unknown subcommands fail with usage text") {
  CliRun none = run_cli({});
  CHECK(none.code == 1);
  CHECK(contains(none.err, "error:"));

  CliRun bad = run_cli({"frobnicate"});
  CHECK(bad.code == 1);
  CHECK(contains(bad.err, "error:"));
}

TEST_CASE("info prints dimensions and labels") {
  CliRun r = run_cli({"info", data_file("hyperbola.rep")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "k: 2\n"));
  CHECK(contains(r.out, "n: 2\n"));
  CHECK(contains(r.out, "m: 0\n"));
  CHECK(contains(r.out, "blocks: 2\n"));
  CHECK(contains(r.out, "ambient: x1 x2\n"));

  CliRun missing = run_cli({"info", "/nonexistent/file.rep"});
  CHECK(missing.code == 1);
  CHECK(contains(missing.err, "error:"));
}

TEST_CASE("compose chains constructions through files") {
  const std::string out_path = tmp_file("sdrcalc_cli_convhull.rep");
  CliRun r = run_cli({"compose", "conv-union", data_file("hyperbola.rep"),
                      data_file("origin.rep"), "-o", out_path});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "k=14 n=2 m=5"));

  // The written file loads, validates, and reports the same shape.
  sdrcalc::SDRep hull = sdrcalc::load_rep(out_path);
  CHECK(hull.k() == 14);
  CHECK(hull.n() == 2);
  CHECK(hull.m() == 5);

  CliRun info = run_cli({"info", out_path});
  CHECK(info.code == 0);
  CHECK(contains(info.out, "k: 14\n"));
  fs::remove(out_path);
}

TEST_CASE("compose rejects wrong arity and unknown operations") {
  const std::string out_path = tmp_file("sdrcalc_cli_reject.rep");
  CliRun arity = run_cli({"compose", "slice", data_file("hyperbola.rep"),
                          data_file("origin.rep"), "-o", out_path});
  CHECK(arity.code == 1);
  CHECK(contains(arity.err, "expected 1 input"));

  CliRun op = run_cli({"compose", "warp", data_file("hyperbola.rep"), "-o",
                       out_path});
  CHECK(op.code == 1);
  CHECK(contains(op.err, "unknown compose op"));
  CHECK_FALSE(fs::exists(out_path));
}

TEST_CASE("member reports status through the exit code") {
  const std::string hyp = data_file("hyperbola.rep");

  CliRun strict = run_cli({"member", hyp, "--point", "2,1"});
  CHECK(strict.code == 0);
  CHECK(contains(strict.out, "status: strictly_feasible\n"));

  CliRun boundary = run_cli({"member", hyp, "--point", "1,1"});
  CHECK(boundary.code == 0);
  CHECK(contains(boundary.out, "status: eps_feasible\n"));
  CHECK(contains(boundary.out, "margin: 0\n"));

  CliRun outside = run_cli({"member", hyp, "--point", "0.5,0.5"});
  CHECK(outside.code == 2);
  CHECK(contains(outside.out, "status: eps_infeasible\n"));
  CHECK(contains(outside.out, "margin: -0.5\n"));

  CliRun malformed = run_cli({"member", hyp, "--point", "1,,2"});
  CHECK(malformed.code == 1);
  CHECK(contains(malformed.err, "error:"));

  CliRun too_long = run_cli({"member", hyp, "--point", "1,2,3"});
  CHECK(too_long.code == 1);
}

TEST_CASE("export-sdpa reproduces the golden file") {
  const std::string out_path = tmp_file("sdrcalc_cli_hyp.dat-s");
  CliRun r = run_cli({"export-sdpa", data_file("hyperbola.rep"), "--point",
                      "1,1", "-o", out_path});
  CHECK(r.code == 0);
  CHECK(slurp(out_path) == slurp(data_file("golden/hyperbola_11.dat-s")));
  fs::remove(out_path);
}

TEST_CASE("rasterize writes a deterministic shaded PGM") {
  const std::string first = tmp_file("sdrcalc_cli_a.pgm");
  const std::string second = tmp_file("sdrcalc_cli_b.pgm");
  const std::vector<std::string> base = {
      "rasterize", data_file("hyperbola.rep"), "--xrange", "0:3",
      "--yrange",  "0:3",                      "--res",    "12"};

  std::vector<std::string> args = base;
  args.insert(args.end(), {"-o", first});
  CliRun r1 = run_cli(args);
  CHECK(r1.code == 0);
  CHECK(contains(r1.out, "12x12"));

  args = base;
  args.insert(args.end(), {"-o", second});
  CHECK(run_cli(args).code == 0);

  const std::string bytes = slurp(first);
  CHECK(bytes == slurp(second));
  REQUIRE(bytes.size() == 13 + 144);
  CHECK(bytes.rfind("P5\n12 12\n255\n", 0) == 0);

  // Top-right pixel sits deep inside the set, bottom-left far outside.
  const unsigned char top_right = static_cast<unsigned char>(bytes[13 + 11]);
  const unsigned char bottom_left =
      static_cast<unsigned char>(bytes[13 + 11 * 12]);
  CHECK(top_right == 255);
  CHECK(bottom_left == 16);

  fs::remove(first);
  fs::remove(second);
}

TEST_CASE("rasterize requires a two-dimensional representation") {
  const std::string quad = tmp_file("sdrcalc_cli_quad.rep");
  CliRun make = run_cli({"compose", "product", data_file("hyperbola.rep"),
                         data_file("hyperbola.rep"), "-o", quad});
  REQUIRE(make.code == 0);
  CliRun r = run_cli({"rasterize", quad, "--xrange", "0:1", "--yrange", "0:1",
                      "-o", tmp_file("sdrcalc_cli_bad.pgm")});
  CHECK(r.code == 1);
  CHECK(contains(r.err, "error:"));
  fs::remove(quad);
}

TEST_CASE("sample prints members inside the requested box") {
  CliRun r = run_cli({"sample", data_file("hyperbola.rep"), "--count", "5",
                      "--box", "0:3,0:3", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());

  sdrcalc::SDRep hyp = sdrcalc::load_rep(data_file("hyperbola.rep"));
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::string tok;
    Eigen::Vector2d p;
    for (int i = 0; i < 2; ++i) {
      REQUIRE(std::getline(fields, tok, ','));
      p(i) = std::stod(tok);
      CHECK(p(i) >= 0.0);
      CHECK(p(i) <= 3.0);
    }
    CHECK(sdrcalc::lambda_min(sdrcalc::pencil_eval(hyp, p)) >= -1.0000001e-6);
    ++count;
  }
  CHECK(count == 5);

  // Deterministic for a fixed seed.
  CliRun again = run_cli({"sample", data_file("hyperbola.rep"), "--count", "5",
                          "--box", "0:3,0:3", "--seed", "7"});
  CHECK(again.out == r.out);
}

TEST_CASE("sample warns when the box yields too few members") {
  CliRun r = run_cli({"sample", data_file("hyperbola.rep"), "--count", "2",
                      "--box", "0:0.4,0:0.4", "--seed", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(contains(r.err, "warning: found only 0 of 2"));
}
