// Copyright 2026 The cnotsyn Authors
//
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

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "cnotsyn/bit_matrix.hpp"
#include "cnotsyn/text_io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
};

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("cnotsyn_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Run run(const std::string& args) {
  const auto out = scratch() / "stdout.txt";
  const std::string cmd = std::string(CNOTSYN_CLI) + " " + args + " > " + out.string() + " 2>" +
                          (scratch() / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = cnotsyn::read_file(out);
  return r;
}

std::string put(const std::string& name, const std::string& text) {
  const auto p = scratch() / name;
  cnotsyn::write_file(p, text);
  return p.string();
}

}  // namespace

TEST_CASE("identity needs no gates") {
  const auto m = put("id.txt", cnotsyn::format_matrix(cnotsyn::BitMatrix::identity(4)));
  const auto r = run("synth -m " + m + " -a grid:2x2");
  CHECK(r.code == 0);
  CHECK(r.out == "4\n");
}

TEST_CASE("synth then check") {
  const auto m = scratch() / "op.txt";
  REQUIRE(run("gen operator -n 9 --seed 3 -o " + m.string()).code == 0);
  for (const std::string arch : {"grid:3x3", "line:9", "grid_diag:3x3"}) {
    const auto c = (scratch() / "c.txt").string();
    REQUIRE(run("synth -m " + m.string() + " -a " + arch + " --niter 2 -o " + c).code == 0);
    const auto ok = run("check -c " + c + " -m " + m.string() + " -a " + arch);
    CHECK(ok.code == 0);
    CHECK(ok.out == "PASS\n");
  }
  const auto c = (scratch() / "p.txt").string();
  const auto perm = (scratch() / "perm.txt").string();
  REQUIRE(run("synth -m " + m.string() + " -a grid:3x3 --mode perm --niter 2 -o " + c +
              " --perm-out " + perm)
              .code == 0);
  CHECK(run("check -c " + c + " -m " + m.string() + " -a grid:3x3 --perm " + perm).code == 0);

  const auto all = (scratch() / "a.txt").string();
  REQUIRE(run("synth -m " + m.string() + " -a all:9 -s isd:20 -o " + all + " --perm-out " + perm)
              .code == 0);
  CHECK(run("check -c " + all + " -m " + m.string() + " --perm " + perm).code == 0);
}

TEST_CASE("check names the failing property") {
  const auto m = put("m2.txt", "2 2\n11\n01\n");
  const auto good = put("good.txt", "2\nCNOT 1 0\n");
  CHECK(run("check -c " + good + " -m " + m).out == "PASS\n");
  const auto wrong = put("wrong.txt", "2\nCNOT 0 1\n");
  const auto r = run("check -c " + wrong + " -m " + m);
  CHECK(r.code == 1);
  CHECK(r.out.rfind("FAIL simulation", 0) == 0);
  const auto m3 = put("m3.txt", "3 3\n101\n010\n001\n");
  const auto far = put("far.txt", "3\nCNOT 2 0\n");
  CHECK(run("check -c " + far + " -m " + m3).code == 0);
  CHECK(run("check -c " + far + " -m " + m3 + " -a line:3").out.rfind("FAIL compliance", 0) == 0);
  CHECK(run("check -c " + good + " -m " + m3).out.rfind("FAIL width", 0) == 0);
  const auto garbage = put("garbage.txt", "2\nCNOT 0 0\n");
  CHECK(run("check -c " + garbage + " -m " + m).out.rfind("FAIL parse", 0) == 0);
  const auto perm = put("perm.txt", "0 0\n");
  CHECK(run("check -c " + good + " -m " + m + " --perm " + perm).out.rfind("FAIL permutation", 0) ==
        0);
}

TEST_CASE("bad input is rejected") {
  const auto bad = put("bad.txt", "3 x\n101\n");
  CHECK(run("synth -m " + bad + " -a line:3").code != 0);
  const auto singular = put("sing.txt", "2 2\n11\n11\n");
  CHECK(run("synth -m " + singular + " -a line:2").code != 0);
  const auto id = put("id3.txt", "3 3\n100\n010\n001\n");
  CHECK(run("synth -m " + id + " -a line:4").code != 0);
  CHECK(run("synth -m " + id + " -a nowhere:3").code != 0);
  CHECK(run("frobnicate").code != 0);
}
