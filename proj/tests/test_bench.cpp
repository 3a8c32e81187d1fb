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

#include "cnotsyn/bench.hpp"
#include "cnotsyn/errors.hpp"

using namespace cnotsyn;

TEST_CASE("experiment specs") {
  const auto s = ExperimentSpec::from_json(
      R"({"experiment": "ratio_pmh", "sizes": [4, 6], "operators": 3, "seed": 9})");
  CHECK(s.experiment == "ratio_pmh");
  CHECK(s.sizes == std::vector<std::size_t>{4, 6});
  CHECK(s.methods == std::vector<std::string>{"greedy"});
  const auto sweep = ExperimentSpec::from_json(R"({"experiment": "isd_sweep", "sizes": [8]})");
  CHECK(sweep.methods == std::vector<std::string>{"greedy", "isd:100", "isd:500", "isd:1000"});
  const auto table =
      ExperimentSpec::from_json(R"({"experiment": "table_exact", "architectures": ["grid:3x3"]})");
  CHECK(table.methods == std::vector<std::string>{"syndrome"});

  CHECK_THROWS_AS(ExperimentSpec::from_json("{"), ParseError);
  CHECK_THROWS_AS(ExperimentSpec::from_json(R"({"experiment": "ratio_pmh", "size": [4]})"),
                  ParseError);
  CHECK_THROWS_AS(ExperimentSpec::from_json(R"({"experiment": "qaoa", "sizes": [4]})"), ParseError);
  CHECK_THROWS_AS(ExperimentSpec::from_json(R"({"experiment": "ratio_pmh", "sizes": []})"),
                  ContractViolation);
  CHECK_THROWS_AS(ExperimentSpec::from_json(
                      R"({"experiment": "table_exact", "architectures": ["grid:3x3"],
                          "methods": ["isd:5"]})"),
                  ParseError);
  CHECK_THROWS_AS(ExperimentSpec::from_json(
                      R"({"experiment": "augment", "architectures": ["line:5", "line:6"],
                          "extra_edges": [1]})"),
                  ContractViolation);
}

TEST_CASE("operator seeds ignore the experiment") {
  CHECK(operator_seed(1, 9, 81, 0) == operator_seed(1, 9, 81, 0));
  CHECK(operator_seed(1, 9, 81, 0) != operator_seed(1, 9, 81, 1));
  CHECK(operator_seed(1, 9, 81, 0) != operator_seed(2, 9, 81, 0));
}

TEST_CASE("small runs") {
  auto s = ExperimentSpec::from_json(
      R"({"experiment": "ratio_pmh", "sizes": [6, 8], "methods": ["pmh", "greedy", "tree:2:2"],
          "operators": 4})");
  const auto rows = run_experiment(s, 2);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].point == "n=6");
  CHECK(rows[0].method == "pmh");
  CHECK(*rows[0].mean_ratio == doctest::Approx(1.0));
  CHECK(*rows[0].min_saving == doctest::Approx(0.0));
  CHECK(rows[5].point == "n=8");
  CHECK(rows[5].method == "tree:2:2");
  // Worker count does not change the numbers.
  const auto serial = run_experiment(s, 1);
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(serial[i].mean_size == rows[i].mean_size);

  auto c = ExperimentSpec::from_json(
      R"({"experiment": "table_perm", "architectures": ["grid:2x2", "line:4"], "operators": 2,
          "niter": 1, "references": {"grid:2x2": 100}})");
  const auto crows = run_experiment(c, 1);
  REQUIRE(crows.size() == 2);
  CHECK(crows[0].point == "grid:2x2");
  CHECK(crows[0].min_saving.has_value());
  CHECK(*crows[0].positive_fraction == doctest::Approx(1.0));
  CHECK_FALSE(crows[1].min_saving.has_value());

  const auto csv = to_csv(rows);
  CHECK(csv.rfind(
            "experiment,point,method,n,mean_size,mean_ratio,min_saving,max_saving,"
            "positive_fraction,mean_time_s,timeouts,seed\n",
            0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
}
