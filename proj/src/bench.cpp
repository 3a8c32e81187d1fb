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

#include "cnotsyn/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <iomanip>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "cnotsyn/architectures.hpp"
#include "cnotsyn/circuit.hpp"
#include "cnotsyn/errors.hpp"
#include "cnotsyn/rng.hpp"
#include "cnotsyn/synth_full.hpp"

namespace cnotsyn {

namespace {

using Json = nlohmann::json;

const std::set<std::string> kExperiments = {"ratio_pmh",   "isd_sweep",  "input_size",
                                            "table_exact", "table_perm", "radius",
                                            "augment"};

bool all_to_all(const std::string& e) {
  return e == "ratio_pmh" || e == "isd_sweep" || e == "input_size";
}

template <typename T>
std::vector<T> list_of(const Json& j, const char* key) {
  if (!j.is_array()) throw ParseError(std::string("experiment: '") + key + "' must be a list");
  return j.get<std::vector<T>>();
}

}  // namespace

ExperimentSpec ExperimentSpec::from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("experiment spec: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("experiment spec must be a JSON object");
  ExperimentSpec s;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "experiment") {
        s.experiment = value.get<std::string>();
      } else if (key == "sizes") {
        s.sizes = list_of<std::size_t>(value, "sizes");
      } else if (key == "input_gates") {
        s.input_gates = list_of<std::size_t>(value, "input_gates");
      } else if (key == "architectures") {
        s.architectures = list_of<std::string>(value, "architectures");
      } else if (key == "extra_edges") {
        s.extra_edges = list_of<std::size_t>(value, "extra_edges");
      } else if (key == "methods") {
        s.methods = list_of<std::string>(value, "methods");
      } else if (key == "operators") {
        s.operators = value.get<std::size_t>();
      } else if (key == "niter") {
        s.niter = value.get<std::size_t>();
      } else if (key == "time_limit_s") {
        s.time_limit_s = value.get<double>();
      } else if (key == "references") {
        s.references = value.get<std::map<std::string, double>>();
      } else if (key == "seed") {
        s.seed = value.get<std::uint64_t>();
      } else {
        throw ParseError("experiment spec: unknown key '" + key + "'");
      }
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("experiment spec: ") + e.what());
  }
  s.validate();
  return s;
}

void ExperimentSpec::validate() {
  if (!kExperiments.contains(experiment))
    throw ParseError("unknown experiment '" + experiment + "'");
  if (operators == 0) throw ContractViolation("experiment: operators must be >= 1");
  if (niter && *niter == 0) throw ContractViolation("experiment: niter must be >= 1");
  if (all_to_all(experiment)) {
    if (sizes.empty()) throw ContractViolation("experiment: empty n range");
    if (std::find(sizes.begin(), sizes.end(), 0) != sizes.end())
      throw ContractViolation("experiment: sizes must be positive");
    if (experiment == "input_size" && input_gates.empty())
      throw ContractViolation("experiment: input_size needs input_gates");
    if (methods.empty()) {
      methods = experiment == "isd_sweep"
                    ? std::vector<std::string>{"greedy", "isd:100", "isd:500", "isd:1000"}
                    : std::vector<std::string>{"greedy"};
    }
    for (const auto& m : methods)
      if (m != "pmh" && m != "gauss") SolverSpec::parse(m);
    return;
  }
  if (architectures.empty()) throw ContractViolation("experiment: no architectures");
  if (experiment == "augment") {
    if (architectures.size() != 1)
      throw ContractViolation("experiment: augment takes exactly one base architecture");
    if (extra_edges.empty()) throw ContractViolation("experiment: augment needs extra_edges");
  }
  for (const auto& a : architectures) make_architecture(a);
  if (methods.empty()) methods = {"syndrome"};
  for (const auto& m : methods) {
    if (m == "syndrome") continue;
    if (m.rfind("syndrome:", 0) != 0)
      throw ParseError("experiment: unknown constrained method '" + m + "'");
    ConstrainedConfig::parse_solver(m.substr(9));
  }
}

std::uint64_t operator_seed(std::uint64_t master, std::size_t n, std::size_t input_gates,
                            std::size_t index) {
  return derive_seed(master, {n, input_gates, index});
}

namespace {

struct BenchPoint {
  std::string label;
  std::size_t n = 0;
  std::size_t input_gates = 0;
  std::optional<Architecture> arch;
  std::size_t extra_edges = 0;
};

struct Outcome {
  std::size_t size = 0;
  double seconds = 0;
  bool timed_out = false;
};

std::vector<BenchPoint> make_points(const ExperimentSpec& s) {
  std::vector<BenchPoint> out;
  if (all_to_all(s.experiment)) {
    for (std::size_t n : s.sizes) {
      if (s.experiment == "input_size") {
        for (std::size_t g : s.input_gates)
          out.push_back({"n=" + std::to_string(n) + ",gates=" + std::to_string(g), n, g,
                         std::nullopt, 0});
      } else {
        out.push_back({"n=" + std::to_string(n), n, n * n, std::nullopt, 0});
      }
    }
    return out;
  }
  if (s.experiment == "augment") {
    Architecture base = make_architecture(s.architectures.front());
    const std::size_t n = base.graph.size();
    for (std::size_t e : s.extra_edges)
      out.push_back({base.name + "+" + std::to_string(e), n, n * n, base, e});
    return out;
  }
  for (const auto& a : s.architectures) {
    Architecture arch = make_architecture(a);
    const std::size_t n = arch.graph.size();
    out.push_back({a, n, n * n, std::move(arch), 0});
  }
  return out;
}

template <typename F>
Outcome timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o = f();
  o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return o;
}

void verify(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("bench: " + what + " produced a wrong circuit");
}

std::vector<Outcome> run_all_to_all(const ExperimentSpec& s, const BitMatrix& a,
                                    std::uint64_t seed, Outcome& baseline) {
  baseline = timed([&] {
    const CnotCircuit c = pmh(a);
    verify(simulate(c) == a, "pmh");
    return Outcome{c.size()};
  });
  std::vector<Outcome> out;
  for (std::size_t m = 0; m < s.methods.size(); ++m) {
    const std::string& name = s.methods[m];
    out.push_back(timed([&] {
      if (name == "pmh") return Outcome{baseline.size};
      if (name == "gauss") {
        const CnotCircuit c = gaussian_elimination(a);
        verify(simulate(c) == a, name);
        return Outcome{c.size()};
      }
      SynthesisConfig cfg;
      cfg.solver = SolverSpec::parse(name);
      cfg.seed = derive_seed(seed, {m});
      cfg.deadline = Deadline::after(s.time_limit_s);
      const SynthesisResult r = synth_general(a, cfg);
      verify(realized_operator(r) == a, name);
      return Outcome{r.circuit.size(), 0, cfg.deadline.expired()};
    }));
  }
  return out;
}

std::vector<Outcome> run_constrained(const ExperimentSpec& s, const BenchPoint& p,
                                     const BitMatrix& a, std::uint64_t seed) {
  Architecture arch = *p.arch;
  if (s.experiment == "augment")
    arch.graph = augment_random(arch.graph, p.extra_edges, derive_seed(seed, {p.extra_edges}));
  std::vector<Outcome> out;
  for (std::size_t m = 0; m < s.methods.size(); ++m) {
    const std::string& name = s.methods[m];
    out.push_back(timed([&] {
      ConstrainedConfig cfg = tuned_config(arch);
      if (name != "syndrome") cfg.solver = ConstrainedConfig::parse_solver(name.substr(9));
      if (s.niter) cfg.niter = *s.niter;
      if (s.experiment == "table_perm") cfg.mode = ConstrainedConfig::Mode::kUpToPermutation;
      cfg.seed = derive_seed(seed, {m});
      cfg.deadline = Deadline::after(s.time_limit_s);
      const ConstrainedResult r = synth_general_constrained(a, arch.graph, cfg);
      verify(permutation_matrix(r.output_wire) * simulate(r.circuit) == a &&
                 complies_with(r.circuit, arch.graph),
             name + " on " + arch.name);
      return Outcome{r.circuit.size(), 0, r.timed_out};
    }));
  }
  return out;
}

}  // namespace

std::vector<BenchRow> run_experiment(ExperimentSpec spec, std::size_t workers) {
  spec.validate();
  const std::vector<BenchPoint> points = make_points(spec);
  const std::size_t ops = spec.operators;
  const std::size_t jobs = points.size() * ops;
  const bool full = all_to_all(spec.experiment);

  std::vector<std::vector<Outcome>> results(jobs);
  std::vector<Outcome> baselines(jobs);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t j = next++; j < jobs; j = next++) {
      try {
        const BenchPoint& p = points[j / ops];
        const std::uint64_t seed = operator_seed(spec.seed, p.n, p.input_gates, j % ops);
        const BitMatrix a = random_operator(p.n, p.input_gates, seed);
        results[j] = full ? run_all_to_all(spec, a, seed, baselines[j])
                          : run_constrained(spec, p, a, seed);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = jobs;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < std::max<std::size_t>(1, std::min(workers, jobs)); ++w)
    pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<BenchRow> rows;
  for (std::size_t pi = 0; pi < points.size(); ++pi) {
    const BenchPoint& p = points[pi];
    std::optional<double> reference;
    if (!full) {
      if (auto it = spec.references.find(p.label); it != spec.references.end())
        reference = it->second;
    }
    for (std::size_t m = 0; m < spec.methods.size(); ++m) {
      BenchRow row;
      row.experiment = spec.experiment;
      row.point = p.label;
      row.method = spec.methods[m];
      row.n = p.n;
      row.seed = spec.seed;
      double ratio_sum = 0;
      std::vector<double> savings;
      for (std::size_t o = 0; o < ops; ++o) {
        const std::size_t j = pi * ops + o;
        const Outcome& r = results[j][m];
        row.mean_size += static_cast<double>(r.size);
        row.mean_time_s += r.seconds;
        row.timeouts += r.timed_out ? 1 : 0;
        std::optional<double> base;
        if (full && baselines[j].size > 0) base = static_cast<double>(baselines[j].size);
        if (!full) base = reference;
        if (full && base) ratio_sum += static_cast<double>(r.size) / *base;
        if (base) savings.push_back(1.0 - static_cast<double>(r.size) / *base);
      }
      const double count = static_cast<double>(ops);
      row.mean_size /= count;
      row.mean_time_s /= count;
      if (full) row.mean_ratio = ratio_sum / count;
      if (!savings.empty()) {
        const auto [lo, hi] = std::minmax_element(savings.begin(), savings.end());
        row.min_saving = *lo;
        row.max_saving = *hi;
        row.positive_fraction =
            static_cast<double>(std::count_if(savings.begin(), savings.end(),
                                              [](double v) { return v > 0; })) /
            static_cast<double>(savings.size());
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string to_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "experiment,point,method,n,mean_size,mean_ratio,min_saving,max_saving,"
         "positive_fraction,mean_time_s,timeouts,seed\n";
  out << std::setprecision(6);
  auto opt = [&](const std::optional<double>& v) {
    if (v) out << *v;
  };
  auto quoted = [&](const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) {
      out << s;
      return;
    }
    out << '"';
    for (char c : s) out << (c == '"' ? "\"\"" : std::string(1, c));
    out << '"';
  };
  for (const auto& r : rows) {
    quoted(r.experiment);
    out << ',';
    quoted(r.point);
    out << ',';
    quoted(r.method);
    out << ',' << r.n << ',' << r.mean_size << ',';
    opt(r.mean_ratio);
    out << ',';
    opt(r.min_saving);
    out << ',';
    opt(r.max_saving);
    out << ',';
    opt(r.positive_fraction);
    out << ',' << r.mean_time_s << ',' << r.timeouts << ',' << r.seed << '\n';
  }
  return out.str();
}

std::size_t default_workers() {
  if (const char* env = std::getenv("CNOTSYN_WORKERS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace cnotsyn
