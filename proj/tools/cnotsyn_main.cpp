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

// cnotsyn command line: synth, check, gen, bench.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cnotsyn/architectures.hpp"
#include "cnotsyn/bench.hpp"
#include "cnotsyn/circuit.hpp"
#include "cnotsyn/errors.hpp"
#include "cnotsyn/synth_constrained.hpp"
#include "cnotsyn/synth_full.hpp"
#include "cnotsyn/text_io.hpp"

namespace {

using namespace cnotsyn;
using Json = nlohmann::json;

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_file(path, text);
}

// Graph from --arch or --graph; nullopt means all-to-all synthesis.
std::optional<Architecture> hardware(const std::string& arch, const std::string& graph) {
  if (!arch.empty() && !graph.empty())
    throw ParseError("give either --arch or --graph, not both");
  if (!arch.empty()) return make_architecture(arch);
  if (!graph.empty()) return make_architecture("file:" + graph);
  return std::nullopt;
}

struct SynthArgs {
  std::string matrix;
  std::string arch;
  std::string graph;
  std::string out = "-";
  std::string perm_out;
  std::string stats;
  std::string solver;
  std::string mode = "exact";
  std::string harvest;
  std::string ordering;
  std::optional<std::size_t> niter;
  std::optional<std::size_t> niter_syndrome;
  std::optional<std::size_t> sp_max;
  std::optional<std::size_t> lc_max;
  std::optional<bool> symmetries;
  std::uint64_t seed = 0;
  double time_limit_s = 600;
};

int cmd_synth(const SynthArgs& a) {
  const BitMatrix m = parse_matrix(read_file(a.matrix));
  if (!m.is_square()) throw ParseError("matrix is not square");
  const std::size_t n = m.rows();
  const auto hw = hardware(a.arch, a.graph);
  if (hw && hw->graph.size() != n)
    throw ParseError("matrix has " + std::to_string(n) + " rows but the graph has " +
                     std::to_string(hw->graph.size()) + " nodes");
  if (rank(m) != n) throw SingularMatrix();

  const auto t0 = std::chrono::steady_clock::now();
  CnotCircuit circuit(n);
  std::vector<std::size_t> output_wire(n);
  std::iota(output_wire.begin(), output_wire.end(), 0);
  bool timed_out = false;
  std::string method;

  if (!hw || hw->all_to_all) {
    method = a.solver.empty() ? "greedy" : a.solver;
    if (method == "pmh") {
      circuit = pmh(m);
    } else if (method == "gauss") {
      circuit = gaussian_elimination(m);
    } else {
      SynthesisConfig cfg;
      cfg.solver = SolverSpec::parse(method);
      cfg.niter_syndrome = a.niter_syndrome.value_or(1);
      cfg.seed = a.seed;
      cfg.deadline = Deadline::after(a.time_limit_s);
      SynthesisResult r = synth_general(m, cfg);
      circuit = std::move(r.circuit);
      output_wire = std::move(r.output_wire);
      timed_out = cfg.deadline.expired();
    }
  } else {
    ConstrainedConfig cfg = tuned_config(*hw);
    if (!a.solver.empty()) cfg.solver = ConstrainedConfig::parse_solver(a.solver);
    cfg.mode = ConstrainedConfig::parse_mode(a.mode);
    if (!a.harvest.empty()) cfg.harvest = ConstrainedConfig::parse_harvest(a.harvest);
    if (!a.ordering.empty())
      cfg.ordering = QubitOrdering::from_ranks(parse_indices(read_file(a.ordering)));
    if (a.niter) cfg.niter = *a.niter;
    if (a.niter_syndrome) cfg.niter_syndrome = *a.niter_syndrome;
    if (a.sp_max) cfg.sp_max = *a.sp_max == 0 ? kUnbounded : *a.sp_max;
    if (a.lc_max) cfg.lc_max = *a.lc_max;
    if (a.symmetries) cfg.use_symmetries = *a.symmetries;
    cfg.seed = a.seed;
    cfg.deadline = Deadline::after(a.time_limit_s);
    method = "syndrome:" + ConstrainedConfig::solver_name(cfg.solver);
    ConstrainedResult r = synth_general_constrained(m, hw->graph, cfg);
    circuit = std::move(r.circuit);
    output_wire = std::move(r.output_wire);
    timed_out = r.timed_out;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  emit(a.out, format_circuit(circuit));
  const bool permuted = !std::is_sorted(output_wire.begin(), output_wire.end());
  if (!a.perm_out.empty()) write_file(a.perm_out, format_indices(output_wire) + "\n");

  Json record = {{"architecture", hw ? hw->name : "all:" + std::to_string(n)},
                 {"n", n},
                 {"method", method},
                 {"mode", permuted ? "perm" : "exact"},
                 {"size", circuit.size()},
                 {"time_s", seconds},
                 {"seed", a.seed},
                 {"timed_out", timed_out}};
  if (permuted) record["permutation"] = output_wire;
  if (!hw || hw->all_to_all) record["pmh_size"] = pmh(m).size();
  if (permuted && a.perm_out.empty())
    std::cerr << "warning: the circuit realizes the matrix up to a permutation; "
                 "use --perm-out to save it\n";
  const std::string line = record.dump() + "\n";
  if (a.stats.empty()) {
    std::cerr << line;
  } else {
    std::FILE* f = std::fopen(a.stats.c_str(), "a");
    if (!f) throw ParseError("cannot open " + a.stats);
    std::fputs(line.c_str(), f);
    std::fclose(f);
  }
  return 0;
}

int cmd_check(const std::string& circuit_path, const std::string& matrix_path,
              const std::string& arch, const std::string& graph,
              const std::string& perm_path) {
  auto fail = [](const std::string& check, const std::string& detail) {
    std::cout << "FAIL " << check << ": " << detail << "\n";
    return 1;
  };
  CnotCircuit c;
  BitMatrix m;
  std::optional<Architecture> hw;
  std::vector<std::size_t> perm;
  try {
    c = parse_circuit(read_file(circuit_path));
    m = parse_matrix(read_file(matrix_path));
    hw = hardware(arch, graph);
    if (!perm_path.empty()) perm = parse_indices(read_file(perm_path));
  } catch (const Error& e) {
    return fail("parse", e.what());
  }
  if (!m.is_square() || m.rows() != c.n_wires())
    return fail("width", "circuit has " + std::to_string(c.n_wires()) +
                             " wires, matrix is " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()));
  if (perm.empty()) {
    perm.resize(c.n_wires());
    std::iota(perm.begin(), perm.end(), 0);
  }
  BitMatrix realized;
  try {
    realized = permutation_matrix(perm) * simulate(c);
  } catch (const Error& e) {
    return fail("permutation", e.what());
  }
  if (realized != m) return fail("simulation", "circuit does not implement the matrix");
  if (hw) {
    if (hw->graph.size() != c.n_wires())
      return fail("compliance", "graph has " + std::to_string(hw->graph.size()) + " nodes");
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!hw->graph.adjacent(c[i].control, c[i].target))
        return fail("compliance", "gate " + std::to_string(i) + " (CNOT " +
                                      std::to_string(c[i].control) + " " +
                                      std::to_string(c[i].target) + ") is not an edge");
  }
  std::cout << "PASS\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CNOT circuit synthesis by syndrome decoding"};
  app.require_subcommand(1);

  SynthArgs sa;
  auto* synth = app.add_subcommand("synth", "Synthesize a circuit for a matrix");
  synth->add_option("-m,--matrix", sa.matrix, "Matrix file")->required();
  synth->add_option("-a,--arch", sa.arch, "Architecture (line:N, grid:RxC, ibm_qx5, ...)");
  synth->add_option("-g,--graph", sa.graph, "Edge list file");
  synth->add_option("-o,--out", sa.out, "Circuit output file ('-' for stdout)");
  synth->add_option("--perm-out", sa.perm_out, "Write the output permutation here");
  synth->add_option("--stats", sa.stats, "Append the JSON stats record here (default stderr)");
  synth->add_option("-s,--solver", sa.solver,
                    "All-to-all: greedy, tree:W:D, isd:N, exact[:B], pmh, gauss. "
                    "Constrained: greedy, fast, exact");
  synth->add_option("--mode", sa.mode, "exact or perm")->check(CLI::IsMember({"exact", "perm"}));
  synth->add_option("--harvest", sa.harvest, "history or current");
  synth->add_option("--ordering", sa.ordering, "Ordering file (rank of each node)");
  synth->add_option("--niter", sa.niter, "Restarts per triangular factor");
  synth->add_option("--niter-syndrome", sa.niter_syndrome, "Random bases per decoding");
  synth->add_option("--sp-max", sa.sp_max, "Shortest paths per pair (0: all)");
  synth->add_option("--lc-max", sa.lc_max, "Linear combinations per path");
  synth->add_option("--symmetries", sa.symmetries, "Try the lattice symmetries (true/false)");
  synth->add_option("--seed", sa.seed, "Seed");
  synth->add_option("--time-limit", sa.time_limit_s, "Seconds per operator (0: none)");

  std::string ck_circuit, ck_matrix, ck_arch, ck_graph, ck_perm;
  auto* check = app.add_subcommand("check", "Verify a circuit against a matrix and a graph");
  check->add_option("-c,--circuit", ck_circuit, "Circuit file")->required();
  check->add_option("-m,--matrix", ck_matrix, "Matrix file")->required();
  check->add_option("-a,--arch", ck_arch, "Architecture");
  check->add_option("-g,--graph", ck_graph, "Edge list file");
  check->add_option("--perm", ck_perm, "Output permutation file");

  auto* gen = app.add_subcommand("gen", "Generate random inputs");
  gen->require_subcommand(1);
  std::size_t gen_n = 0, gen_gates = 0, gen_extra = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_out = "-", gen_arch;
  auto* gen_op = gen->add_subcommand("operator", "Random invertible matrix");
  gen_op->add_option("-n", gen_n, "Qubits")->required();
  gen_op->add_option("--gates", gen_gates, "Random input CNOTs (default n^2)");
  gen_op->add_option("--seed", gen_seed, "Seed");
  gen_op->add_option("-o,--out", gen_out, "Output file");
  auto* gen_graph = gen->add_subcommand("graph", "Edge list of an architecture");
  gen_graph->add_option("-a,--arch", gen_arch, "Architecture")->required();
  gen_graph->add_option("--extra-edges", gen_extra, "Random extra edges");
  gen_graph->add_option("--seed", gen_seed, "Seed");
  gen_graph->add_option("-o,--out", gen_out, "Output file");

  std::string bench_spec, bench_out = "-";
  std::size_t bench_workers = 0;
  auto* bench = app.add_subcommand("bench", "Run an experiment and print CSV");
  bench->add_option("spec", bench_spec, "Experiment JSON file")->required();
  bench->add_option("-o,--out", bench_out, "CSV output file");
  bench->add_option("-w,--workers", bench_workers, "Worker threads (default CNOTSYN_WORKERS)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*synth) return cmd_synth(sa);
    if (*check) return cmd_check(ck_circuit, ck_matrix, ck_arch, ck_graph, ck_perm);
    if (*gen_op) {
      emit(gen_out, format_matrix(random_operator(
                        gen_n, gen_op->count("--gates") ? gen_gates : gen_n * gen_n, gen_seed)));
      return 0;
    }
    if (*gen_graph) {
      ConnectivityGraph g = make_architecture(gen_arch).graph;
      if (gen_extra > 0) g = augment_random(g, gen_extra, gen_seed);
      emit(gen_out, to_edge_list(g));
      return 0;
    }
    if (*bench) {
      const auto spec = ExperimentSpec::from_json(read_file(bench_spec));
      const auto rows =
          run_experiment(spec, bench_workers > 0 ? bench_workers : default_workers());
      emit(bench_out, to_csv(rows));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
