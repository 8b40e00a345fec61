// Copyright 2026 The paulic Authors
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

// paulic command line: compile, bench gen, verify, compare.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "paulic/bench.hpp"
#include "paulic/device.hpp"
#include "paulic/ir_text.hpp"
#include "paulic/pipeline.hpp"
#include "paulic/verify.hpp"

namespace {

using namespace paulic;

constexpr double kVerifyTolerance = 1e-8;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

Program load_program(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_program(text);
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ":" + std::to_string(e.line()) + ":" +
                             std::to_string(e.column()) + ": " + e.detail());
  }
}

Bindings parse_bindings(const std::vector<std::string>& items) {
  Bindings b;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::invalid_argument("binding '" + item + "' is not name=value");
    }
    const std::string value = item.substr(eq + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size()) {
      throw std::invalid_argument("binding '" + item + "' has a bad value");
    }
    b[item.substr(0, eq)] = v;
  }
  return b;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("PAULI_SEED");
  if (!env || !*env) return 0;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("PAULI_SEED is not an integer: ") + env);
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::size_t to_size(const std::string& s) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
  return static_cast<std::size_t>(v);
}

Program generate(const std::string& family, const std::string& params, std::uint64_t seed) {
  if (family == "ising" || family == "heisenberg") {
    LatticeSpec spec;
    spec.model = family == "ising" ? LatticeModel::Ising : LatticeModel::Heisenberg;
    for (const auto& d : split(params, 'x')) spec.dims.push_back(to_size(d));
    return gen_lattice(spec);
  }
  if (family == "rand") return gen_random_hamiltonian(to_size(params), seed);
  const auto parts = split(params, ',');
  if (parts.size() != 2) throw std::invalid_argument("--params needs <n>,<value> for " + family);
  if (family == "qaoa-reg") {
    return gen_qaoa_maxcut(regular_graph(to_size(parts[0]), to_size(parts[1]), seed));
  }
  if (family == "qaoa-rand") {
    return gen_qaoa_maxcut(random_graph(to_size(parts[0]), std::stod(parts[1]), seed));
  }
  throw std::invalid_argument("unknown family '" + family + "'");
}

struct CompileArgs {
  std::string input;
  std::string schedule = "do";
  std::string backend = "ft";
  std::string device;
  std::vector<std::string> binds;
  std::string out;
  bool pretty = false;
  bool verify = false;
};

CompileOptions options_from(const CompileArgs& a) {
  CompileOptions opt;
  opt.schedule = parse_schedule_kind(a.schedule);
  opt.backend = parse_backend(a.backend);
  opt.bindings = parse_bindings(a.binds);
  if (opt.backend == Backend::SC) {
    if (a.device.empty()) throw std::invalid_argument("--backend sc requires --device");
    opt.device = DeviceModel::resolve(a.device);
  }
  return opt;
}

int run_compile(const CompileArgs& a) {
  const Program p = load_program(a.input);
  const CompileResult r = compile(p, options_from(a));
  if (!a.out.empty()) write_file(a.out, emit_qasm(r.synthesis.circuit));
  std::cout << (a.pretty ? stats_table(r) : stats_json(r) + "\n");
  if (a.verify) {
    if (r.synthesis.circuit.n_qubits() > kMaxVerifyQubits) {
      std::cerr << "note: verification skipped for " << r.synthesis.circuit.n_qubits()
                << " qubits\n";
    } else {
      const double dev = check_equivalence(r.synthesis.circuit, r.synthesis.order);
      std::cerr << "deviation " << dev << "\n";
      if (dev > kVerifyTolerance) return 1;
    }
  }
  return 0;
}

int run_verify(const CompileArgs& a) {
  const Program p = load_program(a.input);
  const CompileResult r = compile(p, options_from(a));
  const double dev = check_equivalence(r.synthesis.circuit, r.synthesis.order);
  std::cout << "{\"deviation\":" << dev << ",\"ok\":" << (dev <= kVerifyTolerance ? "true" : "false")
            << "}\n";
  return dev <= kVerifyTolerance ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pauli IR compiler"};
  app.require_subcommand(1);

  CompileArgs compile_args;
  auto* compile_cmd = app.add_subcommand("compile", "schedule and synthesize a program");
  compile_cmd->add_option("--input,-i", compile_args.input, "program file")->required();
  compile_cmd->add_option("--schedule", compile_args.schedule, "gco or do")
      ->check(CLI::IsMember({"gco", "do"}));
  compile_cmd->add_option("--backend", compile_args.backend, "ft or sc")
      ->check(CLI::IsMember({"ft", "sc"}));
  compile_cmd->add_option("--device", compile_args.device, "device file or builtin name");
  compile_cmd->add_option("--bind", compile_args.binds, "name=value");
  compile_cmd->add_option("--out,-o", compile_args.out, "QASM output path");
  compile_cmd->add_flag("--pretty", compile_args.pretty, "human readable stats");
  compile_cmd->add_flag("--verify", compile_args.verify, "check the circuit (<= 10 qubits)");

  CompileArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "compile and check against the rotations");
  verify_cmd->add_option("--input,-i", verify_args.input, "program file")->required();
  verify_cmd->add_option("--schedule", verify_args.schedule, "gco or do")
      ->check(CLI::IsMember({"gco", "do"}));
  verify_cmd->add_option("--backend", verify_args.backend, "ft or sc")
      ->check(CLI::IsMember({"ft", "sc"}));
  verify_cmd->add_option("--device", verify_args.device, "device file or builtin name");
  verify_cmd->add_option("--bind", verify_args.binds, "name=value");

  auto* bench_cmd = app.add_subcommand("bench", "benchmark programs");
  bench_cmd->require_subcommand(1);
  auto* gen_cmd = bench_cmd->add_subcommand("gen", "generate a benchmark program");
  std::string family, params, bench_out;
  std::uint64_t seed = 0;
  gen_cmd->add_option("--family", family, "ising|heisenberg|rand|qaoa-reg|qaoa-rand")
      ->required()
      ->check(CLI::IsMember({"ising", "heisenberg", "rand", "qaoa-reg", "qaoa-rand"}));
  gen_cmd->add_option("--params", params, "5x6 | 30 | 20,4 | 20,0.3")->required();
  auto* seed_opt = gen_cmd->add_option("--seed", seed, "generator seed (default PAULI_SEED or 0)");
  gen_cmd->add_option("--out,-o", bench_out, "output path (stdout if absent)");

  std::string cmp_input, cmp_device;
  std::vector<std::string> cmp_binds;
  auto* compare_cmd = app.add_subcommand("compare", "schedule and routing comparison grid");
  compare_cmd->add_option("--input,-i", cmp_input, "program file")->required();
  compare_cmd->add_option("--device", cmp_device, "device file or builtin name");
  compare_cmd->add_option("--bind", cmp_binds, "name=value");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compile_cmd->parsed()) return run_compile(compile_args);
    if (verify_cmd->parsed()) return run_verify(verify_args);
    if (gen_cmd->parsed()) {
      const std::uint64_t s = seed_opt->count() > 0 ? seed : default_seed();
      const std::string text = emit_program(generate(family, params, s));
      if (bench_out.empty()) {
        std::cout << text;
      } else {
        write_file(bench_out, text);
      }
      return 0;
    }
    if (compare_cmd->parsed()) {
      const Program p = load_program(cmp_input);
      std::optional<DeviceModel> dev;
      if (!cmp_device.empty()) dev = DeviceModel::resolve(cmp_device);
      std::cout << format_compare(compare(p, dev ? &*dev : nullptr, parse_bindings(cmp_binds)));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
