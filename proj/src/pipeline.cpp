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

#include "paulic/pipeline.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace paulic {

ScheduleKind parse_schedule_kind(const std::string& s) {
  if (s == "gco") return ScheduleKind::GCO;
  if (s == "do") return ScheduleKind::DO;
  throw std::invalid_argument("unknown schedule '" + s + "' (expected gco or do)");
}

Backend parse_backend(const std::string& s) {
  if (s == "ft") return Backend::FT;
  if (s == "sc") return Backend::SC;
  throw std::invalid_argument("unknown backend '" + s + "' (expected ft or sc)");
}

Schedule make_schedule(const Program& p, ScheduleKind kind) {
  return kind == ScheduleKind::GCO ? gco_schedule(p) : do_schedule(p);
}

namespace {

void fill_metrics(CompileResult& r) {
  r.counts = counts(r.synthesis.circuit);
  r.depth = depth(r.synthesis.circuit);
}

}  // namespace

CompileResult compile(const Program& p, const CompileOptions& options) {
  CompileResult r;
  r.schedule = make_schedule(p, options.schedule);
  if (options.backend == Backend::SC) {
    if (!options.device) throw std::invalid_argument("the sc backend needs a device");
    ScOptions sc;
    sc.initial = options.initial;
    r.synthesis = sc_synthesize(r.schedule, *options.device, options.bindings, sc);
  } else {
    r.synthesis = ft_synthesize(r.schedule, options.bindings);
  }
  fill_metrics(r);
  return r;
}

CompileResult compile_naive(const Program& p, ScheduleKind kind, const DeviceModel* device,
                            const Bindings& bindings, const std::optional<Mapping>& initial) {
  CompileResult r;
  r.schedule = make_schedule(p, kind);
  r.synthesis = naive_synthesize(r.schedule, bindings);
  if (device) r.synthesis.circuit = naive_route(r.synthesis.circuit, *device, initial);
  fill_metrics(r);
  return r;
}

std::string stats_json(const CompileResult& r) {
  std::ostringstream os;
  os << "{\"cnot\":" << r.counts.cnot << ",\"single\":" << r.counts.single
     << ",\"total\":" << r.counts.total << ",\"depth\":" << r.depth << "}";
  return os.str();
}

std::string stats_table(const CompileResult& r) {
  std::ostringstream os;
  os << "cnot    " << r.counts.cnot << "\n"
     << "single  " << r.counts.single << "\n"
     << "total   " << r.counts.total << "\n"
     << "depth   " << r.depth << "\n"
     << "swaps   " << r.counts.swaps << "\n"
     << "layers  " << r.schedule.layers.size() << "\n";
  return os.str();
}

double percent_change(double base, double value) {
  if (base == 0.0) return value == 0.0 ? 0.0 : 100.0;
  return 100.0 * (value - base) / base;
}

CompareReport compare(const Program& p, const DeviceModel* device, const Bindings& bindings) {
  CompareReport rep;
  const CompileResult* ft[2] = {nullptr, nullptr};
  const CompileResult* sc[2] = {nullptr, nullptr};
  const CompileResult* naive[2] = {nullptr, nullptr};
  std::vector<CompileResult> keep;
  keep.reserve(6);
  const ScheduleKind kinds[2] = {ScheduleKind::GCO, ScheduleKind::DO};
  const char* names[2] = {"gco", "do"};
  for (int k = 0; k < 2; ++k) {
    CompileOptions opt;
    opt.schedule = kinds[k];
    opt.bindings = bindings;
    keep.push_back(compile(p, opt));
    ft[k] = &keep.back();
    rep.cells.push_back({names[k], "ft", ft[k]->counts, ft[k]->depth});
    if (device) {
      opt.backend = Backend::SC;
      opt.device = *device;
      keep.push_back(compile(p, opt));
      sc[k] = &keep.back();
      rep.cells.push_back({names[k], "sc", sc[k]->counts, sc[k]->depth});
      keep.push_back(compile_naive(p, kinds[k], device, bindings));
      naive[k] = &keep.back();
      rep.cells.push_back({names[k], "sc-naive", naive[k]->counts, naive[k]->depth});
    }
  }
  rep.do_vs_gco_depth_ft = percent_change(static_cast<double>(ft[0]->depth),
                                          static_cast<double>(ft[1]->depth));
  rep.do_vs_gco_cnot_ft = percent_change(static_cast<double>(ft[0]->counts.cnot),
                                         static_cast<double>(ft[1]->counts.cnot));
  if (device) {
    rep.bc_cnot_gco = percent_change(static_cast<double>(naive[0]->counts.cnot),
                                     static_cast<double>(sc[0]->counts.cnot));
    rep.bc_cnot_do = percent_change(static_cast<double>(naive[1]->counts.cnot),
                                    static_cast<double>(sc[1]->counts.cnot));
    rep.bc_swap_do = percent_change(static_cast<double>(naive[1]->counts.swaps),
                                    static_cast<double>(sc[1]->counts.swaps));
  }
  return rep;
}

namespace {

std::string pct(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%+.2f%%", v);
  return buf;
}

}  // namespace

std::string format_compare(const CompareReport& r) {
  std::ostringstream os;
  char line[128];
  std::snprintf(line, sizeof line, "%-6s %-9s %8s %8s %8s %8s %6s\n", "sched", "flow", "cnot",
                "single", "total", "depth", "swaps");
  os << line;
  for (const auto& c : r.cells) {
    std::snprintf(line, sizeof line, "%-6s %-9s %8zu %8zu %8zu %8zu %6zu\n", c.schedule.c_str(),
                  c.flow.c_str(), c.counts.cnot, c.counts.single, c.counts.total, c.depth,
                  c.counts.swaps);
    os << line;
  }
  os << "do vs gco (ft): depth " << pct(r.do_vs_gco_depth_ft) << ", cnot "
     << pct(r.do_vs_gco_cnot_ft) << "\n";
  if (r.bc_cnot_do) {
    os << "block-wise vs naive routing: cnot " << pct(*r.bc_cnot_gco) << " (gco), "
       << pct(*r.bc_cnot_do) << " (do); swaps " << pct(*r.bc_swap_do) << " (do)\n";
  }
  return os.str();
}

}  // namespace paulic
