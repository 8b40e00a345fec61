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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paulic/circuit.hpp"
#include "paulic/device.hpp"
#include "paulic/pauli.hpp"
#include "paulic/schedule.hpp"
#include "paulic/synth_ft.hpp"
#include "paulic/synth_sc.hpp"

namespace paulic {

enum class ScheduleKind { GCO, DO };
enum class Backend { FT, SC };

ScheduleKind parse_schedule_kind(const std::string& s);
Backend parse_backend(const std::string& s);

struct CompileOptions {
  ScheduleKind schedule = ScheduleKind::DO;
  Backend backend = Backend::FT;
  std::optional<DeviceModel> device;  // required for SC
  Bindings bindings;
  std::optional<Mapping> initial;  // SC only
};

struct CompileResult {
  Schedule schedule;
  SynthesisResult synthesis;
  GateCounts counts;
  std::size_t depth = 0;
};

Schedule make_schedule(const Program& p, ScheduleKind kind);

/// Throws std::invalid_argument for SC without a device.
CompileResult compile(const Program& p, const CompileOptions& options);

/// {"cnot":..,"single":..,"total":..,"depth":..}
std::string stats_json(const CompileResult& r);
std::string stats_table(const CompileResult& r);

/// Chain synthesis of the schedule, routed by naive_route when a device is
/// given.
CompileResult compile_naive(const Program& p, ScheduleKind kind, const DeviceModel* device,
                            const Bindings& bindings = {},
                            const std::optional<Mapping>& initial = std::nullopt);

struct CompareCell {
  std::string schedule;  // gco | do
  std::string flow;      // ft | sc | sc-naive
  GateCounts counts;
  std::size_t depth = 0;
};

struct CompareReport {
  std::vector<CompareCell> cells;
  double do_vs_gco_depth_ft = 0.0;  // percent change
  double do_vs_gco_cnot_ft = 0.0;
  std::optional<double> bc_cnot_gco;  // sc vs sc-naive, percent change
  std::optional<double> bc_cnot_do;
  std::optional<double> bc_swap_do;
};

/// Percent change from `base` to `value`; 0 when both are 0.
double percent_change(double base, double value);

CompareReport compare(const Program& p, const DeviceModel* device, const Bindings& bindings = {});
std::string format_compare(const CompareReport& r);

}  // namespace paulic
