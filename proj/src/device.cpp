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

#include "paulic/device.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "builtin_devices.hpp"

namespace paulic {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Generated topologies carry one error rate on every coupling.
constexpr double kUniformError = 0.01;

std::size_t parse_count(std::string_view text, std::string_view what) {
  std::size_t v = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || v == 0) {
    throw std::invalid_argument("bad " + std::string(what) + " in device name: '" +
                                std::string(text) + "'");
  }
  return v;
}

}  // namespace

DeviceModel::DeviceModel(std::size_t n_qubits, std::vector<Coupling> edges,
                         std::vector<double> single_error, std::string name)
    : n_(n_qubits), name_(std::move(name)), edges_(std::move(edges)),
      single_error_(std::move(single_error)) {
  if (n_ == 0) throw std::invalid_argument("device has no qubits");
  if (!single_error_.empty() && single_error_.size() != n_) {
    throw std::invalid_argument("single_error length differs from the qubit count");
  }
  adj_.assign(n_, {});
  cost_.assign(n_, std::vector<double>(n_, kInf));
  for (const auto& e : edges_) {
    if (e.a >= n_ || e.b >= n_ || e.a == e.b) {
      throw std::invalid_argument("bad coupling " + std::to_string(e.a) + "-" +
                                  std::to_string(e.b));
    }
    if (!(e.error >= 0.0 && e.error < 1.0)) {
      throw std::invalid_argument("coupling error rate outside [0, 1)");
    }
    if (cost_[e.a][e.b] != kInf) {
      throw std::invalid_argument("repeated coupling " + std::to_string(e.a) + "-" +
                                  std::to_string(e.b));
    }
    cost_[e.a][e.b] = cost_[e.b][e.a] = -std::log1p(-e.error);
    adj_[e.a].push_back(e.b);
    adj_[e.b].push_back(e.a);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());

  hops_.assign(n_, std::vector<std::size_t>(n_, std::numeric_limits<std::size_t>::max()));
  for (Qubit s = 0; s < n_; ++s) {
    auto& dist = hops_[s];
    std::queue<Qubit> queue;
    dist[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      const Qubit u = queue.front();
      queue.pop();
      for (Qubit v : adj_[u]) {
        if (dist[v] == std::numeric_limits<std::size_t>::max()) {
          dist[v] = dist[u] + 1;
          queue.push(v);
        }
      }
    }
    for (std::size_t d : dist) {
      if (d == std::numeric_limits<std::size_t>::max()) {
        throw std::invalid_argument("coupling graph is not connected");
      }
    }
  }

  path_cost_ = cost_;
  for (Qubit q = 0; q < n_; ++q) path_cost_[q][q] = 0.0;
  for (Qubit k = 0; k < n_; ++k) {
    for (Qubit i = 0; i < n_; ++i) {
      for (Qubit j = 0; j < n_; ++j) {
        path_cost_[i][j] = std::min(path_cost_[i][j], path_cost_[i][k] + path_cost_[k][j]);
      }
    }
  }
}

DeviceModel DeviceModel::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("device json: ") + e.what());
  }
  try {
    const auto n = j.at("qubits").get<std::size_t>();
    std::vector<Coupling> edges;
    for (const auto& e : j.at("edges")) {
      edges.push_back({e.at("a").get<Qubit>(), e.at("b").get<Qubit>(), e.value("error", 0.0)});
    }
    std::vector<double> single;
    if (j.contains("single_error")) single = j["single_error"].get<std::vector<double>>();
    return DeviceModel(n, std::move(edges), std::move(single), j.value("name", std::string{}));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("device json: ") + e.what());
  }
}

DeviceModel DeviceModel::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open device file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  DeviceModel d = from_json(ss.str());
  if (d.name_.empty()) d.name_ = path;
  return d;
}

DeviceModel DeviceModel::builtin(std::string_view name) {
  const auto colon = name.find(':');
  const std::string_view kind = name.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? "" : name.substr(colon + 1);
  if (name == "manhattan65") {
    DeviceModel d = from_json(detail::kManhattan65Json);
    d.name_ = "manhattan65";
    return d;
  }
  std::vector<Coupling> edges;
  if (kind == "linear") {
    const std::size_t n = parse_count(arg, "size");
    for (Qubit q = 0; q + 1 < n; ++q) edges.push_back({q, q + 1, kUniformError});
    return DeviceModel(n, std::move(edges), {}, std::string(name));
  }
  if (kind == "full") {
    const std::size_t n = parse_count(arg, "size");
    for (Qubit a = 0; a < n; ++a) {
      for (Qubit b = a + 1; b < n; ++b) edges.push_back({a, b, kUniformError});
    }
    return DeviceModel(n, std::move(edges), {}, std::string(name));
  }
  if (kind == "grid") {
    const auto x = arg.find('x');
    if (x == std::string_view::npos) throw std::invalid_argument("grid device needs <r>x<c>");
    const std::size_t r = parse_count(arg.substr(0, x), "rows");
    const std::size_t c = parse_count(arg.substr(x + 1), "columns");
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t k = 0; k < c; ++k) {
        const Qubit q = i * c + k;
        if (k + 1 < c) edges.push_back({q, q + 1, kUniformError});
        if (i + 1 < r) edges.push_back({q, q + c, kUniformError});
      }
    }
    return DeviceModel(r * c, std::move(edges), {}, std::string(name));
  }
  throw std::invalid_argument("unknown device '" + std::string(name) + "'");
}

DeviceModel DeviceModel::resolve(const std::string& spec) {
  if (spec == "manhattan65" || spec.rfind("linear:", 0) == 0 || spec.rfind("grid:", 0) == 0 ||
      spec.rfind("full:", 0) == 0) {
    return builtin(spec);
  }
  return load(spec);
}

bool DeviceModel::has_edge(Qubit a, Qubit b) const {
  return a < n_ && b < n_ && cost_[a][b] != kInf;
}

double DeviceModel::edge_cost(Qubit a, Qubit b) const {
  if (!has_edge(a, b)) {
    throw std::out_of_range("no coupling " + std::to_string(a) + "-" + std::to_string(b));
  }
  return cost_[a][b];
}

std::vector<Qubit> cheapest_path(const DeviceModel& d, Qubit a, Qubit b) {
  const std::size_t n = d.n_qubits();
  if (a >= n || b >= n) throw std::out_of_range("cheapest_path: qubit outside the device");
  // (cost, hops) to b, then a greedy walk from a along tight edges.
  using Key = std::pair<double, std::size_t>;
  std::vector<Key> dist(n, {kInf, 0});
  using Item = std::pair<Key, Qubit>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[b] = {0.0, 0};
  heap.push({dist[b], b});
  while (!heap.empty()) {
    auto [ku, u] = heap.top();
    heap.pop();
    if (ku > dist[u]) continue;
    for (Qubit v : d.neighbors(u)) {
      const Key kv{ku.first + d.edge_cost(u, v), ku.second + 1};
      if (kv < dist[v]) {
        dist[v] = kv;
        heap.push({kv, v});
      }
    }
  }
  std::vector<Qubit> path{a};
  Qubit u = a;
  while (u != b) {
    const double tol = 1e-12 * std::max(1.0, dist[u].first);
    Qubit next = u;
    for (Qubit v : d.neighbors(u)) {
      if (dist[v].second + 1 == dist[u].second &&
          d.edge_cost(u, v) + dist[v].first <= dist[u].first + tol) {
        next = v;
        break;
      }
    }
    if (next == u) throw std::logic_error("cheapest_path: no tight edge");
    path.push_back(next);
    u = next;
  }
  return path;
}

}  // namespace paulic
