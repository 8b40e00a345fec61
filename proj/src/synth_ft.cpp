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

#include "paulic/synth_ft.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace paulic {

TreePlan chain_plan(const PauliString& p) {
  return plan_with_prefix(p, {});
}

TreePlan plan_with_prefix(const PauliString& p, const std::vector<TreeEdge>& prefix) {
  const QubitSet support = p.support();
  if (support.empty()) throw std::invalid_argument("plan for an identity string");
  std::set<Qubit> children, touched;
  for (const auto& e : prefix) {
    children.insert(e.child);
    touched.insert(e.child);
    touched.insert(e.parent);
  }
  std::vector<Qubit> chain;
  for (Qubit q : support) {
    if (!touched.count(q)) chain.push_back(q);
  }
  for (Qubit q : touched) {
    if (!children.count(q)) chain.push_back(q);
  }
  TreePlan plan;
  plan.edges = prefix;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) plan.edges.push_back({chain[i], chain[i + 1]});
  plan.root = chain.back();
  validate_plan(p, plan);
  return plan;
}

void validate_plan(const PauliString& p, const TreePlan& plan) {
  const QubitSet support = p.support();
  if (support.empty()) throw std::invalid_argument("plan for an identity string");
  auto in_support = [&](Qubit q) {
    return std::binary_search(support.begin(), support.end(), q);
  };
  if (!in_support(plan.root)) throw std::invalid_argument("plan root outside the support");
  if (plan.edges.size() + 1 != support.size()) {
    throw std::invalid_argument("plan does not span the support");
  }
  // A node may pass its parity on only after every child has reached it.
  std::set<Qubit> done;
  for (const auto& e : plan.edges) {
    if (!in_support(e.child) || !in_support(e.parent) || e.child == e.parent) {
      throw std::invalid_argument("plan edge outside the support");
    }
    if (e.child == plan.root) throw std::invalid_argument("plan root has a parent");
    if (done.count(e.child) || done.count(e.parent)) {
      throw std::invalid_argument("plan edges are not ordered leaves to root");
    }
    done.insert(e.child);
  }
}

Circuit synth_string(const PauliString& p, double angle, const TreePlan& plan) {
  validate_plan(p, plan);
  Circuit c(p.size());
  const QubitSet support = p.support();
  for (Qubit q : support) {
    if (p[q] == PauliAxis::X) c.append(Gate::h(q));
    if (p[q] == PauliAxis::Y) c.append(Gate::gy_dag(q));
  }
  for (const auto& e : plan.edges) c.append(Gate::cnot(e.child, e.parent));
  c.append(Gate::rz(plan.root, angle));
  for (auto it = plan.edges.rbegin(); it != plan.edges.rend(); ++it) {
    c.append(Gate::cnot(it->child, it->parent));
  }
  for (Qubit q : support) {
    if (p[q] == PauliAxis::X) c.append(Gate::h(q));
    if (p[q] == PauliAxis::Y) c.append(Gate::gy(q));
  }
  return c;
}

namespace {

// Position of a string inside a layer: (block within layer, string index).
struct StringRef {
  std::size_t block = 0;
  std::size_t string = 0;
  auto operator<=>(const StringRef&) const = default;
};

using Toucher = std::vector<std::optional<StringRef>>;

// For each qubit, the last string of `layer` acting on it, provided that
// string is the final string of its block.
Toucher tail_strings(const Layer& layer, std::size_t n) {
  Toucher out(n);
  const auto blocks = layer.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& strings = blocks[b]->strings;
    if (strings.empty()) continue;
    const std::size_t last = strings.size() - 1;
    for (Qubit q : active_qubits(*blocks[b])) {
      if (strings[last].string[q] != PauliAxis::I) {
        out[q] = StringRef{b, last};
      } else {
        out[q].reset();
      }
    }
  }
  return out;
}

// For each qubit, the first string of `layer` acting on it, provided it is
// the first string of its block.
Toucher head_strings(const Layer& layer, std::size_t n) {
  Toucher out(n);
  std::vector<bool> seen(n, false);
  const auto blocks = layer.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& strings = blocks[b]->strings;
    if (strings.empty()) continue;
    for (Qubit q : active_qubits(*blocks[b])) {
      if (seen[q]) continue;
      seen[q] = true;
      if (strings[0].string[q] != PauliAxis::I) out[q] = StringRef{b, 0};
    }
  }
  return out;
}

const PauliString& string_at(const Layer& layer, StringRef r) {
  return layer.blocks()[r.block]->strings[r.string].string;
}

// Shared-axis qubit sets between junction strings, keyed by (tail, head).
std::map<std::pair<StringRef, StringRef>, QubitSet> junction_sets(const Layer& first,
                                                                   const Layer& second,
                                                                   std::size_t n) {
  const Toucher tails = tail_strings(first, n);
  const Toucher heads = head_strings(second, n);
  std::map<std::pair<StringRef, StringRef>, QubitSet> out;
  for (Qubit q = 0; q < n; ++q) {
    if (!tails[q] || !heads[q]) continue;
    const PauliAxis a = string_at(first, *tails[q])[q];
    if (a != PauliAxis::I && a == string_at(second, *heads[q])[q]) {
      out[{*tails[q], *heads[q]}].push_back(q);
    }
  }
  return out;
}

std::size_t layer_width(const Layer& layer) {
  return layer.main_block.strings.empty() ? 0 : layer.main_block.strings.front().string.size();
}

QubitSet shared_axes(const PauliString& a, const PauliString& b) {
  QubitSet out;
  for (Qubit q = 0; q < a.size(); ++q) {
    if (a[q] != PauliAxis::I && a[q] == b[q]) out.push_back(q);
  }
  return out;
}

void add_chain(std::vector<TreeEdge>& prefix, const QubitSet& s) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i) prefix.push_back({s[i], s[i + 1]});
}

// Leading edges of `plan` lying inside `s`.
std::vector<TreeEdge> shared_prefix(const TreePlan& plan, const QubitSet& s) {
  std::vector<TreeEdge> out;
  for (const auto& e : plan.edges) {
    if (!std::binary_search(s.begin(), s.end(), e.child) ||
        !std::binary_search(s.begin(), s.end(), e.parent)) {
      break;
    }
    out.push_back(e);
  }
  return out;
}

struct BlockWork {
  const PauliBlock* block = nullptr;
  std::optional<std::size_t> head;  // emitted first
  std::optional<std::size_t> tail;  // emitted last
  std::vector<std::vector<TreeEdge>> prefix;
  std::vector<std::size_t> order;
  std::vector<TreePlan> plans;
};

void order_block(BlockWork& w) {
  const auto& strings = w.block->strings;
  std::vector<std::size_t> reserved;
  if (w.head) reserved.push_back(*w.head);
  if (w.tail && w.tail != w.head) reserved.push_back(*w.tail);
  if (w.head) w.order.push_back(*w.head);
  for (const auto& g : most_overlap_sort(*w.block, reserved)) {
    w.order.push_back(g.first);
    if (!g.second) continue;
    w.order.push_back(*g.second);
    const QubitSet s = shared_axes(strings[g.first].string, strings[*g.second].string);
    if (s.size() >= 2) {
      add_chain(w.prefix[g.first], s);
      add_chain(w.prefix[*g.second], s);
    }
  }
  if (w.tail && w.tail != w.head) w.order.push_back(*w.tail);
}

void plan_block(BlockWork& w) {
  const auto& strings = w.block->strings;
  const std::size_t m = strings.size();
  w.plans.assign(m, TreePlan{});
  std::vector<bool> fixed(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    if (!w.prefix[i].empty()) {
      w.plans[i] = plan_with_prefix(strings[i].string, w.prefix[i]);
      fixed[i] = true;
    }
  }
  // Lone strings borrow the opening edges of a neighbour's plan.
  for (std::size_t pos = 0; pos < w.order.size(); ++pos) {
    const std::size_t i = w.order[pos];
    if (fixed[i]) continue;
    const PauliString& p = strings[i].string;
    if (p.is_identity()) continue;
    std::vector<TreeEdge> best;
    if (pos > 0) {
      const std::size_t l = w.order[pos - 1];
      best = shared_prefix(w.plans[l], shared_axes(p, strings[l].string));
    }
    if (pos + 1 < w.order.size() && fixed[w.order[pos + 1]]) {
      const std::size_t r = w.order[pos + 1];
      auto cand = shared_prefix(w.plans[r], shared_axes(p, strings[r].string));
      if (cand.size() > best.size()) best = std::move(cand);
    }
    w.plans[i] = plan_with_prefix(p, best);
    fixed[i] = true;
  }
}

}  // namespace

std::size_t layer_overlap(const Layer& first, const Layer& second) {
  std::size_t total = 0;
  for (const auto& [key, s] : junction_sets(first, second, layer_width(first))) total += s.size();
  return total;
}

LayerPairing pair_layers(const Schedule& s) {
  const std::size_t n = s.layers.size();
  std::vector<std::size_t> score(n > 0 ? n - 1 : 0);
  for (std::size_t i = 0; i + 1 < n; ++i) score[i] = layer_overlap(s.layers[i], s.layers[i + 1]);
  std::vector<bool> used(n, false);
  LayerPairing out;
  while (true) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (used[i] || used[i + 1]) continue;
      if (!best || score[i] > score[*best]) best = i;
    }
    if (!best) break;
    used[*best] = used[*best + 1] = true;
    out.pairs.emplace_back(*best, *best + 1);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!used[i]) out.leftovers.push_back(i);
  }
  return out;
}

std::vector<StringGroup> most_overlap_sort(const PauliBlock& block,
                                           const std::vector<std::size_t>& reserved) {
  const std::size_t m = block.strings.size();
  std::vector<bool> taken(m, false);
  for (std::size_t r : reserved) {
    if (r < m) taken[r] = true;
  }
  struct Candidate {
    std::size_t score, a, b;
  };
  std::vector<Candidate> cands;
  for (std::size_t a = 0; a < m; ++a) {
    if (taken[a]) continue;
    for (std::size_t b = a + 1; b < m; ++b) {
      if (taken[b]) continue;
      const std::size_t sc = string_overlap(block.strings[a].string, block.strings[b].string);
      if (sc > 0) cands.push_back({sc, a, b});
    }
  }
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Candidate& x, const Candidate& y) { return x.score > y.score; });
  std::vector<StringGroup> groups;
  for (const auto& c : cands) {
    if (taken[c.a] || taken[c.b]) continue;
    taken[c.a] = taken[c.b] = true;
    groups.push_back({c.a, c.b});
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!taken[i]) groups.push_back({i, std::nullopt});
  }
  std::sort(groups.begin(), groups.end(),
            [](const StringGroup& x, const StringGroup& y) { return x.first < y.first; });
  return groups;
}

SynthesisResult ft_synthesize(const Schedule& s, const Bindings& bindings) {
  const std::size_t n = s.n_qubits;
  std::vector<std::vector<BlockWork>> work(s.layers.size());
  for (std::size_t l = 0; l < s.layers.size(); ++l) {
    for (const PauliBlock* b : s.layers[l].blocks()) {
      BlockWork w;
      w.block = b;
      w.prefix.resize(b->strings.size());
      work[l].push_back(std::move(w));
    }
  }

  const LayerPairing pairing = pair_layers(s);
  for (const auto& [i, j] : pairing.pairs) {
    for (auto& w : work[i]) {
      if (!w.block->strings.empty()) w.tail = w.block->strings.size() - 1;
    }
    for (auto& w : work[j]) {
      if (!w.block->strings.empty()) w.head = 0;
    }
    for (const auto& [key, set] : junction_sets(s.layers[i], s.layers[j], n)) {
      if (set.size() < 2) continue;
      add_chain(work[i][key.first.block].prefix[key.first.string], set);
      add_chain(work[j][key.second.block].prefix[key.second.string], set);
    }
  }

  SynthesisResult out;
  Circuit raw(n);
  for (auto& layer : work) {
    for (auto& w : layer) {
      order_block(w);
      plan_block(w);
      const double param = w.block->parameter.resolve(bindings);
      for (std::size_t i : w.order) {
        const auto& ws = w.block->strings[i];
        if (ws.string.is_identity()) continue;
        const double angle = param * ws.weight;
        raw.append(synth_string(ws.string, angle, w.plans[i]));
        out.order.push_back({ws.string, angle});
      }
    }
  }
  out.circuit = peephole_cancel(raw);
  return out;
}

SynthesisResult naive_synthesize(const Schedule& s, const Bindings& bindings) {
  SynthesisResult out;
  out.circuit = Circuit(s.n_qubits);
  for (const auto& layer : s.layers) {
    for (const PauliBlock* b : layer.blocks()) {
      const double param = b->parameter.resolve(bindings);
      for (const auto& ws : b->strings) {
        if (ws.string.is_identity()) continue;
        const double angle = param * ws.weight;
        out.circuit.append(synth_string(ws.string, angle, chain_plan(ws.string)));
        out.order.push_back({ws.string, angle});
      }
    }
  }
  return out;
}

}  // namespace paulic
