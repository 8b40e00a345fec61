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

#include "paulic/synth_sc.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>

namespace paulic {

Mapping::Mapping(std::vector<Qubit> to_physical) : to_phys_(std::move(to_physical)) {
  to_log_.assign(to_phys_.size(), std::numeric_limits<Qubit>::max());
  for (Qubit l = 0; l < to_phys_.size(); ++l) {
    const Qubit p = to_phys_[l];
    if (p >= to_phys_.size() || to_log_[p] != std::numeric_limits<Qubit>::max()) {
      throw std::invalid_argument("mapping is not a permutation");
    }
    to_log_[p] = l;
  }
}

Mapping Mapping::identity(std::size_t n) {
  std::vector<Qubit> v(n);
  for (Qubit q = 0; q < n; ++q) v[q] = q;
  return Mapping(std::move(v));
}

void Mapping::swap_physical(Qubit a, Qubit b) {
  const Qubit la = to_log_.at(a);
  const Qubit lb = to_log_.at(b);
  std::swap(to_log_[a], to_log_[b]);
  to_phys_[la] = b;
  to_phys_[lb] = a;
}

Mapping initial_mapping(const DeviceModel& d, std::size_t n_logical) {
  const std::size_t n = d.n_qubits();
  if (n_logical > n) {
    throw std::invalid_argument(std::to_string(n_logical) + " qubits do not fit on a " +
                                std::to_string(n) + "-qubit device");
  }
  Qubit seed = 0;
  for (Qubit q = 1; q < n; ++q) {
    if (d.degree(q) > d.degree(seed)) seed = q;
  }
  std::vector<bool> chosen(n, false);
  std::vector<std::size_t> links(n, 0);  // couplings into the chosen set
  auto choose = [&](Qubit q) {
    chosen[q] = true;
    for (Qubit v : d.neighbors(q)) ++links[v];
  };
  if (n_logical > 0) choose(seed);
  for (std::size_t k = 1; k < n_logical; ++k) {
    std::optional<Qubit> best;
    for (Qubit q = 0; q < n; ++q) {
      if (chosen[q]) continue;
      if (!best || links[q] > links[*best] ||
          (links[q] == links[*best] && d.degree(q) > d.degree(*best))) {
        best = q;
      }
    }
    choose(*best);
  }

  // BFS inside the chosen set, ascending neighbours.
  auto bfs = [&](Qubit start, std::vector<std::size_t>* dist) {
    std::vector<Qubit> order{start};
    std::vector<std::size_t> hops(n, n);
    hops[start] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (Qubit v : d.neighbors(order[i])) {
        if (chosen[v] && hops[v] == n) {
          hops[v] = hops[order[i]] + 1;
          order.push_back(v);
        }
      }
    }
    if (dist) *dist = std::move(hops);
    return order;
  };

  // Number from a peripheral qubit so chains come out in order.
  std::vector<Qubit> to_phys;
  std::vector<bool> placed(n, false);
  if (n_logical > 0) {
    Qubit start = seed;
    std::size_t eccentricity = 0;
    for (Qubit q = 0; q < n; ++q) {
      if (!chosen[q]) continue;
      std::vector<std::size_t> dist;
      const std::vector<Qubit> reach = bfs(q, &dist);
      const std::size_t e = dist[reach.back()];
      if (e > eccentricity) {
        start = q;
        eccentricity = e;
      }
    }
    to_phys = bfs(start, nullptr);
    for (Qubit q : to_phys) placed[q] = true;
  }
  for (Qubit q = 0; q < n; ++q) {
    if (!placed[q]) to_phys.push_back(q);
  }
  return Mapping(std::move(to_phys));
}

bool EmbeddedTree::contains(Qubit physical) const {
  return physical < parent.size() && (physical == root || parent[physical].has_value());
}

namespace {

// Physical qubits reachable from `start` inside `allowed`, BFS order with
// ascending neighbours.
std::vector<Qubit> component(const DeviceModel& d, Qubit start, const std::vector<bool>& allowed) {
  std::vector<Qubit> out{start};
  std::vector<bool> seen(d.n_qubits(), false);
  seen[start] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Qubit v : d.neighbors(out[i])) {
      if (allowed[v] && !seen[v]) {
        seen[v] = true;
        out.push_back(v);
      }
    }
  }
  return out;
}

std::vector<bool> mapped_set(const QubitSet& logical, const Mapping& m, std::size_t n) {
  std::vector<bool> out(n, false);
  for (Qubit l : logical) out[m.physical(l)] = true;
  return out;
}

// Sum of pairwise hop distances between the block's mapped active qubits.
std::size_t spread_of(const PauliBlock& b, const Mapping& m, const DeviceModel& d) {
  const QubitSet active = active_qubits(b);
  std::size_t total = 0;
  for (std::size_t i = 0; i < active.size(); ++i) {
    for (std::size_t j = i + 1; j < active.size(); ++j) {
      total += d.distance(m.physical(active[i]), m.physical(active[j]));
    }
  }
  return total;
}

void check_fits(std::size_t n_logical, const DeviceModel& d) {
  if (n_logical > d.n_qubits()) {
    throw std::invalid_argument(std::to_string(n_logical) + " qubits do not fit on a " +
                                std::to_string(d.n_qubits()) + "-qubit device");
  }
}

}  // namespace

BlockTree build_block_tree(const PauliBlock& b, const Mapping& m, const DeviceModel& d,
                           const QubitSet& prev_core,
                           const std::vector<const PauliBlock*>& lookahead) {
  const std::size_t n = d.n_qubits();
  if (m.size() != n) throw std::invalid_argument("mapping size differs from the device");
  const QubitSet active = active_qubits(b);
  if (active.empty()) throw std::invalid_argument("block has no active qubit");
  QubitSet candidates = core_qubits(b);
  if (candidates.empty()) candidates = active;

  BlockTree out;
  out.mapping = m;
  Mapping& map = out.mapping;

  const std::vector<bool> core_phys = mapped_set(candidates, map, n);
  Qubit root_log = candidates.front();
  std::size_t best_size = 0;
  bool best_prev = false;
  for (Qubit c : candidates) {
    const std::size_t size = component(d, map.physical(c), core_phys).size();
    const bool prev = std::binary_search(prev_core.begin(), prev_core.end(), c);
    if (size > best_size || (size == best_size && prev && !best_prev)) {
      root_log = c;
      best_size = size;
      best_prev = prev;
    }
  }

  while (true) {
    const std::vector<bool> act_phys = mapped_set(active, map, n);
    const std::vector<Qubit> tree = component(d, map.physical(root_log), act_phys);
    if (tree.size() == active.size()) break;
    std::vector<bool> in_tree(n, false);
    for (Qubit p : tree) in_tree[p] = true;
    // nearest outside active qubit and its landing spot
    double best = std::numeric_limits<double>::infinity();
    Qubit from = 0, to = 0;
    for (Qubit l : active) {
      const Qubit p = map.physical(l);
      if (in_tree[p]) continue;
      for (Qubit t : tree) {
        if (d.path_cost(p, t) < best) {
          best = d.path_cost(p, t);
          from = p;
          to = t;
        }
      }
    }
    std::vector<Qubit> path = cheapest_path(d, from, to);
    const auto hit = std::find_if(path.begin(), path.end(), [&](Qubit q) { return in_tree[q]; });
    path.erase(hit + 1, path.end());
    // A lone root may walk part of the way; the split is chosen by the
    // spread of the upcoming blocks, preferring the outside qubit to move.
    const std::size_t hops = path.size() - 1;
    std::size_t advance = hops - 1;
    if (tree.size() == 1 && !lookahead.empty() && hops > 1) {
      std::size_t best_score = std::numeric_limits<std::size_t>::max();
      for (std::size_t j = hops; j-- > 0;) {
        Mapping trial = map;
        for (std::size_t i = 0; i < j; ++i) trial.swap_physical(path[i], path[i + 1]);
        for (std::size_t i = hops; i > j + 1; --i) trial.swap_physical(path[i], path[i - 1]);
        std::size_t score = 0;
        for (const PauliBlock* nb : lookahead) score += spread_of(*nb, trial, d);
        if (score < best_score) {
          best_score = score;
          advance = j;
        }
      }
    }
    for (std::size_t i = 0; i < advance; ++i) {
      out.swaps.push_back(Gate::swap(path[i], path[i + 1]));
      map.swap_physical(path[i], path[i + 1]);
    }
    for (std::size_t i = hops; i > advance + 1; --i) {
      out.swaps.push_back(Gate::swap(path[i], path[i - 1]));
      map.swap_physical(path[i], path[i - 1]);
    }
  }

  EmbeddedTree& t = out.tree;
  t.root = map.physical(root_log);
  t.parent.assign(n, std::nullopt);
  t.depth.assign(n, 0);
  const std::vector<bool> act_phys = mapped_set(active, map, n);
  std::vector<bool> seen(n, false);
  t.nodes.push_back(t.root);
  seen[t.root] = true;
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const Qubit u = t.nodes[i];
    for (Qubit v : d.neighbors(u)) {
      if (act_phys[v] && !seen[v]) {
        seen[v] = true;
        t.parent[v] = u;
        t.depth[v] = t.depth[u] + 1;
        t.nodes.push_back(v);
      }
    }
  }
  for (Qubit p : t.nodes) t.hosted.push_back(map.logical(p));
  return out;
}

namespace {

// BFS tree over the nodes of `t`, rooted at `root`.
EmbeddedTree reroot(const EmbeddedTree& t, Qubit root, const Mapping& m, const DeviceModel& d) {
  const std::size_t n = t.parent.size();
  std::vector<bool> allowed(n, false);
  for (Qubit q : t.nodes) allowed[q] = true;
  EmbeddedTree out;
  out.root = root;
  out.parent.assign(n, std::nullopt);
  out.depth.assign(n, 0);
  out.nodes = component(d, root, allowed);
  for (std::size_t i = 1; i < out.nodes.size(); ++i) {
    const Qubit v = out.nodes[i];
    // first BFS neighbour seen is the parent
    for (std::size_t j = 0; j < i; ++j) {
      const Qubit u = out.nodes[j];
      if (d.has_edge(u, v)) {
        out.parent[v] = u;
        out.depth[v] = out.depth[u] + 1;
        break;
      }
    }
  }
  for (Qubit q : out.nodes) out.hosted.push_back(m.logical(q));
  return out;
}

// Root for one string: the support qubit closest in total to the rest of
// the support inside the tree; the block root wins ties, then lower index.
Qubit string_root(const PauliString& p, const EmbeddedTree& t, const Mapping& m,
                  const DeviceModel& d) {
  const std::size_t n = t.parent.size();
  std::vector<bool> allowed(n, false);
  for (Qubit q : t.nodes) allowed[q] = true;
  std::vector<Qubit> phys;
  for (Qubit l : p.support()) phys.push_back(m.physical(l));
  std::sort(phys.begin(), phys.end());
  Qubit best = t.root;
  std::size_t best_score = std::numeric_limits<std::size_t>::max();
  for (Qubit r : phys) {
    std::vector<std::size_t> dist(n, n);
    dist[r] = 0;
    for (Qubit u : component(d, r, allowed)) {
      for (Qubit v : d.neighbors(u)) {
        if (allowed[v] && dist[v] == n) dist[v] = dist[u] + 1;
      }
    }
    std::size_t score = 0;
    for (Qubit q : phys) score += dist[q];
    if (score < best_score || (score == best_score && r == t.root)) {
      best = r;
      best_score = score;
    }
  }
  return best;
}

std::size_t support_spread(const PauliString& p, const Mapping& m, const DeviceModel& d) {
  const QubitSet support = p.support();
  std::size_t total = 0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    for (std::size_t j = i + 1; j < support.size(); ++j) {
      total += d.distance(m.physical(support[i]), m.physical(support[j]));
    }
  }
  return total;
}

}  // namespace

void sc_synthesize_string(const PauliString& p, double angle, const EmbeddedTree& t, Mapping& m,
                          Circuit& out) {
  const QubitSet support = p.support();
  if (support.empty()) return;
  std::vector<bool> live(m.size(), false);
  for (Qubit l : support) {
    const Qubit q = m.physical(l);
    if (!t.contains(q)) {
      throw std::invalid_argument("string qubit " + std::to_string(l) + " is off the tree");
    }
    live[q] = true;
  }
  for (Qubit l : support) {
    if (p[l] == PauliAxis::X) out.append(Gate::h(m.physical(l)));
    if (p[l] == PauliAxis::Y) out.append(Gate::gy_dag(m.physical(l)));
  }

  // deepest nodes first, BFS order within a depth
  std::vector<Qubit> walk(t.nodes.begin(), t.nodes.end());
  std::stable_sort(walk.begin(), walk.end(),
                   [&](Qubit x, Qubit y) { return t.depth[x] > t.depth[y]; });

  // A swap is routing only while every earlier gate on both of its qubits
  // was routing too; such swaps stay applied and are not mirrored.
  std::vector<bool> touched(m.size(), false);
  std::vector<Gate> body;
  std::size_t n_live = support.size();
  Qubit meet = t.root;
  for (Qubit node : walk) {
    if (n_live == 1) break;
    if (node == t.root || !live[node]) continue;
    const Qubit up = *t.parent[node];
    if (live[up]) {
      body.push_back(Gate::cnot(node, up));
      touched[node] = touched[up] = true;
      --n_live;
    } else {
      const Gate g = Gate::swap(node, up);
      if (!touched[node] && !touched[up]) {
        out.append(g);
        m.swap_physical(node, up);
      } else {
        body.push_back(g);
        touched[node] = touched[up] = true;
      }
      live[up] = true;
    }
    live[node] = false;
  }
  for (Qubit q : t.nodes) {
    if (live[q]) meet = q;
  }
  for (const auto& g : body) out.append(g);
  out.append(Gate::rz(meet, angle));
  for (auto it = body.rbegin(); it != body.rend(); ++it) out.append(*it);
  for (Qubit l : support) {
    if (p[l] == PauliAxis::X) out.append(Gate::h(m.physical(l)));
    if (p[l] == PauliAxis::Y) out.append(Gate::gy(m.physical(l)));
  }
}

void sc_synthesize_block(const PauliBlock& b, const EmbeddedTree& t, Mapping& m,
                         const DeviceModel& d, const Bindings& bindings, Circuit& out,
                         std::vector<PauliRotation>& order) {
  const double param = b.parameter.resolve(bindings);
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < b.strings.size(); ++i) {
    if (!b.strings[i].string.is_identity()) pending.push_back(i);
  }
  while (!pending.empty()) {
    std::size_t pick = 0;
    std::size_t best = support_spread(b.strings[pending[0]].string, m, d);
    for (std::size_t k = 1; k < pending.size(); ++k) {
      const std::size_t sc = support_spread(b.strings[pending[k]].string, m, d);
      if (sc < best) {
        best = sc;
        pick = k;
      }
    }
    const auto& ws = b.strings[pending[pick]];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));
    const double angle = param * ws.weight;
    const Qubit root = string_root(ws.string, t, m, d);
    if (root == t.root) {
      sc_synthesize_string(ws.string, angle, t, m, out);
    } else {
      sc_synthesize_string(ws.string, angle, reroot(t, root, m, d), m, out);
    }
    order.push_back({ws.string, angle});
  }
}

namespace {

Mapping starting_mapping(std::size_t n_logical, const DeviceModel& d, const ScOptions& options) {
  if (!options.initial) return initial_mapping(d, n_logical);
  std::vector<Qubit> v = options.initial->layout();
  if (v.size() > d.n_qubits() || v.size() < n_logical) {
    throw std::invalid_argument("initial mapping does not match the program and device");
  }
  // extend a partial layout with the unused slots in ascending order
  std::vector<bool> used(d.n_qubits(), false);
  for (Qubit p : v) {
    if (p >= d.n_qubits()) throw std::invalid_argument("initial mapping outside the device");
    used[p] = true;
  }
  for (Qubit p = 0; p < d.n_qubits(); ++p) {
    if (!used[p]) v.push_back(p);
  }
  return Mapping(std::move(v));
}

// Index of the block with the smallest spread; ties to the earliest.
std::size_t closest(const std::vector<const PauliBlock*>& blocks, const Mapping& m,
                    const DeviceModel& d) {
  std::size_t pick = 0;
  std::size_t best = spread_of(*blocks[0], m, d);
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    const std::size_t sc = spread_of(*blocks[i], m, d);
    if (sc < best) {
      best = sc;
      pick = i;
    }
  }
  return pick;
}

}  // namespace

SynthesisResult sc_synthesize(const Schedule& s, const DeviceModel& d, const Bindings& bindings,
                              const ScOptions& options) {
  check_fits(s.n_qubits, d);
  Mapping map = starting_mapping(s.n_qubits, d, options);
  const Mapping start = map;
  Circuit raw(d.n_qubits());
  SynthesisResult out;
  QubitSet prev_core;
  std::vector<const PauliBlock*> remain;

  // schedule order, for the lookahead window
  std::vector<const PauliBlock*> sequence;
  std::map<const PauliBlock*, std::size_t> position;
  for (const auto& layer : s.layers) {
    for (const PauliBlock* b : layer.blocks()) {
      position[b] = sequence.size();
      sequence.push_back(b);
    }
  }
  std::vector<bool> done(sequence.size(), false);
  auto upcoming = [&](const PauliBlock& current) {
    std::vector<const PauliBlock*> window;
    for (std::size_t i = 0; i < sequence.size() && window.size() < options.lookahead; ++i) {
      if (!done[i] && sequence[i] != &current) window.push_back(sequence[i]);
    }
    return window;
  };
  auto tree_for = [&](const PauliBlock& b, const QubitSet& core) {
    return build_block_tree(b, map, d, core, upcoming(b));
  };
  auto run = [&](const PauliBlock& b, const BlockTree& bt) {
    for (const auto& g : bt.swaps) raw.append(g);
    map = bt.mapping;
    sc_synthesize_block(b, bt.tree, map, d, bindings, raw, out.order);
    done[position.at(&b)] = true;
  };

  for (const auto& layer : s.layers) {
    if (active_qubits(layer.main_block).empty()) continue;
    const BlockTree main = tree_for(layer.main_block, prev_core);
    run(layer.main_block, main);
    prev_core = core_qubits(layer.main_block);
    std::vector<bool> main_nodes(d.n_qubits(), false);
    for (Qubit p : main.tree.nodes) main_nodes[p] = true;

    // closest-first over the padding, as for the deferred blocks
    std::vector<const PauliBlock*> pads;
    for (const auto& pad : layer.padded_blocks) {
      if (!active_qubits(pad).empty()) pads.push_back(&pad);
    }
    while (!pads.empty()) {
      const std::size_t pick = closest(pads, map, d);
      const PauliBlock& pad = *pads[pick];
      pads.erase(pads.begin() + static_cast<std::ptrdiff_t>(pick));
      BlockTree bt = tree_for(pad, {});
      const bool disturbs = std::any_of(bt.swaps.begin(), bt.swaps.end(), [&](const Gate& g) {
        return main_nodes[g.qubits[0]] || main_nodes[g.qubits[1]];
      });
      if (disturbs) {
        remain.push_back(&pad);
      } else {
        run(pad, bt);
      }
    }
  }

  while (!remain.empty()) {
    const std::size_t pick = closest(remain, map, d);
    const PauliBlock& b = *remain[pick];
    remain.erase(remain.begin() + static_cast<std::ptrdiff_t>(pick));
    run(b, tree_for(b, {}));
  }

  raw.set_initial_layout(start.layout());
  raw.set_final_layout(map.layout());
  out.circuit = peephole_cancel(raw);
  return out;
}

Circuit naive_route(const Circuit& c, const DeviceModel& d, const std::optional<Mapping>& initial) {
  check_fits(c.n_qubits(), d);
  ScOptions opt;
  opt.initial = initial;
  Mapping map = starting_mapping(c.n_qubits(), d, opt);
  Circuit out(d.n_qubits());
  out.set_initial_layout(map.layout());
  for (const auto& g : c.gates()) {
    Gate r = g;
    r.qubits[0] = map.physical(g.qubits[0]);
    r.qubits[1] = map.physical(g.qubits[1]);
    if (g.is_two_qubit() && !d.has_edge(r.qubits[0], r.qubits[1])) {
      const std::vector<Qubit> path = cheapest_path(d, r.qubits[0], r.qubits[1]);
      for (std::size_t i = 0; i + 2 < path.size(); ++i) {
        out.append(Gate::swap(path[i], path[i + 1]));
        map.swap_physical(path[i], path[i + 1]);
      }
      r.qubits[0] = map.physical(g.qubits[0]);
    }
    out.append(r);
  }
  out.set_final_layout(map.layout());
  return out;
}

}  // namespace paulic
