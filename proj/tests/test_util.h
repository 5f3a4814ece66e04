// Copyright 2026 The Netgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NETGAME_TESTS_TEST_UTIL_H_
#define NETGAME_TESTS_TEST_UTIL_H_

// Fixture builders and brute-force oracles shared by the test binaries.
// Nothing in here calls into the algorithms under test beyond the
// data-structure accessors of Network.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "netgame/game.h"
#include "netgame/network.h"
#include "netgame/path_flow.h"
#include "netgame/rational.h"

namespace netgame::testing {

// n/d in canonical form; mpq_class(n, d) alone does not reduce.
inline Rational Frac(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

using EdgeTuple = std::tuple<std::string, std::string, int, int>;

inline Network MakeNetwork(std::vector<std::string> nodes,
                           const std::vector<EdgeTuple>& edges,
                           std::string source = "s", std::string sink = "t") {
  RawNetwork raw;
  raw.nodes = std::move(nodes);
  raw.source = std::move(source);
  raw.sink = std::move(sink);
  for (const auto& [from, to, cap, cost] : edges) {
    raw.edges.push_back(RawEdge{from, to, Rational(cap), Rational(cost)});
  }
  return Network::Validate(raw);
}

// Flow 2,1,2,1,1 on s1,12,2t,s2,1t; capacities equal to the flow.
inline Network CrossingPaths() {
  return MakeNetwork({"s", "1", "2", "t"}, {{"s", "1", 2, 1},
                                            {"1", "2", 1, 1},
                                            {"2", "t", 2, 1},
                                            {"s", "2", 1, 1},
                                            {"1", "t", 1, 1}});
}

// Unique minimum-cost maximum flow along three cost-3 paths.
inline Network UniqueXStar() {
  return MakeNetwork({"s", "1", "2", "3", "4", "t"}, {{"s", "4", 1, 3},
                                                      {"1", "3", 1, 1},
                                                      {"s", "1", 1, 1},
                                                      {"s", "2", 2, 1},
                                                      {"2", "4", 1, 1},
                                                      {"2", "3", 1, 1},
                                                      {"3", "t", 1, 1},
                                                      {"4", "t", 1, 1},
                                                      {"1", "t", 1, 2}});
}

// Minimum cut {(1,3),(2,3),(2,4)} of capacity 3, all costs 1.
inline Network ThreeCut() {
  return MakeNetwork({"s", "1", "2", "3", "4", "t"}, {{"2", "1", 1, 1},
                                                      {"4", "3", 1, 1},
                                                      {"s", "1", 2, 1},
                                                      {"2", "3", 1, 1},
                                                      {"s", "2", 3, 1},
                                                      {"1", "3", 1, 1},
                                                      {"2", "4", 1, 1},
                                                      {"3", "t", 3, 1},
                                                      {"4", "t", 2, 1}});
}

// The cheapest path s-1-2-t costs 3 but every maximum flow costs 8.
inline Network CostlyShortcut() {
  return MakeNetwork({"s", "1", "2", "t"}, {{"s", "1", 1, 1},
                                            {"s", "2", 1, 3},
                                            {"1", "t", 1, 3},
                                            {"2", "t", 1, 1},
                                            {"1", "2", 1, 1}});
}

// Two equal-cost branches behind a unit bottleneck s->m.
inline Network TwoBranches() {
  return MakeNetwork({"s", "m", "a", "b", "t"}, {{"s", "m", 1, 1},
                                                 {"m", "a", 1, 1},
                                                 {"a", "t", 1, 1},
                                                 {"m", "b", 1, 1},
                                                 {"b", "t", 1, 1}});
}

inline EdgeId Edge(const Network& net, const std::string& from,
                   const std::string& to) {
  return *net.FindEdge(*net.FindNode(from), *net.FindNode(to));
}

inline FlowPath Path(const Network& net, const std::vector<std::string>& nodes,
                     const Rational& amount) {
  FlowPath path;
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    path.edges.push_back(Edge(net, nodes[k], nodes[k + 1]));
  }
  path.amount = amount;
  return path;
}

inline PathFlow Flow(std::vector<FlowPath> paths) {
  PathFlow flow{std::move(paths)};
  std::sort(flow.paths.begin(), flow.paths.end());
  return flow;
}

inline Attack Cuts(const Network& net,
                   const std::vector<std::pair<std::string, std::string>>& e) {
  std::vector<EdgeId> ids;
  for (const auto& [from, to] : e) ids.push_back(Edge(net, from, to));
  std::sort(ids.begin(), ids.end());
  return Attack{ids};
}

// ---- brute-force oracles --------------------------------------------------

// Minimum capacity over all 2^(n-2) s-t partitions.
inline Rational BruteForceMinCut(const Network& net) {
  const int n = net.num_nodes();
  std::vector<int> free;
  for (int v = 0; v < n; ++v) {
    if (v != net.source() && v != net.sink()) free.push_back(v);
  }
  std::optional<Rational> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size());
       ++mask) {
    std::vector<bool> in_s(n, false);
    in_s[net.source()] = true;
    for (std::size_t k = 0; k < free.size(); ++k) {
      if (mask >> k & 1) in_s[free[k]] = true;
    }
    Rational cap = 0;
    for (const EdgeSpec& e : net.edges()) {
      if (in_s[e.from] && !in_s[e.to]) cap += e.capacity;
    }
    if (!best || cap < *best) best = cap;
  }
  return *best;
}

// Payoffs computed path by path from the definitions.
inline std::pair<Rational, Rational> DirectPayoffs(const Network& net,
                                                   const PathFlow& x,
                                                   const Attack& mu,
                                                   const Rational& p1,
                                                   const Rational& p2) {
  Rational sent = 0, kept = 0, transport = 0, attack = 0;
  for (const FlowPath& p : x.paths) {
    bool hit = false;
    for (EdgeId e : p.edges) {
      transport += p.amount * net.edge(e).cost;
      if (std::find(mu.disrupted.begin(), mu.disrupted.end(), e) !=
          mu.disrupted.end()) {
        hit = true;
      }
    }
    sent += p.amount;
    if (!hit) kept += p.amount;
  }
  for (EdgeId e : mu.disrupted) attack += net.edge(e).capacity;
  return {p1 * kept - transport, p2 * (sent - kept) - attack};
}

inline std::pair<Rational, Rational> DirectExpectedPayoffs(
    const Network& net, const DefenderStrategy& s1, const AttackerStrategy& s2,
    const Rational& p1, const Rational& p2) {
  Rational u1 = 0, u2 = 0;
  for (const auto& a : s1.support) {
    for (const auto& b : s2.support) {
      auto [v1, v2] = DirectPayoffs(net, a.action, b.action, p1, p2);
      u1 += a.prob * b.prob * v1;
      u2 += a.prob * b.prob * v2;
    }
  }
  return {u1, u2};
}

// Best attacker payoff over all 2^m attacks.
inline Rational BruteForceAttackerValue(const Network& net,
                                        const DefenderStrategy& s1,
                                        const Rational& p1,
                                        const Rational& p2) {
  const int m = net.num_edges();
  std::optional<Rational> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Attack mu;
    for (int e = 0; e < m; ++e) {
      if (mask >> e & 1) mu.disrupted.push_back(e);
    }
    const Rational u2 =
        DirectExpectedPayoffs(net, s1, AttackerStrategy::Pure(mu), p1, p2)
            .second;
    if (!best || u2 > *best) best = u2;
  }
  return *best;
}

// Solves the square system a*x = b by Gauss-Jordan elimination; nullopt
// if singular.
inline std::optional<std::vector<Rational>> SolveSquare(
    std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = b[k] / a[k][k];
  return x;
}

// max c.x s.t. a x <= b, x >= 0 with a bounded feasible region, by
// enumerating every basic solution. Exponential; keep it tiny.
inline std::optional<Rational> VertexEnumerationMax(
    const std::vector<Rational>& c, const std::vector<std::vector<Rational>>& a,
    const std::vector<Rational>& b) {
  const std::size_t n = c.size();
  // Rows: the m inequality rows, then -x_j <= 0.
  std::vector<std::vector<Rational>> rows = a;
  std::vector<Rational> rhs = b;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> row(n, Rational(0));
    row[j] = -1;
    rows.push_back(row);
    rhs.push_back(0);
  }
  std::optional<Rational> best;
  std::vector<std::size_t> pick(n);
  const std::size_t total = rows.size();
  std::vector<bool> chosen(total, false);
  std::fill(chosen.begin(), chosen.begin() + n, true);
  std::reverse(chosen.begin(), chosen.end());
  do {
    std::vector<std::vector<Rational>> sys;
    std::vector<Rational> sys_b;
    for (std::size_t r = 0; r < total; ++r) {
      if (chosen[r]) {
        sys.push_back(rows[r]);
        sys_b.push_back(rhs[r]);
      }
    }
    auto x = SolveSquare(sys, sys_b);
    if (!x) continue;
    bool feasible = true;
    for (std::size_t r = 0; r < total && feasible; ++r) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < n; ++j) lhs += rows[r][j] * (*x)[j];
      if (lhs > rhs[r]) feasible = false;
    }
    if (!feasible) continue;
    Rational value = 0;
    for (std::size_t j = 0; j < n; ++j) value += c[j] * (*x)[j];
    if (!best || value > *best) best = value;
  } while (std::next_permutation(chosen.begin(), chosen.end()));
  return best;
}

// ---- random instances -----------------------------------------------------

// Connected-ish random network on n nodes s, 1..n-2, t with integer
// capacities and costs in [0, max_cap] and [0, max_cost].
inline Network RandomNetwork(std::mt19937_64& rng, int max_nodes, int max_cap,
                             int max_cost) {
  std::uniform_int_distribution<int> node_count(2, max_nodes);
  const int n = node_count(rng);
  std::vector<std::string> names{"s"};
  for (int k = 1; k + 1 < n; ++k) names.push_back(std::to_string(k));
  names.push_back("t");
  std::uniform_int_distribution<int> cap(0, max_cap), cost(0, max_cost);
  std::bernoulli_distribution present(0.45);
  std::vector<EdgeTuple> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v || !present(rng)) continue;
      edges.emplace_back(names[u], names[v], cap(rng), cost(rng));
    }
  }
  return MakeNetwork(names, edges);
}

}  // namespace netgame::testing

#endif  // NETGAME_TESTS_TEST_UTIL_H_
