#include "support/oracles.h"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace cnfgraph::testing {

bool truth_table_satisfiable(const Cnf2& s) {
  if (s.is_true()) return true;
  if (s.is_false()) return false;
  const std::vector<VariableId> vars = s.variables();
  std::map<VariableId, std::size_t> bit;
  for (std::size_t i = 0; i < vars.size(); ++i) bit.emplace(vars[i], i);
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << vars.size()); ++a) {
    bool all = true;
    for (const Clause& c : s.clauses()) {
      bool any = false;
      for (const Literal& l : c.literals()) {
        const bool value = (a >> bit.at(l.var())) & 1;
        if (value == l.is_positive()) any = true;
      }
      if (!any) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

namespace {

bool connected(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(n + 1);
  for (int i = 0; i <= n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int groups = n;
  for (auto [a, b] : edges) {
    const int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --groups;
    }
  }
  return groups == 1;
}

}  // namespace

std::vector<SimpleGraph> connected_corpus(int max_vertices, int max_edges) {
  std::vector<SimpleGraph> out;
  for (int n = 1; n <= max_vertices; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) pairs.emplace_back(a, b);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      if (__builtin_popcountll(mask) > max_edges) continue;
      std::vector<std::pair<int, int>> chosen;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if ((mask >> i) & 1) chosen.push_back(pairs[i]);
      }
      if (!connected(n, chosen)) continue;
      SimpleGraph g;
      for (int v = 1; v <= n; ++v) g.add_vertex(static_cast<VertexId>(v));
      for (auto [a, b] : chosen) {
        g.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
      }
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<SimpleGraph> unlabeled_trees(int max_edges) {
  std::vector<SimpleGraph> all;
  SimpleGraph single;
  single.add_vertex(1);
  std::vector<SimpleGraph> layer{single};
  all.push_back(single);
  for (int m = 1; m <= max_edges; ++m) {
    std::vector<SimpleGraph> next;
    for (const SimpleGraph& t : layer) {
      const VertexId fresh = t.max_vertex() + 1;
      for (VertexId v : t.vertices()) {
        SimpleGraph grown = t;
        grown.add_edge(v, fresh);
        const bool seen = std::ranges::any_of(
            next, [&](const SimpleGraph& h) { return are_isomorphic(h, grown); });
        if (!seen) next.push_back(std::move(grown));
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return all;
}

std::vector<VertexId> cut_vertices_by_deletion(const SimpleGraph& g) {
  std::vector<VertexId> out;
  const std::size_t base = connected_components(g).size();
  for (VertexId v : g.vertices()) {
    if (connected_components(without_vertex(g, v)).size() > base) out.push_back(v);
  }
  return out;
}

Cnf2 random_multigraph_cnf(std::mt19937_64& rng, int num_vars, int num_clauses,
                           bool allow_units) {
  std::uniform_int_distribution<int> var(1, num_vars), multiplicity(1, 4);
  std::bernoulli_distribution coin(0.5), unit(allow_units ? 0.15 : 0.0);
  auto literal = [&](int v, bool positive) {
    const VariableId id(static_cast<std::uint32_t>(v));
    return positive ? Literal::positive(id) : Literal::negative(id);
  };
  std::vector<RawClause> raw;
  while (static_cast<int>(raw.size()) < num_clauses) {
    const int a = var(rng);
    if (unit(rng) || num_vars < 2) {
      raw.push_back({literal(a, coin(rng))});
      continue;
    }
    int b = var(rng);
    while (b == a) b = var(rng);
    std::array<int, 4> polarities{0, 1, 2, 3};
    std::shuffle(polarities.begin(), polarities.end(), rng);
    const int k = std::min(multiplicity(rng), num_clauses - static_cast<int>(raw.size()));
    for (int i = 0; i < k; ++i) {
      raw.push_back({literal(a, polarities[i] < 2), literal(b, polarities[i] % 2 == 0)});
    }
  }
  return reduce(raw);
}

}  // namespace cnfgraph::testing
