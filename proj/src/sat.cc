#include "cnfgraph/sat.h"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

namespace cnfgraph {

SolveResult SolveResult::satisfiable(Assignment model) {
  return SolveResult(true, std::move(model), std::nullopt);
}

SolveResult SolveResult::unsatisfiable(std::optional<VariableId> conflict_var) {
  return SolveResult(false, {}, conflict_var);
}

namespace {

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

// Literal nodes: 2*i for the positive literal of the i-th variable, 2*i+1
// for its negation.
class ImplicationGraph {
 public:
  explicit ImplicationGraph(std::size_t num_vars) : succ_(2 * num_vars) {}

  void add_implication(std::uint32_t from, std::uint32_t to) {
    succ_[from].push_back(to);
  }
  std::size_t size() const { return succ_.size(); }

  // Component ids in completion order, i.e. reverse topological order of the
  // condensation.
  std::vector<std::uint32_t> strongly_connected_components() const {
    const std::size_t n = succ_.size();
    std::vector<std::uint32_t> index(n, kUnvisited), low(n, 0), comp(n, kUnvisited);
    std::vector<std::uint32_t> stack;
    std::vector<bool> on_stack(n, false);
    std::vector<std::pair<std::uint32_t, std::size_t>> frames;
    std::uint32_t next_index = 0, next_comp = 0;

    for (std::uint32_t root = 0; root < n; ++root) {
      if (index[root] != kUnvisited) continue;
      frames.emplace_back(root, 0);
      index[root] = low[root] = next_index++;
      stack.push_back(root);
      on_stack[root] = true;
      while (!frames.empty()) {
        auto& [v, edge] = frames.back();
        if (edge < succ_[v].size()) {
          const std::uint32_t w = succ_[v][edge++];
          if (index[w] == kUnvisited) {
            index[w] = low[w] = next_index++;
            stack.push_back(w);
            on_stack[w] = true;
            frames.emplace_back(w, 0);
          } else if (on_stack[w]) {
            low[v] = std::min(low[v], index[w]);
          }
          continue;
        }
        const std::uint32_t done = v;
        frames.pop_back();
        if (!frames.empty()) {
          const std::uint32_t parent = frames.back().first;
          low[parent] = std::min(low[parent], low[done]);
        }
        if (low[done] == index[done]) {
          std::uint32_t w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = next_comp;
          } while (w != done);
          ++next_comp;
        }
      }
    }
    return comp;
  }

 private:
  std::vector<std::vector<std::uint32_t>> succ_;
};

}  // namespace

SolveResult solve(const Cnf2& s) {
  if (s.is_true()) return SolveResult::satisfiable({});
  if (s.is_false()) return SolveResult::unsatisfiable(std::nullopt);

  const std::vector<VariableId> vars = s.variables();
  auto node = [&vars](Literal l) {
    const auto i = static_cast<std::uint32_t>(
        std::lower_bound(vars.begin(), vars.end(), l.var()) - vars.begin());
    return 2 * i + (l.is_positive() ? 0u : 1u);
  };

  ImplicationGraph graph(vars.size());
  for (const Clause& c : s.clauses()) {
    if (c.size() == 1) {
      graph.add_implication(node(c[0]) ^ 1u, node(c[0]));
    } else {
      graph.add_implication(node(c[0]) ^ 1u, node(c[1]));
      graph.add_implication(node(c[1]) ^ 1u, node(c[0]));
    }
  }

  const std::vector<std::uint32_t> comp = graph.strongly_connected_components();
  Assignment model;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const std::uint32_t pos = comp[2 * i], neg = comp[2 * i + 1];
    if (pos == neg) return SolveResult::unsatisfiable(vars[i]);
    model.bind(vars[i], pos < neg);
  }
  return SolveResult::satisfiable(std::move(model));
}

bool check_model(const Cnf2& s, const Assignment& m) {
  return apply_assignment(s, m).is_true();
}

}  // namespace cnfgraph
