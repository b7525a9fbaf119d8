#include "cnfgraph/graph.h"

#include <algorithm>
#include <charconv>
#include <deque>
#include <functional>
#include <ostream>
#include <sstream>

#include "cnfgraph/error.h"

namespace cnfgraph {

Edge Edge::of(VertexId a, VertexId b) {
  if (a == 0 || b == 0) {
    throw Error(ErrorCode::kInvalidArgument, "vertex ids must be positive");
  }
  if (a == b) {
    throw Error(ErrorCode::kInvalidArgument,
                "self-loop at vertex " + std::to_string(a));
  }
  return a < b ? Edge{a, b} : Edge{b, a};
}

SimpleGraph::SimpleGraph(
    std::initializer_list<std::pair<VertexId, VertexId>> edges) {
  for (auto [a, b] : edges) add_edge(a, b);
}

void SimpleGraph::add_vertex(VertexId v) {
  if (v == 0) {
    throw Error(ErrorCode::kInvalidArgument, "vertex ids must be positive");
  }
  adj_.try_emplace(v);
}

bool SimpleGraph::add_edge(VertexId a, VertexId b) {
  const Edge e = Edge::of(a, b);
  add_vertex(e.u);
  add_vertex(e.v);
  if (!adj_[e.u].insert(e.v).second) return false;
  adj_[e.v].insert(e.u);
  ++num_edges_;
  return true;
}

void SimpleGraph::remove_edge(Edge e) {
  if (!has_edge(e)) {
    throw Error(ErrorCode::kEdgeAbsent, "no edge " + std::to_string(e.u) +
                                            "-" + std::to_string(e.v));
  }
  adj_[e.u].erase(e.v);
  adj_[e.v].erase(e.u);
  --num_edges_;
}

void SimpleGraph::remove_vertex(VertexId v) {
  auto it = adj_.find(v);
  if (it == adj_.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                "no vertex " + std::to_string(v));
  }
  for (VertexId w : it->second) adj_[w].erase(v);
  num_edges_ -= it->second.size();
  adj_.erase(it);
}

bool SimpleGraph::has_edge(Edge e) const {
  auto it = adj_.find(e.u);
  return it != adj_.end() && it->second.count(e.v) != 0;
}

bool SimpleGraph::has_edge(VertexId a, VertexId b) const {
  if (a == b) return false;
  auto it = adj_.find(a);
  return it != adj_.end() && it->second.count(b) != 0;
}

const std::set<VertexId>& SimpleGraph::neighbors(VertexId v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                "no vertex " + std::to_string(v));
  }
  return it->second;
}

std::vector<VertexId> SimpleGraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(adj_.size());
  for (const auto& [v, _] : adj_) out.push_back(v);
  return out;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (const auto& [v, nbrs] : adj_) {
    for (auto it = nbrs.upper_bound(v); it != nbrs.end(); ++it) {
      out.push_back(Edge{v, *it});
    }
  }
  return out;
}

VertexId SimpleGraph::max_vertex() const {
  return adj_.empty() ? 0 : adj_.rbegin()->first;
}

void Multigraph::add_vertex(VertexId v) {
  if (v == 0) {
    throw Error(ErrorCode::kInvalidArgument, "vertex ids must be positive");
  }
  vertices_.insert(v);
}

void Multigraph::add_edge(Edge e, int count) {
  add_vertex(e.u);
  add_vertex(e.v);
  mult_[e] += count;
}

int Multigraph::multiplicity(Edge e) const {
  auto it = mult_.find(e);
  return it == mult_.end() ? 0 : it->second;
}

std::size_t Multigraph::num_edges() const {
  std::size_t n = 0;
  for (const auto& [_, m] : mult_) n += static_cast<std::size_t>(m);
  return n;
}

Multigraph associated_multigraph(const Cnf2& s) {
  if (!s.is_nontrivial()) {
    throw Error(ErrorCode::kNotNontrivial,
                "the constants true/false have no associated graph");
  }
  Multigraph g;
  for (const Clause& c : s.clauses()) {
    if (c.size() != 2) {
      throw Error(ErrorCode::kUnitClausePresent,
                  "unit clause " + to_string(c) + " is not an edge");
    }
    g.add_edge(Edge::of(c[0].var().index(), c[1].var().index()));
  }
  return g;
}

SimpleGraph as_simple(const Multigraph& g) {
  SimpleGraph out;
  for (VertexId v : g.vertices()) out.add_vertex(v);
  for (const auto& [e, m] : g.multiplicities()) {
    if (m != 1) {
      throw Error(ErrorCode::kMultiEdgePresent,
                  "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                      " has multiplicity " + std::to_string(m));
    }
    out.add_edge(e);
  }
  return out;
}

SimpleGraph associated_graph(const Cnf2& s) {
  return as_simple(associated_multigraph(s));
}

std::vector<SimpleGraph> connected_components(const SimpleGraph& g) {
  std::vector<SimpleGraph> out;
  std::set<VertexId> seen;
  for (const auto& [root, _] : g.adjacency()) {
    if (seen.count(root)) continue;
    SimpleGraph comp;
    comp.add_vertex(root);
    seen.insert(root);
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (VertexId w : g.neighbors(v)) {
        comp.add_edge(v, w);
        if (seen.insert(w).second) queue.push_back(w);
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

long cycle_rank(const SimpleGraph& g) {
  return static_cast<long>(g.num_edges()) - static_cast<long>(g.num_vertices()) +
         static_cast<long>(connected_components(g).size());
}

std::vector<long> component_cycle_ranks(const SimpleGraph& g) {
  std::vector<long> ranks;
  for (const SimpleGraph& c : connected_components(g)) {
    ranks.push_back(static_cast<long>(c.num_edges()) -
                    static_cast<long>(c.num_vertices()) + 1);
  }
  return ranks;
}

SimpleGraph two_core(const SimpleGraph& g) {
  SimpleGraph core = g;
  std::deque<VertexId> queue;
  for (const auto& [v, nbrs] : core.adjacency()) {
    if (nbrs.size() <= 1) queue.push_back(v);
  }
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    if (!core.has_vertex(v)) continue;
    const std::set<VertexId> nbrs = core.neighbors(v);
    core.remove_vertex(v);
    for (VertexId w : nbrs) {
      if (core.degree(w) == 1) queue.push_back(w);
    }
  }
  return core;
}

std::set<VertexId> cut_vertices(const SimpleGraph& g) {
  std::set<VertexId> cuts;
  std::map<VertexId, int> disc, low;
  int timer = 0;

  struct Frame {
    VertexId v;
    VertexId parent;
    std::vector<VertexId> nbrs;
    std::size_t next = 0;
    int children = 0;
  };

  for (const auto& [root, root_nbrs] : g.adjacency()) {
    if (disc.count(root)) continue;
    std::vector<Frame> stack;
    disc[root] = low[root] = timer++;
    stack.push_back({root, 0, {root_nbrs.begin(), root_nbrs.end()}});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < f.nbrs.size()) {
        const VertexId w = f.nbrs[f.next++];
        if (w == f.parent) continue;
        if (auto it = disc.find(w); it != disc.end()) {
          low[f.v] = std::min(low[f.v], it->second);
          continue;
        }
        disc[w] = low[w] = timer++;
        ++f.children;
        const auto& wn = g.neighbors(w);
        stack.push_back({w, f.v, {wn.begin(), wn.end()}});
        continue;
      }
      const VertexId v = f.v;
      const int children = f.children;
      stack.pop_back();
      if (stack.empty()) {
        if (children > 1) cuts.insert(v);
        break;
      }
      Frame& parent = stack.back();
      low[parent.v] = std::min(low[parent.v], low[v]);
      if (parent.v != root && low[v] >= disc[parent.v]) cuts.insert(parent.v);
    }
  }
  return cuts;
}

bool in_triangle(const SimpleGraph& g, Edge e) {
  const auto& a = g.neighbors(e.u);
  const auto& b = g.neighbors(e.v);
  return std::ranges::any_of(a, [&b](VertexId x) { return b.count(x) != 0; });
}

namespace {

void require_edge(const SimpleGraph& g, Edge e) {
  if (!g.has_edge(e)) {
    throw Error(ErrorCode::kEdgeAbsent, "no edge " + std::to_string(e.u) +
                                            "-" + std::to_string(e.v));
  }
}

void require_fresh(const SimpleGraph& g, VertexId fresh) {
  if (fresh == 0 || g.has_vertex(fresh)) {
    throw Error(ErrorCode::kInvalidArgument,
                "vertex " + std::to_string(fresh) + " is not fresh");
  }
}

}  // namespace

SimpleGraph subdivide_edge(const SimpleGraph& g, Edge e) {
  return subdivide_edge(g, e, g.max_vertex() + 1);
}

SimpleGraph subdivide_edge(const SimpleGraph& g, Edge e, VertexId fresh) {
  require_edge(g, e);
  require_fresh(g, fresh);
  SimpleGraph out = g;
  out.remove_edge(e);
  out.add_edge(e.u, fresh);
  out.add_edge(fresh, e.v);
  return out;
}

SimpleGraph contract_edge(const SimpleGraph& g, Edge e) {
  return contract_edge(g, e, g.max_vertex() + 1);
}

SimpleGraph contract_edge(const SimpleGraph& g, Edge e, VertexId fresh) {
  require_edge(g, e);
  require_fresh(g, fresh);
  if (in_triangle(g, e)) {
    throw Error(ErrorCode::kEdgeInTriangle,
                "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                    " lies in a triangle");
  }
  SimpleGraph out = g;
  out.remove_vertex(e.u);
  out.remove_vertex(e.v);
  out.add_vertex(fresh);
  for (VertexId end : {e.u, e.v}) {
    for (VertexId w : g.neighbors(end)) {
      if (!e.touches(w)) out.add_edge(fresh, w);
    }
  }
  return out;
}

SimpleGraph smooth_vertex(const SimpleGraph& g, VertexId w) {
  const auto& nbrs = g.neighbors(w);
  if (nbrs.size() != 2) {
    throw Error(ErrorCode::kDegreeNotTwo,
                "vertex " + std::to_string(w) + " has degree " +
                    std::to_string(nbrs.size()));
  }
  const VertexId a = *nbrs.begin(), b = *nbrs.rbegin();
  if (g.has_edge(a, b)) {
    throw Error(ErrorCode::kSmoothingCreatesMultiEdge,
                "neighbors " + std::to_string(a) + " and " +
                    std::to_string(b) + " are already adjacent");
  }
  SimpleGraph out = g;
  out.remove_vertex(w);
  out.add_edge(a, b);
  return out;
}

SimpleGraph without_edge(const SimpleGraph& g, Edge e) {
  SimpleGraph out = g;
  out.remove_edge(e);
  return out;
}

SimpleGraph without_vertex(const SimpleGraph& g, VertexId v) {
  SimpleGraph out = g;
  out.remove_vertex(v);
  return out;
}

bool is_subgraph(const SimpleGraph& g, const SimpleGraph& h) {
  for (const auto& [v, _] : g.adjacency()) {
    if (!h.has_vertex(v)) return false;
  }
  for (const Edge& e : g.edges()) {
    if (!h.has_edge(e)) return false;
  }
  return true;
}

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) {
    return false;
  }
  auto degree_sequence = [](const SimpleGraph& g) {
    std::vector<std::size_t> d;
    for (const auto& [_, nbrs] : g.adjacency()) d.push_back(nbrs.size());
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degree_sequence(a) != degree_sequence(b)) return false;

  std::vector<VertexId> order = a.vertices();
  std::stable_sort(order.begin(), order.end(), [&a](VertexId x, VertexId y) {
    return a.degree(x) > a.degree(y);
  });
  const std::vector<VertexId> targets = b.vertices();
  std::map<VertexId, VertexId> map;
  std::set<VertexId> used;

  std::function<bool(std::size_t)> extend = [&](std::size_t i) {
    if (i == order.size()) return true;
    const VertexId x = order[i];
    for (VertexId y : targets) {
      if (used.count(y) || b.degree(y) != a.degree(x)) continue;
      bool ok = true;
      for (const auto& [px, py] : map) {
        if (a.has_edge(x, px) != b.has_edge(y, py)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map[x] = y;
      used.insert(y);
      if (extend(i + 1)) return true;
      map.erase(x);
      used.erase(y);
    }
    return false;
  };
  return extend(0);
}

namespace {

std::vector<std::string_view> tokens_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

VertexId parse_vertex(std::string_view token, std::size_t line_no) {
  VertexId value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value == 0) {
    throw Error(ErrorCode::kParseError,
                "expected a positive vertex id, got '" + std::string(token) +
                    "'",
                line_no);
  }
  return value;
}

}  // namespace

SimpleGraph parse_edge_list(std::string_view text) {
  SimpleGraph g;
  VertexId declared = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = tokens_of(line);
    if (tokens.empty()) continue;

    if (tokens[0] == "n") {
      if (tokens.size() != 2) {
        throw Error(ErrorCode::kParseError, "expected 'n <count>'", line_no);
      }
      declared = parse_vertex(tokens[1], line_no);
      for (VertexId v = 1; v <= declared; ++v) g.add_vertex(v);
      continue;
    }
    if (tokens[0] == "v") {
      if (tokens.size() != 2) {
        throw Error(ErrorCode::kParseError, "expected 'v <id>'", line_no);
      }
      g.add_vertex(parse_vertex(tokens[1], line_no));
      continue;
    }
    if (tokens.size() != 2) {
      throw Error(ErrorCode::kParseError, "expected 'u v'", line_no);
    }
    const VertexId a = parse_vertex(tokens[0], line_no);
    const VertexId b = parse_vertex(tokens[1], line_no);
    if (a == b) {
      throw Error(ErrorCode::kParseError,
                  "self-loop at vertex " + std::to_string(a), line_no);
    }
    if (declared != 0 && (a > declared || b > declared)) {
      throw Error(ErrorCode::kParseError,
                  "vertex exceeds declared count " + std::to_string(declared),
                  line_no);
    }
    if (!g.add_edge(a, b)) {
      throw Error(ErrorCode::kParseError,
                  "duplicate edge " + std::to_string(a) + " " +
                      std::to_string(b),
                  line_no);
    }
  }
  return g;
}

std::string to_edge_list(const SimpleGraph& g, std::string_view comment) {
  std::ostringstream os;
  if (!comment.empty()) os << "# " << comment << '\n';
  os << "# " << g.num_vertices() << " vertices, " << g.num_edges()
     << " edges\n";
  const bool dense = g.max_vertex() == g.num_vertices();
  if (dense && !g.empty()) {
    os << "n " << g.num_vertices() << '\n';
  } else {
    for (const auto& [v, nbrs] : g.adjacency()) {
      if (nbrs.empty()) os << "v " << v << '\n';
    }
  }
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

std::string to_dot(const SimpleGraph& g, const DotStyle& style) {
  std::ostringstream os;
  os << "graph " << style.name << " {\n";
  for (const auto& [v, _] : g.adjacency()) {
    os << "  " << v;
    if (style.highlighted_vertices.count(v)) os << " [shape=doublecircle]";
    os << ";\n";
  }
  for (const Edge& e : g.edges()) {
    os << "  " << e.u << " -- " << e.v;
    if (style.highlighted_edges.count(e)) os << " [color=red, penwidth=2]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Edge& e) {
  return os << '(' << e.u << ',' << e.v << ')';
}

std::ostream& operator<<(std::ostream& os, const SimpleGraph& g) {
  os << "{V=" << g.num_vertices() << " E=[";
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) os << ' ';
    first = false;
    os << e.u << '-' << e.v;
  }
  return os << "]}";
}

}  // namespace cnfgraph
