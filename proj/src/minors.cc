#include "cnfgraph/minors.h"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>
#include <set>

#include "cnfgraph/error.h"

namespace cnfgraph {

std::string_view pattern_name(PatternId p) {
  switch (p) {
    case PatternId::kVConfig: return "VConfig";
    case PatternId::kPConfig: return "PConfig";
    case PatternId::kK4: return "K4";
    case PatternId::kK113: return "K113";
  }
  return "?";
}

std::optional<PatternId> parse_pattern(std::string_view name) {
  std::string lower(name);
  std::ranges::transform(lower, lower.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  if (lower == "vconfig" || lower == "butterfly") return PatternId::kVConfig;
  if (lower == "pconfig" || lower == "bowtie") return PatternId::kPConfig;
  if (lower == "k4") return PatternId::kK4;
  if (lower == "k113" || lower == "book") return PatternId::kK113;
  return std::nullopt;
}

std::string_view reason_name(NotInUReason r) {
  switch (r) {
    case NotInUReason::kForest: return "Forest";
    case NotInUReason::kUnicyclicComponents: return "UnicyclicComponents";
    case NotInUReason::kThetaCore: return "ThetaCore";
  }
  return "?";
}

SimpleGraph pattern_graph(PatternId p) {
  switch (p) {
    case PatternId::kVConfig:
      return {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}};
    case PatternId::kPConfig:
      return {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {5, 6}};
    case PatternId::kK4:
      return {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    case PatternId::kK113:
      return {{1, 2}, {1, 4}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {4, 5}};
  }
  return {};
}

namespace {

// A maximal pattern path between vertices of degree >= 3. Interior
// vertices have degree 2; front() == back() for a loop.
struct Chain {
  std::vector<VertexId> vertices;

  VertexId from() const { return vertices.front(); }
  VertexId to() const { return vertices.back(); }
  // Fewest interior host vertices a realization needs.
  std::size_t min_interior() const { return vertices.size() - 2; }
};

std::vector<Chain> chains_of(const SimpleGraph& pattern) {
  std::vector<Chain> chains;
  std::set<Edge> used;
  for (const auto& [b, nbrs] : pattern.adjacency()) {
    if (nbrs.size() < 3) continue;
    for (VertexId first : nbrs) {
      if (used.count(Edge::of(b, first))) continue;
      Chain chain{{b}};
      VertexId prev = b, cur = first;
      used.insert(Edge::of(prev, cur));
      chain.vertices.push_back(cur);
      while (pattern.degree(cur) == 2) {
        const auto& cn = pattern.neighbors(cur);
        const VertexId next = *cn.begin() == prev ? *cn.rbegin() : *cn.begin();
        used.insert(Edge::of(cur, next));
        prev = cur;
        cur = next;
        chain.vertices.push_back(cur);
      }
      chains.push_back(std::move(chain));
    }
  }
  return chains;
}

class MinorSearch {
 public:
  MinorSearch(const SimpleGraph& host, const SimpleGraph& pattern)
      : host_(host), pattern_(pattern), chains_(chains_of(pattern)) {
    for (const auto& [v, nbrs] : pattern.adjacency()) {
      if (nbrs.size() >= 3) branches_.push_back(v);
    }
    routes_.resize(chains_.size());
  }

  std::optional<Embedding> run() {
    if (!assign_branch(0)) return std::nullopt;
    return build_embedding();
  }

 private:
  bool assign_branch(std::size_t i) {
    if (i == branches_.size()) return route_all(0);
    const VertexId pv = branches_[i];
    for (const auto& [hv, nbrs] : host_.adjacency()) {
      if (used_.count(hv) || nbrs.size() < pattern_.degree(pv)) continue;
      image_[pv] = hv;
      used_.insert(hv);
      if (assign_branch(i + 1)) return true;
      used_.erase(hv);
      image_.erase(pv);
    }
    return false;
  }

  std::size_t free_degree(VertexId hv, VertexId target) const {
    std::size_t n = 0;
    for (VertexId w : host_.neighbors(hv)) {
      if (!used_.count(w) || w == target) ++n;
    }
    return n;
  }

  bool route_all(std::size_t routed) {
    if (routed == chains_.size()) return true;
    std::size_t best = chains_.size();
    std::size_t best_score = std::numeric_limits<std::size_t>::max();
    for (std::size_t c = 0; c < chains_.size(); ++c) {
      if (!routes_[c].empty()) continue;
      const VertexId a = image_.at(chains_[c].from());
      const VertexId b = image_.at(chains_[c].to());
      const std::size_t score = std::min(free_degree(a, b), free_degree(b, a));
      if (score < best_score) {
        best_score = score;
        best = c;
      }
    }
    const Chain& chain = chains_[best];
    const VertexId source = image_.at(chain.from());
    const VertexId target = image_.at(chain.to());
    std::vector<VertexId> path{source};
    return extend_path(best, path, target, chain.min_interior(), routed);
  }

  bool extend_path(std::size_t c, std::vector<VertexId>& path, VertexId target,
                   std::size_t min_interior, std::size_t routed) {
    for (VertexId w : host_.neighbors(path.back())) {
      if (w == target) {
        if (path.size() - 1 < min_interior) continue;
        path.push_back(w);
        routes_[c] = path;
        if (route_all(routed + 1)) return true;
        routes_[c].clear();
        path.pop_back();
        continue;
      }
      if (used_.count(w)) continue;
      used_.insert(w);
      path.push_back(w);
      if (extend_path(c, path, target, min_interior, routed)) return true;
      path.pop_back();
      used_.erase(w);
    }
    return false;
  }

  Embedding build_embedding() const {
    Embedding emb;
    for (const auto& [pv, hv] : image_) emb.branch_map[pv] = hv;
    for (std::size_t c = 0; c < chains_.size(); ++c) {
      const auto& pverts = chains_[c].vertices;
      const auto& route = routes_[c];
      const std::size_t m = pverts.size() - 1;
      auto position = [&](std::size_t j) { return j < m ? j : route.size() - 1; };
      for (std::size_t j = 1; j < m; ++j) emb.branch_map[pverts[j]] = route[j];
      for (std::size_t j = 0; j < m; ++j) {
        std::vector<VertexId> segment(route.begin() + position(j),
                                      route.begin() + position(j + 1) + 1);
        if (pverts[j] > pverts[j + 1]) std::ranges::reverse(segment);
        emb.path_map[Edge::of(pverts[j], pverts[j + 1])] = std::move(segment);
      }
    }
    return emb;
  }

  const SimpleGraph& host_;
  const SimpleGraph& pattern_;
  std::vector<Chain> chains_;
  std::vector<VertexId> branches_;
  std::map<VertexId, VertexId> image_;
  std::set<VertexId> used_;
  std::vector<std::vector<VertexId>> routes_;
};

std::optional<Embedding> search(const SimpleGraph& host, PatternId p) {
  const SimpleGraph pattern = pattern_graph(p);
  return MinorSearch(host, pattern).run();
}

// A connected subgraph of cycle rank exactly 3: a BFS tree plus the first
// three non-tree edges, pruned to its 2-core.
SimpleGraph rank_three_certificate(const SimpleGraph& core) {
  SimpleGraph tree;
  const VertexId root = core.adjacency().begin()->first;
  tree.add_vertex(root);
  std::deque<VertexId> queue{root};
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : core.neighbors(v)) {
      if (tree.has_vertex(w)) continue;
      tree.add_edge(v, w);
      queue.push_back(w);
    }
  }
  int extra = 0;
  for (const Edge& e : core.edges()) {
    if (extra == 3) break;
    if (tree.add_edge(e)) ++extra;
  }
  return two_core(tree);
}

Verdict evidence_for(const SimpleGraph& component, long rank) {
  SimpleGraph host = two_core(component);
  if (rank >= 3 && host.num_vertices() > kDefaultHostCap) {
    host = rank_three_certificate(host);
  }
  for (PatternId p : kPatternSearchOrder) {
    if (auto emb = search(host, p)) return {InU{p, std::move(*emb)}};
  }
  throw Error(ErrorCode::kInternalVerificationFailed,
              "component of cycle rank " + std::to_string(rank) +
                  " has no pattern embedding");
}

}  // namespace

Verdict decide_membership(const SimpleGraph& g) {
  bool any_cycle = false;
  bool any_theta = false;
  for (const SimpleGraph& comp : connected_components(g)) {
    const long r = static_cast<long>(comp.num_edges()) -
                   static_cast<long>(comp.num_vertices()) + 1;
    if (r >= 3 || (r == 2 && !cut_vertices(two_core(comp)).empty())) {
      return evidence_for(comp, r);
    }
    any_cycle = any_cycle || r >= 1;
    any_theta = any_theta || r == 2;
  }
  if (any_theta) return {NotInU{NotInUReason::kThetaCore}};
  if (any_cycle) return {NotInU{NotInUReason::kUnicyclicComponents}};
  return {NotInU{NotInUReason::kForest}};
}

std::optional<Embedding> find_topological_minor(const SimpleGraph& host,
                                                PatternId pattern,
                                                std::size_t cap) {
  if (host.num_vertices() > cap) {
    throw Error(ErrorCode::kHostTooLarge,
                "host has " + std::to_string(host.num_vertices()) +
                    " vertices, cap is " + std::to_string(cap));
  }
  return search(two_core(host), pattern);
}

bool verify_embedding(const SimpleGraph& host, PatternId pattern,
                      const Embedding& emb) {
  const SimpleGraph pg = pattern_graph(pattern);
  if (emb.branch_map.size() != pg.num_vertices() ||
      emb.path_map.size() != pg.num_edges()) {
    return false;
  }
  std::set<VertexId> images;
  for (const auto& [pv, hv] : emb.branch_map) {
    if (!pg.has_vertex(pv) || !host.has_vertex(hv)) return false;
    if (!images.insert(hv).second) return false;
  }
  std::set<VertexId> interiors;
  for (const auto& [e, path] : emb.path_map) {
    if (!pg.has_edge(e) || path.size() < 2) return false;
    if (path.front() != emb.branch_map.at(e.u) ||
        path.back() != emb.branch_map.at(e.v)) {
      return false;
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (!host.has_edge(path[i], path[i + 1])) return false;
    }
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      if (images.count(path[i]) || !interiors.insert(path[i]).second) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace cnfgraph
