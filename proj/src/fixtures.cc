#include "cnfgraph/fixtures.h"

#include <charconv>
#include <map>

#include "cnfgraph/error.h"

namespace cnfgraph {

namespace {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

void add_triangle(EdgeList& edges, VertexId a, VertexId b, VertexId c) {
  edges.insert(edges.end(), {{a, b}, {a, c}, {b, c}});
}

SimpleGraph from_edges(const EdgeList& edges) {
  SimpleGraph g;
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

// Butterfly {1,2,3},{3,4,5} is "v"; diamond {1,2,3},{2,3,4} is "e".
EdgeList configuration(std::string_view code) {
  EdgeList e;
  if (code == "ppp1" || code == "ppp2") {
    add_triangle(e, 1, 2, 3);
    add_triangle(e, 4, 5, 6);
    add_triangle(e, 7, 8, 9);
    e.push_back({1, 4});
    e.push_back(code == "ppp1" ? std::pair<VertexId, VertexId>{1, 7}
                               : std::pair<VertexId, VertexId>{3, 7});
  } else if (code == "ppv1" || code == "ppv2") {
    add_triangle(e, 1, 2, 3);
    add_triangle(e, 3, 4, 5);
    add_triangle(e, 6, 7, 8);
    e.push_back({code == "ppv1" ? 1u : 3u, 6});
  } else if (code == "ppe1" || code == "ppe2") {
    add_triangle(e, 1, 2, 3);
    e.push_back({2, 4});
    e.push_back({3, 4});
    add_triangle(e, 5, 6, 7);
    e.push_back({code == "ppe1" ? 1u : 2u, 5});
  } else if (code == "pvv") {
    add_triangle(e, 1, 2, 3);
    add_triangle(e, 3, 4, 5);
    add_triangle(e, 1, 6, 7);
  } else if (code == "pve") {
    add_triangle(e, 1, 2, 3);
    e.push_back({2, 4});
    e.push_back({3, 4});
    add_triangle(e, 1, 5, 6);
  } else if (code == "vvv1") {
    // Center 1 with triangles on {2,3}, {4,5} and the triangle {3,4,6}.
    e = {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {1, 5},
         {4, 5}, {3, 4}, {4, 6}, {3, 6}};
  } else if (code == "vvv2") {
    add_triangle(e, 1, 2, 3);
    add_triangle(e, 1, 4, 5);
    add_triangle(e, 1, 6, 7);
  } else if (code == "vve1" || code == "vve2" || code == "vee") {
    add_triangle(e, 1, 2, 3);
    e.push_back({2, 4});
    e.push_back({3, 4});
    if (code == "vve1") add_triangle(e, 1, 4, 5);
    if (code == "vve2") add_triangle(e, 2, 5, 6);
    if (code == "vee") add_triangle(e, 1, 2, 5);
  } else if (code == "eee1") {
    e = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  } else if (code == "eee2") {
    e = {{1, 2}, {1, 4}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {4, 5}};
  }
  return e;
}

[[noreturn]] void unknown(std::string_view name, std::string_view why = {}) {
  std::string msg = "unknown fixture '" + std::string(name) + "'";
  if (!why.empty()) msg += ": " + std::string(why);
  throw Error(ErrorCode::kUnknownFixture, msg);
}

VertexId parameter(std::string_view name, std::string_view text, VertexId min) {
  VertexId value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    unknown(name, "expected an integer parameter");
  }
  if (value < min) {
    unknown(name, "parameter must be at least " + std::to_string(min));
  }
  return value;
}

}  // namespace

SimpleGraph fixture(std::string_view name) {
  if (name == "c3") return fixture("cn:3");
  if (name == "k4") return from_edges(configuration("eee1"));
  if (name == "k4-e") return {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}};
  if (name == "butterfly") return fixture("hills:2");
  if (name == "bowtie") {
    return {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {5, 6}};
  }
  if (name == "book") return from_edges(configuration("eee2"));
  if (name == "square-butterfly") {
    return {{1, 2}, {2, 4}, {3, 4}, {1, 3}, {4, 6}, {5, 6}, {3, 5}};
  }
  if (name.starts_with("cn:")) {
    const VertexId k = parameter(name, name.substr(3), 3);
    SimpleGraph g;
    for (VertexId i = 1; i <= k; ++i) g.add_edge(i, i % k + 1);
    return g;
  }
  if (name.starts_with("hills:")) {
    const VertexId n = parameter(name, name.substr(6), 1);
    EdgeList e;
    for (VertexId i = 1; i <= n; ++i) add_triangle(e, 2 * i - 1, 2 * i, 2 * i + 1);
    return from_edges(e);
  }
  if (name.starts_with("config:")) {
    const EdgeList e = configuration(name.substr(7));
    if (e.empty()) unknown(name, "no such configuration code");
    return from_edges(e);
  }
  unknown(name);
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names = {"c3",     "cn:5", "k4",       "k4-e",
                                    "butterfly", "bowtie", "book", "hills:3",
                                    "square-butterfly"};
  for (std::string_view code : kConfigurationCodes) {
    names.push_back("config:" + std::string(code));
  }
  return names;
}

}  // namespace cnfgraph
