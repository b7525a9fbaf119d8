#ifndef CNFGRAPH_FIXTURES_H_
#define CNFGRAPH_FIXTURES_H_

// Named graphs used throughout the tests and the CLI.
//
//   c3, k4, k4-e        small cycles and cliques; k4-e drops the edge (3,4)
//   cn:<k>              cycle on 1..k, k >= 3
//   butterfly           triangles {1,2,3}, {3,4,5}
//   bowtie              triangles {1,2,3}, {4,5,6} joined by (3,4)
//   book                K_{1,1,3} with hubs 2 and 4
//   hills:<n>           n triangles {2i-1, 2i, 2i+1} in a chain
//   square-butterfly    two 4-cycles sharing the edge (3,4)
//   config:<code>       the fifteen three-triangle configurations, each
//                       connecting path drawn as a single edge

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "cnfgraph/graph.h"

namespace cnfgraph {

inline constexpr std::array<std::string_view, 15> kConfigurationCodes = {
    "ppp1", "ppp2", "ppv1", "ppv2", "ppe1", "ppe2", "pvv",  "pve",
    "vvv1", "vvv2", "vve1", "vve2", "vee",  "eee1", "eee2"};

// Throws kUnknownFixture.
SimpleGraph fixture(std::string_view name);

// Every fixture name, with cn and hills shown by example.
std::vector<std::string> fixture_names();

}  // namespace cnfgraph

#endif  // CNFGRAPH_FIXTURES_H_
