#ifndef WAGNER_FORGE_GRAPH_HPP
#define WAGNER_FORGE_GRAPH_HPP

#include <vector>

namespace wf {

/// Strongly connected components of a directed graph.
/// Component ids are in reverse topological order: every edge goes from a
/// component with a larger-or-equal id to one with a smaller-or-equal id.
struct SccInfo {
  int num_comps = 0;
  std::vector<int> comp;                   // node -> component id
  std::vector<std::vector<int>> members;   // component id -> node list
  std::vector<bool> has_cycle;             // component has an internal edge
};

SccInfo scc_decompose(int n, const std::vector<std::vector<int>>& adj);

/// reachable[c][c'] over the condensation (reflexive).
std::vector<std::vector<bool>> scc_reachability(
    const SccInfo& scc, int n, const std::vector<std::vector<int>>& adj);

}  // namespace wf

#endif
