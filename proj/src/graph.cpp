#include "wagner_forge/graph.hpp"

#include <algorithm>

namespace wf {

// Iterative Tarjan.
SccInfo scc_decompose(int n, const std::vector<std::vector<int>>& adj) {
  SccInfo out;
  out.comp.assign(n, -1);
  std::vector<int> low(n, 0), disc(n, -1), stk;
  std::vector<bool> on_stack(n, false);
  int timer = 0;

  struct Frame {
    int node;
    size_t edge;
  };
  std::vector<Frame> call;

  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    call.push_back({root, 0});
    while (!call.empty()) {
      auto& [v, ei] = call.back();
      if (ei == 0) {
        disc[v] = low[v] = timer++;
        stk.push_back(v);
        on_stack[v] = true;
      }
      if (ei < adj[v].size()) {
        int w = adj[v][ei++];
        if (disc[w] == -1) {
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        if (low[v] == disc[v]) {
          out.members.emplace_back();
          int w;
          do {
            w = stk.back();
            stk.pop_back();
            on_stack[w] = false;
            out.comp[w] = out.num_comps;
            out.members.back().push_back(w);
          } while (w != v);
          ++out.num_comps;
        }
        int child = v;
        call.pop_back();
        if (!call.empty()) {
          int parent = call.back().node;
          low[parent] = std::min(low[parent], low[child]);
        }
      }
    }
  }

  out.has_cycle.assign(out.num_comps, false);
  for (int v = 0; v < n; ++v)
    for (int w : adj[v])
      if (out.comp[v] == out.comp[w]) out.has_cycle[out.comp[v]] = true;
  return out;
}

std::vector<std::vector<bool>> scc_reachability(
    const SccInfo& scc, int n, const std::vector<std::vector<int>>& adj) {
  int k = scc.num_comps;
  std::vector<std::vector<bool>> reach(k, std::vector<bool>(k, false));
  for (int c = 0; c < k; ++c) reach[c][c] = true;
  // Component ids are in reverse topological order, so process ascending:
  // successors of a component always have smaller-or-equal ids.
  for (int v = 0; v < n; ++v)
    for (int w : adj[v]) {
      int c = scc.comp[v], d = scc.comp[w];
      if (c != d) reach[c][d] = true;
    }
  for (int c = 0; c < k; ++c)
    for (int d = 0; d < c; ++d)
      if (reach[c][d])
        for (int e = 0; e < k; ++e)
          if (reach[d][e]) reach[c][e] = true;
  return reach;
}

}  // namespace wf
