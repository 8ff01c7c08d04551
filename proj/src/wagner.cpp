#include "wagner_forge/wagner.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "wagner_forge/graph.hpp"

namespace wf {

std::string class_name(const WagnerClass& c) {
  std::string n = std::to_string(c.level);
  switch (c.shape) {
    case Shape::D:
      return "D" + n;
    case Shape::Dcheck:
      return "D" + n + "check";
    case Shape::DoplusDcheck:
      return "D" + n + "+D" + n + "check";
  }
  return "";
}

std::optional<WagnerClass> parse_class(const std::string& name) {
  auto parse_level = [](const std::string& s) -> std::optional<int> {
    if (s.empty() || s.size() > 4) return std::nullopt;
    for (char c : s)
      if (c < '0' || c > '9') return std::nullopt;
    if (s.size() > 1 && s[0] == '0') return std::nullopt;
    return std::stoi(s);
  };
  if (name.size() < 2 || name[0] != 'D') return std::nullopt;
  auto plus = name.find('+');
  if (plus != std::string::npos) {
    auto lvl = parse_level(name.substr(1, plus - 1));
    if (!lvl) return std::nullopt;
    std::string expect = "D" + std::to_string(*lvl) + "check";
    if (name.substr(plus + 1) != expect) return std::nullopt;
    return WagnerClass{Shape::DoplusDcheck, *lvl};
  }
  if (name.size() > 5 && name.substr(name.size() - 5) == "check") {
    auto lvl = parse_level(name.substr(1, name.size() - 6));
    if (!lvl) return std::nullopt;
    return WagnerClass{Shape::Dcheck, *lvl};
  }
  auto lvl = parse_level(name.substr(1));
  if (!lvl) return std::nullopt;
  return WagnerClass{Shape::D, *lvl};
}

WagnerClass dual_class(const WagnerClass& c) {
  switch (c.shape) {
    case Shape::D:
      return {Shape::Dcheck, c.level};
    case Shape::Dcheck:
      return {Shape::D, c.level};
    default:
      return c;
  }
}

bool wagner_leq(const WagnerClass& a, const WagnerClass& b) {
  auto val = [](const WagnerClass& c) {
    return 2 * c.level + (c.shape == Shape::DoplusDcheck ? 1 : 0);
  };
  if (val(a) != val(b)) return val(a) < val(b);
  return a == b;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<bool> reachable_states(const Dwa& w) {
  std::vector<bool> reach(w.num_states, false);
  std::deque<int> q{w.initial};
  reach[w.initial] = true;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int t : w.delta[v])
      if (!reach[t]) {
        reach[t] = true;
        q.push_back(t);
      }
  }
  return reach;
}

Dwa trim_dwa(const Dwa& w) {
  auto reach = reachable_states(w);
  std::vector<int> idx(w.num_states, -1);
  Dwa out;
  out.alphabet = w.alphabet;
  out.num_states = 0;
  out.delta.clear();
  out.accepting.clear();
  for (int s = 0; s < w.num_states; ++s)
    if (reach[s]) idx[s] = out.num_states++;
  out.initial = idx[w.initial];
  for (int s = 0; s < w.num_states; ++s) {
    if (!reach[s]) continue;
    std::vector<int> row;
    for (int t : w.delta[s]) row.push_back(idx[t]);
    out.delta.push_back(std::move(row));
    out.accepting.push_back(w.accepting[s]);
  }
  return out;
}

// pair (p,q) of states is distinguishable iff some input drives it into a
// loop SCC of the pair graph whose two polarity tracks disagree
std::vector<bool> distinguishable_pairs(const Dwa& w) {
  int n = w.num_states, nl = w.alphabet.size();
  auto id = [&](int p, int q) { return p * n + q; };
  std::vector<std::vector<int>> adj(n * n), radj(n * n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int l = 0; l < nl; ++l) {
        int t = id(w.delta[p][l], w.delta[q][l]);
        adj[id(p, q)].push_back(t);
        radj[t].push_back(id(p, q));
      }
  SccInfo scc = scc_decompose(n * n, adj);
  std::vector<bool> dist(n * n, false);
  std::deque<int> seed;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (scc.has_cycle[scc.comp[id(p, q)]] && w.accepting[p] != w.accepting[q]) {
        dist[id(p, q)] = true;
        seed.push_back(id(p, q));
      }
  while (!seed.empty()) {
    int v = seed.front();
    seed.pop_front();
    for (int u : radj[v])
      if (!dist[u]) {
        dist[u] = true;
        seed.push_back(u);
      }
  }
  return dist;
}

struct SccLassos {
  // covering lasso (u to the SCC, v cycling inside it) per loop SCC
  std::vector<std::optional<Lasso>> lasso;
  SccInfo scc;
};

SccLassos covering_lassos(const Dwa& w) {
  int nl = w.alphabet.size();
  std::vector<std::vector<int>> adj(w.num_states);
  for (int s = 0; s < w.num_states; ++s)
    for (int t : w.delta[s]) adj[s].push_back(t);
  SccLassos out;
  out.scc = scc_decompose(w.num_states, adj);
  out.lasso.assign(out.scc.num_comps, std::nullopt);

  // BFS words from the initial state
  std::vector<int> parent(w.num_states, -2);
  std::vector<char> via(w.num_states, 0);
  parent[w.initial] = -1;
  std::deque<int> q{w.initial};
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int l = 0; l < nl; ++l) {
      int t = w.delta[v][l];
      if (parent[t] != -2) continue;
      parent[t] = v;
      via[t] = w.alphabet.letters[l];
      q.push_back(t);
    }
  }
  auto word_to = [&](int s) {
    Word word;
    for (int cur = s; parent[cur] != -1; cur = parent[cur]) word.push_back(via[cur]);
    std::reverse(word.begin(), word.end());
    return word;
  };

  for (int c = 0; c < out.scc.num_comps; ++c) {
    if (!out.scc.has_cycle[c]) continue;
    int s0 = out.scc.members[c].front();
    if (parent[s0] == -2) continue;  // unreachable
    std::vector<bool> in_scc(w.num_states, false);
    for (int m : out.scc.members[c]) in_scc[m] = true;
    // shortest cycle through s0 inside the SCC
    std::vector<int> cpar(w.num_states, -2);
    std::vector<char> cvia(w.num_states, 0);
    cpar[s0] = -1;
    std::deque<int> bfs{s0};
    std::optional<Word> cycle;
    while (!cycle && !bfs.empty()) {
      int v = bfs.front();
      bfs.pop_front();
      for (int l = 0; l < nl; ++l) {
        int t = w.delta[v][l];
        if (!in_scc[t]) continue;
        if (t == s0) {
          Word word;
          for (int cur = v; cpar[cur] != -1; cur = cpar[cur]) word.push_back(cvia[cur]);
          std::reverse(word.begin(), word.end());
          cycle = word + w.alphabet.letters[l];
          break;
        }
        if (cpar[t] == -2) {
          cpar[t] = v;
          cvia[t] = w.alphabet.letters[l];
          bfs.push_back(t);
        }
      }
    }
    if (cycle) out.lasso[c] = Lasso{word_to(s0), *cycle};
  }
  return out;
}

}  // namespace

Dwa reduce_dwa(const Dwa& w) {
  check_valid(w);
  Dwa t = trim_dwa(w);
  int n = t.num_states, nl = t.alphabet.size();
  auto dist = distinguishable_pairs(t);

  std::vector<int> rep(n);
  for (int p = 0; p < n; ++p) {
    rep[p] = p;
    for (int q = 0; q < p; ++q)
      if (rep[q] == q && !dist[p * n + q]) {
        rep[p] = q;
        break;
      }
  }
  std::vector<int> cls(n, -1);
  int num_classes = 0;
  for (int p = 0; p < n; ++p)
    if (rep[p] == p) cls[p] = num_classes++;
  for (int p = 0; p < n; ++p) cls[p] = cls[rep[p]];

  Dwa q;
  q.alphabet = t.alphabet;
  q.num_states = num_classes;
  q.initial = cls[t.initial];
  q.delta.assign(num_classes, std::vector<int>(nl, 0));
  q.accepting.assign(num_classes, false);
  for (int p = 0; p < n; ++p) {
    if (rep[p] != p) continue;
    for (int l = 0; l < nl; ++l) q.delta[cls[p]][l] = cls[t.delta[p][l]];
  }

  // polarity per loop SCC read back from the original language
  SccLassos cl = covering_lassos(q);
  for (int c = 0; c < cl.scc.num_comps; ++c)
    if (cl.lasso[c]) {
      bool bit = dwa_accepts_lasso(t, *cl.lasso[c]);
      for (int m : cl.scc.members[c]) q.accepting[m] = bit;
    }

  if (!is_weak(q)) throw std::logic_error("reduction lost weakness");
  if (!dwa_equiv(q, w)) throw std::logic_error("reduction changed the language");
  return q;
}

ChainProfile chain_profile(const Dwa& w) {
  check_valid(w);
  std::vector<std::vector<int>> adj(w.num_states);
  for (int s = 0; s < w.num_states; ++s)
    for (int t : w.delta[s]) adj[s].push_back(t);
  SccInfo scc = scc_decompose(w.num_states, adj);
  auto closure = scc_reachability(scc, w.num_states, adj);
  auto reach = reachable_states(w);
  int init_comp = scc.comp[w.initial];

  std::vector<bool> loop(scc.num_comps, false);
  std::vector<bool> bit(scc.num_comps, false);
  for (int c = 0; c < scc.num_comps; ++c) {
    loop[c] = scc.has_cycle[c] && reach[scc.members[c].front()] &&
              closure[init_comp][c];
    bit[c] = w.accepting[scc.members[c].front()];
  }

  // longest alternating chain starting at each loop SCC; component ids are
  // reverse topological, so successors have smaller ids
  std::vector<int> best(scc.num_comps, 0), next(scc.num_comps, -1);
  for (int c = 0; c < scc.num_comps; ++c) {
    if (!loop[c]) continue;
    best[c] = 1;
    for (int d = 0; d < c; ++d)
      if (loop[d] && d != c && closure[c][d] && bit[d] != bit[c] &&
          best[d] + 1 > best[c]) {
        best[c] = best[d] + 1;
        next[c] = d;
      }
  }

  ChainProfile p;
  int arg_acc = -1, arg_rej = -1;
  for (int c = 0; c < scc.num_comps; ++c) {
    if (!loop[c]) continue;
    if (bit[c] && best[c] > p.m_acc) {
      p.m_acc = best[c];
      arg_acc = c;
    }
    if (!bit[c] && best[c] > p.m_rej) {
      p.m_rej = best[c];
      arg_rej = c;
    }
  }
  auto emit = [&](int c, std::vector<std::vector<int>>& out) {
    for (; c != -1; c = next[c]) out.push_back(scc.members[c]);
  };
  emit(arg_acc, p.acc_witness);
  emit(arg_rej, p.rej_witness);
  return p;
}

Classification classify(const Dwa& w) {
  Dwa r = reduce_dwa(w);
  ChainProfile p = chain_profile(r);
  if (p.m_acc > p.m_rej + 1 || p.m_rej > p.m_acc + 1 ||
      (p.m_acc == 0 && p.m_rej == 0))
    throw std::logic_error("impossible chain profile");
  WagnerClass c{Shape::D, 0};
  if (p.m_rej == p.m_acc + 1)
    c = {Shape::D, p.m_acc};
  else if (p.m_acc == p.m_rej + 1)
    c = {Shape::Dcheck, p.m_rej};
  else
    c = {Shape::DoplusDcheck, p.m_acc - 1};
  return {c, p};
}

bool is_complete_for(const Dwa& w, const WagnerClass& c) {
  return classify(w).cls == c;
}

}  // namespace wf
