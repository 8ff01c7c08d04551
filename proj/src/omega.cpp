#include "wagner_forge/omega.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <set>

#include "wagner_forge/graph.hpp"

namespace wf {

void check_valid(const Nbw& b) {
  if (b.alphabet.size() == 0) throw std::invalid_argument("empty alphabet");
  if (b.num_states <= 0 || b.initial < 0 || b.initial >= b.num_states ||
      static_cast<int>(b.accepting.size()) != b.num_states)
    throw std::invalid_argument("malformed NBW");
  for (const Trans& t : b.transitions)
    if (t.from < 0 || t.from >= b.num_states || t.to < 0 ||
        t.to >= b.num_states || t.letter < 0 || t.letter >= b.alphabet.size())
      throw std::invalid_argument("NBW transition out of range");
}

void check_valid(const Dwa& w) {
  if (w.alphabet.size() == 0) throw std::invalid_argument("empty alphabet");
  if (w.num_states <= 0 || w.initial < 0 || w.initial >= w.num_states ||
      static_cast<int>(w.accepting.size()) != w.num_states ||
      static_cast<int>(w.delta.size()) != w.num_states)
    throw std::invalid_argument("malformed DWA");
  for (const auto& row : w.delta) {
    if (static_cast<int>(row.size()) != w.alphabet.size())
      throw std::invalid_argument("DWA transition function is not total");
    for (int q : row)
      if (q < 0 || q >= w.num_states)
        throw std::invalid_argument("DWA transition out of range");
  }
}

static std::vector<std::vector<int>> dwa_adjacency(const Dwa& w) {
  std::vector<std::vector<int>> adj(w.num_states);
  for (int s = 0; s < w.num_states; ++s)
    for (int t : w.delta[s]) adj[s].push_back(t);
  return adj;
}

bool is_weak(const Dwa& w) {
  check_valid(w);
  SccInfo scc = scc_decompose(w.num_states, dwa_adjacency(w));
  for (const auto& comp : scc.members) {
    for (int s : comp)
      if (w.accepting[s] != w.accepting[comp.front()]) return false;
  }
  return true;
}

Dwa dwa_universal(const Alphabet& sigma) {
  Dwa w;
  w.alphabet = sigma;
  w.delta = {std::vector<int>(sigma.size(), 0)};
  w.accepting = {true};
  return w;
}

Dwa dwa_empty_language(const Alphabet& sigma) {
  Dwa w = dwa_universal(sigma);
  w.accepting = {false};
  return w;
}

// ---------------------------------------------------------------------------
// Lassos

static void check_lasso(const Lasso& l) {
  if (l.v.empty()) throw std::invalid_argument("lasso cycle must be nonempty");
}

char lasso_letter(const Lasso& l, long long k) {
  long long lu = static_cast<long long>(l.u.size());
  if (k < lu) return l.u[k];
  return l.v[(k - lu) % l.v.size()];
}

Lasso normalize_even(const Lasso& l) {
  check_lasso(l);
  Lasso r = l;
  if (r.u.size() % 2 != 0) {
    r.u.push_back(r.v.front());
    r.v = r.v.substr(1) + r.v.front();
  }
  if (r.v.size() % 2 != 0) r.v += r.v;
  return r;
}

Lasso deinterleave_lasso(const Lasso& l, int eps) {
  if (eps != 0 && eps != 1) throw std::invalid_argument("parity must be 0 or 1");
  Lasso n = normalize_even(l);
  Lasso out;
  for (size_t i = eps; i < n.u.size(); i += 2) out.u.push_back(n.u[i]);
  for (size_t i = eps; i < n.v.size(); i += 2) out.v.push_back(n.v[i]);
  return out;
}

std::vector<Lasso> all_lassos(int bu, int bv, const Alphabet& sigma) {
  std::vector<Word> words{""};
  std::vector<std::vector<Word>> by_len{{""}};
  for (int len = 1; len <= std::max(bu, bv); ++len) {
    std::vector<Word> next;
    for (const Word& w : by_len.back())
      for (char c : sigma.letters) next.push_back(w + c);
    by_len.push_back(next);
  }
  std::vector<Lasso> out;
  for (int lu = 0; lu <= bu; ++lu)
    for (const Word& u : by_len[lu])
      for (int lv = 1; lv <= bv; ++lv)
        for (const Word& v : by_len[lv]) out.push_back({u, v});
  return out;
}

// Positions of the lasso wheel: 0..|u|+|v|-1, wrapping back to |u|.
namespace {

struct Wheel {
  int total;
  int ulen;

  int next(int pos) const { return pos + 1 == total ? ulen : pos + 1; }
};

}  // namespace

// ---------------------------------------------------------------------------
// ω-power construction

Nbw omega_power_nbw(const Nfa& language) {
  Nfa base = trim(language);
  // Non-returning initial state; leaving it non-final strips ε from L.
  int fresh = base.num_states;
  std::vector<Trans> trans = base.transitions;
  for (const Trans& t : base.transitions)
    if (t.from == base.initial) trans.push_back({fresh, t.letter, t.to});
  std::vector<bool> final_states = base.final_states;
  final_states.push_back(false);
  int n = base.num_states + 1;
  int start = fresh;

  // States (q, bit); bit 1 marks "a factor just completed".
  Nbw b;
  b.alphabet = base.alphabet;
  b.num_states = 2 * n;
  b.initial = 2 * start;
  b.accepting.assign(2 * n, false);
  for (int q = 0; q < n; ++q) b.accepting[2 * q + 1] = true;
  for (const Trans& t : trans)
    for (int bit = 0; bit < 2; ++bit) {
      b.transitions.push_back({2 * t.from + bit, t.letter, 2 * t.to});
      if (final_states[t.to])
        b.transitions.push_back({2 * t.from + bit, t.letter, 2 * start + 1});
    }
  return trim_nbw(b);
}

Nbw trim_nbw(const Nbw& b) {
  check_valid(b);
  std::vector<std::vector<std::pair<int, int>>> adj(b.num_states);
  for (const Trans& t : b.transitions) adj[t.from].push_back({t.letter, t.to});
  std::vector<bool> seen(b.num_states, false);
  std::deque<int> q{b.initial};
  seen[b.initial] = true;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (auto [l, w] : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        q.push_back(w);
      }
  }
  std::vector<int> idx(b.num_states, -1);
  Nbw out;
  out.alphabet = b.alphabet;
  out.num_states = 0;
  out.accepting.clear();
  for (int s = 0; s < b.num_states; ++s)
    if (seen[s]) {
      idx[s] = out.num_states++;
      out.accepting.push_back(b.accepting[s]);
    }
  out.initial = idx[b.initial];
  for (const Trans& t : b.transitions)
    if (seen[t.from] && seen[t.to])
      out.transitions.push_back({idx[t.from], t.letter, idx[t.to]});
  return out;
}

bool nbw_accepts_lasso(const Nbw& b, const Lasso& l) {
  check_valid(b);
  check_lasso(l);
  Wheel wheel{static_cast<int>(l.u.size() + l.v.size()),
              static_cast<int>(l.u.size())};
  std::vector<std::vector<std::vector<int>>> succ(
      b.num_states, std::vector<std::vector<int>>(b.alphabet.size()));
  for (const Trans& t : b.transitions) succ[t.from][t.letter].push_back(t.to);

  int nodes = b.num_states * wheel.total;
  auto id = [&](int q, int pos) { return q * wheel.total + pos; };
  std::vector<std::vector<int>> adj(nodes);
  for (int q = 0; q < b.num_states; ++q)
    for (int pos = 0; pos < wheel.total; ++pos) {
      char c = pos < wheel.ulen ? l.u[pos] : l.v[pos - wheel.ulen];
      int letter = b.alphabet.index_checked(c);
      for (int r : succ[q][letter]) adj[id(q, pos)].push_back(id(r, wheel.next(pos)));
    }

  std::vector<bool> reach(nodes, false);
  std::deque<int> bfs{id(b.initial, 0)};
  reach[bfs.front()] = true;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop_front();
    for (int w : adj[v])
      if (!reach[w]) {
        reach[w] = true;
        bfs.push_back(w);
      }
  }
  SccInfo scc = scc_decompose(nodes, adj);
  for (int v = 0; v < nodes; ++v)
    if (reach[v] && scc.has_cycle[scc.comp[v]] && b.accepting[v / wheel.total])
      return true;
  return false;
}

bool lasso_in_omega_power_oracle(const Nfa& language, const Lasso& l) {
  Nfa L = trim(language);
  check_lasso(l);
  Wheel wheel{static_cast<int>(l.u.size() + l.v.size()),
              static_cast<int>(l.u.size())};
  std::vector<std::vector<std::vector<int>>> succ(
      L.num_states, std::vector<std::vector<int>>(L.alphabet.size()));
  for (const Trans& t : L.transitions) succ[t.from][t.letter].push_back(t.to);

  // Factor graph: edge i -> j iff a factor of length >= 1 read from
  // position i ends at position j in a final state.
  std::vector<std::set<int>> factor(wheel.total);
  for (int i = 0; i < wheel.total; ++i) {
    std::vector<std::vector<bool>> seen(
        wheel.total, std::vector<bool>(L.num_states, false));
    std::deque<std::pair<int, int>> bfs{{i, L.initial}};
    // the start pair is deliberately not marked final-checked: factors are
    // nonempty, so acceptance is only tested after at least one step
    while (!bfs.empty()) {
      auto [pos, q] = bfs.front();
      bfs.pop_front();
      char c = pos < wheel.ulen ? l.u[pos] : l.v[pos - wheel.ulen];
      int letter = L.alphabet.index_checked(c);
      int npos = wheel.next(pos);
      for (int r : succ[q][letter]) {
        if (L.final_states[r]) factor[i].insert(npos);
        if (!seen[npos][r]) {
          seen[npos][r] = true;
          bfs.push_back({npos, r});
        }
      }
    }
  }

  std::vector<std::vector<int>> adj(wheel.total);
  for (int i = 0; i < wheel.total; ++i)
    adj[i].assign(factor[i].begin(), factor[i].end());
  std::vector<bool> reach(wheel.total, false);
  std::deque<int> bfs{0};
  reach[0] = true;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop_front();
    for (int w : adj[v])
      if (!reach[w]) {
        reach[w] = true;
        bfs.push_back(w);
      }
  }
  SccInfo scc = scc_decompose(wheel.total, adj);
  for (int v = 0; v < wheel.total; ++v)
    if (reach[v] && scc.has_cycle[scc.comp[v]]) return true;
  return false;
}

bool dwa_accepts_lasso(const Dwa& w, const Lasso& l) {
  check_valid(w);
  check_lasso(l);
  int s = w.initial;
  for (char c : l.u) s = w.delta[s][w.alphabet.index_checked(c)];
  std::vector<int> seen(w.num_states, 0);
  while (!seen[s]) {
    seen[s] = 1;
    for (char c : l.v) s = w.delta[s][w.alphabet.index_checked(c)];
  }
  return w.accepting[s];
}

// ---------------------------------------------------------------------------
// DWA boolean algebra and decisions

Dwa dwa_complement(const Dwa& w) {
  check_valid(w);
  Dwa out = w;
  for (int s = 0; s < out.num_states; ++s) out.accepting[s] = !out.accepting[s];
  return out;
}

namespace {

Dwa dwa_product(const Dwa& a, const Dwa& b, bool conj) {
  if (!(a.alphabet == b.alphabet))
    throw std::invalid_argument("alphabet mismatch");
  check_valid(a);
  check_valid(b);
  int nl = a.alphabet.size();
  std::map<std::pair<int, int>, int> id;
  std::vector<std::pair<int, int>> states;
  auto intern = [&](std::pair<int, int> p) {
    auto [it, fresh] = id.emplace(p, static_cast<int>(states.size()));
    if (fresh) states.push_back(p);
    return it->second;
  };
  Dwa out;
  out.alphabet = a.alphabet;
  out.initial = intern({a.initial, b.initial});
  out.delta.clear();
  out.accepting.clear();
  for (size_t i = 0; i < states.size(); ++i) {
    auto [p, q] = states[i];
    std::vector<int> row(nl);
    for (int l = 0; l < nl; ++l) row[l] = intern({a.delta[p][l], b.delta[q][l]});
    out.delta.push_back(std::move(row));
    out.accepting.push_back(conj ? (a.accepting[p] && b.accepting[q])
                                 : (a.accepting[p] || b.accepting[q]));
  }
  out.num_states = static_cast<int>(out.delta.size());
  if (!is_weak(out)) throw std::logic_error("DWA product lost weakness");
  return out;
}

}  // namespace

Dwa dwa_intersect(const Dwa& a, const Dwa& b) { return dwa_product(a, b, true); }
Dwa dwa_union(const Dwa& a, const Dwa& b) { return dwa_product(a, b, false); }

bool dwa_is_empty(const Dwa& w) {
  check_valid(w);
  auto adj = dwa_adjacency(w);
  std::vector<bool> reach(w.num_states, false);
  std::deque<int> q{w.initial};
  reach[w.initial] = true;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int t : adj[v])
      if (!reach[t]) {
        reach[t] = true;
        q.push_back(t);
      }
  }
  SccInfo scc = scc_decompose(w.num_states, adj);
  for (int s = 0; s < w.num_states; ++s)
    if (reach[s] && scc.has_cycle[scc.comp[s]] && w.accepting[s]) return false;
  return true;
}

bool dwa_subseteq(const Dwa& a, const Dwa& b) {
  return dwa_is_empty(dwa_intersect(a, dwa_complement(b)));
}

bool dwa_equiv(const Dwa& a, const Dwa& b) {
  return dwa_subseteq(a, b) && dwa_subseteq(b, a);
}

// ---------------------------------------------------------------------------
// NBW decisions

bool nbw_is_empty(const Nbw& b) {
  Nbw t = trim_nbw(b);
  std::vector<std::vector<int>> adj(t.num_states);
  for (const Trans& tr : t.transitions) adj[tr.from].push_back(tr.to);
  SccInfo scc = scc_decompose(t.num_states, adj);
  for (int s = 0; s < t.num_states; ++s)
    if (t.accepting[s] && scc.has_cycle[scc.comp[s]]) return false;
  return true;
}

namespace {

struct ProductGraph {
  // node = b_state * dwa_states + w_state
  int nb, nw;
  std::vector<std::vector<std::pair<int, int>>> adj;  // (letter, node)

  int id(int bq, int wq) const { return bq * nw + wq; }
};

ProductGraph build_product(const Nbw& b, const Dwa& w) {
  if (!(b.alphabet == w.alphabet))
    throw std::invalid_argument("alphabet mismatch");
  ProductGraph g{b.num_states, w.num_states, {}};
  g.adj.resize(b.num_states * w.num_states);
  for (const Trans& t : b.transitions)
    for (int wq = 0; wq < w.num_states; ++wq)
      g.adj[g.id(t.from, wq)].push_back({t.letter, g.id(t.to, w.delta[wq][t.letter])});
  return g;
}

std::vector<bool> reachable_nodes(const ProductGraph& g, int start) {
  std::vector<bool> reach(g.adj.size(), false);
  std::deque<int> q{start};
  reach[start] = true;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (auto [l, t] : g.adj[v])
      if (!reach[t]) {
        reach[t] = true;
        q.push_back(t);
      }
  }
  return reach;
}

// Word along a BFS tree path from `from` to `to`; empty optional if
// unreachable.  With require_step, paths of length zero are not allowed.
std::optional<Word> bfs_word(const ProductGraph& g, const Alphabet& sigma,
                             int from, int to, const std::vector<bool>& allowed,
                             bool require_step) {
  std::vector<int> parent(g.adj.size(), -2);
  std::vector<char> via(g.adj.size(), 0);
  std::deque<int> q;
  auto expand = [&](int v) {
    for (auto [l, t] : g.adj[v]) {
      if (!allowed[t] || parent[t] != -2) continue;
      parent[t] = v;
      via[t] = sigma.letters[l];
      q.push_back(t);
    }
  };
  if (!require_step && from == to) return Word{};
  auto reconstruct = [&](int end) {
    Word w;
    for (int cur = end;;) {
      w.push_back(via[cur]);
      int p = parent[cur];
      if (p == -1) break;
      cur = p;
    }
    std::reverse(w.begin(), w.end());
    return w;
  };
  for (auto [l, t] : g.adj[from]) {
    if (!allowed[t] || parent[t] != -2) continue;
    parent[t] = -1;
    via[t] = sigma.letters[l];
    q.push_back(t);
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    if (v == to) return reconstruct(v);
    expand(v);
  }
  return std::nullopt;
}

}  // namespace

std::optional<Lasso> nbw_minus_dwa_witness(const Nbw& b, const Dwa& w) {
  check_valid(b);
  check_valid(w);
  ProductGraph g = build_product(b, w);
  int start = g.id(b.initial, w.initial);
  auto reach = reachable_nodes(g, start);
  std::vector<std::vector<int>> adj(g.adj.size());
  for (size_t v = 0; v < g.adj.size(); ++v)
    for (auto [l, t] : g.adj[v]) adj[v].push_back(t);
  SccInfo scc = scc_decompose(static_cast<int>(g.adj.size()), adj);

  for (size_t v = 0; v < g.adj.size(); ++v) {
    int bq = static_cast<int>(v) / g.nw, wq = static_cast<int>(v) % g.nw;
    if (!reach[v] || !scc.has_cycle[scc.comp[v]]) continue;
    if (!b.accepting[bq] || w.accepting[wq]) continue;
    // bad SCC: B-accepting on a cycle while the DWA part is trapped rejecting
    std::vector<bool> in_scc(g.adj.size(), false);
    for (int m : scc.members[scc.comp[v]]) in_scc[m] = true;
    std::vector<bool> all(g.adj.size(), true);
    auto u = bfs_word(g, b.alphabet, start, static_cast<int>(v), all, false);
    auto cyc = bfs_word(g, b.alphabet, static_cast<int>(v),
                        static_cast<int>(v), in_scc, true);
    if (u && cyc && !cyc->empty()) return Lasso{*u, *cyc};
  }
  return std::nullopt;
}

bool nbw_subseteq_dwa(const Nbw& b, const Dwa& w) {
  return !nbw_minus_dwa_witness(b, w).has_value();
}

bool dwa_nbw_intersection_empty(const Dwa& w, const Nbw& b) {
  ProductGraph g = build_product(b, w);
  int start = g.id(b.initial, w.initial);
  auto reach = reachable_nodes(g, start);
  std::vector<std::vector<int>> adj(g.adj.size());
  for (size_t v = 0; v < g.adj.size(); ++v)
    for (auto [l, t] : g.adj[v]) adj[v].push_back(t);
  SccInfo scc = scc_decompose(static_cast<int>(g.adj.size()), adj);
  for (size_t v = 0; v < g.adj.size(); ++v) {
    int bq = static_cast<int>(v) / g.nw, wq = static_cast<int>(v) % g.nw;
    if (reach[v] && scc.has_cycle[scc.comp[v]] && b.accepting[bq] &&
        w.accepting[wq])
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Rank-based complementation (level rankings bounded by 2|Q \ F|)

RankComplement nbw_complement_rank(const Nbw& input, int gate_states,
                                   int max_constructed) {
  Nbw b = trim_nbw(input);
  if (b.num_states > gate_states)
    return {std::nullopt, true, "state gate exceeded"};

  int n = b.num_states;
  int nonacc = 0;
  for (int s = 0; s < n; ++s)
    if (!b.accepting[s]) ++nonacc;
  int max_rank = 2 * nonacc;

  std::vector<std::vector<std::vector<int>>> succ(
      n, std::vector<std::vector<int>>(b.alphabet.size()));
  for (const Trans& t : b.transitions) succ[t.from][t.letter].push_back(t.to);

  // state key: ranks (-1 = absent) followed by the obligation set O
  using Key = std::vector<int>;
  std::map<Key, int> id;
  std::vector<Key> states;
  auto intern = [&](const Key& k) {
    auto [it, fresh] = id.emplace(k, static_cast<int>(states.size()));
    if (fresh) states.push_back(k);
    return it->second;
  };

  Key init(2 * n, 0);
  for (int s = 0; s < n; ++s) init[s] = -1;
  init[b.initial] = max_rank;
  Nbw out;
  out.alphabet = b.alphabet;
  out.initial = intern(init);

  for (size_t i = 0; i < states.size(); ++i) {
    if (static_cast<int>(states.size()) > max_constructed)
      return {std::nullopt, true, "construction cap exceeded"};
    Key cur = states[i];
    for (int l = 0; l < b.alphabet.size(); ++l) {
      // caps for the successor ranking
      std::vector<int> cap(n, -1);
      for (int q = 0; q < n; ++q) {
        if (cur[q] < 0) continue;
        for (int r : succ[q][l])
          cap[r] = cap[r] < 0 ? cur[q] : std::min(cap[r], cur[q]);
      }
      std::vector<int> dom;
      for (int q = 0; q < n; ++q)
        if (cap[q] >= 0) dom.push_back(q);

      // obligation successors before ranks are chosen
      std::vector<bool> o_next(n, false);
      bool o_empty = true;
      for (int q = 0; q < n; ++q)
        if (cur[n + q]) {
          o_empty = false;
          for (int r : succ[q][l]) o_next[r] = true;
        }

      std::vector<int> ranks(n, -1);
      // enumerate all admissible successor rankings
      auto emit = [&]() {
        Key next(2 * n, 0);
        for (int q = 0; q < n; ++q) next[q] = ranks[q];
        for (int q = 0; q < n; ++q) {
          bool in_o = o_empty ? (ranks[q] >= 0 && ranks[q] % 2 == 0)
                              : (o_next[q] && ranks[q] >= 0 && ranks[q] % 2 == 0);
          next[n + q] = in_o ? 1 : 0;
        }
        int to = intern(next);
        out.transitions.push_back({static_cast<int>(i), l, to});
      };
      // accepting states may only carry even ranks
      bool over = false;
      auto enumerate = [&](auto&& self, size_t d) -> void {
        if (over) return;
        if (static_cast<int>(states.size()) > max_constructed) {
          over = true;
          return;
        }
        if (d == dom.size()) {
          emit();
          return;
        }
        int q = dom[d];
        int step = b.accepting[q] ? 2 : 1;
        for (int r = 0; r <= cap[q]; r += step) {
          ranks[q] = r;
          self(self, d + 1);
        }
        ranks[q] = -1;
      };
      enumerate(enumerate, 0);
      if (over) return {std::nullopt, true, "construction cap exceeded"};
    }
  }

  out.num_states = static_cast<int>(states.size());
  out.accepting.assign(out.num_states, false);
  for (int s = 0; s < out.num_states; ++s) {
    bool o_empty = true;
    for (int q = 0; q < n; ++q)
      if (states[s][n + q]) o_empty = false;
    out.accepting[s] = o_empty;
  }
  return {trim_nbw(out), false, ""};
}

// ---------------------------------------------------------------------------
// Subset-construction DWA candidate

Dwa nbw_to_dwa(const Nbw& input) {
  Nbw b = trim_nbw(input);
  int nl = b.alphabet.size();
  std::vector<std::vector<std::vector<int>>> succ(
      b.num_states, std::vector<std::vector<int>>(nl));
  for (const Trans& t : b.transitions) succ[t.from][t.letter].push_back(t.to);

  std::map<std::vector<int>, int> id;
  std::vector<std::vector<int>> subsets;
  auto intern = [&](std::vector<int> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    auto [it, fresh] = id.emplace(s, static_cast<int>(subsets.size()));
    if (fresh) subsets.push_back(it->first);
    return it->second;
  };

  Dwa w;
  w.alphabet = b.alphabet;
  w.initial = intern({b.initial});
  w.delta.clear();
  std::vector<int> parent{-1};
  std::vector<char> via{0};
  for (size_t i = 0; i < subsets.size(); ++i) {
    const std::vector<int> cur = subsets[i];
    std::vector<int> row(nl);
    for (int l = 0; l < nl; ++l) {
      std::vector<int> next;
      for (int q : cur)
        for (int r : succ[q][l]) next.push_back(r);
      int to = intern(std::move(next));
      if (to == static_cast<int>(parent.size())) {
        parent.push_back(static_cast<int>(i));
        via.push_back(b.alphabet.letters[l]);
      }
      row[l] = to;
    }
    w.delta.push_back(std::move(row));
  }
  w.num_states = static_cast<int>(w.delta.size());
  w.accepting.assign(w.num_states, false);

  auto path_word = [&](int s) {
    Word word;
    for (int cur = s; parent[cur] >= 0; cur = parent[cur])
      word.push_back(via[cur]);
    std::reverse(word.begin(), word.end());
    return word;
  };

  // One covering lasso per SCC decides the polarity of all its states.
  SccInfo scc = scc_decompose(w.num_states, dwa_adjacency(w));
  for (int c = 0; c < scc.num_comps; ++c) {
    if (!scc.has_cycle[c]) continue;
    int s0 = scc.members[c].front();
    std::vector<bool> in_scc(w.num_states, false);
    for (int m : scc.members[c]) in_scc[m] = true;
    // shortest cycle through s0 inside the SCC
    std::optional<Word> cycle;
    std::vector<int> cpar(w.num_states, -2);
    std::vector<char> cvia(w.num_states, 0);
    std::deque<int> q{s0};
    cpar[s0] = -1;
    auto prefix_to = [&](int v) {
      Word word;
      for (int cur = v; cpar[cur] != -1; cur = cpar[cur]) word.push_back(cvia[cur]);
      std::reverse(word.begin(), word.end());
      return word;
    };
    while (!cycle && !q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int l = 0; l < nl; ++l) {
        int t = w.delta[v][l];
        if (!in_scc[t]) continue;
        if (t == s0) {
          cycle = prefix_to(v) + w.alphabet.letters[l];
          break;
        }
        if (cpar[t] == -2) {
          cpar[t] = v;
          cvia[t] = w.alphabet.letters[l];
          q.push_back(t);
        }
      }
    }
    bool bit = cycle && nbw_accepts_lasso(b, {path_word(s0), *cycle});
    for (int m : scc.members[c]) w.accepting[m] = bit;
  }
  return w;
}

}  // namespace wf
