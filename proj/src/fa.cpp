#include "wagner_forge/fa.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <queue>
#include <set>

namespace wf {

int Alphabet::index(char c) const {
  for (int i = 0; i < size(); ++i)
    if (letters[i] == c) return i;
  return -1;
}

int Alphabet::index_checked(char c) const {
  int i = index(c);
  if (i < 0)
    throw std::invalid_argument(std::string("letter '") + c +
                                "' is not in the alphabet");
  return i;
}

const Alphabet& binary_alphabet() {
  static const Alphabet sigma;
  return sigma;
}

void check_valid(const Nfa& a) {
  if (a.alphabet.size() == 0) throw std::invalid_argument("empty alphabet");
  if (a.num_states <= 0 || a.initial < 0 || a.initial >= a.num_states ||
      static_cast<int>(a.final_states.size()) != a.num_states)
    throw std::invalid_argument("malformed NFA");
  for (const Trans& t : a.transitions)
    if (t.from < 0 || t.from >= a.num_states || t.to < 0 ||
        t.to >= a.num_states || t.letter < 0 || t.letter >= a.alphabet.size())
      throw std::invalid_argument("NFA transition out of range");
}

void check_valid(const Dfa& d) {
  if (d.alphabet.size() == 0) throw std::invalid_argument("empty alphabet");
  if (d.num_states <= 0 || d.initial < 0 || d.initial >= d.num_states ||
      static_cast<int>(d.accepting.size()) != d.num_states ||
      static_cast<int>(d.delta.size()) != d.num_states)
    throw std::invalid_argument("malformed DFA");
  for (const auto& row : d.delta) {
    if (static_cast<int>(row.size()) != d.alphabet.size())
      throw std::invalid_argument("DFA transition function is not total");
    for (int q : row)
      if (q < 0 || q >= d.num_states)
        throw std::invalid_argument("DFA transition out of range");
  }
}

static void require_same_alphabet(const Alphabet& a, const Alphabet& b) {
  if (!(a == b)) throw std::invalid_argument("alphabet mismatch");
}

namespace {

// Construction-time form; the stored Nfa is produced by eliminate_eps().
constexpr int kEps = -1;

struct EpsNfa {
  Alphabet alphabet;
  int num_states = 0;
  int initial = 0;
  std::vector<Trans> transitions;  // letter == kEps for ε-edges
  std::vector<bool> final_states;
};

EpsNfa lift(const Nfa& a) {
  return {a.alphabet, a.num_states, a.initial, a.transitions, a.final_states};
}

// Appends a copy of b's states, returns the offset.
int append(EpsNfa& dst, const Nfa& b) {
  int off = dst.num_states;
  dst.num_states += b.num_states;
  for (const Trans& t : b.transitions)
    dst.transitions.push_back({t.from + off, t.letter, t.to + off});
  for (bool f : b.final_states) dst.final_states.push_back(f);
  return off;
}

Nfa eliminate_eps(const EpsNfa& e) {
  std::vector<std::vector<int>> eps_adj(e.num_states);
  for (const Trans& t : e.transitions)
    if (t.letter == kEps) eps_adj[t.from].push_back(t.to);

  std::vector<std::vector<int>> closure(e.num_states);
  for (int s = 0; s < e.num_states; ++s) {
    std::vector<bool> seen(e.num_states, false);
    std::deque<int> bfs{s};
    seen[s] = true;
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop_front();
      closure[s].push_back(v);
      for (int w : eps_adj[v])
        if (!seen[w]) {
          seen[w] = true;
          bfs.push_back(w);
        }
    }
  }

  Nfa out;
  out.alphabet = e.alphabet;
  out.num_states = e.num_states;
  out.initial = e.initial;
  out.final_states.assign(e.num_states, false);
  std::set<std::tuple<int, int, int>> trans;
  for (int s = 0; s < e.num_states; ++s) {
    for (int r : closure[s]) {
      if (e.final_states[r]) out.final_states[s] = true;
      for (const Trans& t : e.transitions)
        if (t.from == r && t.letter != kEps)
          trans.insert({s, t.letter, t.to});
    }
  }
  for (auto [f, l, t] : trans) out.transitions.push_back({f, l, t});
  return out;
}

}  // namespace

Nfa nfa_empty(const Alphabet& sigma) {
  Nfa a;
  a.alphabet = sigma;
  return a;
}

Nfa nfa_epsilon(const Alphabet& sigma) {
  Nfa a;
  a.alphabet = sigma;
  a.final_states = {true};
  return a;
}

Nfa nfa_letter(char c, const Alphabet& sigma) {
  Nfa a;
  a.alphabet = sigma;
  a.num_states = 2;
  a.final_states = {false, true};
  a.transitions = {{0, sigma.index_checked(c), 1}};
  return a;
}

Nfa nfa_union(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a.alphabet, b.alphabet);
  EpsNfa e;
  e.alphabet = a.alphabet;
  e.num_states = 1;  // fresh initial
  e.initial = 0;
  e.final_states = {false};
  int oa = append(e, a);
  int ob = append(e, b);
  e.transitions.push_back({0, kEps, a.initial + oa});
  e.transitions.push_back({0, kEps, b.initial + ob});
  return trim(eliminate_eps(e));
}

Nfa nfa_concat(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a.alphabet, b.alphabet);
  EpsNfa e = lift(a);
  int ob = append(e, b);
  for (int s = 0; s < a.num_states; ++s)
    if (a.final_states[s]) {
      e.final_states[s] = false;
      e.transitions.push_back({s, kEps, b.initial + ob});
    }
  return trim(eliminate_eps(e));
}

Nfa nfa_star(const Nfa& a) {
  EpsNfa e;
  e.alphabet = a.alphabet;
  e.num_states = 1;  // fresh accepting initial, no incoming edges
  e.initial = 0;
  e.final_states = {true};
  int oa = append(e, a);
  e.transitions.push_back({0, kEps, a.initial + oa});
  for (int s = 0; s < a.num_states; ++s)
    if (a.final_states[s]) e.transitions.push_back({s + oa, kEps, a.initial + oa});
  return trim(eliminate_eps(e));
}

Nfa nfa_from_dfa(const Dfa& d) {
  check_valid(d);
  Nfa a;
  a.alphabet = d.alphabet;
  a.num_states = d.num_states;
  a.initial = d.initial;
  a.final_states = d.accepting;
  for (int s = 0; s < d.num_states; ++s)
    for (int l = 0; l < d.alphabet.size(); ++l)
      a.transitions.push_back({s, l, d.delta[s][l]});
  return a;
}

Nfa nfa_from_words(const std::vector<Word>& words, const Alphabet& sigma) {
  Nfa acc = nfa_empty(sigma);
  for (const Word& w : words) {
    Nfa cur = nfa_epsilon(sigma);
    for (char c : w) cur = nfa_concat(cur, nfa_letter(c, sigma));
    acc = nfa_union(acc, cur);
  }
  return acc;
}

Nfa trim(const Nfa& a) {
  check_valid(a);
  int n = a.num_states;
  std::vector<std::vector<int>> fwd(n), bwd(n);
  for (const Trans& t : a.transitions) {
    fwd[t.from].push_back(t.to);
    bwd[t.to].push_back(t.from);
  }
  auto bfs = [n](const std::vector<std::vector<int>>& adj,
                 std::vector<int> seeds) {
    std::vector<bool> seen(n, false);
    std::deque<int> q;
    for (int s : seeds)
      if (!seen[s]) {
        seen[s] = true;
        q.push_back(s);
      }
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          q.push_back(w);
        }
    }
    return seen;
  };
  auto reach = bfs(fwd, {a.initial});
  std::vector<int> finals;
  for (int s = 0; s < n; ++s)
    if (a.final_states[s]) finals.push_back(s);
  auto coreach = bfs(bwd, finals);

  std::vector<int> idx(n, -1);
  Nfa out;
  out.alphabet = a.alphabet;
  out.num_states = 0;
  out.final_states.clear();
  // the initial state is always kept so the result stays well-formed
  for (int s = 0; s < n; ++s)
    if ((reach[s] && coreach[s]) || s == a.initial) {
      idx[s] = out.num_states++;
      out.final_states.push_back(a.final_states[s]);
    }
  out.initial = idx[a.initial];
  for (const Trans& t : a.transitions)
    if (idx[t.from] >= 0 && idx[t.to] >= 0 && reach[t.from] && coreach[t.to] &&
        coreach[t.from] && reach[t.to])
      out.transitions.push_back({idx[t.from], t.letter, idx[t.to]});
  return out;
}

Dfa determinize(const Nfa& a) {
  check_valid(a);
  int nl = a.alphabet.size();
  std::vector<std::vector<std::vector<int>>> succ(
      a.num_states, std::vector<std::vector<int>>(nl));
  for (const Trans& t : a.transitions) succ[t.from][t.letter].push_back(t.to);

  std::map<std::vector<int>, int> id;
  std::vector<std::vector<int>> subsets;
  auto intern = [&](std::vector<int> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    auto [it, fresh] = id.emplace(s, static_cast<int>(subsets.size()));
    if (fresh) subsets.push_back(it->first);
    return it->second;
  };

  Dfa d;
  d.alphabet = a.alphabet;
  d.initial = intern({a.initial});
  d.delta.clear();
  d.accepting.clear();
  for (size_t i = 0; i < subsets.size(); ++i) {
    const std::vector<int> cur = subsets[i];
    std::vector<int> row(nl);
    for (int l = 0; l < nl; ++l) {
      std::vector<int> next;
      for (int q : cur)
        for (int r : succ[q][l]) next.push_back(r);
      row[l] = intern(std::move(next));
    }
    d.delta.push_back(std::move(row));
    bool acc = false;
    for (int q : cur) acc |= a.final_states[q];
    d.accepting.push_back(acc);
  }
  d.num_states = static_cast<int>(d.delta.size());
  return d;
}

namespace {

// Canonical renumbering: BFS from the initial state in letter order.
Dfa canonical_order(const Dfa& d) {
  std::vector<int> idx(d.num_states, -1), order;
  idx[d.initial] = 0;
  order.push_back(d.initial);
  for (size_t i = 0; i < order.size(); ++i)
    for (int l = 0; l < d.alphabet.size(); ++l) {
      int q = d.delta[order[i]][l];
      if (idx[q] < 0) {
        idx[q] = static_cast<int>(order.size());
        order.push_back(q);
      }
    }
  Dfa out;
  out.alphabet = d.alphabet;
  out.num_states = static_cast<int>(order.size());
  out.initial = 0;
  out.delta.assign(out.num_states, std::vector<int>(d.alphabet.size()));
  out.accepting.assign(out.num_states, false);
  for (int s = 0; s < out.num_states; ++s) {
    int old = order[s];
    out.accepting[s] = d.accepting[old];
    for (int l = 0; l < d.alphabet.size(); ++l)
      out.delta[s][l] = idx[d.delta[old][l]];
  }
  return out;
}

}  // namespace

Dfa minimize(const Dfa& din) {
  check_valid(din);
  Dfa d = canonical_order(din);  // drops unreachable states
  int n = d.num_states, nl = d.alphabet.size();

  // Moore partition refinement.
  std::vector<int> cls(n);
  for (int s = 0; s < n; ++s) cls[s] = d.accepting[s] ? 1 : 0;
  for (;;) {
    std::map<std::vector<int>, int> sig;
    std::vector<int> next(n);
    for (int s = 0; s < n; ++s) {
      std::vector<int> key{cls[s]};
      for (int l = 0; l < nl; ++l) key.push_back(cls[d.delta[s][l]]);
      auto [it, fresh] = sig.emplace(key, static_cast<int>(sig.size()));
      next[s] = it->second;
    }
    if (std::equal(cls.begin(), cls.end(), next.begin())) break;
    cls = next;
  }

  int k = *std::max_element(cls.begin(), cls.end()) + 1;
  Dfa q;
  q.alphabet = d.alphabet;
  q.num_states = k;
  q.initial = cls[d.initial];
  q.delta.assign(k, std::vector<int>(nl, 0));
  q.accepting.assign(k, false);
  for (int s = 0; s < n; ++s) {
    q.accepting[cls[s]] = d.accepting[s];
    for (int l = 0; l < nl; ++l) q.delta[cls[s]][l] = cls[d.delta[s][l]];
  }
  return canonical_order(q);
}

Dfa determinize_minimize(const Nfa& a) { return minimize(determinize(a)); }

Dfa dfa_complement(const Dfa& d) {
  check_valid(d);
  Dfa out = d;
  for (int s = 0; s < out.num_states; ++s) out.accepting[s] = !out.accepting[s];
  return out;
}

namespace {

Dfa dfa_product(const Dfa& a, const Dfa& b, bool conj) {
  require_same_alphabet(a.alphabet, b.alphabet);
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
  Dfa out;
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
  return out;
}

}  // namespace

Dfa dfa_intersect(const Dfa& a, const Dfa& b) { return dfa_product(a, b, true); }
Dfa dfa_union(const Dfa& a, const Dfa& b) { return dfa_product(a, b, false); }

bool accepts(const Nfa& a, const Word& w) {
  std::vector<bool> cur(a.num_states, false);
  cur[a.initial] = true;
  for (char c : w) {
    int l = a.alphabet.index_checked(c);
    std::vector<bool> next(a.num_states, false);
    for (const Trans& t : a.transitions)
      if (t.letter == l && cur[t.from]) next[t.to] = true;
    cur = std::move(next);
  }
  for (int s = 0; s < a.num_states; ++s)
    if (cur[s] && a.final_states[s]) return true;
  return false;
}

bool accepts(const Dfa& d, const Word& w) {
  int s = d.initial;
  for (char c : w) s = d.delta[s][d.alphabet.index_checked(c)];
  return d.accepting[s];
}

namespace {

template <typename A>
std::vector<Word> enumerate_impl(const A& a, int max_len) {
  std::vector<Word> out;
  std::vector<Word> layer{""};
  for (int len = 0; len <= max_len; ++len) {
    for (const Word& w : layer)
      if (accepts(a, w)) out.push_back(w);
    if (len == max_len) break;
    std::vector<Word> next;
    for (const Word& w : layer)
      for (char c : a.alphabet.letters) next.push_back(w + c);
    layer = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<Word> enumerate_words(const Nfa& a, int max_len) {
  return enumerate_impl(a, max_len);
}
std::vector<Word> enumerate_words(const Dfa& d, int max_len) {
  return enumerate_impl(d, max_len);
}

bool is_empty(const Nfa& a) {
  Nfa t = trim(a);
  for (bool f : t.final_states)
    if (f) return false;
  return true;
}

bool is_empty(const Dfa& d) {
  check_valid(d);
  std::vector<bool> seen(d.num_states, false);
  std::deque<int> q{d.initial};
  seen[d.initial] = true;
  while (!q.empty()) {
    int s = q.front();
    q.pop_front();
    if (d.accepting[s]) return false;
    for (int t : d.delta[s])
      if (!seen[t]) {
        seen[t] = true;
        q.push_back(t);
      }
  }
  return true;
}

bool dfa_subseteq(const Dfa& a, const Dfa& b) {
  return is_empty(dfa_intersect(a, dfa_complement(b)));
}

bool dfa_equiv(const Dfa& a, const Dfa& b) {
  require_same_alphabet(a.alphabet, b.alphabet);
  check_valid(a);
  check_valid(b);
  std::set<std::pair<int, int>> seen;
  std::deque<std::pair<int, int>> q{{a.initial, b.initial}};
  seen.insert(q.front());
  while (!q.empty()) {
    auto [p, r] = q.front();
    q.pop_front();
    if (a.accepting[p] != b.accepting[r]) return false;
    for (int l = 0; l < a.alphabet.size(); ++l) {
      std::pair<int, int> nxt{a.delta[p][l], b.delta[r][l]};
      if (seen.insert(nxt).second) q.push_back(nxt);
    }
  }
  return true;
}

bool dfa_isomorphic(const Dfa& a, const Dfa& b) {
  if (!(a.alphabet == b.alphabet)) return false;
  Dfa ca = canonical_order(a), cb = canonical_order(b);
  return ca.num_states == cb.num_states && ca.delta == cb.delta &&
         ca.accepting == cb.accepting;
}

}  // namespace wf
