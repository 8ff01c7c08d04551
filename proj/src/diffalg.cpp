#include "wagner_forge/diffalg.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace wf {

namespace {

// makes acceptance absorbing: one accepting sink, then minimize
Dfa saturate(const Dfa& d) {
  check_valid(d);
  int nl = d.alphabet.size();
  Dfa out = d;
  out.num_states = d.num_states + 1;
  int sink = d.num_states;
  for (int s = 0; s < d.num_states; ++s)
    if (d.accepting[s]) out.delta[s] = std::vector<int>(nl, sink);
  out.delta.push_back(std::vector<int>(nl, sink));
  out.accepting.push_back(true);
  return minimize(out);
}

}  // namespace

OpenSet make_open(const std::vector<Word>& prefixes) {
  if (prefixes.empty()) return {determinize(nfa_empty())};
  return {saturate(determinize(nfa_from_words(prefixes)))};
}

OpenSet open_from_dfa(const Dfa& d) { return {saturate(d)}; }

OpenSet open_union(const OpenSet& a, const OpenSet& b) {
  return {saturate(dfa_union(a.good_prefixes, b.good_prefixes))};
}

OpenSet open_intersect(const OpenSet& a, const OpenSet& b) {
  return {saturate(dfa_intersect(a.good_prefixes, b.good_prefixes))};
}

OpenSet open_full() { return make_open({""}); }
OpenSet open_empty() { return make_open({}); }

Dwa open_dwa(const OpenSet& o) {
  Dwa w;
  w.alphabet = o.good_prefixes.alphabet;
  w.num_states = o.good_prefixes.num_states;
  w.initial = o.good_prefixes.initial;
  w.delta = o.good_prefixes.delta;
  w.accepting = o.good_prefixes.accepting;
  if (!is_weak(w)) throw std::logic_error("open set DWA is not weak");
  return w;
}

bool open_subseteq(const OpenSet& a, const OpenSet& b) {
  return dwa_subseteq(open_dwa(a), open_dwa(b));
}

bool is_increasing(const OpenFamily& f) {
  for (size_t i = 0; i + 1 < f.members.size(); ++i)
    if (!open_subseteq(f.members[i], f.members[i + 1])) return false;
  return true;
}

Dwa clopen_dwa(const ClopenSet& c) {
  if (c.depth < 0) throw std::invalid_argument("negative clopen depth");
  std::set<Word> words(c.words.begin(), c.words.end());
  for (const Word& w : words)
    if (static_cast<int>(w.size()) != c.depth)
      throw std::invalid_argument("clopen word length mismatch");
  const Alphabet& sigma = binary_alphabet();
  if (c.depth == 0)
    return words.count("") ? dwa_universal(sigma) : dwa_empty_language(sigma);

  // prefix tree over lengths < depth, then two sinks
  std::map<Word, int> id;
  std::vector<Word> nodes;
  for (int len = 0; len < c.depth; ++len) {
    std::vector<Word> layer{""};
    // enumerate words of this length
    for (int i = 0; i < len; ++i) {
      std::vector<Word> next;
      for (const Word& w : layer)
        for (char ch : sigma.letters) next.push_back(w + ch);
      layer = next;
    }
    for (const Word& w : layer) {
      id[w] = static_cast<int>(nodes.size());
      nodes.push_back(w);
    }
  }
  int acc_sink = static_cast<int>(nodes.size());
  int rej_sink = acc_sink + 1;
  Dwa out;
  out.alphabet = sigma;
  out.num_states = rej_sink + 1;
  out.initial = id[""];
  out.delta.assign(out.num_states, std::vector<int>(sigma.size(), 0));
  out.accepting.assign(out.num_states, false);
  for (const Word& w : nodes) {
    for (int l = 0; l < sigma.size(); ++l) {
      Word x = w + sigma.letters[l];
      out.delta[id[w]][l] = static_cast<int>(x.size()) < c.depth
                                ? id[x]
                                : (words.count(x) ? acc_sink : rej_sink);
    }
  }
  out.delta[acc_sink].assign(sigma.size(), acc_sink);
  out.delta[rej_sink].assign(sigma.size(), rej_sink);
  out.accepting[acc_sink] = true;
  return out;
}

Dwa difference_dwa(const OpenFamily& f) {
  if (!is_increasing(f))
    throw std::invalid_argument("difference of a non-increasing family");
  int k = static_cast<int>(f.members.size());
  const Alphabet& sigma = binary_alphabet();
  if (k == 0) return dwa_empty_language(sigma);
  for (const OpenSet& o : f.members)
    if (!(o.good_prefixes.alphabet == sigma))
      throw std::invalid_argument("open set over a foreign alphabet");

  std::map<std::vector<int>, int> id;
  std::vector<std::vector<int>> states;
  auto intern = [&](const std::vector<int>& s) {
    auto [it, fresh] = id.emplace(s, static_cast<int>(states.size()));
    if (fresh) states.push_back(s);
    return it->second;
  };
  std::vector<int> init;
  for (const OpenSet& o : f.members) init.push_back(o.good_prefixes.initial);
  Dwa out;
  out.alphabet = sigma;
  out.initial = intern(init);
  out.delta.clear();
  out.accepting.clear();
  for (size_t s = 0; s < states.size(); ++s) {
    const std::vector<int> cur = states[s];
    std::vector<int> row(sigma.size());
    for (int l = 0; l < sigma.size(); ++l) {
      std::vector<int> next(k);
      for (int e = 0; e < k; ++e)
        next[e] = f.members[e].good_prefixes.delta[cur[e]][l];
      row[l] = intern(next);
    }
    out.delta.push_back(std::move(row));
    int min_fired = k;
    for (int e = 0; e < k; ++e)
      if (f.members[e].good_prefixes.accepting[cur[e]]) {
        min_fired = e;
        break;
      }
    out.accepting.push_back(min_fired < k && min_fired % 2 != k % 2);
  }
  out.num_states = static_cast<int>(out.delta.size());
  if (!is_weak(out)) throw std::logic_error("difference DWA is not weak");
  return out;
}

Dwa oplus_dwa(const Dwa& A, const Dwa& B, const ClopenSet& C) {
  check_valid(A);
  check_valid(B);
  std::set<Word> words(C.words.begin(), C.words.end());
  const Alphabet& sigma = binary_alphabet();
  if (C.depth == 0) return words.count("") ? A : B;

  std::map<Word, int> id;
  std::vector<Word> nodes;
  std::vector<Word> layer{""};
  for (int len = 0; len < C.depth; ++len) {
    for (const Word& w : layer) {
      id[w] = static_cast<int>(nodes.size());
      nodes.push_back(w);
    }
    std::vector<Word> next;
    for (const Word& w : layer)
      for (char ch : sigma.letters) next.push_back(w + ch);
    layer = next;
  }
  int tree = static_cast<int>(nodes.size());
  int offa = tree, offb = tree + A.num_states;
  auto run = [&](const Dwa& M, const Word& w) {
    int s = M.initial;
    for (char ch : w) s = M.delta[s][sigma.index_checked(ch)];
    return s;
  };
  Dwa out;
  out.alphabet = sigma;
  out.num_states = tree + A.num_states + B.num_states;
  out.initial = id[""];
  out.delta.assign(out.num_states, std::vector<int>(sigma.size(), 0));
  out.accepting.assign(out.num_states, false);
  for (const Word& w : nodes)
    for (int l = 0; l < sigma.size(); ++l) {
      Word x = w + sigma.letters[l];
      out.delta[id[w]][l] = static_cast<int>(x.size()) < C.depth
                                ? id[x]
                                : (words.count(x) ? offa + run(A, x)
                                                  : offb + run(B, x));
    }
  for (int s = 0; s < A.num_states; ++s) {
    for (int l = 0; l < sigma.size(); ++l)
      out.delta[offa + s][l] = offa + A.delta[s][l];
    out.accepting[offa + s] = A.accepting[s];
  }
  for (int s = 0; s < B.num_states; ++s) {
    for (int l = 0; l < sigma.size(); ++l)
      out.delta[offb + s][l] = offb + B.delta[s][l];
    out.accepting[offb + s] = B.accepting[s];
  }
  if (!is_weak(out)) throw std::logic_error("oplus DWA is not weak");
  return out;
}

// ---------------------------------------------------------------------------

bool lemma4_a(const OpenFamily& U, const OpenSet& V) {
  if (!is_increasing(U)) throw std::invalid_argument("family not increasing");
  OpenFamily O;
  for (const OpenSet& u : U.members) O.members.push_back(open_intersect(u, V));
  O.members.push_back(V);
  if (!is_increasing(O)) throw std::logic_error("constructed family not increasing");
  Dwa lhs = dwa_intersect(dwa_complement(difference_dwa(U)), open_dwa(V));
  return dwa_equiv(lhs, difference_dwa(O));
}

bool lemma4_b(const OpenFamily& U, const OpenSet& V) {
  if (!is_increasing(U)) throw std::invalid_argument("family not increasing");
  if (U.members.size() % 2 != 0)
    throw std::invalid_argument("family length must be even");
  OpenFamily O;
  O.members.push_back(V);
  for (const OpenSet& u : U.members) O.members.push_back(open_union(V, u));
  if (!is_increasing(O)) throw std::logic_error("constructed family not increasing");
  Dwa lhs = dwa_intersect(dwa_complement(difference_dwa(U)),
                          dwa_complement(open_dwa(V)));
  return dwa_equiv(lhs, dwa_complement(difference_dwa(O)));
}

bool lemma4_c(const OpenFamily& U, const OpenFamily& Vpair) {
  if (!is_increasing(U) || !is_increasing(Vpair))
    throw std::invalid_argument("family not increasing");
  if (U.members.size() % 2 != 0 || Vpair.members.size() != 2)
    throw std::invalid_argument("need |U| even and |V| = 2");
  int k = static_cast<int>(U.members.size()) / 2;
  const auto& u = U.members;
  const OpenSet& v0 = Vpair.members[0];
  const OpenSet& v1 = Vpair.members[1];

  OpenFamily O;
  if (k == 0) {
    O = Vpair;  // degenerate: both sides are the complement of D_2(V)
  } else {
    O.members.push_back(open_intersect(v0, u[0]));
    O.members.push_back(open_intersect(v1, u[1]));
    for (int j = 1; j < k; ++j) {
      O.members.push_back(open_union(
          open_union(open_intersect(v0, u[2 * j]), u[2 * j - 2]),
          open_intersect(v1, u[2 * j - 1])));
      O.members.push_back(
          open_union(open_intersect(v1, u[2 * j + 1]), u[2 * j - 1]));
    }
    O.members.push_back(open_union(open_union(v0, u[2 * k - 2]),
                                   open_intersect(v1, u[2 * k - 1])));
    O.members.push_back(open_union(v1, u[2 * k - 1]));
  }
  if (!is_increasing(O)) throw std::logic_error("constructed family not increasing");
  Dwa lhs = dwa_intersect(dwa_complement(difference_dwa(U)),
                          dwa_complement(difference_dwa(Vpair)));
  return dwa_equiv(lhs, dwa_complement(difference_dwa(O)));
}

bool lemma4_d(const OpenFamily& UE0, const OpenFamily& UE1, const OpenSet& A,
              const OpenSet& Bcomp, const ClopenSet& C) {
  if (UE0.members.size() % 2 != 0 || UE1.members.size() % 2 != 0)
    throw std::invalid_argument("family lengths must be even");
  Dwa e0 = dwa_complement(difference_dwa(UE0));
  Dwa e1 = dwa_complement(difference_dwa(UE1));
  Dwa a = open_dwa(A);
  Dwa b = dwa_complement(open_dwa(Bcomp));

  // ((A∩C)∪(B∖C)) ∩ E0 = ((E0∩A)∩C) ∪ ((E0∩B)∖C)
  Dwa id1_lhs = dwa_intersect(oplus_dwa(a, b, C), e0);
  Dwa id1_rhs = oplus_dwa(dwa_intersect(e0, a), dwa_intersect(e0, b), C);
  if (!dwa_equiv(id1_lhs, id1_rhs)) return false;

  // ((E0∩A)∩C) ∪ ((E1∩B)∖C) = ((A∩C)∪(B∖C)) ∩ ((E0∩C)∪(E1∖C))
  Dwa id2_lhs = oplus_dwa(dwa_intersect(e0, a), dwa_intersect(e1, b), C);
  Dwa id2_rhs = dwa_intersect(oplus_dwa(a, b, C), oplus_dwa(e0, e1, C));
  return dwa_equiv(id2_lhs, id2_rhs);
}

// ---------------------------------------------------------------------------

bool key_fact_identity(uint32_t c0, uint32_t c1, uint32_t d0, uint32_t d1) {
  return ((c1 & ~c0) | (d1 & ~d0)) == ((c1 | d1) & ~(c0 & d0));
}

bool key_fact_check(int trials, int universe, uint64_t seed) {
  if (universe < 0 || universe > 12)
    throw std::invalid_argument("universe size out of range");
  std::mt19937 rng(static_cast<uint32_t>(seed));
  uint32_t full = universe == 32 ? ~0u : (1u << universe) - 1;
  for (int t = 0; t < trials; ++t) {
    uint32_t c0 = rng() & full;
    uint32_t d0 = rng() & full;
    uint32_t c1 = rng() & d0;  // C1 ⊆ D0
    uint32_t d1 = rng() & c0;  // D1 ⊆ C0
    if (!key_fact_identity(c0, c1, d0, d1)) return false;
  }
  return true;
}

std::optional<std::array<uint32_t, 4>> key_fact_counterexample(int universe) {
  if (universe < 0 || universe > 4)
    throw std::invalid_argument("exhaustive search only for tiny universes");
  uint32_t full = (1u << universe) - 1;
  for (uint32_t c0 = 0; c0 <= full; ++c0)
    for (uint32_t c1 = 0; c1 <= full; ++c1)
      for (uint32_t d0 = 0; d0 <= full; ++d0)
        for (uint32_t d1 = 0; d1 <= full; ++d1)
          if (!key_fact_identity(c0, c1, d0, d1))
            return std::array<uint32_t, 4>{c0, c1, d0, d1};
  return std::nullopt;
}

// ---------------------------------------------------------------------------

OpenSet random_open(std::mt19937& rng, int max_depth) {
  if (max_depth < 1) throw std::invalid_argument("max_depth must be positive");
  uint32_t kind = rng() % 8;
  if (kind == 0) return open_full();
  if (kind == 1) return open_empty();
  int count = 1 + rng() % 3;
  std::vector<Word> prefixes;
  for (int i = 0; i < count; ++i) {
    int len = 1 + rng() % max_depth;
    Word w;
    for (int j = 0; j < len; ++j) w.push_back(rng() % 2 ? '1' : '0');
    prefixes.push_back(w);
  }
  return make_open(prefixes);
}

OpenFamily random_increasing_family(std::mt19937& rng, int k, int max_depth) {
  OpenFamily f;
  for (int i = 0; i < k; ++i) {
    OpenSet fresh = random_open(rng, max_depth);
    f.members.push_back(
        f.members.empty() ? fresh : open_union(f.members.back(), fresh));
  }
  return f;
}

ClopenSet random_clopen(std::mt19937& rng, int depth) {
  ClopenSet c;
  c.depth = depth;
  std::vector<Word> layer{""};
  for (int i = 0; i < depth; ++i) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      next.push_back(w + '0');
      next.push_back(w + '1');
    }
    layer = next;
  }
  for (const Word& w : layer)
    if (rng() % 2) c.words.push_back(w);
  return c;
}

}  // namespace wf
