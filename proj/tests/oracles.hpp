#ifndef WF_TEST_ORACLES_HPP
#define WF_TEST_ORACLES_HPP

// Brute-force reference implementations used only by tests.  These take
// deliberately different routes than the library code they check.

#include <regex>
#include <set>
#include <string>
#include <vector>

#include "wagner_forge/fa.hpp"
#include "wagner_forge/omega.hpp"

namespace wf::test {

inline std::vector<Word> all_words(int max_len,
                                   const Alphabet& sigma = binary_alphabet()) {
  std::vector<Word> out{""};
  std::vector<Word> layer{""};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer)
      for (char c : sigma.letters) next.push_back(w + c);
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

inline std::vector<Word> words_matching(const std::string& ecmascript_regex,
                                        int max_len) {
  std::regex re(ecmascript_regex);
  std::vector<Word> out;
  for (const Word& w : all_words(max_len))
    if (std::regex_match(w, re)) out.push_back(w);
  return out;
}

// First n letters of u.v^ω.
inline Word lasso_prefix(const Lasso& l, int n) {
  Word w;
  for (int k = 0; k < n; ++k) w.push_back(lasso_letter(l, k));
  return w;
}

// u.v^ω ∈ (L \ {ε})^∞, decided by walking the DFA for L along the lasso.
// A factor longer than P*|Q| steps can be pumped down without changing its
// endpoints on the (wheel position, DFA state) graph, so that bound is
// complete.  Independent of the library's NFA-product construction.
inline bool lasso_in_omega_power_brute(const Nfa& language, const Lasso& l) {
  Dfa d = determinize_minimize(trim(language));
  int P = static_cast<int>(l.u.size() + l.v.size());
  int ulen = static_cast<int>(l.u.size());
  auto next_pos = [&](int pos) { return pos + 1 == P ? ulen : pos + 1; };
  auto letter_at = [&](int pos) {
    return pos < ulen ? l.u[pos] : l.v[pos - ulen];
  };
  int bound = P * d.num_states + 1;

  // factor[i] = wheel positions reachable from i by one nonempty L-factor
  std::vector<std::set<int>> factor(P);
  for (int i = 0; i < P; ++i) {
    int pos = i, state = d.initial;
    for (int n = 1; n <= bound; ++n) {
      state = d.delta[state][d.alphabet.index_checked(letter_at(pos))];
      pos = next_pos(pos);
      if (d.accepting[state]) factor[i].insert(pos);
    }
  }

  // greedy closure: positions from which the tail factorizes forever
  std::set<int> reach{0};
  for (int round = 0; round < P + 1; ++round) {
    std::set<int> grown = reach;
    for (int i : reach) grown.insert(factor[i].begin(), factor[i].end());
    reach = grown;
  }
  // infinite factorization iff some reachable position can reach itself
  for (int i : reach) {
    std::set<int> from_i = factor[i];
    for (int round = 0; round < P + 1; ++round) {
      std::set<int> grown = from_i;
      for (int j : from_i) grown.insert(factor[j].begin(), factor[j].end());
      from_i = grown;
    }
    if (from_i.count(i)) return true;
  }
  return false;
}

}  // namespace wf::test

#endif
