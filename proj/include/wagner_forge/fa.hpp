#ifndef WAGNER_FORGE_FA_HPP
#define WAGNER_FORGE_FA_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace wf {

/// Ordered finite alphabet, {0,1} by default.
struct Alphabet {
  std::vector<char> letters{'0', '1'};

  int size() const { return static_cast<int>(letters.size()); }
  int index(char c) const;          // -1 for a foreign letter
  int index_checked(char c) const;  // throws std::invalid_argument
  bool operator==(const Alphabet&) const = default;
};

const Alphabet& binary_alphabet();

/// Finite words are plain strings over the alphabet's letters; ε is "".
using Word = std::string;

struct Trans {
  int from;
  int letter;  // index into the alphabet
  int to;

  bool operator==(const Trans&) const = default;
};

/// ε-free NFA with a single initial state. States are dense indices.
struct Nfa {
  Alphabet alphabet;
  int num_states = 1;
  int initial = 0;
  std::vector<Trans> transitions;
  std::vector<bool> final_states{false};
};

/// Complete DFA: delta[state][letter] is total.
struct Dfa {
  Alphabet alphabet;
  int num_states = 1;
  int initial = 0;
  std::vector<std::vector<int>> delta;
  std::vector<bool> accepting{false};
};

// Regular-language constructors.  All results are ε-free and trimmed;
// star() keeps a fresh accepting initial state with no incoming edges.
Nfa nfa_empty(const Alphabet& sigma = binary_alphabet());
Nfa nfa_epsilon(const Alphabet& sigma = binary_alphabet());
Nfa nfa_letter(char a, const Alphabet& sigma = binary_alphabet());
Nfa nfa_union(const Nfa& a, const Nfa& b);
Nfa nfa_concat(const Nfa& a, const Nfa& b);
Nfa nfa_star(const Nfa& a);
Nfa nfa_from_dfa(const Dfa& d);
Nfa nfa_from_words(const std::vector<Word>& words,
                   const Alphabet& sigma = binary_alphabet());

Dfa determinize(const Nfa& a);
Dfa minimize(const Dfa& d);  // also renumbers states canonically (BFS order)
Dfa determinize_minimize(const Nfa& a);

Dfa dfa_complement(const Dfa& d);
Dfa dfa_intersect(const Dfa& a, const Dfa& b);
Dfa dfa_union(const Dfa& a, const Dfa& b);

bool accepts(const Nfa& a, const Word& w);
bool accepts(const Dfa& d, const Word& w);

/// All accepted words of length <= max_len, in length-lexicographic order.
std::vector<Word> enumerate_words(const Nfa& a, int max_len);
std::vector<Word> enumerate_words(const Dfa& d, int max_len);

bool is_empty(const Nfa& a);
bool is_empty(const Dfa& d);

/// Drops states that are not both reachable and co-reachable.
Nfa trim(const Nfa& a);

bool dfa_subseteq(const Dfa& a, const Dfa& b);
bool dfa_equiv(const Dfa& a, const Dfa& b);

/// Exact isomorphism after canonical BFS renumbering; meaningful for
/// minimal automata.
bool dfa_isomorphic(const Dfa& a, const Dfa& b);

void check_valid(const Nfa& a);
void check_valid(const Dfa& d);

}  // namespace wf

#endif
