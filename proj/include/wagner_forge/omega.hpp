#ifndef WAGNER_FORGE_OMEGA_HPP
#define WAGNER_FORGE_OMEGA_HPP

#include <optional>
#include <string>
#include <vector>

#include "wagner_forge/fa.hpp"

namespace wf {

/// Nondeterministic Büchi automaton.
struct Nbw {
  Alphabet alphabet;
  int num_states = 1;
  int initial = 0;
  std::vector<Trans> transitions;
  std::vector<bool> accepting{false};
};

/// Deterministic weak automaton: total transition function, one acceptance
/// bit per state, uniform bits inside every SCC.
struct Dwa {
  Alphabet alphabet;
  int num_states = 1;
  int initial = 0;
  std::vector<std::vector<int>> delta;
  std::vector<bool> accepting{false};
};

/// Ultimately periodic ω-word u·v^ω  (|v| >= 1).
struct Lasso {
  Word u;
  Word v;

  bool operator==(const Lasso&) const = default;
};

void check_valid(const Nbw& b);
void check_valid(const Dwa& w);
bool is_weak(const Dwa& w);

Dwa dwa_universal(const Alphabet& sigma = binary_alphabet());
Dwa dwa_empty_language(const Alphabet& sigma = binary_alphabet());

/// NBW for (L \ {ε})^∞.  L is normalized to a non-returning initial state
/// first; ε is stripped.
Nbw omega_power_nbw(const Nfa& language);

bool nbw_accepts_lasso(const Nbw& b, const Lasso& l);

/// Reference decision procedure for u·v^ω ∈ L^∞, independent of the NBW
/// construction: builds the factor graph on lasso positions (edge i→j iff
/// some factor of length >= 1 read from i to j lies in L) and looks for a
/// cycle reachable from position 0.
bool lasso_in_omega_power_oracle(const Nfa& language, const Lasso& l);

bool dwa_accepts_lasso(const Dwa& w, const Lasso& l);

Dwa dwa_complement(const Dwa& w);
Dwa dwa_intersect(const Dwa& a, const Dwa& b);
Dwa dwa_union(const Dwa& a, const Dwa& b);

bool dwa_is_empty(const Dwa& w);
bool dwa_subseteq(const Dwa& a, const Dwa& b);
bool dwa_equiv(const Dwa& a, const Dwa& b);

bool nbw_is_empty(const Nbw& b);
Nbw trim_nbw(const Nbw& b);

/// Exact inclusion L(b) ⊆ L(w) via the bad-SCC search on b × complement(w).
bool nbw_subseteq_dwa(const Nbw& b, const Dwa& w);

/// Witness lasso in L(b) \ L(w), if any.
std::optional<Lasso> nbw_minus_dwa_witness(const Nbw& b, const Dwa& w);

/// Emptiness of L(w) ∩ L(b); both acceptance conditions honoured.
bool dwa_nbw_intersection_empty(const Dwa& w, const Nbw& b);

/// Level-ranking (rank-based) complementation, resource-gated.
struct RankComplement {
  std::optional<Nbw> result;
  bool gated = false;
  std::string gate_reason;
};
RankComplement nbw_complement_rank(const Nbw& b, int gate_states = 10,
                                   int max_constructed = 50000);

/// Lasso with |u| and |v| both even, denoting the same ω-word.
Lasso normalize_even(const Lasso& l);

/// Lasso denoting (α)_ε for α = u·v^ω: the letters at positions of parity ε.
Lasso deinterleave_lasso(const Lasso& l, int eps);

/// Letter of u·v^ω at position k.
char lasso_letter(const Lasso& l, long long k);

/// Subset-construction DWA candidate for L(b).  Exact when L(b) is weakly
/// recognizable; the caller must cross-validate (NBW ⊆ DWA exactly, the
/// converse via nbw_complement_rank or a bounded lasso sweep).
Dwa nbw_to_dwa(const Nbw& b);

/// All lassos with |u| <= bu, |v| in [1, bv], in a fixed deterministic order.
std::vector<Lasso> all_lassos(int bu, int bv,
                              const Alphabet& sigma = binary_alphabet());

}  // namespace wf

#endif
