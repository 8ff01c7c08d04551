#ifndef WAGNER_FORGE_DIFFALG_HPP
#define WAGNER_FORGE_DIFFALG_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "wagner_forge/fa.hpp"
#include "wagner_forge/omega.hpp"

namespace wf {

/// Open subset W·2^ω of Cantor space, as a saturated good-prefix DFA
/// (acceptance is absorbing: every extension of a good prefix is good).
struct OpenSet {
  Dfa good_prefixes;
};

OpenSet make_open(const std::vector<Word>& prefixes);
OpenSet open_from_dfa(const Dfa& d);  // saturates
OpenSet open_union(const OpenSet& a, const OpenSet& b);
OpenSet open_intersect(const OpenSet& a, const OpenSet& b);
OpenSet open_full();
OpenSet open_empty();

Dwa open_dwa(const OpenSet& o);

/// Inclusion of the denoted ω-sets (not of the prefix languages).
bool open_subseteq(const OpenSet& a, const OpenSet& b);

/// Increasing sequence (O_η)_{η<k} of opens.
struct OpenFamily {
  std::vector<OpenSet> members;
};

bool is_increasing(const OpenFamily& f);

/// Finite union of cylinders N_w with |w| = depth.
struct ClopenSet {
  int depth = 0;
  std::vector<Word> words;  // all of length depth, deduplicated
};

Dwa clopen_dwa(const ClopenSet& c);

/// D_k of the family: x is in iff the least η with x ∈ O_η exists and
/// parity(η) ≠ parity(k).  Throws on non-increasing input.
Dwa difference_dwa(const OpenFamily& f);

/// (L(A) ∩ C) ∪ (L(B) \ C).
Dwa oplus_dwa(const Dwa& A, const Dwa& B, const ClopenSet& C);

// The four constructive identities behind the difference-hierarchy
// recursion, each checked by exact DWA equivalence of both sides.
// (a) (X \ D_k(U)) ∩ V            = D_{k+1}(O)
bool lemma4_a(const OpenFamily& U, const OpenSet& V);
// (b) (X \ D_{2k}(U)) ∩ (X \ V)   = X \ D_{2k+1}(O)
bool lemma4_b(const OpenFamily& U, const OpenSet& V);
// (c) (X \ D_{2k}(U)) ∩ (X \ D_2(Vpair)) = X \ D_{2k+2}(O)
bool lemma4_c(const OpenFamily& U, const OpenFamily& Vpair);
// (d) both distribution identities for (A∩C)∪(B∖C) against
//     E = X \ D_{2k}(UE), E0, E1 likewise
bool lemma4_d(const OpenFamily& UE0, const OpenFamily& UE1, const OpenSet& A,
              const OpenSet& Bcomp, const ClopenSet& C);

/// (C1\C0) ∪ (D1\D0) = (C1∪D1) \ (C0∩D0), as bitmask sets.
bool key_fact_identity(uint32_t c0, uint32_t c1, uint32_t d0, uint32_t d1);

/// Random constrained quadruples (C1 ⊆ D0, D1 ⊆ C0) over {0..universe-1}.
bool key_fact_check(int trials, int universe, uint64_t seed);

/// Search for a violation once the side conditions are dropped.
std::optional<std::array<uint32_t, 4>> key_fact_counterexample(int universe);

OpenSet random_open(std::mt19937& rng, int max_depth);
OpenFamily random_increasing_family(std::mt19937& rng, int k, int max_depth);
ClopenSet random_clopen(std::mt19937& rng, int depth);

}  // namespace wf

#endif
