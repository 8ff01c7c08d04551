#ifndef WAGNER_FORGE_WAGNER_HPP
#define WAGNER_FORGE_WAGNER_HPP

#include <optional>
#include <string>
#include <vector>

#include "wagner_forge/omega.hpp"

namespace wf {

enum class Shape { D, Dcheck, DoplusDcheck };

/// Position in the Δ⁰₂ part of the Wagner hierarchy.
struct WagnerClass {
  Shape shape;
  int level = 0;

  bool operator==(const WagnerClass&) const = default;
};

std::string class_name(const WagnerClass& c);        // "D3", "D3check", "D3+D3check"
std::optional<WagnerClass> parse_class(const std::string& name);
WagnerClass dual_class(const WagnerClass& c);

/// Partial order of the hierarchy: D_n, Dcheck_n < oplus_n < D_{n+1}.
bool wagner_leq(const WagnerClass& a, const WagnerClass& b);

/// Longest alternating chains of loop SCCs reachable from the initial
/// state, by leading polarity.  Witnesses list the SCC state sets along
/// one maximal chain each.
struct ChainProfile {
  int m_acc = 0;
  int m_rej = 0;
  std::vector<std::vector<int>> acc_witness;
  std::vector<std::vector<int>> rej_witness;
};

/// Trim, then quotient by state-language equivalence.  Language-preserving
/// and weak (both asserted).
Dwa reduce_dwa(const Dwa& w);

/// Requires a reduced automaton to be meaningful for classification.
ChainProfile chain_profile(const Dwa& w);

struct Classification {
  WagnerClass cls;
  ChainProfile profile;
};

/// Exact Wagner class of L(w); reduces internally.
Classification classify(const Dwa& w);

bool is_complete_for(const Dwa& w, const WagnerClass& c);

}  // namespace wf

#endif
