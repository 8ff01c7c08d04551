#ifndef WAGNER_FORGE_CONSTRUCTIONS_HPP
#define WAGNER_FORGE_CONSTRUCTIONS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wagner_forge/fa.hpp"
#include "wagner_forge/omega.hpp"
#include "wagner_forge/wagner.hpp"

namespace wf {

enum class BaseId { D0, D0check, D1ex, D1checkEx, D2checkEx, Delta01, Sigma1oplusPi1 };

enum class ConditionKind { neq_10inf, eq_0inf, zeroinf_or_two_ones };

std::string base_name(BaseId id);
std::optional<BaseId> parse_base(const std::string& name);

/// One recipe step: either a named base language or an interleaving wrap
/// L ↦ L_i with i in {0,1,2}.
struct Step {
  bool is_base = false;
  BaseId base = BaseId::D0;
  int wrap = 0;

  bool operator==(const Step&) const = default;
};

struct Recipe {
  WagnerClass target;
  std::vector<Step> steps;  // first step is a base
};

struct UnsupportedClass : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The finite-word languages whose ω-powers seed the induction.
Nfa base_language(BaseId id);

/// L_i: even-length words w with (w)₀ ∈ L* and (w)₁ meeting condition i.
/// i=0: (w)₁ starts with 0 or with 10^q1; i=1: (w)₁ ∈ 0*;
/// i=2: (w)₁ ∈ 0* or starts with 0^p10^q1.
Nfa interleave_language(const Dfa& L, int i);

/// Recipe for a supported class; nullopt for D_{2n+2}+D_{2n+2}check (n >= 0),
/// which is open.
std::optional<Recipe> recipe_for_class(const WagnerClass& c);

struct BuildResult {
  Recipe recipe;
  Nfa language;
};

/// Replays the induction; throws UnsupportedClass outside its scope.
BuildResult build_for_class(const WagnerClass& c);

Nfa replay_language(const Recipe& r);

ConditionKind wrap_condition(int i);

/// Hand-built minimal DWAs for the three fundamental ω-sets.
Dwa condition_dwa(ConditionKind k);

/// {α | (α)₀ ∈ L(A) ∧ (α)₁ ∈ L(B)}.
Dwa interleaved_product_dwa(const Dwa& A, const Dwa& B);

/// DWA for the ω-power of the base language.
Dwa base_power_dwa(BaseId id);

/// Mirrors the recipe on the DWA side; denotes (replay_language(r))^∞.
Dwa characterization_dwa(const Recipe& r);

/// Sweeps all lassos |u| <= bu, |v| <= bv: ω-power oracle of the base
/// language against base_power_dwa.
bool validate_base_power(BaseId id, int bu, int bv);

}  // namespace wf

#endif
