#include "wagner_forge/constructions.hpp"

#include <map>

namespace wf {

std::string base_name(BaseId id) {
  switch (id) {
    case BaseId::D0: return "D0";
    case BaseId::D0check: return "D0check";
    case BaseId::D1ex: return "D1ex";
    case BaseId::D1checkEx: return "D1checkEx";
    case BaseId::D2checkEx: return "D2checkEx";
    case BaseId::Delta01: return "Delta01";
    case BaseId::Sigma1oplusPi1: return "Sigma1oplusPi1";
  }
  return "";
}

std::optional<BaseId> parse_base(const std::string& name) {
  for (BaseId id : {BaseId::D0, BaseId::D0check, BaseId::D1ex, BaseId::D1checkEx,
                    BaseId::D2checkEx, BaseId::Delta01, BaseId::Sigma1oplusPi1})
    if (base_name(id) == name) return id;
  return std::nullopt;
}

namespace {

Nfa any_word() { return nfa_star(nfa_union(nfa_letter('0'), nfa_letter('1'))); }

// words starting with 10^p1
Nfa one_zeros_one_prefix() {
  Nfa head = nfa_concat(nfa_letter('1'),
                        nfa_concat(nfa_star(nfa_letter('0')), nfa_letter('1')));
  return nfa_concat(head, any_word());
}

}  // namespace

Nfa base_language(BaseId id) {
  switch (id) {
    case BaseId::D0:
      return nfa_empty();
    case BaseId::D0check:
      return any_word();
    case BaseId::D1ex:
      // 0 ⊑ w or 10^p1 ⊑ w
      return nfa_union(nfa_concat(nfa_letter('0'), any_word()),
                       one_zeros_one_prefix());
    case BaseId::D1checkEx:
      return nfa_from_words({"0"});
    case BaseId::D2checkEx:
      // w all zeros, or 0^p10^q1 ⊑ w
      return nfa_union(nfa_star(nfa_letter('0')),
                       nfa_concat(nfa_star(nfa_letter('0')),
                                  one_zeros_one_prefix()));
    case BaseId::Delta01:
      // 0 ⊑ w or 11 ⊑ w
      return nfa_union(nfa_concat(nfa_letter('0'), any_word()),
                       nfa_concat(nfa_from_words({"11"}), any_word()));
    case BaseId::Sigma1oplusPi1:
      return nfa_union(nfa_from_words({"00", "001"}), one_zeros_one_prefix());
  }
  throw std::invalid_argument("unknown base id");
}

namespace {

// finite-word DFAs for the three odd-track conditions
Dfa odd_track_dfa(int i) {
  Dfa d;
  d.alphabet = binary_alphabet();
  switch (i) {
    case 0:
      // starts with 0, or with 10^q1
      d.num_states = 3;
      d.initial = 0;
      d.delta = {{2, 1}, {1, 2}, {2, 2}};
      d.accepting = {false, false, true};
      return d;
    case 1:
      // 0*
      d.num_states = 2;
      d.initial = 0;
      d.delta = {{0, 1}, {1, 1}};
      d.accepting = {true, false};
      return d;
    case 2:
      // 0*, or starts with 0^p10^q1
      d.num_states = 3;
      d.initial = 0;
      d.delta = {{0, 1}, {1, 2}, {2, 2}};
      d.accepting = {true, false, true};
      return d;
  }
  throw std::invalid_argument("wrap index must be 0, 1 or 2");
}

}  // namespace

Nfa interleave_language(const Dfa& L, int i) {
  check_valid(L);
  if (!(L.alphabet == binary_alphabet()))
    throw std::invalid_argument("interleaving is defined over {0,1}");
  Dfa star = determinize_minimize(nfa_star(nfa_from_dfa(L)));
  Dfa cond = odd_track_dfa(i);

  int nl = 2;
  std::map<std::tuple<int, int, int>, int> id;
  std::vector<std::tuple<int, int, int>> states;
  auto intern = [&](std::tuple<int, int, int> s) {
    auto [it, fresh] = id.emplace(s, static_cast<int>(states.size()));
    if (fresh) states.push_back(s);
    return it->second;
  };
  Dfa out;
  out.alphabet = binary_alphabet();
  out.initial = intern({0, star.initial, cond.initial});
  out.delta.clear();
  out.accepting.clear();
  for (size_t s = 0; s < states.size(); ++s) {
    auto [par, ls, cs] = states[s];
    std::vector<int> row(nl);
    for (int l = 0; l < nl; ++l)
      row[l] = par == 0 ? intern({1, star.delta[ls][l], cs})
                        : intern({0, ls, cond.delta[cs][l]});
    out.delta.push_back(std::move(row));
    out.accepting.push_back(par == 0 && star.accepting[ls] && cond.accepting[cs]);
  }
  out.num_states = static_cast<int>(out.delta.size());
  return trim(nfa_from_dfa(minimize(out)));
}

std::optional<Recipe> recipe_for_class(const WagnerClass& c) {
  if (c.level < 0) return std::nullopt;
  auto with_wrap = [](Recipe r, int i) {
    r.steps.push_back({false, BaseId::D0, i});
    return r;
  };
  Recipe r;
  r.target = c;
  switch (c.shape) {
    case Shape::D:
      if (c.level == 0) {
        r.steps = {{true, BaseId::D0, 0}};
        return r;
      }
      if (c.level % 2 == 1) {
        // D_{2k+1} = wrap0(Dcheck_{2k})
        auto inner = recipe_for_class({Shape::Dcheck, c.level - 1});
        r = with_wrap(*inner, 0);
      } else {
        // D_{2k+2} = wrap0(Dcheck_{2k+1})
        auto inner = recipe_for_class({Shape::Dcheck, c.level - 1});
        r = with_wrap(*inner, 0);
      }
      r.target = c;
      return r;
    case Shape::Dcheck:
      if (c.level == 0) {
        r.steps = {{true, BaseId::D0check, 0}};
        return r;
      }
      if (c.level % 2 == 1) {
        // Dcheck_{2k+1} = wrap1(Dcheck_{2k})
        auto inner = recipe_for_class({Shape::Dcheck, c.level - 1});
        r = with_wrap(*inner, 1);
      } else {
        // Dcheck_{2k+2} = wrap2(Dcheck_{2k})
        auto inner = recipe_for_class({Shape::Dcheck, c.level - 2});
        r = with_wrap(*inner, 2);
      }
      r.target = c;
      return r;
    case Shape::DoplusDcheck:
      if (c.level == 0) {
        r.steps = {{true, BaseId::Delta01, 0}};
        return r;
      }
      if (c.level % 2 == 0) return std::nullopt;  // open, see the scope gate
      if (c.level == 1) {
        r.steps = {{true, BaseId::Sigma1oplusPi1, 0}};
        return r;
      }
      // oplus_{2k+3} = wrap2(oplus_{2k+1})
      r = with_wrap(*recipe_for_class({Shape::DoplusDcheck, c.level - 2}), 2);
      r.target = c;
      return r;
  }
  return std::nullopt;
}

Nfa replay_language(const Recipe& r) {
  if (r.steps.empty() || !r.steps.front().is_base)
    throw std::invalid_argument("recipe must start with a base");
  Nfa cur = base_language(r.steps.front().base);
  for (size_t i = 1; i < r.steps.size(); ++i) {
    if (r.steps[i].is_base)
      throw std::invalid_argument("recipe has a base after the first step");
    cur = interleave_language(determinize_minimize(cur), r.steps[i].wrap);
  }
  return cur;
}

BuildResult build_for_class(const WagnerClass& c) {
  auto r = recipe_for_class(c);
  if (!r)
    throw UnsupportedClass("no construction for " + class_name(c) +
                           ": even oplus levels are an open question");
  return {*r, replay_language(*r)};
}

ConditionKind wrap_condition(int i) {
  switch (i) {
    case 0: return ConditionKind::neq_10inf;
    case 1: return ConditionKind::eq_0inf;
    case 2: return ConditionKind::zeroinf_or_two_ones;
  }
  throw std::invalid_argument("wrap index must be 0, 1 or 2");
}

Dwa condition_dwa(ConditionKind k) {
  Dwa w;
  w.alphabet = binary_alphabet();
  switch (k) {
    case ConditionKind::neq_10inf:
      // 2^ω minus {10^∞}
      w.num_states = 3;
      w.initial = 0;
      w.delta = {{2, 1}, {1, 2}, {2, 2}};
      w.accepting = {false, false, true};
      return w;
    case ConditionKind::eq_0inf:
      // {0^∞}
      w.num_states = 2;
      w.initial = 0;
      w.delta = {{0, 1}, {1, 1}};
      w.accepting = {true, false};
      return w;
    case ConditionKind::zeroinf_or_two_ones:
      // {α | α = 0^∞ or α has at least two ones}
      w.num_states = 3;
      w.initial = 0;
      w.delta = {{0, 1}, {1, 2}, {2, 2}};
      w.accepting = {true, false, true};
      return w;
  }
  throw std::invalid_argument("unknown condition");
}

Dwa interleaved_product_dwa(const Dwa& A, const Dwa& B) {
  check_valid(A);
  check_valid(B);
  if (!(A.alphabet == binary_alphabet()) || !(B.alphabet == binary_alphabet()))
    throw std::invalid_argument("interleaved product is defined over {0,1}");
  std::map<std::tuple<int, int, int>, int> id;
  std::vector<std::tuple<int, int, int>> states;
  auto intern = [&](std::tuple<int, int, int> s) {
    auto [it, fresh] = id.emplace(s, static_cast<int>(states.size()));
    if (fresh) states.push_back(s);
    return it->second;
  };
  Dwa out;
  out.alphabet = binary_alphabet();
  out.initial = intern({0, A.initial, B.initial});
  out.delta.clear();
  out.accepting.clear();
  for (size_t s = 0; s < states.size(); ++s) {
    auto [par, a, b] = states[s];
    std::vector<int> row(2);
    for (int l = 0; l < 2; ++l)
      row[l] = par == 0 ? intern({1, A.delta[a][l], b})
                        : intern({0, a, B.delta[b][l]});
    out.delta.push_back(std::move(row));
    out.accepting.push_back(A.accepting[a] && B.accepting[b]);
  }
  out.num_states = static_cast<int>(out.delta.size());
  if (!is_weak(out)) throw std::logic_error("interleaved product lost weakness");
  return out;
}

Dwa base_power_dwa(BaseId id) {
  Dwa w;
  w.alphabet = binary_alphabet();
  switch (id) {
    case BaseId::D0:
      return dwa_empty_language();
    case BaseId::D0check:
      return dwa_universal();
    case BaseId::D1ex:
      return condition_dwa(ConditionKind::neq_10inf);
    case BaseId::D1checkEx:
      return condition_dwa(ConditionKind::eq_0inf);
    case BaseId::D2checkEx:
      return condition_dwa(ConditionKind::zeroinf_or_two_ones);
    case BaseId::Delta01:
      // N₀ ∪ N₁₁
      w.num_states = 4;
      w.initial = 0;
      w.delta = {{2, 1}, {3, 2}, {2, 2}, {3, 3}};
      w.accepting = {false, false, true, false};
      return w;
    case BaseId::Sigma1oplusPi1:
      // {0^∞} ∪ ⋃_q N_{0^{2q+2}1} ∪ (N₁ \ {10^∞}), the set derived from
      // the ω-power oracle (see validate_base_power)
      w.num_states = 6;
      w.initial = 0;
      // 0: start, 1: odd zeros, 2: even zeros (>= 2), 3: after lone 1,
      // 4: accepting sink, 5: rejecting sink
      w.delta = {{1, 3}, {2, 5}, {1, 4}, {3, 4}, {4, 4}, {5, 5}};
      w.accepting = {true, true, true, false, true, false};
      return w;
  }
  throw std::invalid_argument("unknown base id");
}

Dwa characterization_dwa(const Recipe& r) {
  if (r.steps.empty() || !r.steps.front().is_base)
    throw std::invalid_argument("recipe must start with a base");
  Dwa cur = base_power_dwa(r.steps.front().base);
  for (size_t i = 1; i < r.steps.size(); ++i) {
    Dwa cond = condition_dwa(wrap_condition(r.steps[i].wrap));
    cur = reduce_dwa(interleaved_product_dwa(cur, cond));
  }
  return cur;
}

bool validate_base_power(BaseId id, int bu, int bv) {
  Nfa lang = base_language(id);
  Dwa w = base_power_dwa(id);
  for (const Lasso& l : all_lassos(bu, bv))
    if (lasso_in_omega_power_oracle(lang, l) != dwa_accepts_lasso(w, l))
      return false;
  return true;
}

}  // namespace wf
