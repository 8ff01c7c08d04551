#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gen.hpp"
#include "oracles.hpp"
#include "wagner_forge/constructions.hpp"

using namespace wf;
using wf::test::all_words;
using wf::test::random_nfa;

namespace {

// direct reading of the displayed predicates on the odd track
bool odd_condition(const Word& x, int i) {
  auto starts_with_10q1 = [&](size_t off) {
    // x[off..] begins 1 0^q 1
    if (off >= x.size() || x[off] != '1') return false;
    for (size_t p = off + 1; p < x.size(); ++p) {
      if (x[p] == '1') return true;
      if (x[p] != '0') return false;
    }
    return false;
  };
  switch (i) {
    case 0:
      return (!x.empty() && x[0] == '0') || starts_with_10q1(0);
    case 1:
      return x.find('1') == Word::npos;
    case 2: {
      if (x.find('1') == Word::npos) return true;
      size_t first = x.find('1');
      return starts_with_10q1(first);
    }
  }
  return false;
}

bool in_star(const Nfa& L, const Word& w) {
  // decomposition DP over prefixes
  std::vector<bool> ok(w.size() + 1, false);
  ok[0] = true;
  for (size_t i = 1; i <= w.size(); ++i)
    for (size_t j = 0; j < i && !ok[i]; ++j)
      if (ok[j] && accepts(L, w.substr(j, i - j))) ok[i] = true;
  return ok[w.size()];
}

bool interleave_predicate(const Nfa& L, const Word& w, int i) {
  if (w.size() % 2 != 0) return false;
  Word even, odd;
  for (size_t k = 0; k < w.size(); ++k) (k % 2 == 0 ? even : odd) += w[k];
  return in_star(L, even) && odd_condition(odd, i);
}

}  // namespace

TEST_CASE("base language probes") {
  Nfa d1 = base_language(BaseId::D1ex);
  CHECK(accepts(d1, "0"));
  CHECK(!accepts(d1, "10"));
  CHECK(accepts(d1, "1001"));
  CHECK(!accepts(d1, ""));
  CHECK(!accepts(d1, "1"));

  CHECK(enumerate_words(base_language(BaseId::D1checkEx), 2) ==
        std::vector<Word>{"0"});

  Nfa s = base_language(BaseId::Sigma1oplusPi1);
  CHECK(accepts(s, "00"));
  CHECK(accepts(s, "001"));
  CHECK(!accepts(s, "01"));
  CHECK(accepts(s, "1011"));
  CHECK(!accepts(s, "0010"));

  Nfa d2c = base_language(BaseId::D2checkEx);
  CHECK(accepts(d2c, ""));
  CHECK(accepts(d2c, "000"));
  CHECK(accepts(d2c, "0101"));
  CHECK(!accepts(d2c, "010"));

  Nfa delta = base_language(BaseId::Delta01);
  CHECK(accepts(delta, "01"));
  CHECK(accepts(delta, "110"));
  CHECK(!accepts(delta, "101"));
  CHECK(is_empty(base_language(BaseId::D0)));
}

TEST_CASE("base names round-trip") {
  for (BaseId id : {BaseId::D0, BaseId::D0check, BaseId::D1ex, BaseId::D1checkEx,
                    BaseId::D2checkEx, BaseId::Delta01, BaseId::Sigma1oplusPi1})
    CHECK(parse_base(base_name(id)) == id);
  CHECK(!parse_base("nope").has_value());
}

TEST_CASE("interleaving a singleton") {
  Dfa L = determinize_minimize(nfa_from_words({"0"}));
  Nfa l1 = interleave_language(L, 1);
  CHECK(accepts(l1, ""));
  CHECK(accepts(l1, "00"));
  CHECK(accepts(l1, "0000"));
  CHECK(!accepts(l1, "01"));
  CHECK(!accepts(l1, "000"));
  Nfa l0 = interleave_language(L, 0);
  CHECK(!accepts(l0, ""));
}

TEST_CASE("interleaving matches the displayed predicate") {
  std::mt19937 rng(31);
  for (int t = 0; t < 12; ++t) {
    Nfa L = random_nfa(rng, 3);
    for (int i = 0; i < 3; ++i) {
      Nfa li = interleave_language(determinize_minimize(L), i);
      for (const Word& w : all_words(10)) {
        CAPTURE(t);
        CAPTURE(i);
        CAPTURE(w);
        CHECK(accepts(li, w) == interleave_predicate(L, w, i));
      }
    }
  }
}

TEST_CASE("epsilon membership in the wraps") {
  for (BaseId id : {BaseId::D0, BaseId::D1ex, BaseId::D0check}) {
    Dfa L = determinize_minimize(base_language(id));
    CHECK(accepts(interleave_language(L, 1), ""));
    CHECK(!accepts(interleave_language(L, 0), ""));
  }
}

TEST_CASE("recipes follow the induction") {
  auto steps_of = [](const WagnerClass& c) {
    std::vector<std::string> out;
    auto r = recipe_for_class(c);
    REQUIRE(r.has_value());
    for (const Step& s : r->steps)
      out.push_back(s.is_base ? "base:" + base_name(s.base)
                              : "wrap:" + std::to_string(s.wrap));
    return out;
  };
  CHECK(steps_of({Shape::D, 0}) == std::vector<std::string>{"base:D0"});
  CHECK(steps_of({Shape::Dcheck, 0}) == std::vector<std::string>{"base:D0check"});
  CHECK(steps_of({Shape::D, 1}) ==
        std::vector<std::string>{"base:D0check", "wrap:0"});
  CHECK(steps_of({Shape::Dcheck, 2}) ==
        std::vector<std::string>{"base:D0check", "wrap:2"});
  CHECK(steps_of({Shape::D, 2}) ==
        std::vector<std::string>{"base:D0check", "wrap:1", "wrap:0"});
  CHECK(steps_of({Shape::DoplusDcheck, 0}) ==
        std::vector<std::string>{"base:Delta01"});
  CHECK(steps_of({Shape::DoplusDcheck, 3}) ==
        std::vector<std::string>{"base:Sigma1oplusPi1", "wrap:2"});
  CHECK(!recipe_for_class({Shape::DoplusDcheck, 2}).has_value());
  CHECK_THROWS_AS(build_for_class({Shape::DoplusDcheck, 4}), UnsupportedClass);
}

TEST_CASE("condition DWA probes") {
  Dwa n10 = condition_dwa(ConditionKind::neq_10inf);
  CHECK(!dwa_accepts_lasso(n10, {"1", "0"}));
  CHECK(dwa_accepts_lasso(n10, {"0", "0"}));
  Dwa z = condition_dwa(ConditionKind::eq_0inf);
  CHECK(dwa_accepts_lasso(z, {"", "0"}));
  CHECK(!dwa_accepts_lasso(z, {"", "01"}));
  Dwa zz = condition_dwa(ConditionKind::zeroinf_or_two_ones);
  CHECK(dwa_accepts_lasso(zz, {"11", "0"}));
  CHECK(!dwa_accepts_lasso(zz, {"1", "0"}));
  CHECK(dwa_accepts_lasso(zz, {"", "0"}));
  for (ConditionKind k : {ConditionKind::neq_10inf, ConditionKind::eq_0inf,
                          ConditionKind::zeroinf_or_two_ones})
    CHECK(is_weak(condition_dwa(k)));
}

TEST_CASE("interleaved product evaluates both tracks") {
  Dwa uni = dwa_universal();
  CHECK(dwa_equiv(interleaved_product_dwa(uni, uni), uni));
  Dwa p = interleaved_product_dwa(uni, condition_dwa(ConditionKind::eq_0inf));
  CHECK(dwa_accepts_lasso(p, {"", "00"}));
  CHECK(dwa_accepts_lasso(p, {"", "10"}));
  CHECK(!dwa_accepts_lasso(p, {"", "01"}));
  CHECK(!dwa_accepts_lasso(p, {"01", "01"}));

  Dwa a = condition_dwa(ConditionKind::neq_10inf);
  Dwa b = condition_dwa(ConditionKind::zeroinf_or_two_ones);
  Dwa ab = interleaved_product_dwa(a, b);
  for (const Lasso& l : all_lassos(4, 4)) {
    bool expect = dwa_accepts_lasso(a, deinterleave_lasso(l, 0)) &&
                  dwa_accepts_lasso(b, deinterleave_lasso(l, 1));
    CAPTURE(l.u);
    CAPTURE(l.v);
    CHECK(dwa_accepts_lasso(ab, l) == expect);
  }
}

TEST_CASE("base powers agree with the omega-power oracle") {
  for (BaseId id : {BaseId::D0, BaseId::D0check, BaseId::D1ex, BaseId::D1checkEx,
                    BaseId::D2checkEx, BaseId::Delta01, BaseId::Sigma1oplusPi1}) {
    CAPTURE(base_name(id));
    CHECK(validate_base_power(id, 4, 4));
  }
}

TEST_CASE("shallow characterizations match the recipe language") {
  std::vector<WagnerClass> targets{
      {Shape::D, 0},      {Shape::Dcheck, 0}, {Shape::DoplusDcheck, 0},
      {Shape::D, 1},      {Shape::Dcheck, 1}, {Shape::DoplusDcheck, 1},
      {Shape::Dcheck, 2},
  };
  for (const WagnerClass& c : targets) {
    BuildResult b = build_for_class(c);
    Dwa w = characterization_dwa(b.recipe);
    for (const Lasso& l : all_lassos(3, 3)) {
      CAPTURE(class_name(c));
      CAPTURE(l.u);
      CAPTURE(l.v);
      CHECK(lasso_in_omega_power_oracle(b.language, l) ==
            dwa_accepts_lasso(w, l));
    }
    CHECK(classify(w).cls == c);
  }
}
