#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "wagner_forge/fa.hpp"
#include "wagner_forge/omega.hpp"

using namespace wf;
using wf::test::lasso_in_omega_power_brute;
using wf::test::lasso_prefix;

namespace {

Nfa any_letter() { return nfa_union(nfa_letter('0'), nfa_letter('1')); }

// {w | w starts with 0, or w contains 1 0^p 1}
Nfa open_or_two_ones() {
  Nfa starts0 = nfa_concat(nfa_letter('0'), nfa_star(any_letter()));
  Nfa u = nfa_concat(nfa_letter('1'), nfa_star(nfa_letter('0')));
  Nfa infix = nfa_concat(nfa_star(any_letter()),
                         nfa_concat(u, nfa_concat(nfa_letter('1'),
                                                  nfa_star(any_letter()))));
  return nfa_union(starts0, infix);
}

// DWA for {0^ω}
Dwa only_zeros_dwa() {
  Dwa w;
  w.num_states = 2;
  w.initial = 0;
  w.delta = {{0, 1}, {1, 1}};
  w.accepting = {true, false};
  return w;
}

// DWA for 2^ω minus {1 0^ω}
Dwa not_one_then_zeros_dwa() {
  Dwa w;
  w.num_states = 3;
  w.initial = 0;
  w.delta = {{2, 1}, {1, 2}, {2, 2}};
  w.accepting = {false, false, true};
  return w;
}

bool lasso_is(const Lasso& l, const std::string& word, int upto = 40) {
  Lasso target{"", ""};
  // compare against "word repeated": word is u#v form "u|v"
  auto bar = word.find('|');
  target.u = word.substr(0, bar);
  target.v = word.substr(bar + 1);
  return lasso_prefix(l, upto) == lasso_prefix(target, upto);
}

}  // namespace

TEST_CASE("lasso letter arithmetic") {
  Lasso l{"01", "110"};
  Word expect = "01110110110";
  for (int k = 0; k < static_cast<int>(expect.size()); ++k)
    CHECK(lasso_letter(l, k) == expect[k]);
  CHECK_THROWS_AS(normalize_even({"0", ""}), std::invalid_argument);
}

TEST_CASE("normalize_even keeps the word and evens both parts") {
  for (const Lasso& l : all_lassos(3, 3)) {
    Lasso n = normalize_even(l);
    CHECK(n.u.size() % 2 == 0);
    CHECK(n.v.size() % 2 == 0);
    CHECK(lasso_prefix(n, 30) == lasso_prefix(l, 30));
  }
}

TEST_CASE("deinterleave picks the parity subsequence") {
  for (const Lasso& l : all_lassos(3, 3)) {
    for (int eps = 0; eps < 2; ++eps) {
      Lasso d = deinterleave_lasso(l, eps);
      CHECK(!d.v.empty());
      for (int k = 0; k < 20; ++k)
        CHECK(lasso_letter(d, k) == lasso_letter(l, 2 * k + eps));
    }
  }
}

TEST_CASE("omega power of a single letter") {
  Nbw b = omega_power_nbw(nfa_letter('0'));
  CHECK(nbw_accepts_lasso(b, {"", "0"}));
  CHECK(nbw_accepts_lasso(b, {"00", "00"}));
  CHECK(!nbw_accepts_lasso(b, {"", "1"}));
  CHECK(!nbw_accepts_lasso(b, {"1", "0"}));
  CHECK(!nbw_accepts_lasso(b, {"0", "01"}));
}

TEST_CASE("epsilon is stripped before the power") {
  Nbw b = omega_power_nbw(nfa_epsilon());
  CHECK(nbw_is_empty(b));
  Nbw b2 = omega_power_nbw(nfa_union(nfa_epsilon(), nfa_letter('1')));
  CHECK(nbw_accepts_lasso(b2, {"", "1"}));
  CHECK(!nbw_accepts_lasso(b2, {"", "0"}));
}

TEST_CASE("omega power of the full binary alphabet is universal") {
  Nbw b = omega_power_nbw(any_letter());
  for (const Lasso& l : all_lassos(3, 3)) CHECK(nbw_accepts_lasso(b, l));
}

TEST_CASE("power of the open-or-two-ones language misses only 10^w") {
  Nbw b = omega_power_nbw(open_or_two_ones());
  for (const Lasso& l : all_lassos(4, 3)) {
    bool expect = !lasso_is(l, "1|0");
    CAPTURE(l.u);
    CAPTURE(l.v);
    CHECK(nbw_accepts_lasso(b, l) == expect);
  }
}

TEST_CASE("three routes to omega-power membership agree") {
  std::vector<Nfa> langs{
      nfa_letter('0'),
      open_or_two_ones(),
      nfa_union(nfa_star(nfa_letter('0')),
                nfa_concat(any_letter(), nfa_concat(nfa_letter('1'), nfa_letter('1')))),
      nfa_from_words({"0", "01", "110"}),
  };
  for (const Nfa& L : langs) {
    Nbw b = omega_power_nbw(L);
    for (const Lasso& l : all_lassos(3, 3)) {
      bool via_nbw = nbw_accepts_lasso(b, l);
      bool via_factor_graph = lasso_in_omega_power_oracle(L, l);
      bool via_brute = lasso_in_omega_power_brute(L, l);
      CAPTURE(l.u);
      CAPTURE(l.v);
      CHECK(via_nbw == via_factor_graph);
      CHECK(via_nbw == via_brute);
    }
  }
}

TEST_CASE("dwa lasso runs") {
  Dwa z = only_zeros_dwa();
  CHECK(dwa_accepts_lasso(z, {"", "0"}));
  CHECK(dwa_accepts_lasso(z, {"000", "00"}));
  CHECK(!dwa_accepts_lasso(z, {"", "01"}));
  CHECK(!dwa_accepts_lasso(z, {"1", "0"}));

  Dwa n = not_one_then_zeros_dwa();
  CHECK(!dwa_accepts_lasso(n, {"1", "0"}));
  CHECK(!dwa_accepts_lasso(n, {"10", "00"}));
  CHECK(dwa_accepts_lasso(n, {"", "0"}));
  CHECK(dwa_accepts_lasso(n, {"", "10"}));
  CHECK(dwa_accepts_lasso(n, {"11", "0"}));
}

TEST_CASE("weakness check") {
  CHECK(is_weak(only_zeros_dwa()));
  CHECK(is_weak(not_one_then_zeros_dwa()));
  Dwa bad;
  bad.num_states = 2;
  bad.initial = 0;
  bad.delta = {{1, 1}, {0, 0}};
  bad.accepting = {true, false};
  CHECK(!is_weak(bad));
}

TEST_CASE("dwa boolean algebra agrees with lasso runs") {
  Dwa a = only_zeros_dwa();
  Dwa b = not_one_then_zeros_dwa();
  Dwa ca = dwa_complement(a);
  Dwa i = dwa_intersect(a, b);
  Dwa u = dwa_union(ca, b);
  for (const Lasso& l : all_lassos(3, 3)) {
    bool in_a = dwa_accepts_lasso(a, l);
    bool in_b = dwa_accepts_lasso(b, l);
    CHECK(dwa_accepts_lasso(ca, l) == !in_a);
    CHECK(dwa_accepts_lasso(i, l) == (in_a && in_b));
    CHECK(dwa_accepts_lasso(u, l) == (!in_a || in_b));
  }
}

TEST_CASE("dwa emptiness, inclusion, equivalence") {
  Dwa a = only_zeros_dwa();
  Dwa b = not_one_then_zeros_dwa();
  CHECK(dwa_is_empty(dwa_empty_language()));
  CHECK(!dwa_is_empty(a));
  CHECK(dwa_subseteq(a, b));  // 0^ω avoids 10^ω
  CHECK(!dwa_subseteq(b, a));
  CHECK(dwa_equiv(a, dwa_intersect(a, b)));
  CHECK(dwa_subseteq(dwa_empty_language(), a));
  CHECK(dwa_subseteq(b, dwa_universal()));
}

TEST_CASE("nbw versus dwa inclusion with witnesses") {
  Nbw zeros = omega_power_nbw(nfa_letter('0'));
  CHECK(nbw_subseteq_dwa(zeros, only_zeros_dwa()));
  CHECK(nbw_subseteq_dwa(zeros, not_one_then_zeros_dwa()));

  Nbw open_pow = omega_power_nbw(open_or_two_ones());
  CHECK(nbw_subseteq_dwa(open_pow, not_one_then_zeros_dwa()));
  auto wit = nbw_minus_dwa_witness(open_pow, only_zeros_dwa());
  REQUIRE(wit.has_value());
  CHECK(nbw_accepts_lasso(open_pow, *wit));
  CHECK(!dwa_accepts_lasso(only_zeros_dwa(), *wit));
}

TEST_CASE("dwa-nbw intersection emptiness matches inclusion") {
  Nbw open_pow = omega_power_nbw(open_or_two_ones());
  // complement misses exactly 10^ω, which the power never produces
  Dwa rejecting = dwa_complement(not_one_then_zeros_dwa());
  CHECK(dwa_nbw_intersection_empty(rejecting, open_pow));
  CHECK(!dwa_nbw_intersection_empty(not_one_then_zeros_dwa(), open_pow));
}

TEST_CASE("rank complementation flips membership") {
  std::vector<Nbw> samples{
      omega_power_nbw(nfa_letter('0')),
      omega_power_nbw(nfa_from_words({"0", "11"})),
  };
  for (const Nbw& b : samples) {
    RankComplement rc = nbw_complement_rank(b, 12, 200000);
    REQUIRE(!rc.gated);
    for (const Lasso& l : all_lassos(3, 3)) {
      CAPTURE(l.u);
      CAPTURE(l.v);
      CHECK(nbw_accepts_lasso(*rc.result, l) == !nbw_accepts_lasso(b, l));
    }
  }
}

TEST_CASE("rank complementation gates on large inputs") {
  Nbw b = omega_power_nbw(open_or_two_ones());
  RankComplement rc = nbw_complement_rank(b, 3, 200000);
  CHECK(rc.gated);
  CHECK(!rc.result.has_value());
  CHECK(!rc.gate_reason.empty());
}

TEST_CASE("subset-construction dwa candidate is exact on weak languages") {
  Nbw zeros = omega_power_nbw(nfa_letter('0'));
  Dwa cand = nbw_to_dwa(zeros);
  CHECK(is_weak(cand));
  CHECK(dwa_equiv(cand, only_zeros_dwa()));

  Nbw open_pow = omega_power_nbw(open_or_two_ones());
  Dwa cand2 = nbw_to_dwa(open_pow);
  CHECK(is_weak(cand2));
  CHECK(dwa_equiv(cand2, not_one_then_zeros_dwa()));
  CHECK(nbw_subseteq_dwa(open_pow, cand2));
}

TEST_CASE("trim_nbw keeps lasso acceptance") {
  Nbw b = omega_power_nbw(open_or_two_ones());
  b.num_states += 2;  // unreachable garbage
  b.accepting.push_back(true);
  b.accepting.push_back(false);
  Nbw t = trim_nbw(b);
  CHECK(t.num_states <= b.num_states - 2);
  for (const Lasso& l : all_lassos(2, 3))
    CHECK(nbw_accepts_lasso(t, l) == nbw_accepts_lasso(b, l));
}
