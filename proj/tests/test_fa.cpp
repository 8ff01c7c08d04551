#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "wagner_forge/fa.hpp"

using namespace wf;
using wf::test::all_words;
using wf::test::words_matching;

namespace {

// (0|11)* written with the library combinators
Nfa zeros_or_double_ones_star() {
  Nfa one_one = nfa_concat(nfa_letter('1'), nfa_letter('1'));
  return nfa_star(nfa_union(nfa_letter('0'), one_one));
}

Nfa from_regex_pieces(const std::string& which) {
  if (which == "0*1") return nfa_concat(nfa_star(nfa_letter('0')), nfa_letter('1'));
  if (which == "(01)*") return nfa_star(nfa_concat(nfa_letter('0'), nfa_letter('1')));
  if (which == "1(0|1)*") {
    Nfa any = nfa_union(nfa_letter('0'), nfa_letter('1'));
    return nfa_concat(nfa_letter('1'), nfa_star(any));
  }
  throw std::logic_error("unknown piece");
}

}  // namespace

TEST_CASE("alphabet lookup") {
  const Alphabet& s = binary_alphabet();
  CHECK(s.size() == 2);
  CHECK(s.index('0') == 0);
  CHECK(s.index('1') == 1);
  CHECK(s.index('x') == -1);
  CHECK_THROWS_AS(s.index_checked('x'), std::invalid_argument);
}

TEST_CASE("combinators match regex oracle") {
  struct Row {
    Nfa a;
    std::string re;
  };
  std::vector<Row> rows;
  rows.push_back({zeros_or_double_ones_star(), "(0|11)*"});
  rows.push_back({from_regex_pieces("0*1"), "0*1"});
  rows.push_back({from_regex_pieces("(01)*"), "(01)*"});
  rows.push_back({from_regex_pieces("1(0|1)*"), "1(0|1)*"});
  for (const Row& r : rows) {
    CAPTURE(r.re);
    CHECK(enumerate_words(r.a, 7) == words_matching(r.re, 7));
  }
}

TEST_CASE("empty and epsilon") {
  CHECK(is_empty(nfa_empty()));
  CHECK(enumerate_words(nfa_epsilon(), 4) == std::vector<Word>{""});
  CHECK(is_empty(nfa_concat(nfa_empty(), nfa_letter('0'))));
  CHECK(enumerate_words(nfa_star(nfa_empty()), 3) == std::vector<Word>{""});
}

TEST_CASE("star has a fresh accepting initial without incoming edges") {
  Nfa s = zeros_or_double_ones_star();
  CHECK(s.final_states[s.initial]);
  for (const Trans& t : s.transitions) CHECK(t.to != s.initial);
}

TEST_CASE("nfa_from_words accepts exactly the listed words") {
  std::vector<Word> ws{"", "01", "0100", "11"};
  Nfa a = nfa_from_words(ws);
  std::vector<Word> sorted = ws;
  std::sort(sorted.begin(), sorted.end(), [](const Word& x, const Word& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  CHECK(enumerate_words(a, 6) == sorted);
}

TEST_CASE("determinize and minimize keep the language") {
  Nfa a = zeros_or_double_ones_star();
  Dfa d = determinize(a);
  Dfa m = minimize(d);
  for (const Word& w : all_words(8)) {
    CHECK(accepts(a, w) == accepts(d, w));
    CHECK(accepts(a, w) == accepts(m, w));
  }
  CHECK(m.num_states <= d.num_states);
  CHECK(dfa_isomorphic(minimize(m), m));
}

TEST_CASE("dfa algebra against word enumeration") {
  Dfa a = determinize_minimize(from_regex_pieces("0*1"));
  Dfa b = determinize_minimize(from_regex_pieces("1(0|1)*"));
  Dfa inter = dfa_intersect(a, b);
  Dfa uni = dfa_union(a, b);
  Dfa ca = dfa_complement(a);
  for (const Word& w : all_words(7)) {
    CHECK(accepts(inter, w) == (accepts(a, w) && accepts(b, w)));
    CHECK(accepts(uni, w) == (accepts(a, w) || accepts(b, w)));
    CHECK(accepts(ca, w) == !accepts(a, w));
  }
}

TEST_CASE("equivalence and inclusion") {
  Dfa a = determinize_minimize(zeros_or_double_ones_star());
  Dfa a2 = determinize_minimize(
      nfa_union(zeros_or_double_ones_star(), nfa_epsilon()));
  CHECK(dfa_equiv(a, a2));
  CHECK(dfa_isomorphic(a, a2));

  Dfa all = determinize_minimize(nfa_star(nfa_union(nfa_letter('0'), nfa_letter('1'))));
  CHECK(dfa_subseteq(a, all));
  CHECK(!dfa_subseteq(all, a));
  CHECK(!dfa_equiv(a, all));
}

TEST_CASE("trim drops useless states but keeps the language") {
  Nfa a = from_regex_pieces("0*1");
  // graft an unreachable state and a dead-end state
  a.num_states += 2;
  a.final_states.push_back(false);
  a.final_states.push_back(false);
  a.transitions.push_back({a.initial, 0, a.num_states - 1});  // dead end
  Nfa t = trim(a);
  CHECK(t.num_states < a.num_states);
  CHECK(enumerate_words(t, 6) == words_matching("0*1", 6));
}

TEST_CASE("malformed automata are rejected") {
  Nfa a = nfa_letter('0');
  a.transitions.push_back({5, 0, 0});
  CHECK_THROWS_AS(check_valid(a), std::invalid_argument);

  Dfa d = determinize(nfa_letter('0'));
  d.delta[0].pop_back();
  CHECK_THROWS_AS(check_valid(d), std::invalid_argument);

  Nfa x = nfa_letter('0');
  Nfa y = nfa_letter('0');
  y.alphabet.letters = {'a', 'b'};
  CHECK_THROWS_AS(nfa_union(x, y), std::invalid_argument);
}

TEST_CASE("enumerate_words is length-lexicographic") {
  Nfa any_star = nfa_star(nfa_union(nfa_letter('0'), nfa_letter('1')));
  auto ws = enumerate_words(any_star, 3);
  CHECK(ws == all_words(3));
}
