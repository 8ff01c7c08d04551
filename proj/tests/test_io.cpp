#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wagner_forge/constructions.hpp"
#include "wagner_forge/io.hpp"
#include "wagner_forge/omega.hpp"
#include "gen.hpp"

using namespace wf;

TEST_CASE("nfa json round trip") {
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    Nfa a = test::random_nfa(rng, 5);
    Nfa back = nfa_from_json(to_json(a));
    CHECK(back.num_states == a.num_states);
    CHECK(back.initial == a.initial);
    CHECK(back.final_states == a.final_states);
    CHECK(back.transitions.size() == a.transitions.size());
    CHECK(dfa_equiv(determinize_minimize(a), determinize_minimize(back)));
  }
}

TEST_CASE("dfa json round trip") {
  Dfa d = determinize_minimize(base_language(BaseId::Delta01));
  Dfa back = dfa_from_json(to_json(d));
  CHECK(dfa_isomorphic(d, back));
}

TEST_CASE("nbw and dwa json round trips") {
  Nbw b = omega_power_nbw(base_language(BaseId::D1ex));
  Nbw bb = nbw_from_json(to_json(b));
  CHECK(bb.num_states == b.num_states);
  CHECK(bb.transitions.size() == b.transitions.size());
  for (const Lasso& l : all_lassos(3, 3))
    CHECK(nbw_accepts_lasso(b, l) == nbw_accepts_lasso(bb, l));

  Dwa w = nbw_to_dwa(b);
  Dwa wb = dwa_from_json(to_json(w));
  CHECK(dwa_equiv(w, wb));
}

TEST_CASE("kind tagging") {
  CHECK(kind_of(to_json(nfa_epsilon())) == "nfa");
  CHECK(kind_of(to_json(determinize(nfa_epsilon()))) == "dfa");
  Nbw b = omega_power_nbw(nfa_letter('0'));
  CHECK(kind_of(to_json(b)) == "nbw");
  CHECK(kind_of(to_json(nbw_to_dwa(b))) == "dwa");
  CHECK_THROWS_AS(kind_of(json{{"kind", "pda"}}), std::invalid_argument);
  CHECK_THROWS_AS(kind_of(json::array()), std::invalid_argument);
}

TEST_CASE("malformed automata are rejected") {
  json good = to_json(determinize(nfa_letter('1')));

  json j = good;
  j["initial"] = 99;
  CHECK_THROWS_AS(dfa_from_json(j), std::invalid_argument);

  j = good;
  j["transitions"].erase(0);  // incomplete delta
  CHECK_THROWS_AS(dfa_from_json(j), std::invalid_argument);

  j = good;
  j["transitions"].push_back(j["transitions"][0]);
  j["transitions"].back()["to"] = 0;
  j["transitions"].back()["to"] =
      (j["transitions"][0]["to"].get<int>() + 1) % j["states"].get<int>();
  CHECK_THROWS_AS(dfa_from_json(j), std::invalid_argument);  // nondeterministic

  j = good;
  j["accepting"].push_back(50);
  CHECK_THROWS_AS(dfa_from_json(j), std::invalid_argument);

  j = good;
  j["transitions"][0]["letter"] = "2";
  CHECK_THROWS_AS(dfa_from_json(j), std::invalid_argument);
}

TEST_CASE("integer letters accepted on load") {
  json j = to_json(nfa_letter('0'));
  for (auto& t : j["transitions"]) t["letter"] = t["letter"].get<std::string>() == "0" ? 0 : 1;
  Nfa a = nfa_from_json(j);
  CHECK(accepts(a, "0"));
  CHECK(!accepts(a, "1"));
}

TEST_CASE("serialization is deterministic") {
  Nbw b = omega_power_nbw(base_language(BaseId::D1checkEx));
  CHECK(to_json(b).dump() == to_json(b).dump());
  CHECK(to_json(b).dump(2).find("\"kind\": \"nbw\"") != std::string::npos);
}

TEST_CASE("recipe and lasso round trips") {
  auto r = recipe_for_class({Shape::Dcheck, 3});
  REQUIRE(r.has_value());
  Recipe back = recipe_from_json(to_json(*r));
  CHECK(class_name(back.target) == class_name(r->target));
  REQUIRE(back.steps.size() == r->steps.size());
  for (size_t i = 0; i < back.steps.size(); ++i) {
    CHECK(back.steps[i].is_base == r->steps[i].is_base);
    if (back.steps[i].is_base)
      CHECK(back.steps[i].base == r->steps[i].base);
    else
      CHECK(back.steps[i].wrap == r->steps[i].wrap);
  }
  CHECK_THROWS_AS(recipe_from_json(json{{"target", "D1"}, {"steps", {"wrap:9"}}}),
                  std::invalid_argument);

  Lasso l{"01", "10"};
  Lasso lb = lasso_from_json(to_json(l));
  CHECK(lb.u == l.u);
  CHECK(lb.v == l.v);
}

TEST_CASE("dot output names states and marks acceptance") {
  Dwa w = condition_dwa(ConditionKind::eq_0inf);
  std::string dot = to_dot(w);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("doublecircle") != std::string::npos);
  CHECK(dot.find("q0") != std::string::npos);
  CHECK(json_to_dot(to_json(w)) == dot);
  std::string ndot = json_to_dot(to_json(nfa_letter('1')));
  CHECK(ndot.find("digraph") != std::string::npos);
}
