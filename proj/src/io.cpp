#include "wagner_forge/io.hpp"

#include <sstream>

#include "wagner_forge/graph.hpp"

namespace wf {

namespace {

json alphabet_json(const Alphabet& a) {
  json arr = json::array();
  for (char c : a.letters) arr.push_back(std::string(1, c));
  return arr;
}

Alphabet alphabet_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("bad alphabet");
  Alphabet a;
  a.letters.clear();
  for (const auto& e : j) {
    if (!e.is_string() || e.get<std::string>().size() != 1)
      throw std::invalid_argument("alphabet letters must be single characters");
    char c = e.get<std::string>()[0];
    if (a.index(c) >= 0) throw std::invalid_argument("duplicate letter");
    a.letters.push_back(c);
  }
  return a;
}

json transitions_json(const Alphabet& a, const std::vector<Trans>& ts) {
  json arr = json::array();
  for (const Trans& t : ts)
    arr.push_back({{"from", t.from},
                   {"letter", std::string(1, a.letters[t.letter])},
                   {"to", t.to}});
  return arr;
}

json accepting_json(const std::vector<bool>& bits) {
  json arr = json::array();
  for (size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) arr.push_back(static_cast<int>(i));
  return arr;
}

json automaton_json(const std::string& kind, const Alphabet& a, int states,
                    int initial, const std::vector<Trans>& ts,
                    const std::vector<bool>& acc) {
  json j;
  j["kind"] = kind;
  j["alphabet"] = alphabet_json(a);
  j["states"] = states;
  j["initial"] = initial;
  j["transitions"] = transitions_json(a, ts);
  j["accepting"] = accepting_json(acc);
  return j;
}

std::vector<Trans> delta_to_transitions(const std::vector<std::vector<int>>& d) {
  std::vector<Trans> ts;
  for (size_t s = 0; s < d.size(); ++s)
    for (size_t l = 0; l < d[s].size(); ++l)
      ts.push_back({static_cast<int>(s), static_cast<int>(l), d[s][l]});
  return ts;
}

struct RawAutomaton {
  Alphabet alphabet;
  int states = 0;
  int initial = 0;
  std::vector<Trans> transitions;
  std::vector<bool> accepting;
};

int int_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw std::invalid_argument(std::string("missing integer field ") + key);
  return j.at(key).get<int>();
}

RawAutomaton raw_from_json(const json& j, const std::string& expect_kind) {
  if (!j.is_object()) throw std::invalid_argument("automaton must be an object");
  if (kind_of(j) != expect_kind)
    throw std::invalid_argument("expected kind " + expect_kind);
  RawAutomaton r;
  r.alphabet = alphabet_from_json(j.value("alphabet", json::array()));
  r.states = int_field(j, "states");
  r.initial = int_field(j, "initial");
  if (r.states <= 0 || r.initial < 0 || r.initial >= r.states)
    throw std::invalid_argument("bad state count or initial state");
  if (!j.contains("transitions") || !j.at("transitions").is_array())
    throw std::invalid_argument("missing transitions");
  for (const auto& t : j.at("transitions")) {
    int from = int_field(t, "from");
    int to = int_field(t, "to");
    if (!t.contains("letter")) throw std::invalid_argument("missing letter");
    int letter;
    if (t.at("letter").is_string()) {
      std::string s = t.at("letter").get<std::string>();
      if (s.size() != 1) throw std::invalid_argument("bad letter");
      letter = r.alphabet.index(s[0]);
    } else if (t.at("letter").is_number_integer()) {
      letter = t.at("letter").get<int>();
    } else {
      throw std::invalid_argument("bad letter");
    }
    if (letter < 0 || letter >= r.alphabet.size() || from < 0 ||
        from >= r.states || to < 0 || to >= r.states)
      throw std::invalid_argument("transition out of range");
    r.transitions.push_back({from, letter, to});
  }
  r.accepting.assign(r.states, false);
  if (!j.contains("accepting") || !j.at("accepting").is_array())
    throw std::invalid_argument("missing accepting set");
  for (const auto& e : j.at("accepting")) {
    if (!e.is_number_integer()) throw std::invalid_argument("bad accepting index");
    int s = e.get<int>();
    if (s < 0 || s >= r.states) throw std::invalid_argument("accepting index out of range");
    r.accepting[s] = true;
  }
  return r;
}

std::vector<std::vector<int>> transitions_to_delta(const RawAutomaton& r) {
  std::vector<std::vector<int>> delta(r.states,
                                      std::vector<int>(r.alphabet.size(), -1));
  for (const Trans& t : r.transitions) {
    if (delta[t.from][t.letter] != -1)
      throw std::invalid_argument("nondeterministic transition in a deterministic automaton");
    delta[t.from][t.letter] = t.to;
  }
  for (const auto& row : delta)
    for (int v : row)
      if (v == -1)
        throw std::invalid_argument("transition function is not total");
  return delta;
}

}  // namespace

std::string kind_of(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw std::invalid_argument("missing kind");
  std::string k = j.at("kind").get<std::string>();
  if (k != "nfa" && k != "dfa" && k != "nbw" && k != "dwa")
    throw std::invalid_argument("unknown kind " + k);
  return k;
}

json to_json(const Nfa& a) {
  return automaton_json("nfa", a.alphabet, a.num_states, a.initial,
                        a.transitions, a.final_states);
}

json to_json(const Dfa& d) {
  return automaton_json("dfa", d.alphabet, d.num_states, d.initial,
                        delta_to_transitions(d.delta), d.accepting);
}

json to_json(const Nbw& b) {
  return automaton_json("nbw", b.alphabet, b.num_states, b.initial,
                        b.transitions, b.accepting);
}

json to_json(const Dwa& w) {
  return automaton_json("dwa", w.alphabet, w.num_states, w.initial,
                        delta_to_transitions(w.delta), w.accepting);
}

Nfa nfa_from_json(const json& j) {
  RawAutomaton r = raw_from_json(j, "nfa");
  Nfa a;
  a.alphabet = r.alphabet;
  a.num_states = r.states;
  a.initial = r.initial;
  a.transitions = r.transitions;
  a.final_states = r.accepting;
  check_valid(a);
  return a;
}

Dfa dfa_from_json(const json& j) {
  RawAutomaton r = raw_from_json(j, "dfa");
  Dfa d;
  d.alphabet = r.alphabet;
  d.num_states = r.states;
  d.initial = r.initial;
  d.delta = transitions_to_delta(r);
  d.accepting = r.accepting;
  check_valid(d);
  return d;
}

Nbw nbw_from_json(const json& j) {
  RawAutomaton r = raw_from_json(j, "nbw");
  Nbw b;
  b.alphabet = r.alphabet;
  b.num_states = r.states;
  b.initial = r.initial;
  b.transitions = r.transitions;
  b.accepting = r.accepting;
  check_valid(b);
  return b;
}

Dwa dwa_from_json(const json& j) {
  RawAutomaton r = raw_from_json(j, "dwa");
  Dwa w;
  w.alphabet = r.alphabet;
  w.num_states = r.states;
  w.initial = r.initial;
  w.delta = transitions_to_delta(r);
  w.accepting = r.accepting;
  check_valid(w);
  return w;
}

json to_json(const Recipe& r) {
  json steps = json::array();
  for (const Step& s : r.steps)
    steps.push_back(s.is_base ? "base:" + base_name(s.base)
                              : "wrap:" + std::to_string(s.wrap));
  return {{"target", class_name(r.target)}, {"steps", steps}};
}

Recipe recipe_from_json(const json& j) {
  if (!j.is_object() || !j.contains("target") || !j.at("target").is_string() ||
      !j.contains("steps") || !j.at("steps").is_array())
    throw std::invalid_argument("bad recipe");
  auto target = parse_class(j.at("target").get<std::string>());
  if (!target) throw std::invalid_argument("bad recipe target");
  Recipe r;
  r.target = *target;
  for (const auto& e : j.at("steps")) {
    if (!e.is_string()) throw std::invalid_argument("bad recipe step");
    std::string s = e.get<std::string>();
    if (s.rfind("base:", 0) == 0) {
      auto b = parse_base(s.substr(5));
      if (!b) throw std::invalid_argument("unknown base " + s);
      r.steps.push_back({true, *b, 0});
    } else if (s.rfind("wrap:", 0) == 0 && s.size() == 6 && s[5] >= '0' &&
               s[5] <= '2') {
      r.steps.push_back({false, BaseId::D0, s[5] - '0'});
    } else {
      throw std::invalid_argument("bad recipe step " + s);
    }
  }
  if (r.steps.empty() || !r.steps.front().is_base)
    throw std::invalid_argument("recipe must start with a base");
  return r;
}

json to_json(const Lasso& l) { return {{"u", l.u}, {"v", l.v}}; }

Lasso lasso_from_json(const json& j) {
  if (!j.is_object() || !j.contains("u") || !j.at("u").is_string() ||
      !j.contains("v") || !j.at("v").is_string())
    throw std::invalid_argument("bad lasso");
  Lasso l{j.at("u").get<std::string>(), j.at("v").get<std::string>()};
  if (l.v.empty()) throw std::invalid_argument("lasso cycle must be nonempty");
  return l;
}

namespace {

std::string dot_impl(const Alphabet& a, int states, int initial,
                     const std::vector<Trans>& ts,
                     const std::vector<bool>& acc) {
  std::vector<std::vector<int>> adj(states);
  for (const Trans& t : ts) adj[t.from].push_back(t.to);
  SccInfo scc = scc_decompose(states, adj);

  std::ostringstream os;
  os << "digraph automaton {\n  rankdir=LR;\n  node [fontname=\"sans\"];\n";
  os << "  init [shape=point];\n";
  for (int s = 0; s < states; ++s) {
    bool loop_acc = scc.has_cycle[scc.comp[s]];
    bool polarity = false;
    for (int m : scc.members[scc.comp[s]]) polarity = polarity || acc[m];
    os << "  q" << s << " [shape=" << (acc[s] ? "doublecircle" : "circle");
    if (loop_acc)
      os << ", style=filled, fillcolor=" << (polarity ? "lightblue" : "lightgray");
    os << "];\n";
  }
  os << "  init -> q" << initial << ";\n";
  for (const Trans& t : ts)
    os << "  q" << t.from << " -> q" << t.to << " [label=\""
       << a.letters[t.letter] << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace

std::string to_dot(const Nfa& a) {
  return dot_impl(a.alphabet, a.num_states, a.initial, a.transitions,
                  a.final_states);
}
std::string to_dot(const Dfa& d) {
  return dot_impl(d.alphabet, d.num_states, d.initial,
                  delta_to_transitions(d.delta), d.accepting);
}
std::string to_dot(const Nbw& b) {
  return dot_impl(b.alphabet, b.num_states, b.initial, b.transitions,
                  b.accepting);
}
std::string to_dot(const Dwa& w) {
  return dot_impl(w.alphabet, w.num_states, w.initial,
                  delta_to_transitions(w.delta), w.accepting);
}

std::string json_to_dot(const json& j) {
  std::string k = kind_of(j);
  if (k == "nfa") return to_dot(nfa_from_json(j));
  if (k == "dfa") return to_dot(dfa_from_json(j));
  if (k == "nbw") return to_dot(nbw_from_json(j));
  return to_dot(dwa_from_json(j));
}

}  // namespace wf
