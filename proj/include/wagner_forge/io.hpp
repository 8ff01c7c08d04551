#ifndef WAGNER_FORGE_IO_HPP
#define WAGNER_FORGE_IO_HPP

#include <string>

#include <json.hpp>

#include "wagner_forge/constructions.hpp"
#include "wagner_forge/fa.hpp"
#include "wagner_forge/omega.hpp"

namespace wf {

// key order is preserved so serialized artifacts are stable
using json = nlohmann::ordered_json;

// Automaton schema: {kind, alphabet: ["0","1"], states, initial,
// transitions: [{from, letter, to}], accepting: [indices]}.
json to_json(const Nfa& a);
json to_json(const Dfa& d);
json to_json(const Nbw& b);
json to_json(const Dwa& w);

/// "nfa", "dfa", "nbw" or "dwa"; throws std::invalid_argument otherwise.
std::string kind_of(const json& j);

// All loaders validate the schema and throw std::invalid_argument on any
// defect.  dwa_from_json checks determinism and totality but not weakness;
// the caller decides how to treat non-weak inputs.
Nfa nfa_from_json(const json& j);
Dfa dfa_from_json(const json& j);
Nbw nbw_from_json(const json& j);
Dwa dwa_from_json(const json& j);

json to_json(const Recipe& r);
Recipe recipe_from_json(const json& j);

json to_json(const Lasso& l);
Lasso lasso_from_json(const json& j);

// DOT with stable node order; loop SCCs are tinted by polarity (for
// acceptance-bit machines: SCC contains an accepting state).
std::string to_dot(const Nfa& a);
std::string to_dot(const Dfa& d);
std::string to_dot(const Nbw& b);
std::string to_dot(const Dwa& w);

/// Dispatch on the "kind" field.
std::string json_to_dot(const json& j);

}  // namespace wf

#endif
