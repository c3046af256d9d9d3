#ifndef LASTSUCCESS_SERIALIZE_HPP
#define LASTSUCCESS_SERIALIZE_HPP

#include <json.hpp>

#include "lastsuccess/game.hpp"
#include "lastsuccess/markov.hpp"
#include "lastsuccess/simulate.hpp"
#include "lastsuccess/variants.hpp"

// JSON bindings for the report types exposed through the CLI.
namespace lastsuccess {

inline void to_json(nlohmann::json& j, const GameSpec& spec) {
  j = nlohmann::json{{"p", spec.params()}};
}

namespace simulate {
inline void to_json(nlohmann::json& j, const SimReport& r) {
  j = nlohmann::json{{"estimate", r.estimate},
                     {"samples", r.samples},
                     {"seed", r.seed},
                     {"half_width_95", r.half_width_95}};
}
}  // namespace simulate

namespace variants {
inline void to_json(nlohmann::json& j, const LossDistribution& d) {
  j = nlohmann::json{{"loss", d.per_player}};
}
}  // namespace variants

namespace markov {

inline void to_json(nlohmann::json& j, const MarkovSpec& spec) {
  j = nlohmann::json{{"p1", spec.p1}, {"alpha", spec.alpha}, {"beta", spec.beta}};
}

inline const char* action_name(Action a) {
  return a == Action::keep ? "keep" : "pass";
}

inline void to_json(nlohmann::json& j, const Mismatch& m) {
  j = nlohmann::json{{"stage", m.stage},
                     {"conjectured", action_name(m.conjectured)},
                     {"optimal", action_name(m.optimal)},
                     {"gap", m.gap}};
}

inline void to_json(nlohmann::json& j, const ConjectureReport& r) {
  j = nlohmann::json{{"spec", r.spec}, {"agrees", r.agrees}, {"mismatches", r.mismatches}};
}

}  // namespace markov
}  // namespace lastsuccess

#endif  // LASTSUCCESS_SERIALIZE_HPP
