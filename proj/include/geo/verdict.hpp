#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geo/point.hpp"

namespace geo {

enum class Outcome { Holds, Fails, Unknown };

const char* outcome_name(Outcome o);

// Three-valued result of a relation check.  Holds/Fails carry re-verifiable
// evidence: either the approximant index of the deciding inequality, witness
// points for an existential, or the tag "exact" when the decision ran on
// exact coordinates.  Unknown is the honest answer when fuel ran out.
struct Verdict {
  Outcome outcome = Outcome::Unknown;
  std::optional<WitnessIndex> index;
  std::vector<Point> points;
  std::string note;

  bool holds() const { return outcome == Outcome::Holds; }
  bool fails() const { return outcome == Outcome::Fails; }
  bool unknown() const { return outcome == Outcome::Unknown; }

  static Verdict exact(bool truth, std::string note_ = "exact") {
    return Verdict{truth ? Outcome::Holds : Outcome::Fails, std::nullopt, {}, std::move(note_)};
  }
  static Verdict holds_at(WitnessIndex w, std::string note_ = "witness") {
    return Verdict{Outcome::Holds, std::move(w), {}, std::move(note_)};
  }
  static Verdict fails_at(WitnessIndex w, std::string note_ = "refuted") {
    return Verdict{Outcome::Fails, std::move(w), {}, std::move(note_)};
  }
  static Verdict unknown_at_fuel(std::string note_ = "fuel exhausted") {
    return Verdict{Outcome::Unknown, std::nullopt, {}, std::move(note_)};
  }
};

}  // namespace geo
