#include "geo/verdict.hpp"

namespace geo {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "holds";
    case Outcome::Fails: return "fails";
    case Outcome::Unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace geo
