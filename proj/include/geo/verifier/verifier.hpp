#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geo/point.hpp"
#include "geo/real.hpp"
#include "geo/verdict.hpp"

namespace geo::verifier {

// Every checkable statement: the thirteen universal laws, the five
// construction postulates, and the auxiliary theorems through the
// Steiner-Lehmus configuration itself.
enum class AxiomId {
  U1, U2, U3, U4, U5, U6, U7, U8, U9, U10, U11, U12, U13,
  C1, C2, C3, C4, C5,
  CollinearCases,
  ExtendExists,
  E4, E5, E6, E10, E15, E18, E25, E27,
  IntersectionUnicity,
  LeftConvex,
  LeftOut,
  StrictBetweenSides,
  OuterPasch,
  AngleSumLt,
  Parallelogram,
  SteinerLehmus,
};

std::span<const AxiomId> all_axioms();
const char* axiom_name(AxiomId id);
std::optional<AxiomId> axiom_from_name(std::string_view name);
std::size_t axiom_arity(AxiomId id);

// One evaluated instance.  `vacuous` means at least one hypothesis did not
// hold, so the conclusion was not evaluated; otherwise `conclusion` carries
// the combined verdict over every conclusion conjunct.
struct InstanceReport {
  AxiomId axiom = AxiomId::U1;
  std::vector<Point> instance;
  bool vacuous = false;
  Verdict conclusion;
  std::uint64_t seed = 0;

  bool passed() const { return !vacuous && conclusion.holds(); }
};

// Deterministic hypothesis-biased instance generator: equal (axiom, seed)
// always regenerate the identical rational points, which is what makes a
// failure replayable.
std::vector<Point> generate_instance(AxiomId axiom, std::uint64_t seed);

// Evaluate one instance: hypotheses first (all on the exact path for
// rational inputs), then the conclusion conjuncts.
InstanceReport check_axiom(AxiomId axiom, std::span<const Point> instance, const Fuel& fuel);

struct AxiomSummary {
  AxiomId axiom = AxiomId::U1;
  int passed = 0;
  int failed = 0;
  int vacuous = 0;
  int unknown = 0;
  std::vector<std::uint64_t> failing_seeds;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  int samples = 0;
  std::vector<AxiomSummary> axioms;

  bool ok() const;
};

// The per-instance seed fed to generate_instance for sample i of the given
// axiom position under a master seed.
std::uint64_t instance_seed(std::uint64_t master, std::size_t axiom_index, std::size_t i);

SuiteReport run_suite(std::span<const AxiomId> axioms, int samples, std::uint64_t seed,
                      const Fuel& fuel);

// JSON rendering: an object with one row per axiom, each row shaped as
// {axiom, passed, failed, vacuous, unknown, failing_seeds[]}.
std::string suite_to_json(const SuiteReport& report);

}  // namespace geo::verifier
