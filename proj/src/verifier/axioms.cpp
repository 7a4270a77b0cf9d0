#include <array>

#include "geo/errors.hpp"
#include "geo/verifier/verifier.hpp"

namespace geo::verifier {

namespace {

struct AxiomInfo {
  AxiomId id;
  const char* name;
  std::size_t arity;
};

constexpr std::array<AxiomInfo, 36> kAxioms{{
    {AxiomId::U1, "U1", 3},
    {AxiomId::U2, "U2", 4},
    {AxiomId::U3, "U3", 3},
    {AxiomId::U4, "U4", 6},
    {AxiomId::U5, "U5", 6},
    {AxiomId::U6, "U6", 3},
    {AxiomId::U7, "U7", 3},
    {AxiomId::U8, "U8", 3},
    {AxiomId::U9, "U9", 4},
    {AxiomId::U10, "U10", 8},
    {AxiomId::U11, "U11", 5},
    {AxiomId::U12, "U12", 5},
    {AxiomId::U13, "U13", 4},
    {AxiomId::C1, "C1", 3},
    {AxiomId::C2, "C2", 4},
    {AxiomId::C3, "C3", 2},
    {AxiomId::C4, "C4", 4},
    {AxiomId::C5, "C5", 6},
    {AxiomId::CollinearCases, "collinear-cases", 3},
    {AxiomId::ExtendExists, "extend-exists", 4},
    {AxiomId::E4, "E4", 6},
    {AxiomId::E5, "E5", 5},
    {AxiomId::E6, "E6", 3},
    {AxiomId::E10, "E10", 2},
    {AxiomId::E15, "E15", 5},
    {AxiomId::E18, "E18", 3},
    {AxiomId::E25, "E25", 6},
    {AxiomId::E27, "E27", 6},
    {AxiomId::IntersectionUnicity, "intersection-unicity", 6},
    {AxiomId::LeftConvex, "left-convex", 4},
    {AxiomId::LeftOut, "left-out", 4},
    {AxiomId::StrictBetweenSides, "strict-between-sides", 5},
    {AxiomId::OuterPasch, "outer-pasch", 5},
    {AxiomId::AngleSumLt, "angle-sum-lt", 18},
    {AxiomId::Parallelogram, "parallelogram", 5},
    {AxiomId::SteinerLehmus, "steiner-lehmus", 5},
}};

const AxiomInfo& info(AxiomId id) {
  for (const AxiomInfo& ai : kAxioms)
    if (ai.id == id) return ai;
  throw Error("unknown axiom id");
}

constexpr std::array<AxiomId, 36> kIds = [] {
  std::array<AxiomId, 36> out{};
  for (std::size_t i = 0; i < kAxioms.size(); ++i) out[i] = kAxioms[i].id;
  return out;
}();

}  // namespace

std::span<const AxiomId> all_axioms() { return kIds; }

const char* axiom_name(AxiomId id) { return info(id).name; }

std::optional<AxiomId> axiom_from_name(std::string_view name) {
  for (const AxiomInfo& ai : kAxioms)
    if (name == ai.name) return ai.id;
  return std::nullopt;
}

std::size_t axiom_arity(AxiomId id) { return info(id).arity; }

}  // namespace geo::verifier
