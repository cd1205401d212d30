#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hrw/analysis.hpp"
#include "hrw/constructions.hpp"
#include "hrw/fuzzy.hpp"
#include "hrw/subset.hpp"

namespace hrw {

enum class ClaimId {
  P3_5, P3_6, P3_7, T3_11, T3_13, T4_3, P4_4, T4_6, T4_8, C4_9,
  T4_10, T4_12, T4_13, T4_15, T4_16, T4_17,
};

std::string claim_name(ClaimId c);
ClaimId claim_from_name(const std::string& name);
std::vector<ClaimId> all_claims();

enum class Verdict { confirmed, refuted, vacuous, grid_limited };
std::string verdict_name(Verdict v);

struct VerifyReport {
  ClaimId claim;
  std::string instance;
  Verdict verdict = Verdict::confirmed;
  std::vector<std::string> witness;  // machine-grabbable lines on refutation
  std::vector<std::string> notes;    // intermediate claim checks
  bool windowed = false;
  std::string line() const;  // "T3_11 R1/A1 Confirmed"
};

// Everything a single claim check may consume; verify_claim validates the
// shape against the claim's signature.
struct ClaimInstance {
  std::string label;
  std::optional<Carrier> carrier;
  std::optional<Ifs> ifs;
  std::optional<FuzzySet> fuzzy;
  std::optional<ElementSubset> subset;
  std::optional<std::vector<Degree>> params;  // a1,a2,b1,b2
  std::optional<MorphismMap> morphism;
  std::optional<MonotoneFn> fn;
  std::optional<DegreeGrid> grid;
  MaximalityOptions maximality;
};

VerifyReport verify_claim(ClaimId claim, const ClaimInstance& instance);

// Instance family for a sweep: a structure plus a degree grid, with the
// optional morphism/function/parameter families some claims need.
struct SweepSpec {
  explicit SweepSpec(Carrier generation_carrier) : carrier(std::move(generation_carrier)) {}
  std::string label;
  Carrier carrier;                        // generation carrier (finite)
  DegreeGrid grid;
  std::vector<MorphismMap> morphisms;     // P4_4 / T4_6
  std::vector<MonotoneFn> functions;      // T4_17
  std::vector<std::vector<Degree>> param_sets;  // P3_7 quadruples
  std::vector<Ifs> fixed_ifs;             // explicit instances instead of the grid
  std::uint64_t budget = 200'000;         // instance budget
};

struct SweepReport {
  ClaimId claim;
  std::string family;
  Verdict verdict = Verdict::vacuous;
  int instances = 0;
  int confirmed = 0, refuted = 0, vacuous = 0, grid_limited = 0;
  std::vector<VerifyReport> reports;
  std::string line() const;
};

SweepReport sweep(ClaimId claim, const SweepSpec& family);

// Generates every IFS (resp. fuzzy set) over the grid on a finite carrier,
// in odometer order. Used by sweeps and exposed for tests.
std::vector<Ifs> all_ifs_over_grid(const Carrier& c, const DegreeGrid& g,
                                   std::uint64_t budget = 200'000);
std::vector<FuzzySet> all_fuzzy_over_grid(const Carrier& c, const DegreeGrid& g,
                                          std::uint64_t budget = 200'000);

// Named regression check for the order-4 catalog example whose documented
// verdict disagrees with direct evaluation of the six conditions.
struct Adjudication {
  CheckReport report;   // computed verdict with witnesses
  std::string documented;  // verdict the example is documented to have
  std::string note;
  std::vector<std::string> lines() const;
};
Adjudication example1_adjudication();

}  // namespace hrw
