#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hrw/fuzzy.hpp"

namespace hrw {

// Finite window into the continuum of degrees: a sorted set always
// containing 0 and 1.
class DegreeGrid {
 public:
  DegreeGrid() : degrees_{Rat(0), Rat(1)} {}
  explicit DegreeGrid(std::vector<Degree> degrees);

  const std::vector<Degree>& degrees() const { return degrees_; }
  DegreeGrid refined() const;  // midpoints of adjacent degrees inserted
  std::string str() const;     // "{0,1/2,1}"
  static DegreeGrid parse(const std::string& text);  // "0,1/2,1"

  friend bool operator==(const DegreeGrid&, const DegreeGrid&) = default;

 private:
  std::vector<Degree> degrees_;
};

bool is_normal(const Ifs& a);  // A(0) == (1,0)

struct CompletelyNormalCheck {
  bool ok = false;
  int x0 = -1;  // first element attaining (0,1) when ok
};
CompletelyNormalCheck is_completely_normal(const Ifs& a);

struct CharacteristicCheck {
  bool ok = true;
  std::optional<Automorphism> f;  // witness automorphism when not ok
  int x = -1;                     // element it moves the degrees at
};
// mu and lambda invariant under every automorphism of the carrier ring.
CharacteristicCheck is_characteristic(const Ifs& a);

struct EnumOptions {
  std::uint64_t budget = 5'000'000;  // candidate assignments before checking
};

// All normal IF left h-ideals with degrees drawn from the grid, in
// odometer order over elements 1..n-1 (element 0 is pinned to (1,0), the
// last element varies fastest, per-element pairs ordered by (mu,lambda)).
std::vector<Ifs> grid_nifi_enumerate(const Carrier& r, const DegreeGrid& g,
                                     const EnumOptions& opt = {});

// Refuting maximality is sound (the witness is re-verified); surviving the
// grid probe is evidence only, never proof.
struct MaximalityStatus {
  enum class Kind { not_maximal, grid_maximal, not_applicable };
  Kind kind;
  std::optional<Ifs> witness;  // not_maximal: strict superset of A+ in NIFI
  std::string reason;          // not_applicable
  std::string probe;           // candidate counts per probed grid
};

struct MaximalityOptions {
  int refine_depth = 1;
  EnumOptions enumeration;
};

// Computes A+, rejects constants, then scans the grid and its midpoint
// refinement(s) for a non-constant strict superset.
MaximalityStatus maximality_status(const Ifs& a, const DegreeGrid& g,
                                   const MaximalityOptions& opt = {});

}  // namespace hrw
