#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hrw {

// Finite hemiring on the carrier {0,...,order-1}. By file-format convention
// the zero element is index 0, which keeps the zero axioms checkable
// without a search.
struct Hemiring {
  int order = 0;
  std::vector<int> add_table;  // row-major order*order
  std::vector<int> mul_table;

  static constexpr int zero = 0;

  int add(int x, int y) const { return add_table[x * order + y]; }
  int mul(int x, int y) const { return mul_table[x * order + y]; }

  friend bool operator==(const Hemiring&, const Hemiring&) = default;
};

struct AxiomViolation {
  std::string axiom;  // "add-associativity", "additive-identity", ...
  int x = -1, y = -1, z = -1;
  std::string str() const;
};

struct ValidationResult {
  std::optional<Hemiring> hemiring;  // engaged iff violations is empty
  std::vector<AxiomViolation> violations;
  bool ok() const { return hemiring.has_value(); }
};

// Sweeps every axiom exhaustively; each violated axiom is reported once
// with its first witness in lexicographic order. Ragged or mismatched
// tables are input errors, not violations.
ValidationResult validate_hemiring(const std::vector<std::vector<int>>& add,
                                   const std::vector<std::vector<int>>& mul);

// Componentwise product; (a,b) is encoded as a*s.order + b.
Hemiring product_hemiring(const Hemiring& r, const Hemiring& s);

struct MorphismMap {
  Hemiring dom;
  Hemiring cod;
  std::vector<int> map;
  bool surjective = false;  // derived

  MorphismMap(Hemiring dom_ring, Hemiring cod_ring, std::vector<int> images);
  int operator()(int x) const { return map[x]; }
};

struct HomCheck {
  bool ok = false;
  std::string reason;  // "zero not preserved", "addition not preserved", ...
  int x = -1, y = -1;
  std::string str() const;
};

// Zero preservation is required in addition to both operations.
HomCheck is_homomorphism(const MorphismMap& f);

struct Automorphism {
  std::vector<int> perm;
  int operator()(int x) const { return perm[x]; }
  std::string str() const;  // permutation word, e.g. "0 2 1 3"
  friend bool operator==(const Automorphism&, const Automorphism&) = default;
};

// Exactly the permutations fixing 0 and preserving both tables, sorted
// lexicographically by permutation word. Backtracking prunes on additive
// idempotency before running table consistency checks.
std::vector<Automorphism> automorphisms(const Hemiring& r);

Automorphism compose(const Automorphism& f, const Automorphism& g);  // f after g
Automorphism inverse(const Automorphism& f);

}  // namespace hrw
