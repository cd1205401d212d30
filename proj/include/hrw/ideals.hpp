#pragma once

#include <string>
#include <vector>

#include "hrw/carrier.hpp"
#include "hrw/subset.hpp"

namespace hrw {

// Verdict of a crisp ideal check plus the first violation witness in
// lexicographic sweep order.
struct CrispCheck {
  enum class Fail { none, product, sum, h };
  bool ok = true;
  Fail fail = Fail::none;
  int x = -1, y = -1, a = -1, b = -1, z = -1;
  bool windowed = false;
  std::string str() const;
};

// A+A subset A and RA subset A; products are swept before sums.
CrispCheck is_left_ideal(const Carrier& c, const ElementSubset& a);

// Left ideal plus the h-condition: x+a+z = b+z with a,b in A forces x in A.
// O(n^4) sweep; on windowed carriers quantifiers range over tuples whose
// intermediate sums stay inside the window.
CrispCheck is_left_h_ideal(const Carrier& c, const ElementSubset& a);

// Least left h-ideal containing A, by fixpoint iteration over the three
// closure rules. Finite carriers only.
ElementSubset h_closure(const Carrier& c, const ElementSubset& a);

// Exactly the subsets passing is_left_h_ideal, sorted by (size, bitmask).
// Uses monotone pruning: a violation of a candidate yields a (seed, forced
// element) pair that rules out every superset of the seed avoiding the
// forced element, without re-running the checker.
std::vector<ElementSubset> enumerate_left_h_ideals(const Hemiring& r);

// Proper left h-ideals with no proper left h-ideal strictly above them.
std::vector<ElementSubset> maximal_left_h_ideals(const Hemiring& r);

}  // namespace hrw
