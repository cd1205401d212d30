#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hrw/fuzzy.hpp"
#include "hrw/hemiring.hpp"

namespace hrw {

// Increasing map [0,1] -> [0,1], either a named closed form or a finite
// table of (input, output) points that must cover every degree the target
// IFS attains. Strict monotonicity on the attained degrees is enforced at
// use: without it the transformed checker verdict cannot be pulled back.
class MonotoneFn {
 public:
  static MonotoneFn identity();
  static MonotoneFn square();        // t^2
  static MonotoneFn half();          // t/2
  static MonotoneFn affine_half();   // (t+1)/2
  static MonotoneFn from_table(std::vector<std::pair<Degree, Degree>> points);
  static MonotoneFn named(const std::string& name);  // CLI lookup
  static std::vector<std::string> names();

  const std::string& name() const { return name_; }
  // nullopt when a table form has no entry for the requested degree.
  std::optional<Degree> apply(const Degree& t) const;

 private:
  enum class Form { identity, square, half, affine_half, table };
  MonotoneFn(Form f, std::string n) : form_(f), name_(std::move(n)) {}
  Form form_;
  std::string name_;
  std::vector<std::pair<Degree, Degree>> table_;
};

// Two-valued IFS taking (a2,b2) on A and (a1,b1) off A. Requires
// 0<=a1<a2<=1, 0<=b2<b1<=1, a1+b1<=1, a2+b2<=1 and A nonempty.
Ifs two_valued_ifs(const Carrier& c, const ElementSubset& a, const Degree& a1,
                   const Degree& a2, const Degree& b1, const Degree& b2);

// The shift mu(x)+1-mu(0), lambda(x)-lambda(0). Throws ConstructionError at
// the first element (smallest index) where the shifted pair leaves the unit
// interval or sums above 1.
Ifs normalize_plus(const Ifs& a);

// Pointwise averaging with the degrees at element c.
Ifs average_with_element(const Ifs& a, int c);

// Applies f to both degree families. Errors when f misses an attained
// degree, is not strictly increasing on the attained degrees, or produces
// an invalid IFS.
Ifs monotone_transform(const Ifs& a, const MonotoneFn& f);

// Pullback of an IFS along a hemiring homomorphism; f must actually be one.
Ifs preimage_under_hom(const MorphismMap& f, const Ifs& a);

}  // namespace hrw
