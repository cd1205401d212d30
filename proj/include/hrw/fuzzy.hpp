#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hrw/carrier.hpp"
#include "hrw/rational.hpp"
#include "hrw/subset.hpp"

namespace hrw {

class FuzzySet {
 public:
  FuzzySet(Carrier carrier, std::vector<Degree> degrees);  // validates [0,1]

  const Carrier& carrier() const { return carrier_; }
  const Degree& at(int x) const { return degrees_[x]; }
  const std::vector<Degree>& degrees() const { return degrees_; }
  int size() const { return static_cast<int>(degrees_.size()); }

  friend bool operator==(const FuzzySet&, const FuzzySet&);

 private:
  Carrier carrier_;
  std::vector<Degree> degrees_;
};

// Intuitionistic fuzzy set: membership mu and nonmembership lambda over the
// same carrier with mu(x)+lambda(x) <= 1 pointwise.
class Ifs {
 public:
  Ifs(FuzzySet mu, FuzzySet lambda);  // validates carriers and pointwise sum

  const FuzzySet& mu() const { return mu_; }
  const FuzzySet& lambda() const { return lambda_; }
  const Carrier& carrier() const { return mu_.carrier(); }
  int size() const { return mu_.size(); }

  friend bool operator==(const Ifs&, const Ifs&);

 private:
  FuzzySet mu_;
  FuzzySet lambda_;
};

// a <= b in the pointwise IFS order: mu_a <= mu_b and lambda_a >= lambda_b.
bool ifs_subset(const Ifs& a, const Ifs& b);
bool ifs_proper_subset(const Ifs& a, const Ifs& b);
bool ifs_constant(const Ifs& a);
std::string ifs_brief(const Ifs& a);  // "mu=[1,0] lam=[0,1]"

FuzzySet complement(const FuzzySet& m);  // pointwise 1 - m

ElementSubset upper_cut(const FuzzySet& m, const Degree& alpha);  // mu >= alpha
ElementSubset lower_cut(const FuzzySet& l, const Degree& beta);   // mu <= beta

// U(mu,alpha) intersect L(lambda,beta); requires alpha+beta <= 1.
ElementSubset level_subset(const Ifs& a, const Degree& alpha, const Degree& beta);

// Attained degree pairs (alpha,beta) in Im(mu) x Im(lambda) with
// alpha+beta <= 1, sorted ascending.
std::vector<std::pair<Degree, Degree>> image_pairs(const Ifs& a);

std::vector<Degree> image_degrees(const FuzzySet& m);  // sorted distinct

// Condition ids: 1..6 for the six IF left h-ideal conditions, F1..F3 for
// the three fuzzy left h-ideal conditions.
enum class Cond { if1, if2, if3, if4, if5, if6, f1, f2, f3 };
std::string cond_label(Cond c);

struct Witness {
  int x = -1;
  std::optional<int> y;
  std::optional<int> a, b, z;
  std::string str() const;  // "x=1 a=0 b=0 z=1" / "x=0 y=1"
};

struct Violation {
  Cond cond;
  Witness at;
  Degree got;    // offending degree
  Degree bound;  // the min/max it had to respect
  std::string str() const;  // "condition 5 violated at x=1 a=0 b=0 z=1"
};

struct CheckOptions {
  int max_violations = 16;
};

// Verdict plus all violations up to the cap, sorted by condition id then
// witness tuple. `windowed` flags sampled verification on N_W carriers.
struct CheckReport {
  bool verdict = true;
  std::vector<Violation> violations;
  bool windowed = false;
};

CheckReport is_fuzzy_left_h_ideal(const FuzzySet& m, const CheckOptions& opt = {});
CheckReport is_if_left_ideal(const Ifs& a, const CheckOptions& opt = {});     // (1)-(4)
CheckReport is_if_left_h_ideal(const Ifs& a, const CheckOptions& opt = {});   // (1)-(6)

}  // namespace hrw
