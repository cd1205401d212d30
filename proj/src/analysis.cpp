#include "hrw/analysis.hpp"

#include <algorithm>

#include "hrw/constructions.hpp"
#include "hrw/errors.hpp"

namespace hrw {

DegreeGrid::DegreeGrid(std::vector<Degree> degrees) : degrees_(std::move(degrees)) {
  for (const Degree& d : degrees_)
    if (!is_degree(d)) throw InputError("grid degree " + d.str() + " outside [0,1]");
  degrees_.push_back(Rat(0));
  degrees_.push_back(Rat(1));
  std::sort(degrees_.begin(), degrees_.end());
  degrees_.erase(std::unique(degrees_.begin(), degrees_.end()), degrees_.end());
}

DegreeGrid DegreeGrid::refined() const {
  std::vector<Degree> d = degrees_;
  for (std::size_t i = 0; i + 1 < degrees_.size(); ++i)
    d.push_back(halve(degrees_[i] + degrees_[i + 1]));
  return DegreeGrid(std::move(d));
}

std::string DegreeGrid::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i) s += ',';
    s += degrees_[i].str();
  }
  return s + "}";
}

DegreeGrid DegreeGrid::parse(const std::string& text) {
  std::vector<Degree> d;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (!cur.empty()) d.push_back(Rat::parse(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (d.empty()) throw InputError("empty degree grid");
  return DegreeGrid(std::move(d));
}

bool is_normal(const Ifs& a) {
  return a.mu().at(0) == Rat(1) && a.lambda().at(0) == Rat(0);
}

CompletelyNormalCheck is_completely_normal(const Ifs& a) {
  if (!is_normal(a)) return {};
  for (int x = 0; x < a.size(); ++x)
    if (a.mu().at(x) == Rat(0) && a.lambda().at(x) == Rat(1)) return {true, x};
  return {};
}

CharacteristicCheck is_characteristic(const Ifs& a) {
  const Hemiring& r = a.carrier().ring();
  for (const Automorphism& f : automorphisms(r))
    for (int x = 0; x < r.order; ++x)
      if (a.mu().at(f(x)) != a.mu().at(x) || a.lambda().at(f(x)) != a.lambda().at(x))
        return {false, f, x};
  return {};
}

std::vector<Ifs> grid_nifi_enumerate(const Carrier& r, const DegreeGrid& g,
                                     const EnumOptions& opt) {
  if (r.windowed()) throw InputError("grid enumeration requires a finite carrier");
  const int n = r.size();

  std::vector<std::pair<Degree, Degree>> pairs;  // valid (mu,lambda), lex order
  for (const Degree& m : g.degrees())
    for (const Degree& l : g.degrees())
      if (m + l <= Rat(1)) pairs.emplace_back(m, l);

  std::uint64_t total = 1;
  for (int i = 1; i < n; ++i) {
    total *= pairs.size();
    if (total > opt.budget)
      throw ResourceError("grid enumeration would visit more than " +
                          std::to_string(opt.budget) + " candidates");
  }

  std::vector<Ifs> out;
  std::vector<std::size_t> odo(n, 0);
  while (true) {
    std::vector<Degree> mu, lam;
    mu.reserve(n);
    lam.reserve(n);
    mu.push_back(Rat(1));  // element 0 pinned by normality
    lam.push_back(Rat(0));
    for (int i = 1; i < n; ++i) {
      mu.push_back(pairs[odo[i]].first);
      lam.push_back(pairs[odo[i]].second);
    }
    Ifs cand(FuzzySet(r, std::move(mu)), FuzzySet(r, std::move(lam)));
    if (is_if_left_h_ideal(cand, {1}).verdict) out.push_back(std::move(cand));

    int i = n - 1;  // last element varies fastest
    while (i >= 1 && odo[i] + 1 == pairs.size()) odo[i--] = 0;
    if (i < 1) break;
    ++odo[i];
  }
  return out;
}

MaximalityStatus maximality_status(const Ifs& a, const DegreeGrid& g,
                                   const MaximalityOptions& opt) {
  if (!is_if_left_h_ideal(a, {1}).verdict)
    throw InputError("maximality is defined for IF left h-ideals only");

  Ifs plus = a;  // replaced below; Ifs has no default constructor
  try {
    plus = normalize_plus(a);
  } catch (const ConstructionError& e) {
    return {MaximalityStatus::Kind::not_applicable, std::nullopt, e.what(), ""};
  }
  if (ifs_constant(plus))
    return {MaximalityStatus::Kind::not_applicable, std::nullopt, "constant", ""};

  std::string probe;
  DegreeGrid grid = g;
  for (int depth = 0; depth <= opt.refine_depth; ++depth) {
    const std::vector<Ifs> candidates = grid_nifi_enumerate(a.carrier(), grid, opt.enumeration);
    if (!probe.empty()) probe += "; ";
    probe += grid.str() + " candidates=" + std::to_string(candidates.size());
    for (const Ifs& b : candidates) {
      if (ifs_constant(b) || !ifs_proper_subset(plus, b)) continue;
      // Re-verify before reporting; enumeration already checked, but a
      // witness must stand on its own.
      if (!is_if_left_h_ideal(b, {1}).verdict || !is_normal(b))
        throw std::logic_error("enumerated candidate failed re-verification");
      return {MaximalityStatus::Kind::not_maximal, b, "", probe};
    }
    grid = grid.refined();
  }
  return {MaximalityStatus::Kind::grid_maximal, std::nullopt, "", probe};
}

}  // namespace hrw
