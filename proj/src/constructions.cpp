#include "hrw/constructions.hpp"

#include <algorithm>

#include "hrw/errors.hpp"

namespace hrw {

MonotoneFn MonotoneFn::identity() { return MonotoneFn(Form::identity, "identity"); }
MonotoneFn MonotoneFn::square() { return MonotoneFn(Form::square, "square"); }
MonotoneFn MonotoneFn::half() { return MonotoneFn(Form::half, "half"); }
MonotoneFn MonotoneFn::affine_half() { return MonotoneFn(Form::affine_half, "affine-half"); }

MonotoneFn MonotoneFn::from_table(std::vector<std::pair<Degree, Degree>> points) {
  std::sort(points.begin(), points.end());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!is_degree(points[i].first) || !is_degree(points[i].second))
      throw InputError("monotone table point outside [0,1]");
    if (i && points[i - 1].first == points[i].first)
      throw InputError("duplicate input " + points[i].first.str() + " in monotone table");
  }
  MonotoneFn f(Form::table, "table");
  f.table_ = std::move(points);
  return f;
}

MonotoneFn MonotoneFn::named(const std::string& name) {
  if (name == "identity") return identity();
  if (name == "square") return square();
  if (name == "half") return half();
  if (name == "affine-half") return affine_half();
  throw InputError("unknown transform '" + name + "' (expected one of: identity, square, half, affine-half)");
}

std::vector<std::string> MonotoneFn::names() {
  return {"identity", "square", "half", "affine-half"};
}

std::optional<Degree> MonotoneFn::apply(const Degree& t) const {
  switch (form_) {
    case Form::identity: return t;
    case Form::square: return t * t;
    case Form::half: return halve(t);
    case Form::affine_half: return halve(t + Rat(1));
    case Form::table:
      for (const auto& [in, out] : table_)
        if (in == t) return out;
      return std::nullopt;
  }
  return std::nullopt;
}

Ifs two_valued_ifs(const Carrier& c, const ElementSubset& a, const Degree& a1,
                   const Degree& a2, const Degree& b1, const Degree& b2) {
  if (a.empty()) throw InputError("two-valued IFS over empty subset");
  if (a.universe() != c.size()) throw InputError("subset universe does not match carrier");
  if (!(Rat(0) <= a1 && a1 < a2 && a2 <= Rat(1)))
    throw InputError("membership parameters must satisfy 0 <= a1 < a2 <= 1");
  if (!(Rat(0) <= b2 && b2 < b1 && b1 <= Rat(1)))
    throw InputError("nonmembership parameters must satisfy 0 <= b2 < b1 <= 1");
  if (a1 + b1 > Rat(1) || a2 + b2 > Rat(1))
    throw InputError("parameter pairs must sum to at most 1");
  std::vector<Degree> mu, lam;
  mu.reserve(c.size());
  lam.reserve(c.size());
  for (int x = 0; x < c.size(); ++x) {
    mu.push_back(a.contains(x) ? a2 : a1);
    lam.push_back(a.contains(x) ? b2 : b1);
  }
  return Ifs(FuzzySet(c, std::move(mu)), FuzzySet(c, std::move(lam)));
}

Ifs normalize_plus(const Ifs& a) {
  const Rat mu_shift = Rat(1) - a.mu().at(0);
  const Rat lam_shift = a.lambda().at(0);
  std::vector<Degree> mu, lam;
  mu.reserve(a.size());
  lam.reserve(a.size());
  for (int x = 0; x < a.size(); ++x) {
    const Rat m = a.mu().at(x) + mu_shift;
    const Rat l = a.lambda().at(x) - lam_shift;
    if (!is_degree(m) || !is_degree(l))
      throw ConstructionError(x, "precondition violated at x=" + std::to_string(x) +
                                     ": shifted degree outside [0,1]");
    if (m + l > Rat(1))
      throw ConstructionError(x, "precondition violated at x=" + std::to_string(x) +
                                     ": sum " + (m + l).str());
    mu.push_back(m);
    lam.push_back(l);
  }
  return Ifs(FuzzySet(a.carrier(), std::move(mu)), FuzzySet(a.carrier(), std::move(lam)));
}

Ifs average_with_element(const Ifs& a, int c) {
  if (c < 0 || c >= a.size()) throw InputError("element out of range");
  std::vector<Degree> mu, lam;
  mu.reserve(a.size());
  lam.reserve(a.size());
  for (int x = 0; x < a.size(); ++x) {
    mu.push_back(halve(a.mu().at(x) + a.mu().at(c)));
    lam.push_back(halve(a.lambda().at(x) + a.lambda().at(c)));
  }
  return Ifs(FuzzySet(a.carrier(), std::move(mu)), FuzzySet(a.carrier(), std::move(lam)));
}

Ifs monotone_transform(const Ifs& a, const MonotoneFn& f) {
  std::vector<Degree> attained = a.mu().degrees();
  const std::vector<Degree>& lam = a.lambda().degrees();
  attained.insert(attained.end(), lam.begin(), lam.end());
  std::sort(attained.begin(), attained.end());
  attained.erase(std::unique(attained.begin(), attained.end()), attained.end());

  std::vector<std::pair<Degree, Degree>> mapped;
  for (const Degree& t : attained) {
    const auto out = f.apply(t);
    if (!out) throw InputError("transform '" + f.name() + "' has no value at " + t.str());
    if (!is_degree(*out))
      throw ConstructionError(-1, "transform output " + out->str() + " outside [0,1]");
    mapped.emplace_back(t, *out);
  }
  for (std::size_t i = 1; i < mapped.size(); ++i)
    if (!(mapped[i - 1].second < mapped[i].second))
      throw ConstructionError(-1, "transform '" + f.name() +
                                      "' is not strictly increasing on attained degrees (" +
                                      mapped[i - 1].first.str() + " and " +
                                      mapped[i].first.str() + ")");
  auto image = [&mapped](const Degree& t) {
    for (const auto& [in, out] : mapped)
      if (in == t) return out;
    return t;  // unreachable: every attained degree is mapped
  };

  std::vector<Degree> mu2, lam2;
  mu2.reserve(a.size());
  lam2.reserve(a.size());
  for (int x = 0; x < a.size(); ++x) {
    const Degree m = image(a.mu().at(x));
    const Degree l = image(a.lambda().at(x));
    if (m + l > Rat(1))
      throw ConstructionError(x, "transform breaks IFS validity at x=" + std::to_string(x) +
                                     ": sum " + (m + l).str());
    mu2.push_back(m);
    lam2.push_back(l);
  }
  return Ifs(FuzzySet(a.carrier(), std::move(mu2)), FuzzySet(a.carrier(), std::move(lam2)));
}

Ifs preimage_under_hom(const MorphismMap& f, const Ifs& a) {
  const HomCheck hc = is_homomorphism(f);
  if (!hc.ok) throw InputError("not a homomorphism: " + hc.str());
  if (!(a.carrier() == Carrier::finite(f.cod)))
    throw InputError("IFS is not defined over the morphism codomain");
  std::vector<Degree> mu, lam;
  mu.reserve(f.dom.order);
  lam.reserve(f.dom.order);
  for (int x = 0; x < f.dom.order; ++x) {
    mu.push_back(a.mu().at(f(x)));
    lam.push_back(a.lambda().at(f(x)));
  }
  const Carrier dom = Carrier::finite(f.dom);
  return Ifs(FuzzySet(dom, std::move(mu)), FuzzySet(dom, std::move(lam)));
}

}  // namespace hrw
