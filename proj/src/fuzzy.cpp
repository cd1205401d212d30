#include "hrw/fuzzy.hpp"

#include <algorithm>

#include "hrw/detail/sweep.hpp"
#include "hrw/errors.hpp"

namespace hrw {

FuzzySet::FuzzySet(Carrier carrier, std::vector<Degree> degrees)
    : carrier_(std::move(carrier)), degrees_(std::move(degrees)) {
  if (static_cast<int>(degrees_.size()) != carrier_.size())
    throw InputError("fuzzy set has " + std::to_string(degrees_.size()) +
                     " degrees, carrier has " + std::to_string(carrier_.size()) +
                     " elements");
  for (std::size_t i = 0; i < degrees_.size(); ++i)
    if (!is_degree(degrees_[i]))
      throw InputError("degree " + degrees_[i].str() + " out of range at element " +
                       std::to_string(i));
}

bool operator==(const FuzzySet& a, const FuzzySet& b) {
  return a.carrier_ == b.carrier_ && a.degrees_ == b.degrees_;
}

Ifs::Ifs(FuzzySet mu, FuzzySet lambda) : mu_(std::move(mu)), lambda_(std::move(lambda)) {
  if (!(mu_.carrier() == lambda_.carrier()))
    throw InputError("mu and lambda are defined over different carriers");
  for (int x = 0; x < mu_.size(); ++x) {
    const Rat sum = mu_.at(x) + lambda_.at(x);
    if (sum > Rat(1))
      throw InputError("mu+lambda = " + sum.str() + " > 1 at element " + std::to_string(x));
  }
}

bool operator==(const Ifs& a, const Ifs& b) {
  return a.mu_ == b.mu_ && a.lambda_ == b.lambda_;
}

bool ifs_subset(const Ifs& a, const Ifs& b) {
  if (!(a.carrier() == b.carrier())) return false;
  for (int x = 0; x < a.size(); ++x)
    if (a.mu().at(x) > b.mu().at(x) || a.lambda().at(x) < b.lambda().at(x)) return false;
  return true;
}

bool ifs_proper_subset(const Ifs& a, const Ifs& b) { return ifs_subset(a, b) && !(a == b); }

bool ifs_constant(const Ifs& a) {
  for (int x = 1; x < a.size(); ++x)
    if (a.mu().at(x) != a.mu().at(0) || a.lambda().at(x) != a.lambda().at(0)) return false;
  return true;
}

std::string ifs_brief(const Ifs& a) {
  auto list = [](const FuzzySet& f) {
    std::string s = "[";
    for (int x = 0; x < f.size(); ++x) {
      if (x) s += ',';
      s += f.at(x).str();
    }
    return s + "]";
  };
  return "mu=" + list(a.mu()) + " lam=" + list(a.lambda());
}

FuzzySet complement(const FuzzySet& m) {
  std::vector<Degree> d;
  d.reserve(m.size());
  for (int x = 0; x < m.size(); ++x) d.push_back(Rat(1) - m.at(x));
  return FuzzySet(m.carrier(), std::move(d));
}

ElementSubset upper_cut(const FuzzySet& m, const Degree& alpha) {
  ElementSubset s(m.size());
  for (int x = 0; x < m.size(); ++x)
    if (m.at(x) >= alpha) s.add(x);
  return s;
}

ElementSubset lower_cut(const FuzzySet& l, const Degree& beta) {
  ElementSubset s(l.size());
  for (int x = 0; x < l.size(); ++x)
    if (l.at(x) <= beta) s.add(x);
  return s;
}

ElementSubset level_subset(const Ifs& a, const Degree& alpha, const Degree& beta) {
  if (alpha + beta > Rat(1))
    throw InputError("level subset requires alpha+beta <= 1, got " + (alpha + beta).str());
  return upper_cut(a.mu(), alpha).intersect(lower_cut(a.lambda(), beta));
}

std::vector<Degree> image_degrees(const FuzzySet& m) {
  std::vector<Degree> d = m.degrees();
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

std::vector<std::pair<Degree, Degree>> image_pairs(const Ifs& a) {
  std::vector<std::pair<Degree, Degree>> out;
  for (const Degree& al : image_degrees(a.mu()))
    for (const Degree& be : image_degrees(a.lambda()))
      if (al + be <= Rat(1)) out.emplace_back(al, be);
  return out;  // already sorted: outer/inner loops ascend
}

std::string cond_label(Cond c) {
  switch (c) {
    case Cond::if1: return "1";
    case Cond::if2: return "2";
    case Cond::if3: return "3";
    case Cond::if4: return "4";
    case Cond::if5: return "5";
    case Cond::if6: return "6";
    case Cond::f1: return "F1";
    case Cond::f2: return "F2";
    case Cond::f3: return "F3";
  }
  return "?";
}

std::string Witness::str() const {
  std::string s = "x=" + std::to_string(x);
  if (a) s += " a=" + std::to_string(*a);
  if (b) s += " b=" + std::to_string(*b);
  if (z) s += " z=" + std::to_string(*z);
  if (y) s += " y=" + std::to_string(*y);
  return s;
}

std::string Violation::str() const {
  return "condition " + cond_label(cond) + " violated at " + at.str();
}

namespace {

Witness pair_witness(int x, int y) {
  Witness w;
  w.x = x;
  w.y = y;
  return w;
}

Witness h_witness(int x, int a, int b, int z) {
  Witness w;
  w.x = x;
  w.a = a;
  w.b = b;
  w.z = z;
  return w;
}

std::size_t cap_of(const CheckOptions& opt) {
  return opt.max_violations < 1 ? 1 : static_cast<std::size_t>(opt.max_violations);
}

CheckReport assemble(std::vector<std::vector<Violation>> buckets, bool windowed,
                     std::size_t cap) {
  CheckReport rep;
  rep.windowed = windowed;
  for (auto& b : buckets)
    for (auto& v : b) {
      rep.verdict = false;
      if (rep.violations.size() < cap) rep.violations.push_back(std::move(v));
    }
  // Buckets were filled in condition order and each bucket in witness
  // order, so the concatenation is already sorted.
  return rep;
}

}  // namespace

CheckReport is_fuzzy_left_h_ideal(const FuzzySet& m, const CheckOptions& opt) {
  const Carrier& c = m.carrier();
  const std::size_t cap = cap_of(opt);
  std::vector<Violation> v1, v2, v3;
  detail::sweep_add_pairs(c, [&](int x, int y, int s) {
    const Degree& bound = rat_min(m.at(x), m.at(y));
    if (m.at(s) < bound) {
      v1.push_back({Cond::f1, pair_witness(x, y), m.at(s), bound});
      if (v1.size() >= cap) return false;
    }
    return true;
  });
  detail::sweep_mul_pairs(c, [&](int x, int y, int p) {
    if (m.at(p) < m.at(y)) {
      v2.push_back({Cond::f2, pair_witness(x, y), m.at(p), m.at(y)});
      if (v2.size() >= cap) return false;
    }
    return true;
  });
  detail::sweep_h_quadruples(c, [&](int x, int a, int b, int z) {
    const Degree& bound = rat_min(m.at(a), m.at(b));
    if (m.at(x) < bound) {
      v3.push_back({Cond::f3, h_witness(x, a, b, z), m.at(x), bound});
      if (v3.size() >= cap) return false;
    }
    return true;
  });
  return assemble({std::move(v1), std::move(v2), std::move(v3)}, c.windowed(), cap);
}

namespace {

CheckReport if_check(const Ifs& A, bool with_h, const CheckOptions& opt) {
  const Carrier& c = A.carrier();
  const FuzzySet& mu = A.mu();
  const FuzzySet& lam = A.lambda();
  const std::size_t cap = cap_of(opt);
  std::vector<Violation> v1, v2, v3, v4, v5, v6;

  detail::sweep_add_pairs(c, [&](int x, int y, int s) {
    if (v1.size() < cap) {
      const Degree& bound = rat_min(mu.at(x), mu.at(y));
      if (mu.at(s) < bound) v1.push_back({Cond::if1, pair_witness(x, y), mu.at(s), bound});
    }
    if (v2.size() < cap) {
      const Degree& bound = rat_max(lam.at(x), lam.at(y));
      if (lam.at(s) > bound) v2.push_back({Cond::if2, pair_witness(x, y), lam.at(s), bound});
    }
    return v1.size() < cap || v2.size() < cap;
  });
  detail::sweep_mul_pairs(c, [&](int x, int y, int p) {
    if (v3.size() < cap && mu.at(p) < mu.at(y))
      v3.push_back({Cond::if3, pair_witness(x, y), mu.at(p), mu.at(y)});
    if (v4.size() < cap && lam.at(p) > lam.at(y))
      v4.push_back({Cond::if4, pair_witness(x, y), lam.at(p), lam.at(y)});
    return v3.size() < cap || v4.size() < cap;
  });
  if (with_h) {
    detail::sweep_h_quadruples(c, [&](int x, int a, int b, int z) {
      if (v5.size() < cap) {
        const Degree& bound = rat_min(mu.at(a), mu.at(b));
        if (mu.at(x) < bound) v5.push_back({Cond::if5, h_witness(x, a, b, z), mu.at(x), bound});
      }
      if (v6.size() < cap) {
        const Degree& bound = rat_max(lam.at(a), lam.at(b));
        if (lam.at(x) > bound) v6.push_back({Cond::if6, h_witness(x, a, b, z), lam.at(x), bound});
      }
      return v5.size() < cap || v6.size() < cap;
    });
  }
  return assemble({std::move(v1), std::move(v2), std::move(v3), std::move(v4), std::move(v5),
                   std::move(v6)},
                  c.windowed(), cap);
}

}  // namespace

CheckReport is_if_left_ideal(const Ifs& a, const CheckOptions& opt) {
  return if_check(a, false, opt);
}

CheckReport is_if_left_h_ideal(const Ifs& a, const CheckOptions& opt) {
  return if_check(a, true, opt);
}

}  // namespace hrw
