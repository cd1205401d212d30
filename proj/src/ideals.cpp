#include "hrw/ideals.hpp"

#include <algorithm>
#include <cstdint>

#include "hrw/detail/sweep.hpp"
#include "hrw/errors.hpp"

namespace hrw {

std::string CrispCheck::str() const {
  switch (fail) {
    case Fail::none:
      return std::string("ok") + (windowed ? " (windowed)" : "");
    case Fail::product:
      return "product closure violated at x=" + std::to_string(x) + " y=" + std::to_string(y);
    case Fail::sum:
      return "sum closure violated at x=" + std::to_string(x) + " y=" + std::to_string(y);
    case Fail::h:
      return "h-condition violated at x=" + std::to_string(x) + " a=" + std::to_string(a) +
             " b=" + std::to_string(b) + " z=" + std::to_string(z);
  }
  return "";
}

CrispCheck is_left_ideal(const Carrier& c, const ElementSubset& a) {
  if (a.empty()) throw InputError("ideal predicate on empty subset");
  if (a.universe() != c.size()) throw InputError("subset universe does not match carrier");
  CrispCheck res;
  res.windowed = c.windowed();
  const int n = c.size();
  for (int r = 0; r < n; ++r)
    for (int x = 0; x < n; ++x) {
      if (!a.contains(x)) continue;
      const auto p = c.mul(r, x);
      if (!p) {
        if (c.windowed()) break;
        continue;
      }
      if (!a.contains(*p)) return {false, CrispCheck::Fail::product, r, x, -1, -1, -1, res.windowed};
    }
  for (int x = 0; x < n; ++x) {
    if (!a.contains(x)) continue;
    for (int y = 0; y < n; ++y) {
      if (!a.contains(y)) continue;
      const auto s = c.add(x, y);
      if (!s) {
        if (c.windowed()) break;
        continue;
      }
      if (!a.contains(*s)) return {false, CrispCheck::Fail::sum, x, y, -1, -1, -1, res.windowed};
    }
  }
  return res;
}

CrispCheck is_left_h_ideal(const Carrier& c, const ElementSubset& a) {
  CrispCheck res = is_left_ideal(c, a);
  if (!res.ok) return res;
  detail::sweep_h_quadruples(c, [&](int x, int aa, int b, int z) {
    if (a.contains(aa) && a.contains(b) && !a.contains(x)) {
      res = {false, CrispCheck::Fail::h, x, -1, aa, b, z, res.windowed};
      return false;
    }
    return true;
  });
  return res;
}

ElementSubset h_closure(const Carrier& c, const ElementSubset& a) {
  if (c.windowed()) throw InputError("h_closure requires a finite carrier");
  if (a.empty()) throw InputError("h_closure of empty subset");
  const int n = c.size();
  ElementSubset s = a;
  bool changed = true;
  while (changed) {
    changed = false;
    auto put = [&](int e) {
      if (!s.contains(e)) {
        s.add(e);
        changed = true;
      }
    };
    for (int x = 0; x < n; ++x) {
      if (!s.contains(x)) continue;
      for (int y = 0; y < n; ++y) {
        if (s.contains(y)) put(*c.add(x, y));
        put(*c.mul(y, x));
      }
    }
    detail::sweep_h_quadruples(c, [&](int x, int aa, int b, int) {
      if (s.contains(aa) && s.contains(b)) put(x);
      return true;
    });
  }
  return s;
}

namespace {

struct Prune {
  std::uint64_t seed;
  int forced;
};

}  // namespace

std::vector<ElementSubset> enumerate_left_h_ideals(const Hemiring& r) {
  const int n = r.order;
  if (n > 20) throw ResourceError("h-ideal enumeration limited to order <= 20");
  const Carrier c = Carrier::finite(r);
  std::vector<Prune> prunes;
  std::vector<ElementSubset> out;

  // Every left ideal absorbs 0 = 0*a, so only masks containing bit 0 can
  // qualify.
  for (std::uint64_t mask = 1; mask < (1ull << n); mask += 2) {
    bool pruned = false;
    for (const Prune& p : prunes)
      if ((mask & p.seed) == p.seed && !(mask >> p.forced & 1)) {
        pruned = true;
        break;
      }
    if (pruned) continue;
    const ElementSubset a = ElementSubset::from_mask(n, mask);
    const CrispCheck chk = is_left_h_ideal(c, a);
    if (chk.ok) {
      out.push_back(a);
      continue;
    }
    switch (chk.fail) {
      case CrispCheck::Fail::product:
        prunes.push_back({1ull << chk.y, r.mul(chk.x, chk.y)});
        break;
      case CrispCheck::Fail::sum:
        prunes.push_back({(1ull << chk.x) | (1ull << chk.y), r.add(chk.x, chk.y)});
        break;
      case CrispCheck::Fail::h:
        prunes.push_back({(1ull << chk.a) | (1ull << chk.b), chk.x});
        break;
      case CrispCheck::Fail::none:
        break;
    }
  }
  std::sort(out.begin(), out.end(), ElementSubset::size_mask_less);
  return out;
}

std::vector<ElementSubset> maximal_left_h_ideals(const Hemiring& r) {
  const std::vector<ElementSubset> all = enumerate_left_h_ideals(r);
  std::vector<ElementSubset> out;
  for (const ElementSubset& a : all) {
    if (a.count() == r.order) continue;  // maximality is among proper ideals
    bool covered = false;
    for (const ElementSubset& b : all) {
      if (b.count() == r.order || b == a) continue;
      if (a.is_subset_of(b)) {
        covered = true;
        break;
      }
    }
    if (!covered) out.push_back(a);
  }
  return out;
}

}  // namespace hrw
