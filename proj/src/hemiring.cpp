#include "hrw/hemiring.hpp"

#include <algorithm>
#include <numeric>

#include "hrw/errors.hpp"

namespace hrw {

std::string AxiomViolation::str() const {
  std::string s = "axiom " + axiom + " violated at x=" + std::to_string(x);
  if (y >= 0) s += " y=" + std::to_string(y);
  if (z >= 0) s += " z=" + std::to_string(z);
  return s;
}

namespace {

void check_shape(const std::vector<std::vector<int>>& t, int n, const char* which) {
  if (static_cast<int>(t.size()) != n)
    throw InputError(std::string(which) + " table has " + std::to_string(t.size()) +
                     " rows, expected " + std::to_string(n));
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != n)
      throw InputError(std::string(which) + " table is ragged");
    for (int v : row)
      if (v < 0 || v >= n)
        throw InputError(std::string(which) + " table entry " + std::to_string(v) +
                         " out of range [0," + std::to_string(n - 1) + "]");
  }
}

}  // namespace

ValidationResult validate_hemiring(const std::vector<std::vector<int>>& add,
                                   const std::vector<std::vector<int>>& mul) {
  const int n = static_cast<int>(add.size());
  if (n == 0) throw InputError("empty addition table");
  check_shape(add, n, "add");
  check_shape(mul, n, "mul");

  Hemiring h;
  h.order = n;
  h.add_table.reserve(n * n);
  h.mul_table.reserve(n * n);
  for (const auto& row : add) h.add_table.insert(h.add_table.end(), row.begin(), row.end());
  for (const auto& row : mul) h.mul_table.insert(h.mul_table.end(), row.begin(), row.end());

  ValidationResult res;
  auto report = [&res](const char* axiom, int x, int y = -1, int z = -1) {
    res.violations.push_back({axiom, x, y, z});
  };

  // Each axiom sweep stops at its first witness; all axioms are swept.
  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (h.add(h.add(x, y), z) != h.add(x, h.add(y, z)))
            return report("add-associativity", x, y, z);
  }();
  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (h.add(x, y) != h.add(y, x)) return report("add-commutativity", x, y);
  }();
  [&] {
    for (int x = 0; x < n; ++x)
      if (h.add(0, x) != x || h.add(x, 0) != x) return report("additive-identity", x);
  }();
  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (h.mul(h.mul(x, y), z) != h.mul(x, h.mul(y, z)))
            return report("mul-associativity", x, y, z);
  }();
  [&] {
    for (int x = 0; x < n; ++x)
      if (h.mul(0, x) != 0 || h.mul(x, 0) != 0) return report("zero-absorption", x);
  }();
  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (h.mul(x, h.add(y, z)) != h.add(h.mul(x, y), h.mul(x, z)))
            return report("left-distributivity", x, y, z);
  }();
  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (h.mul(h.add(x, y), z) != h.add(h.mul(x, z), h.mul(y, z)))
            return report("right-distributivity", x, y, z);
  }();

  if (res.violations.empty()) res.hemiring = std::move(h);
  return res;
}

Hemiring product_hemiring(const Hemiring& r, const Hemiring& s) {
  const int n = r.order * s.order;
  Hemiring p;
  p.order = n;
  p.add_table.resize(n * n);
  p.mul_table.resize(n * n);
  auto enc = [&s](int a, int b) { return a * s.order + b; };
  for (int a1 = 0; a1 < r.order; ++a1)
    for (int b1 = 0; b1 < s.order; ++b1)
      for (int a2 = 0; a2 < r.order; ++a2)
        for (int b2 = 0; b2 < s.order; ++b2) {
          const int x = enc(a1, b1), y = enc(a2, b2);
          p.add_table[x * n + y] = enc(r.add(a1, a2), s.add(b1, b2));
          p.mul_table[x * n + y] = enc(r.mul(a1, a2), s.mul(b1, b2));
        }
  return p;
}

MorphismMap::MorphismMap(Hemiring dom_ring, Hemiring cod_ring, std::vector<int> images)
    : dom(std::move(dom_ring)), cod(std::move(cod_ring)), map(std::move(images)) {
  if (static_cast<int>(map.size()) != dom.order)
    throw InputError("morphism map has " + std::to_string(map.size()) +
                     " entries, expected " + std::to_string(dom.order));
  std::vector<bool> hit(cod.order, false);
  for (int v : map) {
    if (v < 0 || v >= cod.order)
      throw InputError("morphism image " + std::to_string(v) + " out of range");
    hit[v] = true;
  }
  surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::string HomCheck::str() const {
  if (ok) return "homomorphism";
  std::string s = reason;
  if (x >= 0) s += " at x=" + std::to_string(x);
  if (y >= 0) s += " y=" + std::to_string(y);
  return s;
}

HomCheck is_homomorphism(const MorphismMap& f) {
  if (f.map[0] != 0) return {false, "zero not preserved", -1, -1};
  for (int x = 0; x < f.dom.order; ++x)
    for (int y = 0; y < f.dom.order; ++y)
      if (f(f.dom.add(x, y)) != f.cod.add(f(x), f(y)))
        return {false, "addition not preserved", x, y};
  for (int x = 0; x < f.dom.order; ++x)
    for (int y = 0; y < f.dom.order; ++y)
      if (f(f.dom.mul(x, y)) != f.cod.mul(f(x), f(y)))
        return {false, "multiplication not preserved", x, y};
  return {true, "", -1, -1};
}

std::string Automorphism::str() const {
  std::string s;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(perm[i]);
  }
  return s;
}

namespace {

bool consistent_prefix(const Hemiring& h, const std::vector<int>& perm, int assigned) {
  // Checks every pair among the assigned prefix whose table results are
  // also assigned.
  for (int x = 0; x < assigned; ++x)
    for (int y = 0; y < assigned; ++y) {
      const int s = h.add(x, y);
      if (s < assigned && h.add(perm[x], perm[y]) != perm[s]) return false;
      const int p = h.mul(x, y);
      if (p < assigned && h.mul(perm[x], perm[y]) != perm[p]) return false;
    }
  return true;
}

bool full_check(const Hemiring& h, const std::vector<int>& perm) {
  for (int x = 0; x < h.order; ++x)
    for (int y = 0; y < h.order; ++y)
      if (h.add(perm[x], perm[y]) != perm[h.add(x, y)] ||
          h.mul(perm[x], perm[y]) != perm[h.mul(x, y)])
        return false;
  return true;
}

void search(const Hemiring& h, std::vector<int>& perm, std::vector<bool>& used,
            const std::vector<bool>& add_idem, int pos, std::vector<Automorphism>& out) {
  const int n = h.order;
  if (pos == n) {
    if (full_check(h, perm)) out.push_back({perm});
    return;
  }
  for (int v = 1; v < n; ++v) {
    if (used[v] || add_idem[pos] != add_idem[v]) continue;
    perm[pos] = v;
    used[v] = true;
    if (consistent_prefix(h, perm, pos + 1)) search(h, perm, used, add_idem, pos + 1, out);
    used[v] = false;
  }
  perm[pos] = -1;
}

}  // namespace

std::vector<Automorphism> automorphisms(const Hemiring& r) {
  const int n = r.order;
  std::vector<bool> add_idem(n);
  for (int x = 0; x < n; ++x) add_idem[x] = r.add(x, x) == x;

  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  perm[0] = 0;
  used[0] = true;
  std::vector<Automorphism> out;
  search(r, perm, used, add_idem, 1, out);
  // Candidates are generated in increasing word order already; the sort
  // keeps the contract explicit.
  std::sort(out.begin(), out.end(),
            [](const Automorphism& a, const Automorphism& b) { return a.perm < b.perm; });
  return out;
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
  std::vector<int> p(g.perm.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = f.perm[g.perm[i]];
  return {p};
}

Automorphism inverse(const Automorphism& f) {
  std::vector<int> p(f.perm.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[f.perm[i]] = static_cast<int>(i);
  return {p};
}

}  // namespace hrw
