#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "hrw/carrier.hpp"

// Shared exhaustive/windowed sweeps over carrier tuples. On windowed
// carriers the inner loops break as soon as an operation escapes the
// window, which is sound because + and * are monotone on the naturals.

namespace hrw::detail {

// fn(x, y, x+y) for every pair whose sum is defined; stop on false.
template <typename Fn>
void sweep_add_pairs(const Carrier& c, Fn&& fn) {
  const int n = c.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto s = c.add(x, y);
      if (!s) {
        if (c.windowed()) break;
        continue;
      }
      if (!fn(x, y, *s)) return;
    }
}

// fn(x, y, x*y) for every pair whose product is defined; stop on false.
template <typename Fn>
void sweep_mul_pairs(const Carrier& c, Fn&& fn) {
  const int n = c.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto p = c.mul(x, y);
      if (!p) {
        if (c.windowed()) break;
        continue;
      }
      if (!fn(x, y, *p)) return;
    }
}

// fn(x, a, b, z) for every quadruple with x+a+z == b+z (left-to-right, all
// intermediate sums defined). Within each (x, a) the (b, z) pairs are
// visited in lexicographic order so collected witnesses come out sorted by
// the (x, a, b, z) tuple. Stop on false.
template <typename Fn>
void sweep_h_quadruples(const Carrier& c, Fn&& fn) {
  const int n = c.size();
  std::vector<std::pair<int, int>> group;
  for (int x = 0; x < n; ++x)
    for (int a = 0; a < n; ++a) {
      const auto t = c.add(x, a);
      if (!t) {
        if (c.windowed()) break;
        continue;
      }
      group.clear();
      for (int z = 0; z < n; ++z) {
        const auto s = c.add(*t, z);
        if (!s) {
          if (c.windowed()) break;
          continue;
        }
        if (c.windowed()) {
          group.emplace_back(*s - z, z);  // unique solution of b+z == s in N
        } else {
          for (int b = 0; b < n; ++b)
            if (c.add(b, z) == s) group.emplace_back(b, z);
        }
      }
      std::sort(group.begin(), group.end());
      for (const auto& [b, z] : group)
        if (!fn(x, a, b, z)) return;
    }
}

}  // namespace hrw::detail
