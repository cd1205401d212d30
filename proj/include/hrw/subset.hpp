#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "hrw/errors.hpp"

namespace hrw {

// Crisp subset of a carrier {0,...,universe-1}. Backed by a bit vector so
// windowed carriers (universe > 64) work too.
class ElementSubset {
 public:
  ElementSubset() = default;
  explicit ElementSubset(int universe) : bits_(universe, false) {}

  static ElementSubset of(int universe, std::initializer_list<int> idx) {
    ElementSubset s(universe);
    for (int i : idx) s.add(i);
    return s;
  }
  static ElementSubset from_mask(int universe, std::uint64_t mask) {
    ElementSubset s(universe);
    for (int i = 0; i < universe && i < 64; ++i)
      if (mask >> i & 1) s.bits_[i] = true;
    return s;
  }
  static ElementSubset full(int universe) {
    ElementSubset s(universe);
    s.bits_.assign(universe, true);
    return s;
  }

  int universe() const { return static_cast<int>(bits_.size()); }
  bool contains(int i) const { return bits_[i]; }
  void add(int i) {
    if (i < 0 || i >= universe()) throw InputError("subset index out of range");
    bits_[i] = true;
  }
  int count() const {
    int c = 0;
    for (bool b : bits_) c += b;
    return c;
  }
  bool empty() const { return count() == 0; }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 0; i < universe(); ++i)
      if (bits_[i]) out.push_back(i);
    return out;
  }

  bool is_subset_of(const ElementSubset& o) const {
    for (int i = 0; i < universe(); ++i)
      if (bits_[i] && !o.bits_[i]) return false;
    return true;
  }

  ElementSubset intersect(const ElementSubset& o) const {
    ElementSubset s(universe());
    for (int i = 0; i < universe(); ++i) s.bits_[i] = bits_[i] && o.bits_[i];
    return s;
  }

  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (int i : indices()) {
      if (!first) s += ',';
      s += std::to_string(i);
      first = false;
    }
    return s + "}";
  }

  friend bool operator==(const ElementSubset&, const ElementSubset&) = default;

  // Order by (size, numeric bitmask); used for the canonical enumeration
  // order of h-ideal lists.
  static bool size_mask_less(const ElementSubset& a, const ElementSubset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    for (int i = a.universe() - 1; i >= 0; --i)
      if (a.bits_[i] != b.bits_[i]) return b.bits_[i];
    return false;
  }

 private:
  std::vector<bool> bits_;
};

}  // namespace hrw
