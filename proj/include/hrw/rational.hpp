#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace hrw {

// Exact rational arithmetic. Membership degrees live in [0,1], but
// intermediate expressions (mu(x)+1-mu(0), ...) may leave the unit
// interval, so the range is enforced by FuzzySet/Ifs, not here.
class Rat {
 public:
  constexpr Rat() = default;
  constexpr Rat(std::int64_t n) : num_(n) {}  // NOLINT(runtime/explicit)
  Rat(std::int64_t n, std::int64_t d);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.num_, a.den_ * b.den_);
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }

  // Values are kept normalized, so field-wise equality is exact equality.
  friend bool operator==(const Rat& a, const Rat& b) = default;
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  std::string str() const;  // "2/5", "1", "0"

  // Accepts "p/q", plain integers and exact decimal literals ("0.4" -> 2/5).
  static Rat parse(const std::string& text);

 private:
  void normalize();
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

using Degree = Rat;

inline const Rat& rat_min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }
inline Rat halve(const Rat& a) { return Rat(a.num(), a.den() * 2); }
inline bool is_degree(const Rat& r) { return Rat(0) <= r && r <= Rat(1); }

}  // namespace hrw
