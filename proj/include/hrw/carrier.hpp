#pragma once

#include <memory>
#include <optional>
#include <string>

#include "hrw/hemiring.hpp"

namespace hrw {

// A carrier for fuzzy sets: either a finite hemiring or the naturals
// windowed at W (elements 0..W under ordinary + and *, with operations
// escaping the window undefined). A windowed pass is sampled evidence,
// never proof; everything downstream flags it.
class Carrier {
 public:
  static Carrier finite(Hemiring h);
  static Carrier naturals(int window);

  bool windowed() const { return ring_ == nullptr; }
  int window() const;             // windowed carriers only
  const Hemiring& ring() const;   // finite carriers only
  int size() const { return windowed() ? window_ + 1 : ring_->order; }
  static constexpr int zero = 0;

  // nullopt when the result escapes the window (finite carriers are total).
  std::optional<int> add(int x, int y) const;
  std::optional<int> mul(int x, int y) const;

  std::string describe() const;  // "order 4" | "N window 64"
  friend bool operator==(const Carrier& a, const Carrier& b);

 private:
  Carrier() = default;
  std::shared_ptr<const Hemiring> ring_;
  int window_ = -1;
};

}  // namespace hrw
