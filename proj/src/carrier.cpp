#include "hrw/carrier.hpp"

#include "hrw/errors.hpp"

namespace hrw {

Carrier Carrier::finite(Hemiring h) {
  Carrier c;
  c.ring_ = std::make_shared<const Hemiring>(std::move(h));
  return c;
}

Carrier Carrier::naturals(int window) {
  if (window < 1) throw InputError("window must be at least 1");
  Carrier c;
  c.window_ = window;
  return c;
}

int Carrier::window() const {
  if (!windowed()) throw InputError("carrier is not windowed");
  return window_;
}

const Hemiring& Carrier::ring() const {
  if (windowed()) throw InputError("operation requires a finite carrier");
  return *ring_;
}

std::optional<int> Carrier::add(int x, int y) const {
  if (windowed()) {
    const int s = x + y;
    if (s > window_) return std::nullopt;
    return s;
  }
  return ring_->add(x, y);
}

std::optional<int> Carrier::mul(int x, int y) const {
  if (windowed()) {
    const long long p = static_cast<long long>(x) * y;
    if (p > window_) return std::nullopt;
    return static_cast<int>(p);
  }
  return ring_->mul(x, y);
}

std::string Carrier::describe() const {
  if (windowed()) return "N window " + std::to_string(window_);
  return "order " + std::to_string(ring_->order);
}

bool operator==(const Carrier& a, const Carrier& b) {
  if (a.windowed() != b.windowed()) return false;
  if (a.windowed()) return a.window_ == b.window_;
  return *a.ring_ == *b.ring_;
}

}  // namespace hrw
