#include "hrw/rational.hpp"

#include <cstdlib>
#include <numeric>

#include "hrw/errors.hpp"

namespace hrw {

Rat::Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
  if (d == 0) throw InputError("rational with zero denominator");
  normalize();
}

void Rat::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

std::string Rat::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

std::int64_t parse_int(const std::string& s) {
  if (s.empty()) throw InputError("empty number");
  std::size_t pos = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw InputError("bad number '" + s + "'");
  }
  if (pos != s.size()) throw InputError("bad number '" + s + "'");
  return v;
}

}  // namespace

Rat Rat::parse(const std::string& text) {
  std::string s = text;
  // trim
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  if (b == std::string::npos) throw InputError("empty number");
  s = s.substr(b, e - b + 1);

  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const std::int64_t n = parse_int(s.substr(0, slash));
    const std::int64_t d = parse_int(s.substr(slash + 1));
    if (d == 0) throw InputError("zero denominator in '" + text + "'");
    return Rat(n, d);
  }
  if (const auto dot = s.find('.'); dot != std::string::npos) {
    std::string ip = s.substr(0, dot);
    const std::string fp = s.substr(dot + 1);
    if (fp.size() > 9) throw InputError("too many decimal places in '" + text + "'");
    if (fp.empty()) throw InputError("bad number '" + text + "'");
    bool neg = false;
    if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) {
      neg = ip[0] == '-';
      ip = ip.substr(1);
    }
    std::int64_t den = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
    const std::int64_t whole = ip.empty() ? 0 : parse_int(ip);
    const std::int64_t frac = parse_int(fp);
    if (frac < 0) throw InputError("bad number '" + text + "'");
    std::int64_t num = whole * den + frac;
    if (neg) num = -num;
    return Rat(num, den);
  }
  return Rat(parse_int(s));
}

}  // namespace hrw
