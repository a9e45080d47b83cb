#include "linalg/angle.hpp"

#include <cmath>
#include <numeric>

#include "core/error.hpp"

namespace rootsplit {

Angle::Angle(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw Error(ErrorCode::InvalidArgument, "angle denominator must be positive");
  num %= den;
  if (num < 0) num += den;
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Angle Angle::parse(std::string_view text) {
  auto parseInt = [&](std::string_view s) -> std::int64_t {
    if (s.empty()) throw Error(ErrorCode::SchemaError, "malformed angle '" + std::string(text) + "'");
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
      neg = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) throw Error(ErrorCode::SchemaError, "malformed angle '" + std::string(text) + "'");
    std::int64_t v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9' || v > (INT64_MAX / 10 - 9))
        throw Error(ErrorCode::SchemaError, "malformed angle '" + std::string(text) + "'");
      v = v * 10 + (s[i] - '0');
    }
    return neg ? -v : v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Angle(parseInt(text), 1);
  const std::int64_t den = parseInt(text.substr(slash + 1));
  if (den <= 0) throw Error(ErrorCode::SchemaError, "angle denominator must be positive in '" + std::string(text) + "'");
  return Angle(parseInt(text.substr(0, slash)), den);
}

std::string Angle::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Angle operator+(const Angle& a, const Angle& b) {
  const std::int64_t l = std::lcm(a.den_, b.den_);
  return Angle(a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l);
}

void RationalSum::add(const Angle& a, int times) {
  const std::int64_t l = std::lcm(den, a.den());
  num = num * (l / den) + static_cast<std::int64_t>(times) * a.num() * (l / a.den());
  den = l;
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::optional<Angle> recognizeAngle(double x, double tol, std::int64_t maxDen) {
  x -= std::floor(x);
  for (std::int64_t s = 1; s <= maxDen; ++s) {
    const double p = std::round(x * static_cast<double>(s));
    if (std::abs(x - p / static_cast<double>(s)) <= tol)
      return Angle(static_cast<std::int64_t>(p), s);
  }
  return std::nullopt;
}

}  // namespace rootsplit
