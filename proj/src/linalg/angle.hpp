#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace rootsplit {

// A rational angle p/s in [0, 1), standing for the unit complex number
// e^{2 pi i p/s}. Always stored in lowest terms with 0 <= p < s.
class Angle {
 public:
  Angle() = default;
  Angle(std::int64_t num, std::int64_t den);

  // Parses "p/s" or "p". Throws SchemaError on malformed text or s <= 0.
  static Angle parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  bool isZero() const noexcept { return num_ == 0; }

  // Angle of the inverse element: (-p/s) mod 1.
  Angle inverse() const { return Angle(-num_, den_); }

  std::string str() const;

  friend Angle operator+(const Angle& a, const Angle& b);
  friend bool operator==(const Angle& a, const Angle& b) = default;
  friend auto operator<=>(const Angle& a, const Angle& b) {
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Exact sum of angles taken as rationals, without reduction mod 1.
struct RationalSum {
  std::int64_t num = 0;
  std::int64_t den = 1;

  void add(const Angle& a, int times = 1);
  bool isInteger() const noexcept { return num % den == 0; }
  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
};

// Simplest fraction (smallest denominator) within `tol` of x, reduced into
// [0, 1), or nothing when no denominator up to maxDen fits.
std::optional<Angle> recognizeAngle(double x, double tol, std::int64_t maxDen);

}  // namespace rootsplit
