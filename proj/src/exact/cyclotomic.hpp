#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace rootsplit::exact {

// The cyclotomic field Q(zeta_L), elements held in the power basis
// 1, zeta, ..., zeta^{phi(L)-1}.
class CyclotomicField {
 public:
  using Element = std::vector<mpq_class>;

  explicit CyclotomicField(std::int64_t order);

  std::int64_t order() const noexcept { return order_; }
  int degree() const noexcept { return degree_; }

  Element zero() const { return Element(degree_); }
  Element fromRational(const mpq_class& q) const;
  // zeta_L^e for any integer e.
  Element zetaPower(std::int64_t e) const;
  // zeta_s^p, requires s | L.
  Element rootOfUnity(std::int64_t p, std::int64_t s) const;
  // re + i im, requires 4 | L.
  Element gaussian(const mpq_class& re, const mpq_class& im) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element scale(const Element& a, const mpq_class& q) const;
  static bool isZero(const Element& a);

 private:
  std::int64_t order_;
  int degree_;
  std::vector<Element> powers_;  // zeta^k reduced, k = 0 .. L-1
};

// Coefficients (low to high) of the L-th cyclotomic polynomial.
std::vector<mpz_class> cyclotomicPolynomial(std::int64_t order);

// Euler's totient.
std::int64_t totient(std::int64_t n);

}  // namespace rootsplit::exact
