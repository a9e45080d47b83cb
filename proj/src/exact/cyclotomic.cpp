#include "exact/cyclotomic.hpp"

#include <map>
#include <numeric>

#include "core/error.hpp"

namespace rootsplit::exact {

namespace {

using Poly = std::vector<mpz_class>;

// Exact division by a monic polynomial; the remainder must vanish.
Poly divideMonic(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  Poly q(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const mpz_class c = num[k];
    q[k - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  return q;
}

}  // namespace

std::int64_t totient(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<mpz_class> cyclotomicPolynomial(std::int64_t order) {
  static thread_local std::map<std::int64_t, Poly> cache;
  if (auto it = cache.find(order); it != cache.end()) return it->second;
  Poly p(order + 1, 0);
  p[0] = -1;
  p[order] = 1;
  for (std::int64_t d = 1; d < order; ++d)
    if (order % d == 0) p = divideMonic(p, cyclotomicPolynomial(d));
  cache.emplace(order, p);
  return p;
}

CyclotomicField::CyclotomicField(std::int64_t order) : order_(order) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "cyclotomic order must be positive");
  const Poly phi = cyclotomicPolynomial(order);
  degree_ = static_cast<int>(phi.size()) - 1;
  powers_.reserve(order);
  Element cur(degree_);
  cur[0] = 1;
  for (std::int64_t k = 0; k < order; ++k) {
    powers_.push_back(cur);
    // multiply by zeta: shift, then fold the top coefficient with phi.
    Element next(degree_);
    for (int j = degree_ - 1; j >= 1; --j) next[j] = cur[j - 1];
    next[0] = 0;
    const mpq_class top = cur[degree_ - 1];
    if (degree_ >= 1 && top != 0)
      for (int j = 0; j < degree_; ++j) next[j] -= top * mpq_class(phi[j]);
    if (degree_ == 0) next = cur;
    cur = std::move(next);
  }
}

CyclotomicField::Element CyclotomicField::fromRational(const mpq_class& q) const {
  Element e = zero();
  e[0] = q;
  return e;
}

CyclotomicField::Element CyclotomicField::zetaPower(std::int64_t e) const {
  e %= order_;
  if (e < 0) e += order_;
  return powers_[static_cast<std::size_t>(e)];
}

CyclotomicField::Element CyclotomicField::rootOfUnity(std::int64_t p, std::int64_t s) const {
  if (s <= 0 || order_ % s != 0)
    throw Error(ErrorCode::Internal, "root of unity order does not divide the field order");
  return zetaPower(p * (order_ / s));
}

CyclotomicField::Element CyclotomicField::gaussian(const mpq_class& re, const mpq_class& im) const {
  Element e = fromRational(re);
  if (im != 0) e = add(e, scale(rootOfUnity(1, 4), im));
  return e;
}

CyclotomicField::Element CyclotomicField::add(const Element& a, const Element& b) const {
  Element r(degree_);
  for (int i = 0; i < degree_; ++i) r[i] = a[i] + b[i];
  return r;
}

CyclotomicField::Element CyclotomicField::sub(const Element& a, const Element& b) const {
  Element r(degree_);
  for (int i = 0; i < degree_; ++i) r[i] = a[i] - b[i];
  return r;
}

CyclotomicField::Element CyclotomicField::scale(const Element& a, const mpq_class& q) const {
  Element r(degree_);
  for (int i = 0; i < degree_; ++i) r[i] = a[i] * q;
  return r;
}

CyclotomicField::Element CyclotomicField::mul(const Element& a, const Element& b) const {
  std::vector<mpq_class> full(2 * degree_, 0);
  for (int i = 0; i < degree_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < degree_; ++j)
      if (b[j] != 0) full[i + j] += a[i] * b[j];
  }
  Element r(degree_);
  for (int k = 0; k < 2 * degree_; ++k) {
    if (full[k] == 0) continue;
    if (k < degree_) {
      r[k] += full[k];
    } else {
      const Element& pk = powers_[static_cast<std::size_t>(k % order_)];
      for (int j = 0; j < degree_; ++j) r[j] += full[k] * pk[j];
    }
  }
  return r;
}

bool CyclotomicField::isZero(const Element& a) {
  for (const mpq_class& c : a)
    if (c != 0) return false;
  return true;
}

}  // namespace rootsplit::exact
