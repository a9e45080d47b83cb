#include "exact/exact_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "exact/cyclotomic.hpp"
#include "linalg/eigen.hpp"

namespace rootsplit::exact {

namespace {

constexpr int kMaxFieldDegree = 96;
constexpr std::int64_t kMaxDenominator = 360;
constexpr double kRecognizeTol = 2e-5;

using Element = CyclotomicField::Element;
using ElementMatrix = std::vector<Element>;  // row-major n*n

ElementMatrix embed(const CyclotomicField& f, const ExactMatrix& m) {
  ElementMatrix out;
  for (const ExactEntry& e : m.entries) {
    if (e.angle)
      out.push_back(f.scale(f.rootOfUnity(e.angle->num(), e.angle->den()), e.modulus));
    else
      out.push_back(f.gaussian(e.re, e.im));
  }
  return out;
}

ElementMatrix multiply(const CyclotomicField& f, const ElementMatrix& a, const ElementMatrix& b, int n) {
  ElementMatrix c(static_cast<std::size_t>(n * n), f.zero());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) c[i * n + j] = f.add(c[i * n + j], f.mul(a[i * n + k], b[k * n + j]));
  return c;
}

// Characteristic polynomial det(x I - A), coefficients low to high.
std::vector<Element> charPoly(const CyclotomicField& f, const ElementMatrix& a, int n) {
  auto at = [&](int i, int j) -> const Element& { return a[i * n + j]; };
  auto minor2 = [&](int i, int j) { return f.sub(f.mul(at(i, i), at(j, j)), f.mul(at(i, j), at(j, i))); };
  const Element one = f.fromRational(1);
  if (n == 1) return {f.scale(at(0, 0), -1), one};
  if (n == 2) {
    Element tr = f.add(at(0, 0), at(1, 1));
    return {minor2(0, 1), f.scale(tr, -1), one};
  }
  Element tr = f.add(f.add(at(0, 0), at(1, 1)), at(2, 2));
  Element e2 = f.add(f.add(minor2(0, 1), minor2(0, 2)), minor2(1, 2));
  Element det = f.sub(f.add(f.mul(at(0, 0), minor2(1, 2)),
                            f.mul(at(0, 2), f.sub(f.mul(at(1, 0), at(2, 1)), f.mul(at(1, 1), at(2, 0))))),
                      f.mul(at(0, 1), f.sub(f.mul(at(1, 0), at(2, 2)), f.mul(at(1, 2), at(2, 0)))));
  return {f.scale(det, -1), e2, f.scale(tr, -1), one};
}

Element evaluate(const CyclotomicField& f, const std::vector<Element>& poly, const Element& x) {
  Element r = f.zero();
  for (std::size_t k = poly.size(); k-- > 0;) r = f.add(f.mul(r, x), poly[k]);
  return r;
}

std::vector<Element> derivative(const CyclotomicField& f, const std::vector<Element>& poly) {
  std::vector<Element> d;
  for (std::size_t k = 1; k < poly.size(); ++k) d.push_back(f.scale(poly[k], static_cast<long>(k)));
  return d;
}

struct Candidate {
  int pole;  // 0, 1, or 2 for the product M0 M1
  Angle angle;
  int multiplicity;
};

}  // namespace

ExactEntry ExactEntry::fromComplex(double re, double im) {
  ExactEntry e;
  e.re = mpq_class(re);
  e.im = mpq_class(im);
  return e;
}

ExactEntry ExactEntry::fromAngle(const Angle& a, double modulus) {
  ExactEntry e;
  e.angle = a;
  e.modulus = mpq_class(modulus);
  return e;
}

Complex ExactEntry::toComplex() const {
  if (angle) return std::polar(modulus.get_d(), kTwoPi * angle->value());
  return {re.get_d(), im.get_d()};
}

Matrix ExactMatrix::toMatrix() const {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = at(i, j).toComplex();
  return m;
}

std::optional<ExactSpectra> exactSpectra(const ExactMatrix& m0, const ExactMatrix& m1, std::string* note) {
  const int n = m0.n;
  std::int64_t order = 4;
  for (const ExactMatrix* m : {&m0, &m1})
    for (const ExactEntry& e : m->entries)
      if (e.angle) order = std::lcm(order, e.angle->den());
  if (totient(order) > kMaxFieldDegree) {
    if (note) *note = "exact mode: entry angles need a cyclotomic field of degree " +
                      std::to_string(totient(order)) + "; using floating point";
    return std::nullopt;
  }

  const Matrix f0 = m0.toMatrix();
  const Matrix f1 = m1.toMatrix();
  const std::array<Matrix, 3> floats{f0, f1, f0 * f1};

  // Group the floating roots of each pole by recognized angle.
  std::vector<Candidate> candidates;
  std::array<int, 3> recognizedCount{0, 0, 0};
  for (int p = 0; p < 3; ++p) {
    std::vector<Candidate> local;
    for (const Complex& z : linalg::characteristicRoots(floats[p])) {
      if (std::abs(std::abs(z) - 1.0) > kRecognizeTol) continue;
      const auto a = recognizeAngle(linalg::principalAngle(z), kRecognizeTol, kMaxDenominator);
      if (!a) continue;
      auto it = std::find_if(local.begin(), local.end(), [&](const Candidate& c) { return c.angle == *a; });
      if (it == local.end())
        local.push_back({p, *a, 1});
      else
        ++it->multiplicity;
    }
    for (const Candidate& c : local) candidates.push_back(c);
  }

  // Grow the field by candidate denominators while it stays small.
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) { return a.angle.den() < b.angle.den(); });
  std::vector<Candidate> usable;
  bool dropped = false;
  for (const Candidate& c : candidates) {
    const std::int64_t next = std::lcm(order, c.angle.den());
    if (totient(next) <= kMaxFieldDegree) {
      order = next;
      usable.push_back(c);
    } else {
      dropped = true;
    }
  }

  const CyclotomicField field(order);
  const ElementMatrix e0 = embed(field, m0);
  const ElementMatrix e1 = embed(field, m1);
  const std::array<ElementMatrix, 3> mats{e0, e1, multiply(field, e0, e1, n)};
  std::array<std::vector<Element>, 3> polys;
  for (int p = 0; p < 3; ++p) polys[p] = charPoly(field, mats[p], n);

  ExactSpectra out;
  for (const Candidate& c : usable) {
    const Element x = field.rootOfUnity(c.angle.num(), c.angle.den());
    std::vector<Element> poly = polys[c.pole];
    bool ok = true;
    for (int k = 0; k < c.multiplicity && ok; ++k) {
      ok = CyclotomicField::isZero(evaluate(field, poly, x));
      poly = derivative(field, poly);
    }
    if (!ok) continue;
    for (int k = 0; k < c.multiplicity; ++k) {
      if (c.pole == 2)
        out.angles[2].push_back(c.angle.inverse());
      else
        out.angles[c.pole].push_back(c.angle);
    }
    recognizedCount[c.pole] += c.multiplicity;
  }
  for (int p = 0; p < 3; ++p) {
    out.complete[p] = recognizedCount[p] == n;
    std::sort(out.angles[p].begin(), out.angles[p].end());
  }
  if (note && dropped) *note = "exact mode: some eigen-angles exceed the cyclotomic field limit";
  return out;
}

}  // namespace rootsplit::exact
