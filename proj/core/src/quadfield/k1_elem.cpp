#include "lambda3/quadfield/k1_elem.hpp"

#include <sstream>

#include "lambda3/errors.hpp"

namespace lambda3 {

namespace {

using Cubic = std::array<mpq_class, 3>;  // c0 + c1 theta + c2 theta^2

// Product in Q[theta] / (theta^3 - 3 theta + 1).
Cubic mul(const Cubic& x, const Cubic& y) {
  std::array<mpq_class, 5> t;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) t[i + j] += x[i] * y[j];
  }
  // theta^4 = 3 theta^2 - theta, theta^3 = 3 theta - 1
  t[2] += 3 * t[4];
  t[1] -= t[4];
  t[1] += 3 * t[3];
  t[0] -= t[3];
  return {t[0], t[1], t[2]};
}

Cubic add(const Cubic& x, const Cubic& y) { return {x[0] + y[0], x[1] + y[1], x[2] + y[2]}; }

Cubic part(const K1Elem::Coords& c, int j) { return {c[3 * j], c[3 * j + 1], c[3 * j + 2]}; }

K1Elem::Coords join(const Cubic& lo, const Cubic& hi) { return {lo[0], lo[1], lo[2], hi[0], hi[1], hi[2]}; }

void same_field(const K1Elem& x, const K1Elem& y) {
  if (x.radicand() != y.radicand()) throw DomainError("K1Elem: mixed radicands");
}

std::string cubic_string(const Cubic& c) {
  std::ostringstream os;
  os << c[0].get_str() << ", " << c[1].get_str() << ", " << c[2].get_str();
  return os.str();
}

}  // namespace

K1Elem::K1Elem(std::int64_t m, Coords coords) : m_(m), c_(std::move(coords)) {
  for (auto& q : c_) q.canonicalize();
}

K1Elem K1Elem::one(std::int64_t m) {
  Coords c;
  c[0] = 1;
  return {m, c};
}

K1Elem K1Elem::from_quad(const QuadElem& x) {
  Coords c;
  c[0] = mpq_class(x.twice_a(), 2);
  c[3] = mpq_class(x.twice_b(), 2);
  return {x.radicand(), c};
}

K1Elem K1Elem::theta(std::int64_t m) {
  Coords c;
  c[1] = 1;
  return {m, c};
}

K1Elem K1Elem::tau() const {
  // theta -> theta^2 - 2, theta^2 -> 4 - theta - theta^2
  Coords r;
  for (int j = 0; j < 2; ++j) {
    const mpq_class &c0 = c_[3 * j], &c1 = c_[3 * j + 1], &c2 = c_[3 * j + 2];
    r[3 * j] = c0 - 2 * c1 + 4 * c2;
    r[3 * j + 1] = -c2;
    r[3 * j + 2] = c1 - c2;
  }
  return {m_, r};
}

K1Elem K1Elem::g() const {
  Coords r = c_;
  for (int i = 3; i < 6; ++i) r[i] = -r[i];
  return {m_, r};
}

K1Elem K1Elem::relative_norm() const {
  const K1Elem t = tau();
  return *this * t * t.tau();
}

std::vector<mpq_class> K1Elem::charpoly() const {
  // Matrix of multiplication by *this; column k = coordinates of x * e_k.
  constexpr int n = 6;
  std::array<std::array<mpq_class, n>, n> A;
  for (int k = 0; k < n; ++k) {
    Coords e;
    e[k] = 1;
    const K1Elem col = *this * K1Elem(m_, e);
    for (int i = 0; i < n; ++i) A[i][k] = col.c_[i];
  }
  // Faddeev-LeVerrier.
  std::vector<mpq_class> coeff(n + 1);
  coeff[n] = 1;
  std::array<std::array<mpq_class, n>, n> M{};
  for (int k = 1; k <= n; ++k) {
    std::array<std::array<mpq_class, n>, n> AM{};
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        mpq_class s = 0;
        for (int l = 0; l < n; ++l) s += A[i][l] * M[l][j];
        AM[i][j] = s;
      }
    }
    // M_k = A M_{k-1} + c_{n-k+1} I
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) M[i][j] = AM[i][j];
      M[i][i] += coeff[n - k + 1];
    }
    mpq_class tr = 0;
    for (int i = 0; i < n; ++i) {
      for (int l = 0; l < n; ++l) tr += A[i][l] * M[l][i];
    }
    coeff[n - k] = -tr / k;
  }
  return coeff;
}

mpq_class K1Elem::norm() const { return charpoly()[0]; }

bool K1Elem::is_integral() const {
  for (const auto& q : charpoly()) {
    if (q.get_den() != 1) return false;
  }
  return true;
}

bool K1Elem::is_unit() const {
  const auto p = charpoly();
  for (const auto& q : p) {
    if (q.get_den() != 1) return false;
  }
  return p[0] == 1 || p[0] == -1;
}

K1Elem K1Elem::pow(unsigned e) const {
  K1Elem result = one(m_);
  K1Elem base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

K1Elem K1Elem::inverse() const {
  // x^-1 = -(x^5 + c5 x^4 + ... + c1) / c0
  const auto p = charpoly();
  if (p[0] == 0) throw DomainError("K1Elem: inverse of zero");
  K1Elem acc = one(m_);
  for (int k = 5; k >= 1; --k) {
    acc = acc * *this;
    Coords shift;
    shift[0] = p[k];
    acc = acc + K1Elem(m_, shift);
  }
  Coords s;
  s[0] = -1 / p[0];
  return acc * K1Elem(m_, s);
}

K1Elem operator+(const K1Elem& x, const K1Elem& y) {
  same_field(x, y);
  K1Elem::Coords r;
  for (int i = 0; i < 6; ++i) r[i] = x.c_[i] + y.c_[i];
  return {x.m_, r};
}

K1Elem operator-(const K1Elem& x, const K1Elem& y) {
  same_field(x, y);
  K1Elem::Coords r;
  for (int i = 0; i < 6; ++i) r[i] = x.c_[i] - y.c_[i];
  return {x.m_, r};
}

K1Elem operator*(const K1Elem& x, const K1Elem& y) {
  same_field(x, y);
  const Cubic x0 = part(x.c_, 0), x1 = part(x.c_, 1), y0 = part(y.c_, 0), y1 = part(y.c_, 1);
  Cubic lo = mul(x0, y0);
  Cubic hh = mul(x1, y1);
  for (auto& q : hh) q *= x.m_;
  lo = add(lo, hh);
  const Cubic hi = add(mul(x0, y1), mul(x1, y0));
  return {x.m_, join(lo, hi)};
}

bool operator==(const K1Elem& x, const K1Elem& y) { return x.m_ == y.m_ && x.c_ == y.c_; }

std::string K1Elem::to_string() const {
  return "[" + cubic_string(part(c_, 0)) + " | " + cubic_string(part(c_, 1)) + "]";
}

bool verify_theorem1_relations(const QuadElem& eps0, const K1Elem& eps1, const K1Elem& eps2, Theorem1Case which) {
  if (!eps0.is_unit() || !eps1.is_unit() || !eps2.is_unit()) {
    throw DomainError("verify_theorem1_relations: inputs must be units");
  }
  if (eps1.radicand() != eps0.radicand() || eps2.radicand() != eps0.radicand()) {
    throw DomainError("verify_theorem1_relations: mixed radicands");
  }
  if (!(eps1 * eps2.tau() == eps2)) return false;
  const K1Elem target = which == Theorem1Case::I ? K1Elem::from_quad(eps0) : K1Elem::one(eps0.radicand());
  return eps2.relative_norm() == target;
}

}  // namespace lambda3
