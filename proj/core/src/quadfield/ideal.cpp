#include "lambda3/quadfield/ideal.hpp"

#include <sstream>

#include "lambda3/errors.hpp"
#include "lambda3/quadfield/integer.hpp"

namespace lambda3 {

namespace {

bool odd(const mpz_class& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }

mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// g = x a + y b
mpz_class xgcd(const mpz_class& a, const mpz_class& b, mpz_class& x, mpz_class& y) {
  mpz_class g;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Coefficient of sqrt(D) in x, where x = (A + B sqrt(m)) / 2.
mpz_class sqrt_disc_coeff(const QuadElem& x, std::int64_t D) {
  if (D == x.radicand()) return x.twice_b();
  return exact_div(x.twice_b(), 2);
}

// Element (b + k sqrt(D)) / 2 of the field of discriminant D.
QuadElem from_disc_coords(std::int64_t D, const mpz_class& b, const mpz_class& k) {
  const std::int64_t m = radicand_of(D);
  return {m, b, D == m ? k : mpz_class(2 * k), true};
}

}  // namespace

IdealRep::IdealRep(std::int64_t D, mpz_class n, mpz_class b) : disc_(D), n_(std::move(n)) {
  if (n_ <= 0) throw DomainError("IdealRep: norm must be positive");
  mpz_class two_n = 2 * n_;
  b_ = mod_floor(b, two_n);
  mpz_class r = b_ * b_ - D;
  if (odd(b_) != (mod_floor(D, 2) == 1) || mpz_divisible_p(r.get_mpz_t(), mpz_class(4 * n_).get_mpz_t()) == 0) {
    throw DomainError("IdealRep: 4n must divide b^2 - D");
  }
}

QuadElem IdealRep::second_basis() const { return from_disc_coords(disc_, b_, 1); }

bool IdealRep::contains(const QuadElem& x) const {
  if (x.radicand() != radicand_of(disc_)) throw DomainError("IdealRep::contains: wrong field");
  // x = u n + v (b + sqrt(D)) / 2
  const mpz_class v = sqrt_disc_coeff(x, disc_);
  mpz_class un2 = x.twice_a() - v * b_;  // 2 u n
  if (odd(un2)) return false;
  return mpz_divisible_p(un2.get_mpz_t(), mpz_class(2 * n_).get_mpz_t()) != 0;
}

std::string IdealRep::to_string() const {
  std::ostringstream os;
  os << "[" << n_.get_str() << ", (" << b_.get_str() << "+sqrt(" << disc_ << "))/2]";
  return os.str();
}

ScaledIdeal ideal_mul(const IdealRep& x, const IdealRep& y) {
  if (x.discriminant() != y.discriminant()) throw DomainError("ideal_mul: discriminants differ");
  const std::int64_t D = x.discriminant();
  const mpz_class &n1 = x.norm(), &n2 = y.norm(), &b1 = x.b(), &b2 = y.b();
  const mpz_class s = exact_div(b1 + b2, 2);
  mpz_class u1, v1, u2, v2;
  const mpz_class g1 = xgcd(n1, n2, u1, v1);
  const mpz_class e = xgcd(g1, s, u2, v2);
  // u n1 + v n2 + w s = e
  const mpz_class u = u2 * u1, v = u2 * v1, w = v2;
  const mpz_class N = exact_div(n1 * n2, e * e);
  const mpz_class num = u * n1 * b2 + v * n2 * b1 + w * exact_div(b1 * b2 + D, 2);
  mpz_class B = exact_div(num, e);
  return {e, IdealRep(D, N, B)};
}

ScaledIdeal ideal_pow(const IdealRep& x, unsigned e) {
  ScaledIdeal acc{1, IdealRep(x.discriminant(), 1, mod_floor(x.discriminant(), 2))};
  for (unsigned i = 0; i < e; ++i) {
    ScaledIdeal p = ideal_mul(acc.primitive, x);
    acc = {acc.scale * p.scale, p.primitive};
  }
  return acc;
}

ScaledIdeal principal_ideal(const QuadElem& x, std::int64_t D) {
  if (x.is_zero()) throw DomainError("principal_ideal: zero element");
  if (x.radicand() != radicand_of(D)) throw DomainError("principal_ideal: wrong field");
  const mpz_class delta = mod_floor(D, 2);
  // Coordinates of y in the basis (1, w0), w0 = (delta + sqrt(D)) / 2.
  auto coords = [&](const QuadElem& y) {
    mpz_class v = sqrt_disc_coeff(y, D);
    mpz_class u = exact_div(y.twice_a() - v * delta, 2);
    return std::pair{u, v};
  };
  const QuadElem w0 = from_disc_coords(D, delta, 1);
  auto [u1, v1] = coords(x);
  auto [u2, v2] = coords(x * w0);
  mpz_class s, t;
  mpz_class g = xgcd(v1, v2, s, t);
  if (g < 0) {
    g = -g;
    s = -s;
    t = -t;
  }
  // Lattice = Z (N0, 0) + Z (c, g).
  const mpz_class c = s * u1 + t * u2;
  mpz_class det = u1 * v2 - u2 * v1;
  if (det < 0) det = -det;
  const mpz_class N0 = exact_div(det, g);
  if (mpz_divisible_p(c.get_mpz_t(), g.get_mpz_t()) == 0 || mpz_divisible_p(N0.get_mpz_t(), g.get_mpz_t()) == 0) {
    throw LogicError("principal_ideal: lattice is not an ideal");
  }
  const mpz_class n = exact_div(N0, g);
  const mpz_class b = 2 * exact_div(c, g) + delta;
  return {g, IdealRep(D, n, b)};
}

std::pair<IdealRep, IdealRep> prime_above_3_split(std::int64_t d) {
  if (d <= 0 || !is_squarefree(d) || mod_floor(-d, 3) != 1) {
    throw DomainError("prime_above_3_split: need squarefree d with -d == 1 (mod 3)");
  }
  const std::int64_t D = field_discriminant(-d);
  const QuadElem gen(-d, 1, 1);  // c = 1 is the smallest root of c^2 == -d (mod 3)
  for (std::int64_t b = 0; b < 6; ++b) {
    mpz_class r = b * b - D;
    if (mod_floor(b - D, 2) != 0 || r % 12 != 0) continue;
    IdealRep p(D, 3, b);
    if (p.contains(gen)) return {p, p.conj()};
  }
  throw LogicError("prime_above_3_split: no prime found");
}

QuadElem ideal_power_generator(const IdealRep& p, unsigned h) {
  const std::int64_t D = p.discriminant();
  if (D >= 0) throw DomainError("ideal_power_generator: imaginary fields only");
  const ScaledIdeal P = ideal_pow(p, h);
  const mpz_class& n = P.primitive.norm();
  // Gauss reduction of (a, b, c) = (n, b, (b^2 - D) / 4n), tracking the substitution matrix.
  mpz_class a = n, b = P.primitive.b();
  mpz_class c = exact_div(b * b - D, 4 * n);
  mpz_class m00 = 1, m01 = 0, m10 = 0, m11 = 1;
  while (true) {
    // translate so that -a < b <= a
    mpz_class k;
    mpz_class num = a - b, den = 2 * a;
    mpz_fdiv_q(k.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (k != 0) {
      c = a * k * k + b * k + c;
      b = b + 2 * a * k;
      m01 += k * m00;
      m11 += k * m10;
    }
    if (a > c || (a == c && b < 0)) {
      std::swap(a, c);
      b = -b;
      mpz_class t0 = m00, t1 = m10;
      m00 = m01;
      m10 = m11;
      m01 = -t0;
      m11 = -t1;
      continue;
    }
    break;
  }
  if (a != 1) throw LogicError("ideal_power_generator: ideal power is not principal");
  // alpha = scale * (x n + y (b0 + sqrt(D)) / 2) with (x, y) the first column.
  const QuadElem basis2 = P.primitive.second_basis();
  const std::int64_t m = radicand_of(D);
  QuadElem alpha = QuadElem::rational(m, P.scale * m00 * n) + QuadElem::rational(m, P.scale * m10) * basis2;
  if (alpha.trace() < 0 || (alpha.trace() == 0 && alpha.twice_b() < 0)) alpha = -alpha;
  mpz_class expected_norm = P.scale * P.scale * n;
  if (alpha.norm() != expected_norm) throw LogicError("ideal_power_generator: wrong generator norm");
  return alpha;
}

std::optional<QuadElem> is_cube(const QuadElem& x) {
  const std::int64_t m = x.radicand();
  if (m >= 0) throw DomainError("is_cube: imaginary fields only");
  if (x.is_zero()) return x;
  const mpz_class N = x.norm();
  mpz_class k;
  if (mpz_root(k.get_mpz_t(), N.get_mpz_t(), 3) == 0) return std::nullopt;
  const mpz_class abs_m = -m;
  mpz_class bmax2 = 4 * k / abs_m;  // B^2 <= 4k / |m|
  mpz_class bmax;
  mpz_sqrt(bmax.get_mpz_t(), bmax2.get_mpz_t());
  const bool m1mod4 = mod_floor(m, 4) == 1;
  for (mpz_class B = -bmax; B <= bmax; ++B) {
    mpz_class A2 = 4 * k - abs_m * B * B;
    if (A2 < 0 || mpz_perfect_square_p(A2.get_mpz_t()) == 0) continue;
    mpz_class A;
    mpz_sqrt(A.get_mpz_t(), A2.get_mpz_t());
    if (odd(A) != odd(B) || (odd(A) && !m1mod4)) continue;
    for (int sign : {1, -1}) {
      QuadElem beta(m, sign * A, B, true);
      if (beta.pow(3) == x) return beta;
      if (A == 0) break;
    }
  }
  return std::nullopt;
}

}  // namespace lambda3
