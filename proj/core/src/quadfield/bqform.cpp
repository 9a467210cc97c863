#include "lambda3/quadfield/bqform.hpp"

#include <cstdlib>
#include <limits>

#include "lambda3/errors.hpp"
#include "lambda3/quadfield/integer.hpp"

namespace lambda3 {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw DomainError("BqForm: coefficient overflow");
  }
  return static_cast<std::int64_t>(v);
}

// c' = (b^2 - D) / 4a, exact.
std::int64_t third_coeff(std::int64_t a, std::int64_t b, std::int64_t D) {
  i128 num = static_cast<i128>(b) * b - D;
  i128 den = static_cast<i128>(4) * a;
  if (num % den != 0) throw LogicError("BqForm: inexact third coefficient");
  return narrow(num / den);
}

// x < sqrt(D) for non-square D > 0.
bool below_sqrt(std::int64_t x, std::int64_t D) { return x < 0 || static_cast<i128>(x) * x < D; }

}  // namespace

std::int64_t BqForm::discriminant() const { return narrow(static_cast<i128>(b) * b - static_cast<i128>(4) * a * c); }

std::ostream& operator<<(std::ostream& os, const BqForm& f) {
  return os << "(" << f.a << ", " << f.b << ", " << f.c << ")";
}

BqForm principal_form(std::int64_t D) {
  std::int64_t b = mod_floor(D, 2);
  return {1, b, (b - D) / 4};
}

bool is_reduced_definite(const BqForm& f) {
  std::int64_t ab = std::llabs(f.b);
  if (!(ab <= f.a && f.a <= f.c)) return false;
  if ((ab == f.a || f.a == f.c) && f.b < 0) return false;
  return true;
}

bool is_reduced_indefinite(const BqForm& f) {
  std::int64_t D = f.discriminant();
  if (D <= 0) return false;
  std::int64_t aa = 2 * std::llabs(f.a);
  // 0 < b < sqrt(D); sqrt(D) - b < 2|a|; 2|a| - b < sqrt(D). D is not a square.
  return f.b > 0 && below_sqrt(f.b, D) && !below_sqrt(aa + f.b, D) && below_sqrt(aa - f.b, D);
}

BqForm reduce_definite(BqForm f) {
  if (f.a <= 0) throw DomainError("reduce_definite: form must be positive definite");
  for (;;) {
    // normalize: -a < b <= a
    if (f.b <= -f.a || f.b > f.a) {
      std::int64_t two_a = 2 * f.a;
      std::int64_t r = mod_floor(f.b, two_a);
      if (r > f.a) r -= two_a;
      // b' = b + 2 a t, c' = a t^2 + b t + c
      i128 t = (static_cast<i128>(r) - f.b) / two_a;
      i128 c = static_cast<i128>(f.a) * t * t + static_cast<i128>(f.b) * t + f.c;
      f.b = r;
      f.c = narrow(c);
    }
    if (f.a > f.c) {
      std::swap(f.a, f.c);
      f.b = -f.b;
      continue;
    }
    if (f.a == f.c && f.b < 0) f.b = -f.b;
    return f;
  }
}

BqForm rho_indefinite(const BqForm& f) {
  std::int64_t D = f.discriminant();
  if (D <= 0) throw DomainError("rho_indefinite: discriminant must be positive");
  // (a, b, c) -> (c, b', (b'^2 - D)/4c) with b' == -b (mod 2|c|) normalized for |c|.
  std::int64_t ac = std::llabs(f.c);
  std::int64_t two_c = 2 * ac;
  std::int64_t nb = -f.b;
  std::int64_t bp;
  std::int64_t root = isqrt(D);
  if (below_sqrt(ac, D)) {
    // largest b' <= floor(sqrt D) with b' == -b (mod 2|c|); lies in (sqrt D - 2|c|, sqrt D)
    bp = root - mod_floor(root - nb, two_c);
  } else {
    // -|c| < b' <= |c|
    bp = mod_floor(nb, two_c);
    if (bp > ac) bp -= two_c;
  }
  return {f.c, bp, third_coeff(f.c, bp, D)};
}

BqForm reduce_indefinite(BqForm f) {
  std::int64_t D = f.discriminant();
  if (D <= 0) throw DomainError("reduce_indefinite: discriminant must be positive");
  // Normalize b first with respect to a, then iterate rho.
  {
    std::int64_t aa = std::llabs(f.a);
    std::int64_t two_a = 2 * aa;
    std::int64_t root = isqrt(D);
    std::int64_t bp;
    if (below_sqrt(aa, D)) {
      bp = root - mod_floor(root - f.b, two_a);
    } else {
      bp = mod_floor(f.b, two_a);
      if (bp > aa) bp -= two_a;
    }
    f = {f.a, bp, third_coeff(f.a, bp, D)};
  }
  for (int guard = 0; !is_reduced_indefinite(f); ++guard) {
    if (guard > 100000) throw LogicError("reduce_indefinite: no convergence");
    f = rho_indefinite(f);
  }
  return f;
}

BqForm compose(const BqForm& f, const BqForm& g) {
  std::int64_t D = f.discriminant();
  if (g.discriminant() != D) throw DomainError("compose: discriminants differ");
  // e = gcd(a1, a2, s), x a1 + y a2 + z s = e with s = (b1 + b2)/2.
  std::int64_t s = (f.b + g.b) / 2;
  std::int64_t u, v;
  std::int64_t g1 = xgcd(f.a, g.a, u, v);
  std::int64_t w, z;
  std::int64_t e = xgcd(g1, s, w, z);
  i128 x = static_cast<i128>(w) * u;
  i128 y = static_cast<i128>(w) * v;
  i128 A = static_cast<i128>(f.a) * g.a / (static_cast<i128>(e) * e);
  i128 twoA = 2 * A;
  // B = (x a1 b2 + y a2 b1 + z (b1 b2 + D)/2) / e  (mod 2A)
  i128 e128 = e;
  i128 modulus = twoA * e128;  // reduce numerator modulo 2A e before dividing by e
  auto mm = [&](i128 p, i128 q) { return ((p % modulus) * (q % modulus)) % modulus; };
  i128 t1 = mm(mm(x, f.a), g.b);
  i128 t2 = mm(mm(y, g.a), f.b);
  i128 half_term = (static_cast<i128>(f.b) * g.b + D) / 2;
  i128 t3 = mm(z, half_term);
  i128 num = ((t1 + t2 + t3) % modulus + modulus) % modulus;
  if (num % e128 != 0) throw LogicError("compose: inexact division");
  i128 B = num / e128;
  B %= twoA;
  if (B < 0) B += twoA;
  std::int64_t a3 = narrow(A);
  std::int64_t b3 = narrow(B);
  return {a3, b3, third_coeff(a3, b3, D)};
}

BqForm compose_reduced(const BqForm& f, const BqForm& g) {
  BqForm h = compose(f, g);
  return h.discriminant() < 0 ? reduce_definite(h) : reduce_indefinite(h);
}

}  // namespace lambda3
