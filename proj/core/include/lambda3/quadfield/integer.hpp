#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace lambda3 {

struct SquarefreeCore {
  std::int64_t core;    // squarefree part d0
  std::int64_t square;  // s with d = d0 * s^2
};

/// Factor d = d0 * s^2 with d0 squarefree. d >= 1.
SquarefreeCore squarefree_core(std::int64_t d);

bool is_squarefree(std::int64_t n);

/// Discriminant of Q(sqrt(m)) for squarefree m != 0, 1.
std::int64_t field_discriminant(std::int64_t m);

/// True for D = m (m squarefree, m == 1 mod 4, m != 1) or D = 4m (m squarefree, m == 2,3 mod 4).
bool is_fundamental_discriminant(std::int64_t D);

/// Squarefree radicand of the field with fundamental discriminant D.
std::int64_t radicand_of(std::int64_t D);

std::int64_t isqrt(std::int64_t n);

/// Kronecker symbol (D / n) for n >= 1.
int kronecker(std::int64_t D, std::int64_t n);

/// Jacobi symbol (a / n) for odd n >= 1.
int jacobi(std::int64_t a, std::int64_t n);

/// 3-adic valuation; v3(0) is reported as `cap`.
int v3(const mpz_class& x, int cap = 1 << 20);

/// 3^k, cached for small k.
const mpz_class& pow3(int k);

/// Non-negative remainder.
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

mpz_class mod_floor(const mpz_class& a, const mpz_class& m);

/// Extended gcd: returns g = gcd(a, b) >= 0 with x*a + y*b = g.
std::int64_t xgcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y);

}  // namespace lambda3
