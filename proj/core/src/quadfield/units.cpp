#include "lambda3/quadfield/units.hpp"

#include "lambda3/errors.hpp"
#include "lambda3/quadfield/integer.hpp"

namespace lambda3 {

namespace {

struct Expansion {
  std::int64_t P0;
  std::int64_t period;
  mpz_class q_last;  // q_{l-1}
  mpz_class q_prev;  // q_{l-2}
};

// Continued fraction of the reduced surd xi = (P0 + sqrt(D)) / 2, which is
// purely periodic. Complete quotients are (P + sqrt(D)) / Q.
Expansion expand(std::int64_t D) {
  if (D <= 0 || !is_fundamental_discriminant(D)) {
    throw DomainError("fundamental_unit: D must be a positive fundamental discriminant");
  }
  const std::int64_t root = isqrt(D);
  std::int64_t P0 = root;
  if (mod_floor(P0 - D, 2) != 0) --P0;
  if (P0 * P0 == D) --P0;  // unreachable for fundamental D; keeps P0 < sqrt(D)
  std::int64_t P = P0;
  std::int64_t Q = 2;
  mpz_class q_prev2 = 1;  // q_{-2}
  mpz_class q_prev1 = 0;  // q_{-1}
  std::int64_t l = 0;
  do {
    std::int64_t a = (P + root) / Q;
    mpz_class q = a * q_prev1 + q_prev2;
    q_prev2 = q_prev1;
    q_prev1 = q;
    P = a * Q - P;
    Q = (D - P * P) / Q;
    ++l;
  } while (P != P0 || Q != 2);
  return {P0, l, q_prev1, q_prev2};
}

}  // namespace

std::int64_t cf_period_length(std::int64_t D) { return expand(D).period; }

QuadElem fundamental_unit(std::int64_t D) {
  const Expansion e = expand(D);
  // eps = q_{l-1} xi + q_{l-2} = (A + B sqrt(D)) / 2
  mpz_class A = e.q_last * e.P0 + 2 * e.q_prev;
  mpz_class B = e.q_last;
  const std::int64_t m = radicand_of(D);
  if (D != m) B *= 2;  // sqrt(D) = 2 sqrt(m)
  QuadElem eps(m, A, B, true);
  const mpz_class n = eps.norm();
  const mpz_class expected = e.period % 2 == 0 ? 1 : -1;
  if (n != expected) throw LogicError("fundamental_unit: norm does not match period parity");
  if (D % 3 == 0 && n != 1) throw LogicError("fundamental_unit: norm -1 with 3 | D");
  return eps;
}

}  // namespace lambda3
