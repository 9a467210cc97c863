#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "lambda3/quadfield/quad_elem.hpp"

namespace lambda3 {

/// Primitive ideal n Z + ((b + sqrt(D)) / 2) Z of the maximal order of
/// discriminant D, in Hermite normal form: 4n | b^2 - D, 0 <= b < 2n.
class IdealRep {
 public:
  IdealRep(std::int64_t D, mpz_class n, mpz_class b);

  std::int64_t discriminant() const { return disc_; }
  const mpz_class& norm() const { return n_; }
  const mpz_class& b() const { return b_; }

  IdealRep conj() const { return {disc_, n_, -b_}; }
  /// Second basis vector as a field element.
  QuadElem second_basis() const;
  bool contains(const QuadElem& x) const;

  friend bool operator==(const IdealRep&, const IdealRep&) = default;
  std::string to_string() const;

 private:
  std::int64_t disc_;
  mpz_class n_;
  mpz_class b_;
};

/// A scaled ideal g * I with I primitive.
struct ScaledIdeal {
  mpz_class scale;
  IdealRep primitive;
  friend bool operator==(const ScaledIdeal&, const ScaledIdeal&) = default;
};

ScaledIdeal ideal_mul(const IdealRep& x, const IdealRep& y);
ScaledIdeal ideal_pow(const IdealRep& x, unsigned e);
/// The principal ideal (x), x a nonzero algebraic integer of Q(sqrt(m)).
ScaledIdeal principal_ideal(const QuadElem& x, std::int64_t D);

/// The primes above 3 of Q(sqrt(-d)) when -d == 1 (mod 3):
/// first = (3, c + sqrt(-d)) with the smallest c in {1, 2} such that c^2 == -d (mod 3), second its conjugate.
std::pair<IdealRep, IdealRep> prime_above_3_split(std::int64_t d);

/// Generator alpha of the principal ideal p^h, normalized to trace >= 0 (and b > 0 when trace is 0).
/// Throws LogicError if p^h is not principal.
QuadElem ideal_power_generator(const IdealRep& p, unsigned h);

/// beta with beta^3 == x in Q(sqrt(m)), m < 0, or nullopt.
std::optional<QuadElem> is_cube(const QuadElem& x);

}  // namespace lambda3
