#pragma once

#include <ostream>
#include <string>

#include <gmpxx.h>

namespace lambda3 {

/// An element of Z3 known modulo 3^prec, stored as its residue in [0, 3^prec).
///
/// Ring operations return the smaller of the input precisions. Division by 3
/// costs one digit; multiplying by an exact integer n gains v3(n) digits.
/// Asking for a residue beyond the known precision raises PrecisionError.
class Z3Approx {
 public:
  Z3Approx() = default;
  Z3Approx(const mpz_class& value, int prec);

  const mpz_class& value() const { return value_; }
  int prec() const { return prec_; }

  /// v3 of the value, capped at prec (an approximate zero reports prec).
  int valuation() const;
  bool is_unit() const { return prec_ > 0 && valuation() == 0; }
  bool is_zero() const { return valuation() >= prec_; }

  /// Residue mod 3^j; requires j <= prec.
  mpz_class residue(int j) const;
  /// Same element with precision lowered to j <= prec.
  Z3Approx truncate(int j) const;
  /// True iff x == y (mod 3^j); both must be known to j digits.
  bool congruent(const Z3Approx& y, int j) const;

  /// x / 3 for x == 0 (mod 3); IntegralityError otherwise.
  Z3Approx div3() const;
  /// Product with an exact integer.
  Z3Approx mul_exact(const mpz_class& n) const;
  /// Inverse of a unit.
  Z3Approx inverse() const;

  Z3Approx operator-() const;
  friend Z3Approx operator+(const Z3Approx& x, const Z3Approx& y);
  friend Z3Approx operator-(const Z3Approx& x, const Z3Approx& y);
  friend Z3Approx operator*(const Z3Approx& x, const Z3Approx& y);
  friend bool operator==(const Z3Approx&, const Z3Approx&) = default;

  std::string to_string() const;

 private:
  mpz_class value_ = 0;
  int prec_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Z3Approx& x);

/// Square root r == seed (mod 3) of the unit a, to the precision of a.
/// NoRootError if a is not congruent to seed^2 mod 3 or seed is 0 mod 3.
Z3Approx hensel_sqrt(const Z3Approx& a, int seed = 1);

/// Iwasawa logarithm of a unit of Z3: (1/2) log(u^2), log(-1) = 0.
/// The result carries the precision of u.
Z3Approx iwasawa_log_q3(const Z3Approx& u);

}  // namespace lambda3
