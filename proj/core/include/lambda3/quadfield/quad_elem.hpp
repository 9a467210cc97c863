#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace lambda3 {

/// An algebraic integer (a + b sqrt(m)) / 2^half of Q(sqrt(m)).
///
/// Stored internally as numerators (A, B) over the fixed denominator 2, so
/// that products need no case analysis. The representation is canonical:
/// A == B (mod 2), and A, B odd only when m == 1 (mod 4). Two values are
/// equal iff their coordinates are.
class QuadElem {
 public:
  /// The element (a + b sqrt(m)) / 2 if `half`, else a + b sqrt(m).
  /// Throws DomainError if the coordinates do not describe an algebraic integer.
  QuadElem(std::int64_t m, const mpz_class& a, const mpz_class& b, bool half = false);

  static QuadElem rational(std::int64_t m, const mpz_class& a) { return {m, a, 0}; }
  static QuadElem one(std::int64_t m) { return rational(m, 1); }

  std::int64_t radicand() const { return m_; }
  bool half() const { return mpz_odd_p(num_a_.get_mpz_t()) != 0; }
  /// Coordinates in the (a + b sqrt(m)) / 2^half view.
  mpz_class a() const;
  mpz_class b() const;
  /// Coordinates over the denominator 2: x = (A + B sqrt(m)) / 2.
  const mpz_class& twice_a() const { return num_a_; }
  const mpz_class& twice_b() const { return num_b_; }

  QuadElem conj() const;
  mpz_class trace() const { return num_a_; }
  mpz_class norm() const;
  bool is_zero() const { return num_a_ == 0 && num_b_ == 0; }
  bool is_unit() const;

  QuadElem pow(unsigned e) const;

  QuadElem operator-() const;
  friend QuadElem operator+(const QuadElem& x, const QuadElem& y);
  friend QuadElem operator-(const QuadElem& x, const QuadElem& y);
  friend QuadElem operator*(const QuadElem& x, const QuadElem& y);
  friend bool operator==(const QuadElem& x, const QuadElem& y) = default;

  /// Canonical text form: "(a+b*sqrt(m))/2" or "a+b*sqrt(m)", with unit
  /// coefficients and zero parts elided, e.g. "(1+sqrt(-35))/2", "2+sqrt(3)".
  std::string to_string() const;

  /// Sign of the real number a + b sqrt(m) for m > 0.
  int real_sign() const;

 private:
  struct Raw {};
  QuadElem(Raw, std::int64_t m, mpz_class A, mpz_class B);

  std::int64_t m_;
  mpz_class num_a_;
  mpz_class num_b_;
};

std::ostream& operator<<(std::ostream& os, const QuadElem& x);

}  // namespace lambda3
