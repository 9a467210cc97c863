#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lambda3/quadfield/quad_elem.hpp"

namespace lambda3 {

/// Element of K1 = Q(sqrt(m), theta) with theta = zeta9 + zeta9^-1,
/// theta^3 = 3 theta - 1, and m = 3 d0 the radicand of K0.
///
/// Coordinates are rational, indexed [i + 3 j] for theta^i sqrt(m)^j.
class K1Elem {
 public:
  using Coords = std::array<mpq_class, 6>;

  K1Elem(std::int64_t m, Coords coords);
  static K1Elem one(std::int64_t m);
  /// Embeds an element of K0 = Q(sqrt(m)).
  static K1Elem from_quad(const QuadElem& x);
  static K1Elem theta(std::int64_t m);

  std::int64_t radicand() const { return m_; }
  const Coords& coords() const { return c_; }
  const mpq_class& coord(int theta_power, int sqrt_power) const { return c_[theta_power + 3 * sqrt_power]; }

  /// tau: theta -> theta^2 - 2, sqrt(m) fixed.
  K1Elem tau() const;
  /// g: sqrt(m) -> -sqrt(m), theta fixed.
  K1Elem g() const;

  /// x * tau(x) * tau^2(x), an element of K0 (theta coordinates vanish).
  K1Elem relative_norm() const;
  /// Absolute norm to Q.
  mpq_class norm() const;
  /// Characteristic polynomial of multiplication by x, monic, low degree first.
  std::vector<mpq_class> charpoly() const;
  bool is_integral() const;
  bool is_unit() const;

  K1Elem pow(unsigned e) const;
  K1Elem inverse() const;

  friend K1Elem operator+(const K1Elem& x, const K1Elem& y);
  friend K1Elem operator-(const K1Elem& x, const K1Elem& y);
  friend K1Elem operator*(const K1Elem& x, const K1Elem& y);
  friend bool operator==(const K1Elem& x, const K1Elem& y);

  std::string to_string() const;

 private:
  std::int64_t m_;
  Coords c_;
};

enum class Theorem1Case { I, II };

/// Checks eps2^(1 - tau) == eps1 and eps2^(1 + tau + tau^2) == eps0 (case I)
/// or == 1 (case II) by exact coordinate equality. All inputs must be units.
bool verify_theorem1_relations(const QuadElem& eps0, const K1Elem& eps1, const K1Elem& eps2,
                               Theorem1Case which);

}  // namespace lambda3
