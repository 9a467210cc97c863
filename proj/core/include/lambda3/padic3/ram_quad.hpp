#pragma once

#include <cstdint>

#include "lambda3/padic3/z3.hpp"
#include "lambda3/quadfield/quad_elem.hpp"

namespace lambda3 {

/// x + y sqrt(m) in Q3(sqrt(m)) with v3(m) == 1, so sqrt(m) is a uniformizer.
///
/// Valuations are normalized with v(3) = 2 and v(sqrt(m)) = 1. The element is
/// known modulo sqrt(m)^pi_precision() with pi_precision = min(2 px, 2 py + 1).
class RamQuadLocal {
 public:
  RamQuadLocal(std::int64_t m, Z3Approx x, Z3Approx y);
  /// Image of a global element of Q(sqrt(m)) with integral 3-adic coordinates.
  static RamQuadLocal from_quad(const QuadElem& e, int prec);
  static RamQuadLocal one(std::int64_t m, int prec);

  std::int64_t radicand() const { return m_; }
  const Z3Approx& x() const { return x_; }
  const Z3Approx& y() const { return y_; }
  int pi_precision() const;
  /// Valuation capped at pi_precision().
  int valuation() const;
  bool is_unit() const { return valuation() == 0; }
  Z3Approx norm() const;
  RamQuadLocal conj() const { return {m_, x_, -y_}; }

  RamQuadLocal pow(unsigned e) const;

  friend RamQuadLocal operator+(const RamQuadLocal& a, const RamQuadLocal& b);
  friend RamQuadLocal operator-(const RamQuadLocal& a, const RamQuadLocal& b);
  friend RamQuadLocal operator*(const RamQuadLocal& a, const RamQuadLocal& b);

 private:
  std::int64_t m_;
  Z3Approx x_;
  Z3Approx y_;
};

/// log(u) = log(u^6) / 6 for a unit of norm 1. The result is y' sqrt(m): its
/// x-part is checked to vanish. Certified to the pi-precision of u.
RamQuadLocal iwasawa_log_ramquad(const RamQuadLocal& u);

/// (log eps0) / sqrt(D) in Z3 for the unit eps0 of Q(sqrt(m)), m = 3 d0,
/// D = disc(m). `prec` is the number of 3-adic digits of the answer.
Z3Approx log_ratio(const QuadElem& eps0, std::int64_t D, int prec = 24);

/// Residue of log_ratio mod 9.
int log_ratio_mod9(const QuadElem& eps0, std::int64_t D, int prec = 24);

}  // namespace lambda3
