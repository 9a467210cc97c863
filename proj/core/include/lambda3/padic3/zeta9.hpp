#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <string>

#include <gmpxx.h>

#include "lambda3/padic3/z3.hpp"
#include "lambda3/quadfield/quad_elem.hpp"

namespace lambda3 {

/// A modulus pi^n with pi = 1 - zeta9 (v_pi(3) = 6).
struct PiPrecision {
  int n = 0;
  /// 3-adic digits of coefficient precision that cover pi^n.
  int coefficient_digits() const { return (n + 5) / 6; }
};

/// Element of Z3[zeta9] as c0 + c1 z + ... + c5 z^5 modulo Phi9 = z^6 + z^3 + 1,
/// known modulo pi^n. Coefficients are integer representatives reduced mod
/// 3^ceil(n/6).
class Zeta9Local {
 public:
  using Coeffs = std::array<mpz_class, 6>;

  Zeta9Local(Coeffs c, int pi_prec);
  static Zeta9Local from_int(const mpz_class& v, int pi_prec);
  static Zeta9Local from_z3(const Z3Approx& v);
  static Zeta9Local zeta(int pi_prec);
  /// zeta^k for any integer k.
  static Zeta9Local zeta_pow(std::int64_t k, int pi_prec);
  static Zeta9Local pi(int pi_prec);
  static Zeta9Local pi_pow(unsigned k, int pi_prec);

  const Coeffs& coeffs() const { return c_; }
  int pi_precision() const { return n_; }
  Zeta9Local with_precision(int n) const;

  /// Residue mod pi: sum of coefficients mod 3.
  int residue_mod_pi() const;
  bool is_unit() const { return n_ > 0 && residue_mod_pi() != 0; }
  /// Exact division by pi; requires residue 0, costs one digit of precision.
  Zeta9Local div_pi() const;
  /// First k digits in {0,1,2} of the pi-adic expansion, k <= precision.
  std::array<int, 16> pi_digits(int k) const;

  /// Galois action zeta -> zeta^a, gcd(a, 3) == 1.
  Zeta9Local sigma(int a) const;
  Zeta9Local pow(std::uint64_t e) const;
  Zeta9Local scale(const mpz_class& k) const;

  Zeta9Local operator-() const;
  friend Zeta9Local operator+(const Zeta9Local& x, const Zeta9Local& y);
  friend Zeta9Local operator-(const Zeta9Local& x, const Zeta9Local& y);
  friend Zeta9Local operator*(const Zeta9Local& x, const Zeta9Local& y);

  std::string to_string() const;

 private:
  Coeffs c_;
  int n_;
};

/// v_pi(z); PrecisionError if z vanishes to its full precision.
int pi_valuation(const Zeta9Local& z);
/// min(v_pi(z), precision of z).
int pi_valuation_capped(const Zeta9Local& z);
/// v_pi(x - y) >= n. Both operands must be known mod pi^n.
bool congruent_mod_pi(const Zeta9Local& x, const Zeta9Local& y, PiPrecision n);

/// True iff the unit u is a cube modulo pi^9.
bool is_cube_mod_pi9(const Zeta9Local& u);

/// Image of eps0 = (A + B sqrt(3 d0)) / 2 under sqrt(3 d0) -> (1 + 2 zeta3) r,
/// r the square root of -d0 congruent to `seed` mod 3 (d0 == 2 mod 3).
/// Precision: 6 * prec pi-digits.
Zeta9Local embed_split_eps(const QuadElem& eps0, int prec = 24, int seed = 1);

struct Lemma9Form {
  int sign = 1;               // +1 or -1
  int a = 0;                  // exponent of zeta9, 0..8
  std::array<int, 5> tail{};  // digits a5..a9 of the 1-unit part
};

/// Decomposes eps == sign zeta9^a (1 + a5 pi^5 + ... + a9 pi^9) (mod pi^10).
/// HypothesisError if eps * sigma_{-1}(eps) is not a cube mod pi^9, or if no
/// such decomposition exists.
Lemma9Form lemma9_normal_form(const Zeta9Local& eps);

/// (sign, a) with u^3 == sign zeta3^a (mod pi^11), or nullopt.
std::optional<std::pair<int, int>> cube_as_pm_zeta3_power(const Zeta9Local& u);

/// Iwasawa logarithm via log(u^18) / 18; IntegralityError when the quotient
/// is not integral. Certified to the precision of u (at least 4).
Zeta9Local iwasawa_log_zeta9(const Zeta9Local& u);

/// log(u^18), always integral; useful when log(u) itself is not.
Zeta9Local iwasawa_log18_zeta9(const Zeta9Local& u);

}  // namespace lambda3
