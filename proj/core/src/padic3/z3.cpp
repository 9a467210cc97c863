#include "lambda3/padic3/z3.hpp"

#include <algorithm>
#include <sstream>

#include "lambda3/errors.hpp"
#include "lambda3/quadfield/integer.hpp"

namespace lambda3 {

namespace {

mpz_class inverse_mod(const mpz_class& a, const mpz_class& mod) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t()) == 0) {
    throw DomainError("Z3Approx: inverse of a non-unit");
  }
  return r;
}

int floor_log3(std::int64_t k) {
  int r = 0;
  while (k >= 3) {
    k /= 3;
    ++r;
  }
  return r;
}

mpz_class log1p_mod(const mpz_class& x, int K) {
  const int vx = v3(x, K + 1);
  if (vx < 1) throw DomainError("log1p: argument not divisible by 3");
  if (x == 0 || vx > K) return 0;
  // Terms x^k / k have valuation >= k vx - floor(log3 k), which only grows.
  std::int64_t kmax = 1;
  while ((kmax + 1) * vx - floor_log3(kmax + 1) < K) ++kmax;
  const int guard = floor_log3(kmax);
  const mpz_class& work = pow3(K + guard);
  const mpz_class& out = pow3(K);
  mpz_class sum = 0;
  mpz_class xk = 1;
  for (std::int64_t k = 1; k <= kmax; ++k) {
    xk = mod_floor(xk * x, work);
    std::int64_t unit = k;
    int j = 0;
    while (unit % 3 == 0) {
      unit /= 3;
      ++j;
    }
    mpz_class term;
    mpz_divexact(term.get_mpz_t(), xk.get_mpz_t(), pow3(j).get_mpz_t());
    term *= inverse_mod(unit, out);
    if (k % 2 == 0) term = -term;
    sum += term;
  }
  return mod_floor(sum, out);
}

}  // namespace

Z3Approx::Z3Approx(const mpz_class& value, int prec) : prec_(prec) {
  if (prec < 0) throw DomainError("Z3Approx: negative precision");
  value_ = mod_floor(value, pow3(prec));
}

int Z3Approx::valuation() const { return v3(value_, prec_); }

mpz_class Z3Approx::residue(int j) const {
  if (j > prec_) throw PrecisionError("Z3Approx: residue mod 3^" + std::to_string(j) + " requested at precision " + std::to_string(prec_));
  return mod_floor(value_, pow3(j));
}

Z3Approx Z3Approx::truncate(int j) const { return {residue(j), j}; }

bool Z3Approx::congruent(const Z3Approx& y, int j) const { return residue(j) == y.residue(j); }

Z3Approx Z3Approx::div3() const {
  if (prec_ == 0) throw PrecisionError("Z3Approx: division by 3 at precision 0");
  if (mpz_divisible_ui_p(value_.get_mpz_t(), 3) == 0) throw IntegralityError("Z3Approx: division of a unit by 3");
  mpz_class q;
  mpz_divexact_ui(q.get_mpz_t(), value_.get_mpz_t(), 3);
  return {q, prec_ - 1};
}

Z3Approx Z3Approx::mul_exact(const mpz_class& n) const {
  if (n == 0) return {0, prec_};
  int p = prec_ + v3(n);
  return {value_ * n, p};
}

Z3Approx Z3Approx::inverse() const {
  if (!is_unit()) throw DomainError("Z3Approx: inverse of a non-unit");
  return {inverse_mod(value_, pow3(prec_)), prec_};
}

Z3Approx Z3Approx::operator-() const { return {-value_, prec_}; }

Z3Approx operator+(const Z3Approx& x, const Z3Approx& y) { return {x.value_ + y.value_, std::min(x.prec_, y.prec_)}; }
Z3Approx operator-(const Z3Approx& x, const Z3Approx& y) { return {x.value_ - y.value_, std::min(x.prec_, y.prec_)}; }

Z3Approx operator*(const Z3Approx& x, const Z3Approx& y) {
  // An error 3^px in x contributes 3^(px + v(y)).
  int p = std::min(x.prec_ + y.valuation(), y.prec_ + x.valuation());
  return {x.value_ * y.value_, p};
}

std::string Z3Approx::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Z3Approx& x) {
  return os << x.value().get_str() << " + O(3^" << x.prec() << ")";
}

Z3Approx hensel_sqrt(const Z3Approx& a, int seed) {
  if (a.prec() < 1) throw PrecisionError("hensel_sqrt: no digits known");
  const int s = static_cast<int>(mod_floor(seed, 3));
  if (s == 0 || a.residue(1) != 1) throw NoRootError("hensel_sqrt: not a unit square with the given seed");
  const mpz_class& mod = pow3(a.prec());
  mpz_class r = s;
  for (int known = 1; known < a.prec(); known *= 2) {
    mpz_class f = r * r - a.value();
    r = mod_floor(r - f * inverse_mod(2 * r, mod), mod);
  }
  return {r, a.prec()};
}

Z3Approx iwasawa_log_q3(const Z3Approx& u) {
  if (!u.is_unit()) throw DomainError("iwasawa_log_q3: argument must be a unit");
  const int K = u.prec();
  // log(u) = log(u^2) / 2; u^2 is a 1-unit, so the series converges.
  const mpz_class x = u.value() * u.value() - 1;
  const mpz_class l = log1p_mod(x, K);
  mpz_class half = inverse_mod(2, pow3(K));
  return {l * half, K};
}

}  // namespace lambda3
