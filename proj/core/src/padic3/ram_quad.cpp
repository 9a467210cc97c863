#include "lambda3/padic3/ram_quad.hpp"

#include <algorithm>

#include "lambda3/errors.hpp"
#include "lambda3/quadfield/integer.hpp"

namespace lambda3 {

namespace {

int floor_log3(std::int64_t k) {
  int r = 0;
  for (; k >= 3; k /= 3) ++r;
  return r;
}

mpz_class inv_mod(const mpz_class& a, const mpz_class& mod) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t()) == 0) throw LogicError("inverse of a non-unit");
  return r;
}

// x + y sqrt(m) with exact integer coordinates reduced mod a fixed 3^W.
struct Pair {
  mpz_class x, y;
};

Pair mul(const Pair& a, const Pair& b, std::int64_t m, const mpz_class& mod) {
  return {mod_floor(a.x * b.x + m * (a.y * b.y), mod), mod_floor(a.x * b.y + a.y * b.x, mod)};
}

int pair_valuation(const Pair& p, int cap) { return std::min({2 * v3(p.x, cap), 2 * v3(p.y, cap) + 1, cap}); }

}  // namespace

RamQuadLocal::RamQuadLocal(std::int64_t m, Z3Approx x, Z3Approx y) : m_(m), x_(std::move(x)), y_(std::move(y)) {
  if (v3(m) != 1) throw DomainError("RamQuadLocal: radicand must have 3-adic valuation 1");
}

RamQuadLocal RamQuadLocal::from_quad(const QuadElem& e, int prec) {
  const mpz_class half = inv_mod(2, pow3(prec));
  return {e.radicand(), Z3Approx(e.twice_a() * half, prec), Z3Approx(e.twice_b() * half, prec)};
}

RamQuadLocal RamQuadLocal::one(std::int64_t m, int prec) { return {m, Z3Approx(1, prec), Z3Approx(0, prec)}; }

int RamQuadLocal::pi_precision() const { return std::min(2 * x_.prec(), 2 * y_.prec() + 1); }

int RamQuadLocal::valuation() const {
  return std::min({2 * x_.valuation(), 2 * y_.valuation() + 1, pi_precision()});
}

Z3Approx RamQuadLocal::norm() const { return x_ * x_ - (y_ * y_).mul_exact(m_); }

RamQuadLocal RamQuadLocal::pow(unsigned e) const {
  RamQuadLocal result = one(m_, std::max(x_.prec(), y_.prec()));
  RamQuadLocal base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

static void same_field(const RamQuadLocal& a, const RamQuadLocal& b) {
  if (a.radicand() != b.radicand()) throw DomainError("RamQuadLocal: mixed radicands");
}

RamQuadLocal operator+(const RamQuadLocal& a, const RamQuadLocal& b) {
  same_field(a, b);
  return {a.m_, a.x_ + b.x_, a.y_ + b.y_};
}

RamQuadLocal operator-(const RamQuadLocal& a, const RamQuadLocal& b) {
  same_field(a, b);
  return {a.m_, a.x_ - b.x_, a.y_ - b.y_};
}

RamQuadLocal operator*(const RamQuadLocal& a, const RamQuadLocal& b) {
  same_field(a, b);
  return {a.m_, a.x_ * b.x_ + (a.y_ * b.y_).mul_exact(a.m_), a.x_ * b.y_ + a.y_ * b.x_};
}

RamQuadLocal iwasawa_log_ramquad(const RamQuadLocal& u) {
  const int N = u.pi_precision();
  if (N < 2) throw PrecisionError("iwasawa_log_ramquad: need pi-precision >= 2");
  if (!u.is_unit()) throw DomainError("iwasawa_log_ramquad: argument must be a unit");
  const Z3Approx nu = u.norm();
  if (!nu.congruent(Z3Approx(1, nu.prec()), nu.prec())) throw DomainError("iwasawa_log_ramquad: norm is not 1");
  const std::int64_t m = u.radicand();

  // log(u^6) is needed to pi-precision N + 2 (the final /3 costs two).
  const int target = N + 2;
  // z = u^6 - 1 has v(z) >= 3; terms z^k / k have v >= k v(z) - 2 floor(log3 k).
  std::int64_t kmax = 1;
  while ((kmax + 1) * 3 - 2 * floor_log3(kmax + 1) < target) ++kmax;
  const int guard = floor_log3(kmax);
  const int W = (target + 1) / 2 + guard;
  const mpz_class& mod = pow3(W);

  const Pair base{mod_floor(u.x().value(), mod), mod_floor(u.y().value(), mod)};
  Pair u2 = mul(base, base, m, mod);
  Pair u6 = mul(mul(u2, u2, m, mod), u2, m, mod);
  Pair z{mod_floor(u6.x - 1, mod), u6.y};
  const int vz = pair_valuation(z, 2 * W);
  if (vz < 3) throw LogicError("iwasawa_log_ramquad: u^6 is not close to 1");

  const mpz_class& out = pow3(W - guard);
  Pair sum{0, 0};
  Pair zk{1, 0};
  for (std::int64_t k = 1; k <= kmax; ++k) {
    zk = mul(zk, z, m, mod);
    std::int64_t unit = k;
    int j = 0;
    for (; unit % 3 == 0; unit /= 3) ++j;
    mpz_class tx, ty;
    mpz_divexact(tx.get_mpz_t(), zk.x.get_mpz_t(), pow3(j).get_mpz_t());
    mpz_divexact(ty.get_mpz_t(), zk.y.get_mpz_t(), pow3(j).get_mpz_t());
    mpz_class c = inv_mod(unit, out);
    if (k % 2 == 0) c = -c;
    sum.x += tx * c;
    sum.y += ty * c;
  }
  sum.x = mod_floor(sum.x, out);
  sum.y = mod_floor(sum.y, out);
  // divide by 6
  if (mpz_divisible_ui_p(sum.x.get_mpz_t(), 3) == 0 || mpz_divisible_ui_p(sum.y.get_mpz_t(), 3) == 0) {
    throw IntegralityError("iwasawa_log_ramquad: log(u^6) not divisible by 3");
  }
  mpz_divexact_ui(sum.x.get_mpz_t(), sum.x.get_mpz_t(), 3);
  mpz_divexact_ui(sum.y.get_mpz_t(), sum.y.get_mpz_t(), 3);
  const mpz_class half = inv_mod(2, out);
  Z3Approx x(sum.x * half, (N + 1) / 2);
  Z3Approx y(sum.y * half, N / 2);
  if (!x.is_zero()) throw LogicError("iwasawa_log_ramquad: log of a norm-1 unit has a rational part");
  return {m, x, y};
}

Z3Approx log_ratio(const QuadElem& eps0, std::int64_t D, int prec) {
  const std::int64_t m = radicand_of(D);
  if (eps0.radicand() != m || m % 3 != 0) throw DomainError("log_ratio: need eps0 in Q(sqrt(m)) with 3 | m");
  if (prec < 1) throw PrecisionError("log_ratio: precision must be positive");
  const RamQuadLocal u = RamQuadLocal::from_quad(eps0, prec);
  const RamQuadLocal l = iwasawa_log_ramquad(u);
  Z3Approx y = l.y().truncate(prec);
  if (D != m) y = y * Z3Approx(2, prec).inverse();  // sqrt(D) = 2 sqrt(m)
  return y;
}

int log_ratio_mod9(const QuadElem& eps0, std::int64_t D, int prec) {
  return static_cast<int>(log_ratio(eps0, D, prec).residue(2).get_si());
}

}  // namespace lambda3
