#include "lambda3/padic3/zeta9.hpp"

#include <algorithm>
#include <sstream>

#include "lambda3/errors.hpp"
#include "lambda3/padic3/cube_table.hpp"
#include "lambda3/quadfield/integer.hpp"

namespace lambda3 {

namespace {

using Coeffs = Zeta9Local::Coeffs;

int floor_log3(std::int64_t k) {
  int r = 0;
  for (; k >= 3; k /= 3) ++r;
  return r;
}

int digits_for(int pi_prec) { return pi_prec <= 0 ? 0 : (pi_prec + 5) / 6; }

mpz_class inv_mod(const mpz_class& a, const mpz_class& mod) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t()) == 0) throw LogicError("inverse of a non-unit");
  return r;
}

// Exact product in Z[z] / Phi9.
Coeffs mul_exact(const Coeffs& x, const Coeffs& y) {
  std::array<mpz_class, 11> t;
  for (int i = 0; i < 6; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < 6; ++j) t[i + j] += x[i] * y[j];
  }
  for (int k = 10; k >= 6; --k) {  // z^6 = -z^3 - 1
    t[k - 3] -= t[k];
    t[k - 6] -= t[k];
  }
  return {t[0], t[1], t[2], t[3], t[4], t[5]};
}

Coeffs reduce(Coeffs c, const mpz_class& mod) {
  for (auto& x : c) x = mod_floor(x, mod);
  return c;
}

Coeffs basis_power(std::int64_t k) {
  Coeffs c;
  const auto e = static_cast<int>(mod_floor(k, 9));
  if (e < 6) {
    c[e] = 1;
  } else {
    c[e - 3] = -1;
    c[e - 6] = -1;
  }
  return c;
}

// c = prod_{a in {2,4,5,7,8}} (1 - z^a), so that pi * c = 3.
const Coeffs& pi_cofactor() {
  static const Coeffs c = [] {
    Coeffs acc;
    acc[0] = 1;
    for (int a : {2, 4, 5, 7, 8}) {
      Coeffs f = basis_power(a);
      for (auto& x : f) x = -x;
      f[0] += 1;
      acc = mul_exact(acc, f);
    }
    return acc;
  }();
  return c;
}

int residue_of(const Coeffs& c) {
  mpz_class s = c[0] + c[1] + c[2] + c[3] + c[4] + c[5];
  return static_cast<int>(mod_floor(s, 3).get_si());
}

// z / pi for z with residue 0.
Coeffs div_pi_exact(const Coeffs& z) {
  Coeffs q = mul_exact(z, pi_cofactor());
  for (auto& x : q) mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), 3);
  return q;
}

}  // namespace

Zeta9Local::Zeta9Local(Coeffs c, int pi_prec) : c_(std::move(c)), n_(pi_prec) {
  if (pi_prec < 0) throw DomainError("Zeta9Local: negative precision");
  c_ = reduce(c_, pow3(digits_for(n_)));
}

Zeta9Local Zeta9Local::from_int(const mpz_class& v, int pi_prec) {
  Coeffs c;
  c[0] = v;
  return {c, pi_prec};
}

Zeta9Local Zeta9Local::from_z3(const Z3Approx& v) { return from_int(v.value(), 6 * v.prec()); }

Zeta9Local Zeta9Local::zeta(int pi_prec) { return zeta_pow(1, pi_prec); }

Zeta9Local Zeta9Local::zeta_pow(std::int64_t k, int pi_prec) { return {basis_power(k), pi_prec}; }

Zeta9Local Zeta9Local::pi(int pi_prec) {
  Coeffs c;
  c[0] = 1;
  c[1] = -1;
  return {c, pi_prec};
}

Zeta9Local Zeta9Local::pi_pow(unsigned k, int pi_prec) {
  Coeffs acc;
  acc[0] = 1;
  const Coeffs p = pi(pi_prec).c_;
  for (unsigned i = 0; i < k; ++i) acc = mul_exact(acc, p);
  return {acc, pi_prec};
}

Zeta9Local Zeta9Local::with_precision(int n) const {
  if (n > n_) throw PrecisionError("Zeta9Local: precision pi^" + std::to_string(n) + " requested, have pi^" + std::to_string(n_));
  return {c_, n};
}

int Zeta9Local::residue_mod_pi() const {
  if (n_ < 1) throw PrecisionError("Zeta9Local: residue of an element known to no digits");
  return residue_of(c_);
}

Zeta9Local Zeta9Local::div_pi() const {
  if (residue_mod_pi() != 0) throw DomainError("Zeta9Local: division of a unit by pi");
  return {div_pi_exact(c_), n_ - 1};
}

std::array<int, 16> Zeta9Local::pi_digits(int k) const {
  if (k > 16 || k > n_) throw PrecisionError("Zeta9Local: pi-digits beyond precision");
  std::array<int, 16> d{};
  Coeffs z = c_;
  for (int i = 0; i < k; ++i) {
    d[i] = residue_of(z);
    z[0] -= d[i];
    if (i + 1 < k) z = div_pi_exact(z);
  }
  return d;
}

Zeta9Local Zeta9Local::sigma(int a) const {
  if (mod_floor(a, 3) == 0) throw DomainError("Zeta9Local: sigma_a needs gcd(a, 3) = 1");
  Coeffs r;
  for (int i = 0; i < 6; ++i) {
    const Coeffs b = basis_power(static_cast<std::int64_t>(a) * i);
    for (int j = 0; j < 6; ++j) r[j] += c_[i] * b[j];
  }
  return {r, n_};
}

Zeta9Local Zeta9Local::pow(std::uint64_t e) const {
  Zeta9Local result = from_int(1, n_);
  Zeta9Local base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

Zeta9Local Zeta9Local::scale(const mpz_class& k) const {
  Coeffs r = c_;
  for (auto& x : r) x *= k;
  return {r, k == 0 ? n_ : n_ + 6 * v3(k)};
}

Zeta9Local Zeta9Local::operator-() const {
  Coeffs r = c_;
  for (auto& x : r) x = -x;
  return {r, n_};
}

Zeta9Local operator+(const Zeta9Local& x, const Zeta9Local& y) {
  Coeffs r;
  for (int i = 0; i < 6; ++i) r[i] = x.c_[i] + y.c_[i];
  return {r, std::min(x.n_, y.n_)};
}

Zeta9Local operator-(const Zeta9Local& x, const Zeta9Local& y) {
  Coeffs r;
  for (int i = 0; i < 6; ++i) r[i] = x.c_[i] - y.c_[i];
  return {r, std::min(x.n_, y.n_)};
}

Zeta9Local operator*(const Zeta9Local& x, const Zeta9Local& y) {
  // An error pi^nx in x contributes pi^(nx + v(y)).
  const int vx = (x.n_ > 0 && x.residue_mod_pi() != 0) ? 0 : pi_valuation_capped(x);
  const int vy = (y.n_ > 0 && y.residue_mod_pi() != 0) ? 0 : pi_valuation_capped(y);
  return {mul_exact(x.c_, y.c_), std::min(x.n_ + vy, y.n_ + vx)};
}

std::string Zeta9Local::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 6; ++i) os << (i ? ", " : "") << c_[i].get_str();
  os << "] + O(pi^" << n_ << ")";
  return os.str();
}

int pi_valuation_capped(const Zeta9Local& z) {
  const int n = z.pi_precision();
  Coeffs c = z.coeffs();
  int j = v3(c[0], n);
  for (int i = 1; i < 6; ++i) j = std::min(j, v3(c[i], n));
  if (6 * j >= n) return n;
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), pow3(j).get_mpz_t());
  int v = 6 * j;
  while (v < n && residue_of(c) == 0) {
    c = div_pi_exact(c);
    ++v;
  }
  return std::min(v, n);
}

int pi_valuation(const Zeta9Local& z) {
  const int v = pi_valuation_capped(z);
  if (v >= z.pi_precision()) {
    throw PrecisionError("pi_valuation: element vanishes to its precision pi^" + std::to_string(z.pi_precision()));
  }
  return v;
}

bool congruent_mod_pi(const Zeta9Local& x, const Zeta9Local& y, PiPrecision n) {
  const Zeta9Local diff = x.with_precision(n.n) - y.with_precision(n.n);
  return pi_valuation_capped(diff) >= n.n;
}

bool is_cube_mod_pi9(const Zeta9Local& u) {
  if (u.pi_precision() < 9) throw PrecisionError("is_cube_mod_pi9: need precision pi^9");
  if (!u.is_unit()) throw DomainError("is_cube_mod_pi9: argument must be a unit");
  return CubeTable::instance().contains(pi9_key(u));
}

Zeta9Local embed_split_eps(const QuadElem& eps0, int prec, int seed) {
  const std::int64_t m = eps0.radicand();
  if (m % 3 != 0 || mod_floor(m / 3, 3) != 2) {
    throw DomainError("embed_split_eps: need the unit of Q(sqrt(3 d0)) with d0 == 2 (mod 3)");
  }
  const std::int64_t d0 = m / 3;
  const Z3Approx r = hensel_sqrt(Z3Approx(-d0, prec), seed);
  const mpz_class& mod = pow3(prec);
  const mpz_class half = inv_mod(2, mod);
  const mpz_class Br = eps0.twice_b() * r.value();
  Coeffs c;
  c[0] = (eps0.twice_a() + Br) * half;
  c[3] = Br;
  return {c, 6 * prec};
}

Lemma9Form lemma9_normal_form(const Zeta9Local& eps) {
  if (eps.pi_precision() < 10) throw PrecisionError("lemma9_normal_form: need precision pi^10");
  if (!eps.is_unit()) throw DomainError("lemma9_normal_form: argument must be a unit");
  if (!is_cube_mod_pi9(eps * eps.sigma(-1))) {
    throw HypothesisError("lemma9_normal_form: eps * sigma_-1(eps) is not a cube mod pi^9");
  }
  const Zeta9Local one = Zeta9Local::from_int(1, 10);
  for (int sign : {1, -1}) {
    for (int a = 0; a < 9; ++a) {
      const Zeta9Local w = (eps * Zeta9Local::zeta_pow(-a, 10)).scale(sign).with_precision(10);
      if (!congruent_mod_pi(w, one, {5})) continue;
      Lemma9Form f;
      f.sign = sign;
      f.a = a;
      const auto d = (w - one).pi_digits(10);
      for (int i = 0; i < 5; ++i) f.tail[i] = d[5 + i];
      return f;
    }
  }
  throw HypothesisError("lemma9_normal_form: eps is not +-zeta^a mod pi^5");
}

std::optional<std::pair<int, int>> cube_as_pm_zeta3_power(const Zeta9Local& u) {
  const Zeta9Local c = u.with_precision(11).pow(3);
  for (int sign : {1, -1}) {
    for (int a = 0; a < 3; ++a) {
      if (congruent_mod_pi(c, Zeta9Local::zeta_pow(3 * a, 11).scale(sign), {11})) return std::pair{sign, a};
    }
  }
  return std::nullopt;
}

Zeta9Local iwasawa_log18_zeta9(const Zeta9Local& u) {
  const int N = u.pi_precision();
  if (N < 4) throw PrecisionError("iwasawa_log_zeta9: need precision pi^4");
  if (!u.is_unit()) throw DomainError("iwasawa_log_zeta9: argument must be a unit");
  const int W = N + 12;
  // z = u^18 - 1 has v(z) >= 9; terms z^k / k have v >= 9k - 6 floor(log3 k).
  std::int64_t kmax = 1;
  while (9 * (kmax + 1) - 6 * floor_log3(kmax + 1) < W) ++kmax;
  const int guard = floor_log3(kmax);
  const int E = digits_for(W) + guard;
  const mpz_class& mod = pow3(E);

  Coeffs base = reduce(u.coeffs(), mod);
  Coeffs p = base;
  for (int i = 0; i < 4; ++i) p = reduce(mul_exact(p, p), mod);  // u^16
  p = reduce(mul_exact(p, reduce(mul_exact(base, base), mod)), mod);  // u^18
  p[0] -= 1;
  const Coeffs z = reduce(p, mod);
  if (pi_valuation_capped(Zeta9Local(z, 6 * E)) < 9) throw LogicError("iwasawa_log_zeta9: u^18 is not close to 1");

  const mpz_class& out = pow3(E - guard);
  Coeffs sum;
  Coeffs zk;
  zk[0] = 1;
  for (std::int64_t k = 1; k <= kmax; ++k) {
    zk = reduce(mul_exact(zk, z), mod);
    std::int64_t unit = k;
    int j = 0;
    for (; unit % 3 == 0; unit /= 3) ++j;
    mpz_class c = inv_mod(unit, out);
    if (k % 2 == 0) c = -c;
    for (int i = 0; i < 6; ++i) {
      mpz_class t;
      mpz_divexact(t.get_mpz_t(), zk[i].get_mpz_t(), pow3(j).get_mpz_t());
      sum[i] += t * c;
    }
  }
  return {reduce(sum, out), W};
}

Zeta9Local iwasawa_log_zeta9(const Zeta9Local& u) {
  const Zeta9Local l18 = iwasawa_log18_zeta9(u);
  Coeffs c = l18.coeffs();
  for (auto& x : c) {
    if (mpz_divisible_ui_p(x.get_mpz_t(), 9) == 0) throw IntegralityError("iwasawa_log_zeta9: log(u) is not integral");
    mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), 9);
  }
  const int n = l18.pi_precision() - 12;
  const mpz_class half = inv_mod(2, pow3(digits_for(n)));
  for (auto& x : c) x *= half;
  return {c, n};
}

}  // namespace lambda3
