#include "lambda3/quadfield/integer.hpp"

#include <cmath>
#include <deque>
#include <mutex>
#include <tuple>

#include "lambda3/errors.hpp"

namespace lambda3 {

SquarefreeCore squarefree_core(std::int64_t d) {
  if (d < 1) throw DomainError("squarefree_core: d must be positive");
  std::int64_t core = d;
  std::int64_t s = 1;
  for (std::int64_t p = 2; p * p <= core; ++p) {
    while (core % (p * p) == 0) {
      core /= p * p;
      s *= p;
    }
  }
  return {core, s};
}

bool is_squarefree(std::int64_t n) {
  if (n == 0) return false;
  std::int64_t a = n < 0 ? -n : n;
  return squarefree_core(a).square == 1;
}

std::int64_t field_discriminant(std::int64_t m) {
  if (m == 0 || m == 1 || !is_squarefree(m)) {
    throw DomainError("field_discriminant: radicand must be squarefree and not 0 or 1");
  }
  return mod_floor(m, 4) == 1 ? m : 4 * m;
}

bool is_fundamental_discriminant(std::int64_t D) {
  if (D == 0 || D == 1) return false;
  if (mod_floor(D, 4) == 1) return is_squarefree(D);
  if (mod_floor(D, 4) != 0) return false;
  std::int64_t m = D / 4;
  std::int64_t r = mod_floor(m, 4);
  return (r == 2 || r == 3) && is_squarefree(m);
}

std::int64_t radicand_of(std::int64_t D) {
  if (!is_fundamental_discriminant(D)) throw DomainError("not a fundamental discriminant");
  return mod_floor(D, 4) == 1 ? D : D / 4;
}

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw DomainError("isqrt of negative");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

int jacobi(std::int64_t a, std::int64_t n) {
  a = mod_floor(a, n);
  int t = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      std::int64_t r = n % 8;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

int kronecker(std::int64_t D, std::int64_t n) {
  if (n < 1) throw DomainError("kronecker: n must be positive");
  int result = 1;
  while (n % 2 == 0) {
    n /= 2;
    std::int64_t r = mod_floor(D, 8);
    if (r % 2 == 0) return 0;
    if (r == 3 || r == 5) result = -result;
  }
  return n == 1 ? result : result * jacobi(D, n);
}

int v3(const mpz_class& x, int cap) {
  if (x == 0) return cap;
  mpz_class t = x;
  int v = 0;
  while (v < cap && mpz_divisible_ui_p(t.get_mpz_t(), 3)) {
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), 3);
    ++v;
  }
  return v;
}

const mpz_class& pow3(int k) {
  static const std::vector<mpz_class> table = [] {
    std::vector<mpz_class> t(1024);
    t[0] = 1;
    for (std::size_t i = 1; i < t.size(); ++i) t[i] = t[i - 1] * 3;
    return t;
  }();
  if (k < 0) throw DomainError("pow3: negative exponent");
  if (static_cast<std::size_t>(k) < table.size()) return table[k];
  // Rare: beyond the cached range. Intern so the reference stays valid.
  static std::mutex mu;
  static std::deque<std::pair<int, mpz_class>> extra;
  std::lock_guard lock(mu);
  for (auto& [e, v] : extra) {
    if (e == k) return v;
  }
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), 3, static_cast<unsigned long>(k));
  extra.emplace_back(k, v);
  return extra.back().second;
}

mpz_class mod_floor(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::int64_t xgcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    std::int64_t q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
    std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
  return a;
}

}  // namespace lambda3
