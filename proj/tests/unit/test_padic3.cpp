#include <doctest.h>

#include <random>

#include "lambda3/errors.hpp"
#include "lambda3/padic3/cube_table.hpp"
#include "lambda3/padic3/ram_quad.hpp"
#include "lambda3/padic3/z3.hpp"
#include "lambda3/padic3/zeta9.hpp"
#include "lambda3/quadfield/integer.hpp"
#include "lambda3/quadfield/units.hpp"

using namespace lambda3;

namespace {

Z3Approx z3(long v, int prec) { return {mpz_class(v), prec}; }

Z3Approx random_unit(std::mt19937_64& rng, int prec) {
  std::uniform_int_distribution<unsigned long> u(0, ~0UL);
  mpz_class v = mpz_class(static_cast<unsigned long>(u(rng))) * mpz_class(static_cast<unsigned long>(u(rng)));
  v = mod_floor(v, pow3(prec));
  if (v % 3 == 0) v += 1;
  return {v, prec};
}

Zeta9Local random_zeta9_unit(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<long> c(0, 1000000);
  Zeta9Local::Coeffs co;
  for (auto& x : co) x = c(rng);
  Zeta9Local z(co, n);
  if (z.residue_mod_pi() == 0) z = z + Zeta9Local::from_int(1, n);
  return z;
}

bool same(const Zeta9Local& x, const Zeta9Local& y, int n) { return congruent_mod_pi(x, y, PiPrecision{n}); }

}  // namespace

TEST_CASE("z3: precision tracking") {
  const Z3Approx a = z3(5, 10), b = z3(7, 6);
  CHECK_EQ((a + b).prec(), 6);
  CHECK_EQ((a * b).prec(), 6);
  CHECK_EQ((a * z3(9, 4)).prec(), 4);
  CHECK_EQ(z3(9, 10).div3().prec(), 9);
  CHECK_EQ(z3(9, 10).div3().value(), 3);
  CHECK_EQ(a.mul_exact(27).prec(), 13);
  CHECK_THROWS_AS(a.div3(), IntegralityError);
  CHECK_THROWS_AS(b.residue(7), PrecisionError);
  CHECK_EQ(b.residue(2), 7);
  CHECK(z3(27, 3).is_zero());
  CHECK_EQ(z3(27, 5).valuation(), 3);
  CHECK_EQ(z3(-1, 3).value(), 26);
}

TEST_CASE("z3: ring laws and inverses") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const int p = 1 + static_cast<int>(rng() % 40);
    const Z3Approx x = random_unit(rng, p), y = random_unit(rng, p), z = random_unit(rng, p);
    CHECK(((x * y) * z).congruent(x * (y * z), p));
    CHECK((x * (y + z)).congruent(x * y + x * z, p));
    CHECK((x * x.inverse()).congruent(z3(1, p), p));
    CHECK((x - x).is_zero());
  }
}

TEST_CASE("z3: hensel square roots") {
  CHECK_EQ(hensel_sqrt(z3(-35, 3), 1).value(), 10);
  CHECK_EQ(hensel_sqrt(z3(-35, 3), 2).value(), 17);
  CHECK_THROWS_AS(hensel_sqrt(z3(2, 5)), NoRootError);
  CHECK_THROWS_AS(hensel_sqrt(z3(4, 5), 3), NoRootError);
  CHECK_EQ(hensel_sqrt(z3(4, 5), 2).value(), 2);
}

TEST_CASE("z3: hensel roots exhaustive") {
  for (int K = 1; K <= 8; ++K) {
    const long mod = pow3(K).get_si();
    for (long a = 1; a < mod; a += 3) {  // a == 1 mod 3: the unit squares
      for (int seed : {1, 2}) {
        const Z3Approx r = hensel_sqrt(z3(a, K), seed);
        REQUIRE(r.prec() == K);
        CHECK((r * r).congruent(z3(a, K), K));
        CHECK_EQ(r.residue(1), seed);
      }
    }
  }
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    const int K = 9 + static_cast<int>(rng() % 40);
    const Z3Approx w = random_unit(rng, K);
    const Z3Approx sq = w * w;
    const Z3Approx r = hensel_sqrt(sq, static_cast<int>(w.residue(1).get_si()));
    CHECK(r.congruent(w, K));
  }
}

TEST_CASE("z3: iwasawa log") {
  CHECK(iwasawa_log_q3(z3(1, 12)).is_zero());
  CHECK(iwasawa_log_q3(z3(-1, 12)).is_zero());
  CHECK_EQ(iwasawa_log_q3(z3(4, 3)).value(), 21);
  CHECK_EQ(iwasawa_log_q3(z3(4, 12)).prec(), 12);
  std::mt19937_64 rng(29);
  for (int i = 0; i < 200; ++i) {
    const int p = 2 + static_cast<int>(rng() % 30);
    const Z3Approx x = random_unit(rng, p), y = random_unit(rng, p);
    CHECK(iwasawa_log_q3(x * y).congruent(iwasawa_log_q3(x) + iwasawa_log_q3(y), p));
    CHECK(iwasawa_log_q3(x).congruent(iwasawa_log_q3(-x), p));
    // log of a 1-unit 1 + 3t has valuation >= 1
    CHECK(iwasawa_log_q3(x * x).valuation() >= 1);
  }
}

TEST_CASE("ram_quad: known ratios") {
  CHECK_EQ(log_ratio_mod9(fundamental_unit(field_discriminant(93)), field_discriminant(93)), 6);
  CHECK_EQ(log_ratio_mod9(fundamental_unit(field_discriminant(633)), field_discriminant(633)), 3);
  CHECK_EQ(log_ratio_mod9(fundamental_unit(field_discriminant(183)), field_discriminant(183)), 0);
  CHECK_EQ(log_ratio_mod9(fundamental_unit(24), 24), 3);
  CHECK_EQ(log_ratio_mod9(fundamental_unit(field_discriminant(105)), field_discriminant(105)), 0);
  CHECK_EQ(log_ratio(fundamental_unit(24), 24, 30).prec(), 30);
  CHECK_THROWS_AS(RamQuadLocal(5, z3(1, 5), z3(0, 5)), DomainError);
}

TEST_CASE("ram_quad: log functional equation on norm-one units") {
  std::mt19937_64 rng(31);
  for (std::int64_t m : {6L, 15L, 21L, 105L, 93L}) {
    for (int i = 0; i < 40; ++i) {
      const int p = 8 + static_cast<int>(rng() % 12);
      auto norm_one = [&] {
        const RamQuadLocal w(m, random_unit(rng, p), random_unit(rng, p));
        const RamQuadLocal w2 = w * w;
        const Z3Approx inv = w.norm().inverse();
        return RamQuadLocal(m, w2.x() * inv, w2.y() * inv);
      };
      const RamQuadLocal u = norm_one(), v = norm_one();
      CHECK(u.norm().congruent(z3(1, p), p));
      const RamQuadLocal lu = iwasawa_log_ramquad(u), lv = iwasawa_log_ramquad(v);
      const RamQuadLocal luv = iwasawa_log_ramquad(u * v);
      const int n = std::min(luv.pi_precision(), (lu + lv).pi_precision());
      CHECK(n >= 2 * p - 1);
      CHECK((luv - lu - lv).valuation() >= n);
      CHECK(lu.x().is_zero());
      CHECK((iwasawa_log_ramquad(u.conj()) + lu).valuation() >= lu.pi_precision());
    }
  }
}

TEST_CASE("ram_quad: log of eps powers is linear") {
  const QuadElem e = fundamental_unit(24);
  const Z3Approx l1 = log_ratio(e, 24, 20);
  for (unsigned k = 2; k <= 5; ++k) {
    CHECK(log_ratio(e.pow(k), 24, 20).congruent(l1.mul_exact(k), 20));
  }
}

TEST_CASE("zeta9: basic valuations") {
  const int n = 30;
  CHECK_EQ(pi_valuation(Zeta9Local::from_int(3, n)), 6);
  CHECK_EQ(pi_valuation(Zeta9Local::from_int(9, n)), 12);
  CHECK_EQ(pi_valuation(Zeta9Local::pi(n)), 1);
  CHECK_EQ(pi_valuation(Zeta9Local::pi_pow(7, n)), 7);
  const Zeta9Local sqrt_m3 = Zeta9Local::from_int(1, n) + Zeta9Local::zeta_pow(3, n).scale(2);
  CHECK_EQ(pi_valuation(sqrt_m3), 3);
  CHECK(same(sqrt_m3 * sqrt_m3, Zeta9Local::from_int(-3, n), n));
  CHECK(same(Zeta9Local::zeta_pow(9, n), Zeta9Local::from_int(1, n), n));
  CHECK(same(Zeta9Local::zeta_pow(-1, n) * Zeta9Local::zeta(n), Zeta9Local::from_int(1, n), n));
  CHECK_THROWS_AS(pi_valuation(Zeta9Local::from_int(0, n)), PrecisionError);
  CHECK_EQ(pi_valuation_capped(Zeta9Local::from_int(0, n)), n);
  CHECK_EQ(PiPrecision{13}.coefficient_digits(), 3);
}

TEST_CASE("zeta9: pi division and digits") {
  const int n = 24;
  const Zeta9Local p = Zeta9Local::pi(n);
  const Zeta9Local x = Zeta9Local::from_int(2, n) + p.pow(3) + p.pow(5).scale(2);
  const auto dg = x.pi_digits(8);
  CHECK_EQ(dg[0], 2);
  CHECK_EQ(dg[1], 0);
  CHECK_EQ(dg[3], 1);
  CHECK_EQ(dg[5], 2);
  CHECK_EQ(dg[7], 0);
  CHECK_THROWS(x.div_pi());
  CHECK(same((x - Zeta9Local::from_int(2, n)).div_pi() * p, x - Zeta9Local::from_int(2, n), n - 1));
  CHECK_EQ((x - Zeta9Local::from_int(2, n)).div_pi().pi_precision(), n - 1);
}

TEST_CASE("zeta9: galois action") {
  std::mt19937_64 rng(37);
  const int n = 30;
  for (int i = 0; i < 50; ++i) {
    const Zeta9Local x = random_zeta9_unit(rng, n), y = random_zeta9_unit(rng, n);
    for (int a : {2, 4, 5, 7, 8}) {
      CHECK(same((x * y).sigma(a), x.sigma(a) * y.sigma(a), n));
      CHECK(same((x + y).sigma(a), x.sigma(a) + y.sigma(a), n));
    }
    CHECK(same(x.sigma(4).sigma(4).sigma(4), x, n));
    CHECK(same(x.sigma(8).sigma(8), x, n));
    CHECK(same(x.sigma(1), x, n));
  }
}

TEST_CASE("zeta9: ring laws") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    const int n = 6 + static_cast<int>(rng() % 60);
    const Zeta9Local x = random_zeta9_unit(rng, n), y = random_zeta9_unit(rng, n), z = random_zeta9_unit(rng, n);
    CHECK(same((x * y) * z, x * (y * z), n));
    CHECK(same(x * (y + z), x * y + x * z, n));
    CHECK(same(x * y, y * x, n));
    CHECK(same(x.pow(5), x * x * x * x * x, n));
  }
}

TEST_CASE("zeta9: cube table") {
  const CubeTable& t = CubeTable::instance();
  CHECK_EQ(t.units_enumerated(), 13122u);
  CHECK_EQ(t.distinct_cubes(), 18u);
  const int n = 12;
  CHECK(is_cube_mod_pi9(Zeta9Local::from_int(1, n)));
  CHECK(is_cube_mod_pi9(Zeta9Local::from_int(-1, n)));
  CHECK(is_cube_mod_pi9(Zeta9Local::zeta_pow(3, n)));
  CHECK_FALSE(is_cube_mod_pi9(Zeta9Local::zeta(n)));
  CHECK_FALSE(is_cube_mod_pi9(Zeta9Local::from_int(1, n) + Zeta9Local::pi_pow(3, n).scale(2)));
  CHECK(is_cube_mod_pi9(Zeta9Local::from_int(1, n) + Zeta9Local::pi_pow(9, n)));
  std::mt19937_64 rng(43);
  for (int i = 0; i < 200; ++i) CHECK(is_cube_mod_pi9(random_zeta9_unit(rng, n).pow(3)));
}

TEST_CASE("zeta9: unit normal form mod pi^10") {
  const int n = 20;
  const Lemma9Form z = lemma9_normal_form(Zeta9Local::zeta(n));
  CHECK_EQ(z.sign, 1);
  CHECK_EQ(z.a, 1);
  CHECK_EQ(z.tail, std::array<int, 5>{0, 0, 0, 0, 0});

  const Zeta9Local one = Zeta9Local::from_int(1, n);
  const Zeta9Local eps = -Zeta9Local::zeta_pow(2, n) *
                         (one + Zeta9Local::pi_pow(6, n) + Zeta9Local::pi_pow(8, n).scale(2));
  const Lemma9Form f = lemma9_normal_form(eps);
  CHECK_EQ(f.sign, -1);
  CHECK_EQ(f.a, 2);
  CHECK_EQ(f.tail, std::array<int, 5>{0, 1, 0, 2, 0});

  const Zeta9Local bad = -Zeta9Local::zeta_pow(2, n) * (one + Zeta9Local::pi_pow(6, n));
  CHECK_THROWS_AS(lemma9_normal_form(bad), HypothesisError);
  CHECK_THROWS_AS(lemma9_normal_form(Zeta9Local::zeta(9)), PrecisionError);
}

TEST_CASE("zeta9: log functional equation") {
  std::mt19937_64 rng(47);
  const int n = 36;
  for (int i = 0; i < 60; ++i) {
    const Zeta9Local x = random_zeta9_unit(rng, n), y = random_zeta9_unit(rng, n);
    const Zeta9Local lx = iwasawa_log18_zeta9(x), ly = iwasawa_log18_zeta9(y);
    const Zeta9Local lxy = iwasawa_log18_zeta9(x * y);
    const int m = std::min({lx.pi_precision(), ly.pi_precision(), lxy.pi_precision()});
    CHECK(same(lxy, lx + ly, m));
    CHECK(same(iwasawa_log18_zeta9(x * Zeta9Local::zeta_pow(static_cast<long>(rng() % 9), n)), lx, m));
  }
  CHECK_EQ(pi_valuation_capped(iwasawa_log_zeta9(Zeta9Local::zeta(n))), iwasawa_log_zeta9(Zeta9Local::zeta(n)).pi_precision());
  CHECK_EQ(pi_valuation_capped(iwasawa_log_zeta9(Zeta9Local::from_int(-1, n))), iwasawa_log_zeta9(Zeta9Local::from_int(-1, n)).pi_precision());
  // log(1 + pi^k) has valuation k in the convergence region.
  for (unsigned k = 8; k <= 12; ++k) {
    CHECK_EQ(pi_valuation(iwasawa_log_zeta9(Zeta9Local::from_int(1, n) + Zeta9Local::pi_pow(k, n))), static_cast<int>(k));
  }
}

TEST_CASE("zeta9: split embedding of eps0") {
  // eps0 of Q(sqrt(6)) for d = 2; eps0 is a norm-one unit so its image is a unit.
  const Zeta9Local e = embed_split_eps(fundamental_unit(24), 10);
  CHECK_EQ(e.pi_precision(), 60);
  CHECK(e.is_unit());
  CHECK(same(e * embed_split_eps(fundamental_unit(24).conj(), 10), Zeta9Local::from_int(1, 60), 60));
  CHECK_THROWS_AS(embed_split_eps(fundamental_unit(field_discriminant(93)), 10), DomainError);
  // Both square roots of -d0 give conjugate embeddings.
  const Zeta9Local e2 = embed_split_eps(fundamental_unit(24), 10, 2);
  CHECK(same(e2, e.sigma(8), 60));
}

TEST_CASE("zeta9: eps0 cubes are plus-minus zeta3 powers for split d <= 500") {
  for (std::int64_t d = 2; d <= 500; d += 3) {
    if (!is_squarefree(d)) continue;
    const QuadElem e = fundamental_unit(field_discriminant(3 * d));
    const auto r = cube_as_pm_zeta3_power(embed_split_eps(e, 8));
    CHECK_MESSAGE(r.has_value(), "d=" << d);
  }
}
