#include <doctest.h>

#include <algorithm>

#include "lambda3/criteria/criteria.hpp"
#include "lambda3/errors.hpp"
#include "lambda3/quadfield/integer.hpp"

using namespace lambda3;

namespace {

const CriterionVerdict* find(const LambdaReport& r, const std::string& id) {
  auto it = std::find_if(r.criteria_detail.begin(), r.criteria_detail.end(),
                         [&](const CriterionVerdict& v) { return v.id == id; });
  return it == r.criteria_detail.end() ? nullptr : &*it;
}

}  // namespace

TEST_CASE("criteria: classify") {
  CHECK_EQ(classify(2), CaseTag::Split);
  CHECK_EQ(classify(35), CaseTag::Split);
  CHECK_EQ(classify(31), CaseTag::Inert);
  CHECK_EQ(classify(244), CaseTag::Inert);
  CHECK_EQ(classify(21), CaseTag::Invalid);
  CHECK_EQ(classify(0), CaseTag::Invalid);
  CHECK_EQ(classify(-5), CaseTag::Invalid);
  CHECK_EQ(to_string(CaseTag::Split), "split");
  CHECK_EQ(to_string(Verdict::Inapplicable), "inapplicable");
}

TEST_CASE("criteria: inert examples") {
  const LambdaReport a = analyze(31);
  CHECK_EQ(a.h_plus, 1);
  CHECK_EQ(a.h_minus, 3);
  CHECK_EQ(a.log_eps_ratio_mod9, 6);
  CHECK_EQ(a.lambda_ge2, Verdict::No);
  CHECK_EQ(a.lambda_exact, 1);
  CHECK(a.consistency_ok);

  const LambdaReport b = analyze(211);
  CHECK_EQ(b.h_plus, 1);
  CHECK_EQ(b.h_minus, 3);
  CHECK_EQ(b.log_eps_ratio_mod9, 3);
  CHECK_EQ(b.lambda_ge2, Verdict::Yes);
  CHECK_FALSE(b.lambda_exact.has_value());

  const LambdaReport c = analyze(244);
  CHECK_EQ(c.d, 61);
  CHECK_EQ(c.h_plus, 2);
  CHECK_EQ(c.h_minus, 6);
  CHECK_EQ(c.log_eps_ratio_mod9, 0);
  CHECK_EQ(c.lambda_ge2, Verdict::No);

  // 3 !| h-: lambda = 0
  const LambdaReport e = analyze(7);
  CHECK_EQ(e.h_minus, 1);
  CHECK_EQ(e.lambda_exact, 0);
  CHECK_EQ(e.lambda_ge2, Verdict::No);
}

TEST_CASE("criteria: split examples") {
  const LambdaReport a = analyze(35);
  CHECK_EQ(a.kind, CaseTag::Split);
  CHECK_EQ(a.h_plus, 2);
  CHECK_EQ(a.h_minus, 2);
  REQUIRE(a.alpha.has_value());
  CHECK_EQ(a.alpha->to_string(), "(1+sqrt(-35))/2");
  CHECK_EQ(a.log_alpha_mod9, 0);
  CHECK_EQ(a.alpha_is_cube, false);
  CHECK_EQ(a.lambda_ge2, Verdict::Yes);
  CHECK_EQ(a.lambda_lower_bound, 2);
  CHECK(a.consistency_ok);

  const LambdaReport b = analyze(107);
  CHECK_EQ(b.h_plus, 3);
  CHECK_EQ(b.h_minus, 3);
  CHECK_EQ(b.alpha->to_string(), "(1+sqrt(-107))/2");
  CHECK_EQ(b.lambda_ge2, Verdict::Yes);
  CHECK_EQ(b.r3, 1);
  CHECK_EQ(find(b, "log_eps_mod9")->verdict, Verdict::Inapplicable);
  CHECK_EQ(find(b, "class_rank_bound")->verdict, Verdict::Yes);

  const LambdaReport c = analyze(2);
  CHECK_EQ(c.h_minus, 1);
  CHECK_EQ(c.h_plus, 1);
  CHECK_EQ(c.eps0.to_string(), "5+2*sqrt(6)");
  CHECK_EQ(c.log_eps_ratio_mod9, 3);
  CHECK_EQ(c.lambda_ge2, Verdict::No);
  CHECK_EQ(c.lambda_lower_bound, 1);
  CHECK_EQ(c.eps0_kummer_unramified, true);
  CHECK(c.consistency_ok);
  CHECK(c.failures().empty());
}

TEST_CASE("criteria: invalid input") {
  CHECK_THROWS_AS(analyze(21), DomainError);
  CHECK_THROWS_AS(analyze(0), DomainError);
  CHECK_THROWS_AS(analyze(-7), DomainError);
  CHECK_THROWS_AS(analyze_split(31), DomainError);
  CHECK_THROWS_AS(analyze_inert(35), DomainError);
  AnalyzeOptions low;
  low.precision = 4;
  CHECK_THROWS_AS(analyze(35, low), DomainError);
}

TEST_CASE("criteria: scale invariance") {
  for (std::int64_t d : {2L, 7L, 31L, 35L, 107L, 211L, 61L, 14L}) {
    const LambdaReport base = analyze(d);
    for (std::int64_t s : {2L, 5L, 7L, 10L}) {
      const LambdaReport r = analyze(d * s * s);
      CHECK_EQ(r.d_raw, d * s * s);
      CHECK_EQ(r.d, d);
      CHECK_MESSAGE(base.same_invariants(r), "d=" << d << " s=" << s);
    }
  }
}

TEST_CASE("criteria: precision does not change verdicts") {
  for (std::int64_t d : {2L, 31L, 35L, 107L, 211L, 244L, 437L}) {
    AnalyzeOptions hi;
    hi.precision = 48;
    CHECK(analyze(d).same_invariants(analyze(d, hi)));
  }
}

TEST_CASE("criteria: witnesses") {
  CHECK(kummer_rank1_witness(35));
  CHECK(kummer_rank1_witness(2));
  CHECK(kummer_rank1_witness(107));
  CHECK_THROWS_AS(kummer_rank1_witness(31), DomainError);
  CHECK_THROWS_AS(h_minus_witness_pi9(107), DomainError);  // 3 | h+
  CHECK_THROWS_AS(h_minus_witness_pi9(2), DomainError);    // lambda >= 2 fails
  // Every qualifying d up to 1000: the witness must equal (3 | h-).
  int seen = 0;
  for (std::int64_t d = 2; d <= 1000; d += 3) {
    if (!is_squarefree(d)) continue;
    const LambdaReport r = analyze(d);
    if (r.h_plus % 3 == 0 || r.lambda_ge2 != Verdict::Yes) continue;
    CHECK_EQ(h_minus_witness_pi9(d), r.h_minus % 3 == 0);
    ++seen;
  }
  CHECK(seen > 10);
}

TEST_CASE("criteria: class number hook is honoured") {
  AnalyzeOptions opt;
  opt.class_number = [](std::int64_t D) -> std::int64_t { return D < 0 ? 6 : 1; };
  const LambdaReport r = analyze(31, opt);
  CHECK_EQ(r.h_minus, 6);
  CHECK_EQ(r.h_plus, 1);
}
