#include "lambda3/criteria/criteria.hpp"

#include <algorithm>
#include <tuple>

#include "lambda3/errors.hpp"
#include "lambda3/padic3/ram_quad.hpp"
#include "lambda3/padic3/z3.hpp"
#include "lambda3/padic3/zeta9.hpp"
#include "lambda3/quadfield/class_group.hpp"
#include "lambda3/quadfield/ideal.hpp"
#include "lambda3/quadfield/integer.hpp"
#include "lambda3/quadfield/units.hpp"

namespace lambda3 {

namespace {

// Re-raise library errors with the id of the criterion being evaluated.
template <class F>
auto under(const char* id, F&& f) {
  try {
    return f();
  } catch (const PrecisionError& e) {
    throw PrecisionError(std::string(id) + ": " + e.what(), id);
  } catch (const IntegralityError& e) {
    throw IntegralityError(std::string(id) + ": " + e.what(), id);
  } catch (const HypothesisError& e) {
    throw HypothesisError(std::string(id) + ": " + e.what(), id);
  }
}

Verdict yes_no(bool b) { return b ? Verdict::Yes : Verdict::No; }

struct Common {
  std::int64_t d0;
  std::int64_t D_minus;
  std::int64_t D_plus;
  std::int64_t h_minus;
  std::int64_t h_plus;
  int r3;
  QuadElem eps0;
  Z3Approx ratio;
};

Common common(std::int64_t d, const AnalyzeOptions& opt) {
  if (opt.precision < 8) throw DomainError("precision must be at least 8");
  const std::int64_t d0 = squarefree_core(d).core;
  const std::int64_t Dm = field_discriminant(-d0);
  const std::int64_t Dp = field_discriminant(3 * d0);
  const FormClassGroup cl_plus = class_group(Dp);
  auto h_minus = static_cast<std::int64_t>(class_group(Dm).order());
  auto h_plus = static_cast<std::int64_t>(cl_plus.order());
  if (opt.class_number) {
    h_minus = opt.class_number(Dm);
    h_plus = opt.class_number(Dp);
  }
  QuadElem eps0 = fundamental_unit(Dp);
  Z3Approx ratio = under("log_eps_ratio", [&] { return log_ratio(eps0, Dp, opt.precision); });
  return {d0, Dm, Dp, h_minus, h_plus, cl_plus.three_rank(), std::move(eps0),
          std::move(ratio)};
}

LambdaReport base_report(std::int64_t d, CaseTag kind, const Common& c) {
  LambdaReport r;
  r.d_raw = d;
  r.d = c.d0;
  r.kind = kind;
  r.h_minus = c.h_minus;
  r.h_plus = c.h_plus;
  r.r3 = c.r3;
  r.eps0 = c.eps0;
  r.log_eps_ratio_mod9 = static_cast<int>(c.ratio.residue(2).get_si());
  return r;
}

void finish(LambdaReport& r) { r.consistency_ok = r.failures().empty(); }

// alpha embedded in Q3 with sqrt(-d0) == seed (mod 3).
Z3Approx embed_imag(const QuadElem& x, std::int64_t d0, int prec, int seed) {
  const Z3Approx r = hensel_sqrt(Z3Approx(-d0, prec), seed);
  const Z3Approx half = Z3Approx(2, prec).inverse();
  return (Z3Approx(x.twice_a(), prec) + Z3Approx(x.twice_b(), prec) * r) * half;
}

bool is_pm_one_mod_pi9(const Zeta9Local& e) {
  const Zeta9Local one = Zeta9Local::from_int(1, 9);
  return congruent_mod_pi(e, one, {9}) || congruent_mod_pi(e, -one, {9});
}

}  // namespace

std::string_view to_string(CaseTag c) {
  switch (c) {
    case CaseTag::Split: return "split";
    case CaseTag::Inert: return "inert";
    case CaseTag::Invalid: return "invalid";
  }
  return "invalid";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Inapplicable: return "inapplicable";
  }
  return "inapplicable";
}

std::vector<std::string> LambdaReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.ok) out.push_back(c.id);
  }
  for (const auto& v : criteria_detail) {
    if (v.verdict != Verdict::Inapplicable && lambda_ge2 != Verdict::Inapplicable && v.verdict != lambda_ge2) {
      out.push_back(v.id);
    }
  }
  return out;
}

bool LambdaReport::same_invariants(const LambdaReport& o) const {
  auto key = [](const LambdaReport& r) {
    return std::tie(r.d, r.kind, r.h_minus, r.h_plus, r.r3, r.eps0, r.log_eps_ratio_mod9, r.alpha, r.log_alpha_mod9,
                    r.alpha_is_cube, r.eps0_kummer_unramified, r.lambda_lower_bound, r.lambda_exact, r.lambda_ge2,
                    r.consistency_ok);
  };
  if (key(*this) != key(o) || criteria_detail.size() != o.criteria_detail.size() || checks.size() != o.checks.size()) {
    return false;
  }
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (checks[i].id != o.checks[i].id || checks[i].ok != o.checks[i].ok) return false;
  }
  for (std::size_t i = 0; i < criteria_detail.size(); ++i) {
    if (criteria_detail[i].id != o.criteria_detail[i].id || criteria_detail[i].verdict != o.criteria_detail[i].verdict) {
      return false;
    }
  }
  return true;
}

CaseTag classify(std::int64_t d) {
  if (d <= 0 || d % 3 == 0) return CaseTag::Invalid;
  return squarefree_core(d).core % 3 == 2 ? CaseTag::Split : CaseTag::Inert;
}

LambdaReport analyze_split(std::int64_t d, const AnalyzeOptions& opt) {
  if (classify(d) != CaseTag::Split) throw DomainError("analyze_split: d is not a split discriminant");
  const Common c = common(d, opt);
  LambdaReport r = base_report(d, CaseTag::Split, c);
  const int K = opt.precision;
  const bool h_plus_3 = c.h_plus % 3 == 0;
  const bool h_minus_3 = c.h_minus % 3 == 0;

  // Generator of p^h- and its log at the completion where it is a unit.
  const auto primes = prime_above_3_split(c.d0);
  const QuadElem alpha = ideal_power_generator(primes.first, static_cast<unsigned>(c.h_minus));
  const Z3Approx a1 = embed_imag(alpha, c.d0, K, 1);
  const Z3Approx a2 = embed_imag(alpha, c.d0, K, 2);
  if (a1.is_unit() == a2.is_unit()) throw LogicError("alpha must be a unit at exactly one completion");
  const Z3Approx log_alpha = under("log_alpha_mod9", [&] { return iwasawa_log_q3(a1.is_unit() ? a1 : a2); });
  const int log_alpha_mod9 = static_cast<int>(log_alpha.residue(2).get_si());
  r.alpha = alpha;
  r.log_alpha_mod9 = log_alpha_mod9;
  r.alpha_is_cube = is_cube(alpha).has_value();

  // Master criterion.
  const bool master = log_alpha_mod9 == 0;
  r.lambda_ge2 = yes_no(master);
  r.criteria_detail.push_back({"log_alpha_mod9", r.lambda_ge2, "log alpha == 0 (mod 9); equivalently rank(A1) >= 2"});

  // Local picture of eps0 at both completions of Q(zeta9, sqrt(3d)) above 3.
  const Zeta9Local e1 = embed_split_eps(c.eps0, K, 1);
  const Zeta9Local e2 = embed_split_eps(c.eps0, K, 2);
  const bool cube1 = is_cube_mod_pi9(e1);
  const bool cube2 = is_cube_mod_pi9(e2);
  r.eps0_kummer_unramified = cube1 && cube2;
  const Zeta9Local log_eps = under("log_eps_pi_adic", [&] { return iwasawa_log_zeta9(e1); });
  const int v_log = pi_valuation_capped(log_eps);
  const int v_ratio = c.ratio.valuation();
  const bool ratio0 = r.log_eps_ratio_mod9 == 0;

  const bool hplus_ok = !h_plus_3;
  r.criteria_detail.push_back({"log_eps_mod9", hplus_ok ? yes_no(ratio0) : Verdict::Inapplicable,
                               "log eps0 == 0 (mod 9); needs 3 !| h+"});
  r.criteria_detail.push_back(
      {"h_plus_divisible_by_3", h_plus_3 ? Verdict::Yes : Verdict::Inapplicable, "3 | h+ forces lambda >= 2"});
  r.criteria_detail.push_back({"alpha_cube", (hplus_ok && h_minus_3) ? yes_no(*r.alpha_is_cube) : Verdict::Inapplicable,
                               "alpha is a cube; needs 3 !| h+ and 3 | h-"});
  r.criteria_detail.push_back({"log_eps_pi10", hplus_ok ? yes_no(v_log >= 10) : Verdict::Inapplicable,
                               "log eps0 == 0 (mod pi^10); needs 3 !| h+"});
  r.criteria_detail.push_back({"log_eps_pi15", hplus_ok ? yes_no(v_log >= 15) : Verdict::Inapplicable,
                               "log eps0 == 0 (mod pi^15); needs 3 !| h+"});
  r.criteria_detail.push_back(
      {"class_rank_bound", c.r3 >= 1 ? Verdict::Yes : Verdict::Inapplicable, "lambda >= r3 + 1 with r3 >= 1"});

  r.checks.push_back({"alpha_eps_relation",
                      mod_floor(static_cast<std::int64_t>(log_alpha_mod9) - c.h_plus * r.log_eps_ratio_mod9, 9) == 0,
                      "log alpha == h+ log eps0 / sqrt(D) (mod 9)"});
  r.checks.push_back({"ratio_integrality", r.log_eps_ratio_mod9 % 3 == 0, "log eps0 / sqrt(D) == 0 (mod 3)"});
  r.checks.push_back({"kummer_eps0_unramified", cube1 && cube2, "eps0 is a cube mod pi^9 at both completions"});
  r.checks.push_back({"kummer_completions_agree", cube1 == cube2, ""});
  r.checks.push_back({"log_eps_modulus_equivalence", (v_log >= 10) == (v_log >= 15) && (v_log >= 10) == ratio0,
                      "mod pi^10 <=> mod pi^15 <=> mod 9"});
  r.checks.push_back({"log_eps_two_routes", v_log == std::min(3 * (2 * v_ratio + 1), log_eps.pi_precision()),
                      "v_pi(log eps0) == 3 v(log eps0 in Q3(sqrt(3d)))"});
  r.checks.push_back({"eps0_cube_pm_zeta3", cube_as_pm_zeta3_power(e1).has_value(),
                      "eps0^3 == +-zeta3^a (mod pi^11)"});
  if (hplus_ok && master) {
    r.checks.push_back({"eps0_pm1_mod_pi9", is_pm_one_mod_pi9(e1) == h_minus_3, "eps0 == +-1 (mod pi^9) <=> 3 | h-"});
  }

  r.lambda_lower_bound = std::max(1, r.r3 + 1);
  if (master) r.lambda_lower_bound = std::max(r.lambda_lower_bound, 2);
  finish(r);
  return r;
}

LambdaReport analyze_inert(std::int64_t d, const AnalyzeOptions& opt) {
  if (classify(d) != CaseTag::Inert) throw DomainError("analyze_inert: d is not an inert discriminant");
  const Common c = common(d, opt);
  LambdaReport r = base_report(d, CaseTag::Inert, c);
  if (c.h_minus % 3 != 0) {
    r.lambda_lower_bound = 0;
    r.lambda_exact = 0;
    r.lambda_ge2 = Verdict::No;
    r.criteria_detail.push_back({"a0_mod3", Verdict::No, "a0 = 2 h- != 0 (mod 3), lambda = 0"});
  } else {
    r.lambda_lower_bound = 1;
    const bool ge2 = mod_floor(c.h_minus - c.h_plus * r.log_eps_ratio_mod9, 9) == 0;
    r.lambda_ge2 = yes_no(ge2);
    if (!ge2) r.lambda_exact = 1;
    r.criteria_detail.push_back({"h_minus_vs_ratio_mod9", r.lambda_ge2, "h- == h+ log eps0 / sqrt(D) (mod 9)"});
  }
  finish(r);
  return r;
}

LambdaReport analyze(std::int64_t d, const AnalyzeOptions& opt) {
  switch (classify(d)) {
    case CaseTag::Split: return analyze_split(d, opt);
    case CaseTag::Inert: return analyze_inert(d, opt);
    case CaseTag::Invalid: break;
  }
  if (d <= 0) throw DomainError("d must be positive");
  throw DomainError("3 divides d");
}

bool kummer_rank1_witness(std::int64_t d, const AnalyzeOptions& opt) {
  if (classify(d) != CaseTag::Split) throw DomainError("kummer_rank1_witness: d must be split");
  const std::int64_t d0 = squarefree_core(d).core;
  const QuadElem eps0 = fundamental_unit(field_discriminant(3 * d0));
  const bool a = is_cube_mod_pi9(embed_split_eps(eps0, opt.precision, 1));
  const bool b = is_cube_mod_pi9(embed_split_eps(eps0, opt.precision, 2));
  if (a != b) throw LogicError("kummer_rank1_witness: completions disagree");
  return a;
}

bool h_minus_witness_pi9(std::int64_t d, const AnalyzeOptions& opt) {
  if (classify(d) != CaseTag::Split) throw DomainError("h_minus_witness_pi9: d must be split");
  const LambdaReport r = analyze_split(d, opt);
  if (r.h_plus % 3 == 0) throw DomainError("h_minus_witness_pi9: requires 3 !| h+");
  if (r.lambda_ge2 != Verdict::Yes) throw DomainError("h_minus_witness_pi9: requires lambda >= 2");
  const bool w = is_pm_one_mod_pi9(embed_split_eps(r.eps0, opt.precision, 1));
  if (w != (r.h_minus % 3 == 0)) throw LogicError("h_minus_witness_pi9: disagrees with 3 | h-");
  return w;
}

}  // namespace lambda3
