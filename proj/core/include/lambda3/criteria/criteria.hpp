#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lambda3/quadfield/quad_elem.hpp"

namespace lambda3 {

enum class CaseTag { Split, Inert, Invalid };
enum class Verdict { Yes, No, Inapplicable };

std::string_view to_string(CaseTag c);
std::string_view to_string(Verdict v);

/// A criterion's answer to "lambda >= 2?"; Inapplicable when its hypotheses fail.
struct CriterionVerdict {
  std::string id;
  Verdict verdict = Verdict::Inapplicable;
  std::string note;
};

/// A relation that must hold between computed quantities.
struct ConsistencyCheck {
  std::string id;
  bool ok = true;
  std::string note;
};

struct LambdaReport {
  std::int64_t d_raw = 0;
  std::int64_t d = 0;  // squarefree core
  CaseTag kind = CaseTag::Invalid;
  std::int64_t h_minus = 0;
  std::int64_t h_plus = 0;
  int r3 = 0;  // 3-rank of Cl(Q(sqrt(3d)))
  QuadElem eps0 = QuadElem::one(-1);
  int log_eps_ratio_mod9 = 0;  // (log eps0) / sqrt(D) mod 9
  std::optional<QuadElem> alpha;
  std::optional<int> log_alpha_mod9;
  std::optional<bool> alpha_is_cube;
  std::optional<bool> eps0_kummer_unramified;
  int lambda_lower_bound = 0;
  /// Set only where the criteria certify lambda exactly (inert shapes).
  std::optional<int> lambda_exact;
  Verdict lambda_ge2 = Verdict::Inapplicable;
  std::vector<CriterionVerdict> criteria_detail;
  std::vector<ConsistencyCheck> checks;
  bool consistency_ok = true;

  /// Ids of failed checks and of verdicts disagreeing with the master verdict.
  std::vector<std::string> failures() const;
  /// Equality of everything except d_raw.
  bool same_invariants(const LambdaReport& other) const;
};

struct AnalyzeOptions {
  int precision = 24;  // 3-adic digits
  /// Replaces the class number routine (h- and h+) when set; fault injection for tests.
  std::function<std::int64_t(std::int64_t D)> class_number;
};

CaseTag classify(std::int64_t d);

LambdaReport analyze_split(std::int64_t d, const AnalyzeOptions& opt = {});
LambdaReport analyze_inert(std::int64_t d, const AnalyzeOptions& opt = {});
/// Dispatch on classify(d); DomainError for invalid d.
LambdaReport analyze(std::int64_t d, const AnalyzeOptions& opt = {});

/// eps0 is a cube mod pi^9 at both completions above 3 (LogicError if they disagree).
bool kummer_rank1_witness(std::int64_t d, const AnalyzeOptions& opt = {});

/// eps0 == +-1 (mod pi^9). Requires split d, 3 !| h+ and lambda >= 2;
/// DomainError otherwise, LogicError if the answer differs from (3 | h-).
bool h_minus_witness_pi9(std::int64_t d, const AnalyzeOptions& opt = {});

}  // namespace lambda3
