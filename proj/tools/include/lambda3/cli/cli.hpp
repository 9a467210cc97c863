#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lambda3/criteria/criteria.hpp"

namespace lambda3::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInvalidD = 2,
  kPrecision = 3,
  kIoError = 4,
};

enum class Format { Text, Csv, Json };
enum class CaseFilter { Split, Inert, Both };

struct ScanConfig {
  std::int64_t d_min = 1;
  std::int64_t d_max = 1;
  CaseFilter filter = CaseFilter::Both;
  int precision = 24;
  Format format = Format::Csv;
  std::string out;  // empty: stdout
  unsigned jobs = 1;
};

using Analyzer = std::function<LambdaReport(std::int64_t, const AnalyzeOptions&)>;

struct ScanRow {
  std::int64_t d = 0;
  CaseTag kind = CaseTag::Invalid;
  std::optional<LambdaReport> report;
  std::string error;
};

/// Rows for every valid d in range that passes the filter, in increasing d.
std::vector<ScanRow> run_scan(const ScanConfig& cfg, const Analyzer& analyzer = analyze);

std::string render_csv(const std::vector<ScanRow>& rows);
nlohmann::ordered_json scan_json(const std::vector<ScanRow>& rows);
nlohmann::ordered_json report_json(const LambdaReport& r);
std::string render_text(const LambdaReport& r);

struct IdentityResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// The pi-adic expansion identities, the cube shape over all 27 triples and
/// the tau-action congruences.
std::vector<IdentityResult> pi_adic_identities();

int cmd_analyze(std::int64_t d, const AnalyzeOptions& opt, Format fmt, std::ostream& out, std::ostream& err);
int cmd_scan(const ScanConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_paper_check(const AnalyzeOptions& opt, std::ostream& out);

/// Full command line entry point.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace lambda3::cli
