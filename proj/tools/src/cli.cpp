#include "lambda3/cli/cli.hpp"

#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "lambda3/errors.hpp"
#include "lambda3/padic3/zeta9.hpp"

namespace lambda3::cli {

using nlohmann::ordered_json;

namespace {

bool passes(CaseFilter f, CaseTag c) {
  if (c == CaseTag::Invalid) return false;
  if (f == CaseFilter::Both) return true;
  return (f == CaseFilter::Split) == (c == CaseTag::Split);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

template <class T>
std::string opt_str(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, bool>) {
    return *v ? "true" : "false";
  } else {
    return std::to_string(*v);
  }
}

template <class T>
ordered_json opt_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  return *v;
}

std::string error_text(const std::exception& e) { return e.what(); }

}  // namespace

std::vector<ScanRow> run_scan(const ScanConfig& cfg, const Analyzer& analyzer) {
  std::vector<ScanRow> rows;
  for (std::int64_t d = std::max<std::int64_t>(cfg.d_min, 1); d <= cfg.d_max; ++d) {
    const CaseTag c = classify(d);
    if (passes(cfg.filter, c)) rows.push_back({d, c, std::nullopt, {}});
  }
  AnalyzeOptions opt;
  opt.precision = cfg.precision;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      try {
        rows[i].report = analyzer(rows[i].d, opt);
      } catch (const Error& e) {
        rows[i].error = error_text(e);
      }
    }
  };
  const unsigned jobs = std::max(1U, cfg.jobs);
  if (jobs == 1 || rows.size() < 2) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return rows;
}

std::string render_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream os;
  os << "d,case,h_minus,h_plus,r3,log_eps_ratio_mod9,log_alpha_mod9,lambda_lower_bound,lambda_ge2,consistency_ok,error\n";
  for (const auto& row : rows) {
    os << row.d << ',' << to_string(row.kind) << ',';
    if (row.report) {
      const LambdaReport& r = *row.report;
      os << r.h_minus << ',' << r.h_plus << ',' << r.r3 << ',' << r.log_eps_ratio_mod9 << ',' << opt_str(r.log_alpha_mod9)
         << ',' << r.lambda_lower_bound << ',' << to_string(r.lambda_ge2) << ',' << (r.consistency_ok ? "true" : "false")
         << ',';
    } else {
      os << ",,,,,,,,";
    }
    os << csv_field(row.error) << '\n';
  }
  return os.str();
}

ordered_json scan_json(const std::vector<ScanRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json o;
    o["d"] = row.d;
    o["case"] = std::string(to_string(row.kind));
    if (row.report) {
      const LambdaReport& r = *row.report;
      o["h_minus"] = r.h_minus;
      o["h_plus"] = r.h_plus;
      o["r3"] = r.r3;
      o["log_eps_ratio_mod9"] = r.log_eps_ratio_mod9;
      o["log_alpha_mod9"] = opt_json(r.log_alpha_mod9);
      o["lambda_lower_bound"] = r.lambda_lower_bound;
      o["lambda_ge2"] = std::string(to_string(r.lambda_ge2));
      o["consistency_ok"] = r.consistency_ok;
    } else {
      for (const char* k : {"h_minus", "h_plus", "r3", "log_eps_ratio_mod9", "log_alpha_mod9", "lambda_lower_bound",
                            "lambda_ge2", "consistency_ok"}) {
        o[k] = nullptr;
      }
    }
    o["error"] = row.error.empty() ? ordered_json(nullptr) : ordered_json(row.error);
    arr.push_back(std::move(o));
  }
  return arr;
}

ordered_json report_json(const LambdaReport& r) {
  ordered_json o;
  o["d_raw"] = r.d_raw;
  o["d"] = r.d;
  o["case"] = std::string(to_string(r.kind));
  o["h_minus"] = r.h_minus;
  o["h_plus"] = r.h_plus;
  o["r3"] = r.r3;
  o["eps0"] = r.eps0.to_string();
  o["log_eps_ratio_mod9"] = r.log_eps_ratio_mod9;
  o["alpha"] = r.alpha ? ordered_json(r.alpha->to_string()) : ordered_json(nullptr);
  o["log_alpha_mod9"] = opt_json(r.log_alpha_mod9);
  o["alpha_is_cube"] = opt_json(r.alpha_is_cube);
  o["eps0_kummer_unramified"] = opt_json(r.eps0_kummer_unramified);
  o["lambda_lower_bound"] = r.lambda_lower_bound;
  o["lambda_exact"] = opt_json(r.lambda_exact);
  o["lambda_ge2"] = std::string(to_string(r.lambda_ge2));
  ordered_json crit = ordered_json::array();
  for (const auto& c : r.criteria_detail) {
    crit.push_back({{"id", c.id}, {"verdict", std::string(to_string(c.verdict))}, {"note", c.note}});
  }
  o["criteria"] = std::move(crit);
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) checks.push_back({{"id", c.id}, {"ok", c.ok}, {"note", c.note}});
  o["checks"] = std::move(checks);
  o["consistency_ok"] = r.consistency_ok;
  return o;
}

std::string render_text(const LambdaReport& r) {
  std::ostringstream os;
  os << "d = " << r.d_raw;
  if (r.d != r.d_raw) os << " (squarefree core " << r.d << ")";
  os << ", case " << to_string(r.kind) << "\n";
  os << "h- = " << r.h_minus << ", h+ = " << r.h_plus << ", r3 = " << r.r3 << "\n";
  os << "eps0 = " << r.eps0 << "\n";
  os << "log eps0 / sqrt(D) mod 9 = " << r.log_eps_ratio_mod9 << "\n";
  if (r.alpha) os << "alpha = " << *r.alpha << ", log alpha mod 9 = " << *r.log_alpha_mod9 << "\n";
  if (r.alpha_is_cube) os << "alpha is a cube: " << opt_str(r.alpha_is_cube) << "\n";
  if (r.eps0_kummer_unramified) os << "eps0 cube mod pi^9: " << opt_str(r.eps0_kummer_unramified) << "\n";
  os << "lambda >= 2: " << to_string(r.lambda_ge2) << "\n";
  os << "lambda lower bound: " << r.lambda_lower_bound << "\n";
  if (r.lambda_exact) os << "lambda = " << *r.lambda_exact << "\n";
  os << "criteria:\n";
  for (const auto& c : r.criteria_detail) {
    os << "  " << c.id << ": " << to_string(c.verdict);
    if (!c.note.empty()) os << "  (" << c.note << ")";
    os << "\n";
  }
  os << "checks:\n";
  for (const auto& c : r.checks) os << "  " << c.id << ": " << (c.ok ? "ok" : "FAILED") << "\n";
  os << "consistency: " << (r.consistency_ok ? "ok" : "FAILED");
  for (const auto& f : r.failures()) os << " " << f;
  os << "\n";
  return os.str();
}

namespace {
constexpr int kIdentityPrecision = 10;
}  // namespace

std::vector<IdentityResult> pi_adic_identities() {
  constexpr int N = kIdentityPrecision;
  using Z = Zeta9Local;
  auto P = [](unsigned k, int n = kIdentityPrecision) { return Z::pi_pow(k, n); };
  auto I = [](long v, int n = kIdentityPrecision) { return Z::from_int(v, n); };
  const Z zeta3 = Z::zeta_pow(3, N);
  const Z sqrt_m3 = I(1) + zeta3.scale(2);
  std::vector<IdentityResult> out;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    out.push_back({std::move(name), ok, std::move(detail)});
  };

  add("zeta3 = (1-pi)^3", congruent_mod_pi(Z::zeta_pow(3, 60), (I(1, 60) - P(1, 60)).pow(3), {60}));
  add("-3 = pi^6 + pi^9 mod pi^10", congruent_mod_pi(I(-3), P(6) + P(9), {N}));
  add("sqrt(-3) = pi^3 - pi^6 - pi^7 + pi^8 mod pi^10",
      congruent_mod_pi(sqrt_m3 * sqrt_m3, I(-3), {N}) && congruent_mod_pi(sqrt_m3, P(3) - P(6) - P(7) + P(8), {N}));
  add("zeta3 = 1 - pi^3 + pi^7 - pi^8 mod pi^10", congruent_mod_pi(zeta3, I(1) - P(3) + P(7) - P(8), {N}));

  int bad = 0;
  std::string first_bad;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        const Z w = I(1, 9) + P(1, 9).scale(a) + P(2, 9).scale(b) + P(3, 9).scale(c);
        const Z shape = I(1, 9) + P(3, 9).scale(a) + P(6, 9).scale(b) - P(7, 9).scale(a) - P(8, 9).scale(a * a + b);
        if (!congruent_mod_pi(w.pow(3), shape, {9})) {
          if (bad++ == 0) first_bad = "a=" + std::to_string(a) + " b=" + std::to_string(b) + " c=" + std::to_string(c);
        }
      }
    }
  }
  add("(1+a pi+b pi^2+c pi^3)^3 = 1+a pi^3+b pi^6-a pi^7-(a^2+b) pi^8 mod pi^9, 27 triples", bad == 0, first_bad);

  auto tau = [](const Z& z) { return z.sigma(4); };
  add("tau(pi^5) = pi^5 - pi^7 + pi^8 + pi^9 mod pi^10", congruent_mod_pi(tau(P(5)), P(5) - P(7) + P(8) + P(9), {N}));
  add("tau(pi^6) = pi^6 mod pi^10", congruent_mod_pi(tau(P(6)), P(6), {N}));
  add("tau(pi^7) = pi^7 + pi^9 mod pi^10", congruent_mod_pi(tau(P(7)), P(7) + P(9), {N}));
  add("tau(pi^8) = pi^8 mod pi^10", congruent_mod_pi(tau(P(8)), P(8), {N}));
  add("tau(pi^9) = pi^9 mod pi^10", congruent_mod_pi(tau(P(9)), P(9), {N}));

  // eps = +-zeta^a (1 + a5 pi^5 + ... + a9 pi^9) has eps^(1+tau+tau^2) == +-zeta3^a (1 + 2 a5 pi^9).
  bad = 0;
  first_bad.clear();
  for (int sign : {1, -1}) {
    for (int a = 0; a < 9; ++a) {
      for (int t = 0; t < 243; ++t) {
        Z one_plus = I(1);
        int digits[5];
        for (int k = 0, r = t; k < 5; ++k, r /= 3) {
          digits[k] = r % 3;
          one_plus = one_plus + P(5 + k).scale(digits[k]);
        }
        const Z eps = (Z::zeta_pow(a, N) * one_plus).scale(sign);
        const Z norm = eps * tau(eps) * tau(tau(eps));
        const Z expect = (Z::zeta_pow(3 * a, N) * (I(1) + P(9).scale(2 * digits[0]))).scale(sign);
        if (!congruent_mod_pi(norm, expect, {N}) && bad++ == 0) {
          first_bad = "sign=" + std::to_string(sign) + " a=" + std::to_string(a) + " tail=" + std::to_string(t);
        }
      }
    }
  }
  add("eps^(1+tau+tau^2) = +-zeta3^a (1 + 2 a5 pi^9) mod pi^10 for all normal forms", bad == 0, first_bad);
  return out;
}

int cmd_analyze(std::int64_t d, const AnalyzeOptions& opt, Format fmt, std::ostream& out, std::ostream& err) {
  try {
    const LambdaReport r = analyze(d, opt);
    switch (fmt) {
      case Format::Text: out << render_text(r); break;
      case Format::Json: out << report_json(r).dump(2) << "\n"; break;
      case Format::Csv: out << render_csv({ScanRow{d, r.kind, r, {}}}); break;
    }
    return kOk;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidD;
  } catch (const Error& e) {
    err << "error";
    if (!e.criterion().empty()) err << " in criterion " << e.criterion();
    err << ": " << e.what() << "\n";
    return kPrecision;
  }
}

int cmd_scan(const ScanConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto rows = run_scan(cfg);
  const std::string text = cfg.format == Format::Json ? scan_json(rows).dump(2) + "\n" : render_csv(rows);
  if (cfg.out.empty()) {
    out << text;
    out.flush();
    if (!out) {
      err << "error: cannot write output\n";
      return kIoError;
    }
    return kOk;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  f << text;
  f.close();
  if (!f) {
    err << "error: cannot write " << cfg.out << "\n";
    return kIoError;
  }
  return kOk;
}

namespace {

struct Golden {
  std::int64_t d;
  std::int64_t h_plus;
  std::int64_t h_minus;
  std::optional<int> ratio;
  std::optional<std::string> alpha;
  std::optional<int> log_alpha;
  Verdict ge2;
  std::optional<int> lambda_exact;
  std::optional<bool> alpha_cube;
};

const Golden kGolden[] = {
    {31, 1, 3, 6, std::nullopt, std::nullopt, Verdict::No, 1, std::nullopt},
    {211, 1, 3, 3, std::nullopt, std::nullopt, Verdict::Yes, std::nullopt, std::nullopt},
    {244, 2, 6, 0, std::nullopt, std::nullopt, Verdict::No, 1, std::nullopt},
    {35, 2, 2, std::nullopt, "(1+sqrt(-35))/2", 0, Verdict::Yes, std::nullopt, false},
    {107, 3, 3, std::nullopt, "(1+sqrt(-107))/2", std::nullopt, Verdict::Yes, std::nullopt, false},
};

template <class T>
void expect(std::vector<std::string>& diffs, const char* field, const T& want, const T& got) {
  if (want == got) return;
  std::ostringstream os;
  os << field << ": expected " << want << ", got " << got;
  diffs.push_back(os.str());
}

std::string lambda_text(const LambdaReport& r) {
  if (r.lambda_exact) return "lambda=" + std::to_string(*r.lambda_exact);
  if (r.lambda_ge2 == Verdict::Yes) return "lambda>=2";
  return "lambda>=" + std::to_string(r.lambda_lower_bound);
}

}  // namespace

int cmd_paper_check(const AnalyzeOptions& opt, std::ostream& out) {
  int failed = 0;
  int total = 0;
  for (const Golden& g : kGolden) {
    ++total;
    std::vector<std::string> diffs;
    std::string summary;
    try {
      const LambdaReport r = analyze(g.d, opt);
      expect(diffs, "h_plus", g.h_plus, r.h_plus);
      expect(diffs, "h_minus", g.h_minus, r.h_minus);
      if (g.ratio) expect(diffs, "log_eps_ratio_mod9", *g.ratio, r.log_eps_ratio_mod9);
      if (g.alpha) expect(diffs, "alpha", *g.alpha, r.alpha ? r.alpha->to_string() : std::string("none"));
      if (g.log_alpha) expect(diffs, "log_alpha_mod9", *g.log_alpha, r.log_alpha_mod9.value_or(-1));
      expect(diffs, "lambda_ge2", std::string(to_string(g.ge2)), std::string(to_string(r.lambda_ge2)));
      if (g.lambda_exact) expect(diffs, "lambda_exact", *g.lambda_exact, r.lambda_exact.value_or(-1));
      if (g.alpha_cube) {
        expect(diffs, "alpha_is_cube", std::string(*g.alpha_cube ? "true" : "false"),
               std::string(r.alpha_is_cube ? (*r.alpha_is_cube ? "true" : "false") : "none"));
      }
      expect(diffs, "consistency_ok", std::string("true"), std::string(r.consistency_ok ? "true" : "false"));
      std::ostringstream os;
      os << "h+=" << r.h_plus << " h-=" << r.h_minus << " ratio=" << r.log_eps_ratio_mod9;
      if (r.alpha) os << " alpha=" << *r.alpha << " log_alpha=" << *r.log_alpha_mod9;
      os << " " << lambda_text(r);
      summary = os.str();
    } catch (const std::exception& e) {
      diffs.push_back(std::string("error: ") + e.what());
    }
    out << (diffs.empty() ? "PASS" : "FAIL") << " d=" << g.d;
    if (!summary.empty()) out << ": " << summary;
    out << "\n";
    for (const auto& s : diffs) out << "    " << s << "\n";
    if (!diffs.empty()) ++failed;
  }
  for (const auto& id : pi_adic_identities()) {
    ++total;
    out << (id.ok ? "PASS " : "FAIL ") << id.name << "\n";
    if (!id.ok) {
      ++failed;
      if (!id.detail.empty()) out << "    first failure: " << id.detail << "\n";
    }
  }
  out << "paper-check: " << (total - failed) << "/" << total << " passed\n";
  return failed == 0 ? kOk : kCheckFailed;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Iwasawa lambda >= 2 criteria for Q(sqrt(-d)), p = 3"};
  app.require_subcommand(1);
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"csv", Format::Csv}, {"json", Format::Json}};
  const std::map<std::string, CaseFilter> filters{
      {"split", CaseFilter::Split}, {"inert", CaseFilter::Inert}, {"both", CaseFilter::Both}};

  std::int64_t d = 0;
  int precision = 24;
  Format analyze_fmt = Format::Text;
  auto* a = app.add_subcommand("analyze", "Analyze a single d");
  a->add_option("--d", d, "Positive integer d with 3 !| d")->required();
  a->add_option("--precision", precision, "3-adic working digits")->check(CLI::Range(8, 4096));
  a->add_option("--format", analyze_fmt, "text|json|csv")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  ScanConfig cfg;
  cfg.jobs = std::max(1U, std::thread::hardware_concurrency());
  auto* s = app.add_subcommand("scan", "Analyze every valid d in a range");
  s->add_option("--min", cfg.d_min, "Smallest d")->required()->check(CLI::PositiveNumber);
  s->add_option("--max", cfg.d_max, "Largest d")->required()->check(CLI::PositiveNumber);
  s->add_option("--case", cfg.filter, "split|inert|both")->transform(CLI::CheckedTransformer(filters, CLI::ignore_case));
  s->add_option("--precision", cfg.precision, "3-adic working digits")->check(CLI::Range(8, 4096));
  s->add_option("--format", cfg.format, "csv|json")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"csv", Format::Csv}, {"json", Format::Json}},
                                          CLI::ignore_case));
  s->add_option("--out", cfg.out, "Output file (default stdout)");
  s->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1U, 1024U));

  int check_precision = 24;
  auto* p = app.add_subcommand("paper-check", "Reproduce the worked examples and pi-adic identities");
  p->add_option("--precision", check_precision, "3-adic working digits")->check(CLI::Range(8, 4096));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and friends exit 0; every malformed command line is an input error.
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidD;
  }
  if (*a) {
    AnalyzeOptions opt;
    opt.precision = precision;
    return cmd_analyze(d, opt, analyze_fmt, out, err);
  }
  if (*s) {
    if (cfg.d_min > cfg.d_max) {
      err << "error: --min must not exceed --max\n";
      return kInvalidD;
    }
    return cmd_scan(cfg, out, err);
  }
  AnalyzeOptions opt;
  opt.precision = check_precision;
  return cmd_paper_check(opt, out);
}

}  // namespace lambda3::cli
