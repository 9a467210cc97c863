#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lambda3/cli/cli.hpp"
#include "lambda3/errors.hpp"
#include "lambda3/quadfield/class_group.hpp"

using namespace lambda3;
using namespace lambda3::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "lambda3");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) lines.push_back(l);
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
    } else if (c == ',' && !quoted) {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  cells.push_back(cur);
  return cells;
}

std::string cell_of(const nlohmann::json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

}  // namespace

TEST_CASE("cli: analyze text and json") {
  const Run t = run_cli({"analyze", "--d", "211"});
  CHECK_EQ(t.code, kOk);
  CHECK_NE(t.out.find("211"), std::string::npos);
  CHECK_NE(t.out.find("inert"), std::string::npos);

  const Run j = run_cli({"analyze", "--d", "35", "--format", "json"});
  REQUIRE_EQ(j.code, kOk);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK_EQ(doc["d"], 35);
  CHECK_EQ(doc["case"], "split");
  CHECK_EQ(doc["alpha"], "(1+sqrt(-35))/2");
  CHECK_EQ(doc["lambda_ge2"], "yes");
  CHECK_EQ(doc["consistency_ok"], true);
}

TEST_CASE("cli: invalid d") {
  const Run r = run_cli({"analyze", "--d", "21"});
  CHECK_EQ(r.code, kInvalidD);
  CHECK_NE(r.err.find("3 divides d"), std::string::npos);
  CHECK_EQ(run_cli({"analyze", "--d", "0"}).code, kInvalidD);
  CHECK_EQ(run_cli({"analyze", "--d", "5", "--precision", "2"}).code, kInvalidD);
  CHECK_EQ(run_cli({"bogus"}).code, kInvalidD);
  CHECK_EQ(run_cli({"--help"}).code, kOk);
}

TEST_CASE("cli: scan rows") {
  const Run r = run_cli({"scan", "--min", "1", "--max", "50", "--jobs", "2"});
  REQUIRE_EQ(r.code, kOk);
  const auto lines = split_lines(r.out);
  REQUIRE_FALSE(lines.empty());
  CHECK_EQ(lines[0],
           "d,case,h_minus,h_plus,r3,log_eps_ratio_mod9,log_alpha_mod9,lambda_lower_bound,lambda_ge2,consistency_ok,"
           "error");
  std::size_t expected = 0;
  for (std::int64_t d = 1; d <= 50; ++d) expected += d % 3 != 0 ? 1 : 0;
  CHECK_EQ(lines.size(), expected + 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cells = split_csv(lines[i]);
    REQUIRE_EQ(cells.size(), 11u);
    CHECK_EQ(cells[9], "true");
    CHECK(cells[10].empty());
  }
  const Run split = run_cli({"scan", "--min", "30", "--max", "40", "--case", "split"});
  for (const auto& l : split_lines(split.out)) {
    if (l.rfind("d,", 0) == 0) continue;
    CHECK_EQ(split_csv(l)[1], "split");
  }
}

TEST_CASE("cli: empty range prints only the header") {
  const Run r = run_cli({"scan", "--min", "3", "--max", "3"});
  CHECK_EQ(r.code, kOk);
  CHECK_EQ(split_lines(r.out).size(), 1u);
  const Run j = run_cli({"scan", "--min", "3", "--max", "3", "--format", "json"});
  CHECK_EQ(j.code, kOk);
  CHECK(nlohmann::json::parse(j.out).empty());
  const Run f = run_cli({"scan", "--min", "4", "--max", "7", "--case", "split", "--format", "csv"});
  CHECK_EQ(split_lines(f.out).size(), 2u);  // only d = 5
  CHECK_EQ(run_cli({"scan", "--min", "9", "--max", "3"}).code, kInvalidD);
}

TEST_CASE("cli: scan is deterministic across worker counts") {
  const Run one = run_cli({"scan", "--min", "1", "--max", "400", "--jobs", "1"});
  const Run four = run_cli({"scan", "--min", "1", "--max", "400", "--jobs", "4"});
  const Run again = run_cli({"scan", "--min", "1", "--max", "400", "--jobs", "3"});
  CHECK_EQ(one.out, four.out);
  CHECK_EQ(one.out, again.out);
}

TEST_CASE("cli: csv and json agree") {
  const Run csv = run_cli({"scan", "--min", "1", "--max", "120"});
  const Run js = run_cli({"scan", "--min", "1", "--max", "120", "--format", "json"});
  const auto lines = split_lines(csv.out);
  const auto header = split_csv(lines.at(0));
  const auto rows = nlohmann::json::parse(js.out);
  REQUIRE_EQ(rows.size() + 1, lines.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto cells = split_csv(lines[i + 1]);
    for (std::size_t k = 0; k < header.size(); ++k) {
      CHECK_MESSAGE(cell_of(rows[i][header[k]]) == cells[k], "row " << i << " col " << header[k]);
    }
  }
}

TEST_CASE("cli: scan errors are rows, not aborts") {
  ScanConfig cfg;
  cfg.d_min = 1;
  cfg.d_max = 10;
  const auto rows = run_scan(cfg, [](std::int64_t d, const AnalyzeOptions& o) {
    if (d == 7) throw PrecisionError("not enough digits, need 30");
    return analyze(d, o);
  });
  REQUIRE_EQ(rows.size(), 7u);
  const auto csv = split_lines(render_csv(rows));
  bool found = false;
  for (const auto& l : csv) {
    if (l.rfind("7,", 0) == 0) {
      found = true;
      CHECK_EQ(l, "7,inert,,,,,,,,,\"not enough digits, need 30\"");
    }
  }
  CHECK(found);
}

TEST_CASE("cli: output file and io errors") {
  const auto path = std::filesystem::temp_directory_path() / "lambda3_cli_scan.csv";
  const Run r = run_cli({"scan", "--min", "1", "--max", "20", "--out", path.string()});
  CHECK_EQ(r.code, kOk);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK_EQ(buf.str(), run_cli({"scan", "--min", "1", "--max", "20"}).out);
  std::filesystem::remove(path);
  CHECK_EQ(run_cli({"scan", "--min", "1", "--max", "5", "--out", "/nonexistent/dir/x.csv"}).code, kIoError);
}

TEST_CASE("cli: identity suite") {
  const auto ids = pi_adic_identities();
  CHECK(ids.size() >= 10);
  for (const auto& i : ids) CHECK_MESSAGE(i.ok, i.name << ": " << i.detail);
}

TEST_CASE("cli: paper-check") {
  const Run a = run_cli({"paper-check"});
  CHECK_EQ(a.code, kOk);
  CHECK_NE(a.out.find("PASS d=31: h+=1 h-=3 ratio=6 lambda=1"), std::string::npos);
  const auto last = split_lines(a.out).back();
  int passed = 0, total = 0;
  REQUIRE_EQ(std::sscanf(last.c_str(), "paper-check: %d/%d passed", &passed, &total), 2);
  CHECK_EQ(passed, total);
  CHECK(total >= 15);
  CHECK_EQ(a.out, run_cli({"paper-check"}).out);

  // A wrong class number must surface as a failing d=31 line with a diff.
  AnalyzeOptions broken;
  broken.class_number = [](std::int64_t D) -> std::int64_t {
    return D == -31 ? 6 : static_cast<std::int64_t>(class_group(D).order());
  };
  std::ostringstream out;
  CHECK_EQ(cmd_paper_check(broken, out), kCheckFailed);
  const std::string text = out.str();
  CHECK_NE(text.find("FAIL d=31"), std::string::npos);
  CHECK_NE(text.find("    h_minus: expected 3, got 6"), std::string::npos);
  CHECK_NE(text.find("PASS d=211"), std::string::npos);
  CHECK_NE(text.find("paper-check: " + std::to_string(total - 1) + "/" + std::to_string(total) + " passed"),
           std::string::npos);
}
