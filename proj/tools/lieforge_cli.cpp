#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "lieforge/lieforge.h"

namespace fs = std::filesystem;

namespace {

struct Options {
  std::string command;
  uint64_t seed = 0;
  uint32_t trials = 0;
  double alpha = 1.0;
  std::string format = "text";
  std::string out;
  std::string perturb;
};

std::string take(char* s) {
  std::string out = s ? s : "";
  lf_string_free(s);
  return out;
}

void print_text(const lf_reports* r, std::ostream& os) {
  lf_report_view v{};
  for (size_t i = 0; i < lf_reports_count(r); ++i) {
    lf_reports_get(r, i, &v);
    char line[128];
    std::snprintf(line, sizeof line, "%s  %-5s residual=%.3e tol=%.0e  ", v.passed ? "PASS" : "FAIL", v.identity,
                  v.max_residual, v.tolerance);
    os << line << v.label << "\n";
    if (v.witness) os << "      witness: " << v.witness << "\n";
    if (*v.note) os << "      note: " << v.note << "\n";
  }
  const char *name = nullptr, *text = nullptr;
  for (size_t i = 0; i < lf_reports_artifact_count(r); ++i) {
    lf_reports_artifact(r, i, &name, nullptr, &text);
    if (*text) os << "\n== " << name << " ==\n" << text;
  }
}

void print_json(const lf_reports* r, std::ostream& os) {
  char* lines = nullptr;
  if (lf_reports_to_jsonl(r, &lines) == LF_OK) os << take(lines);
  const char *name = nullptr, *data = nullptr;
  for (size_t i = 0; i < lf_reports_artifact_count(r); ++i) {
    lf_reports_artifact(r, i, &name, &data, nullptr);
    os << "{\"artifact\":\"" << name << "\",\"data\":" << data << "}\n";
  }
}

bool write_outputs(const lf_reports* r, const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    std::cerr << "cannot create " << dir << ": " << ec.message() << "\n";
    return false;
  }
  {
    std::ofstream f(dir / "reports.jsonl");
    char* lines = nullptr;
    if (lf_reports_to_jsonl(r, &lines) == LF_OK) f << take(lines);
  }
  {
    std::ofstream f(dir / "reports.txt");
    print_text(r, f);
  }
  const char *name = nullptr, *data = nullptr, *text = nullptr;
  for (size_t i = 0; i < lf_reports_artifact_count(r); ++i) {
    lf_reports_artifact(r, i, &name, &data, &text);
    std::ofstream(dir / (std::string(name) + ".json")) << data << "\n";
    if (*text) std::ofstream(dir / (std::string(name) + ".txt")) << text;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const lf_config defaults = lf_config_default();
  Options opt;
  opt.seed = defaults.seed;
  opt.trials = defaults.trials;
  opt.alpha = defaults.alpha;

  CLI::App app{"lieforge: builds spacetime generators from SU(2) and checks the resulting algebra"};
  app.require_subcommand(1, 1);
  app.add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
  app.add_option("--trials", opt.trials, "random draws per invariance check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--alpha", opt.alpha, "space-to-time ratio constant (nonzero)")->capture_default_str();
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--out", opt.out, "directory for report and artifact files");
  app.add_option("--perturb", opt.perturb, "SET:member:row:col[:re[:im]]")->group("");

  const std::pair<const char*, const char*> commands[] = {
      {"verify", "SU(2), Lorentz and Poincare relations in the 2 and (2+2) reps"},
      {"transfer", "extract coefficient tensors and build the 4-vector generators"},
      {"invariants", "finite transformations, interval invariance, affine device"},
      {"sun", "SU(2) vs SU(3) structure tensors and the boost obstruction"},
      {"exercises", "the seven worked exercises"},
      {"all", "every suite in order"},
  };
  // Global flags are accepted after the subcommand too.
  app.fallthrough();
  for (const auto& [name, help] : commands) {
    app.add_subcommand(name, help)->callback([&opt, n = name] { opt.command = n; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (opt.alpha == 0.0) {
    std::cerr << "--alpha must be nonzero\n";
    return 2;
  }

  lf_config cfg = defaults;
  cfg.seed = opt.seed;
  cfg.trials = opt.trials;
  cfg.alpha = opt.alpha;
  cfg.perturb = opt.perturb.empty() ? nullptr : opt.perturb.c_str();
  if (const char* env = std::getenv("LIEFORGE_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) {
      std::cerr << "LIEFORGE_TOL must be a positive number\n";
      return 2;
    }
    cfg.abs_eps = v;
  }

  lf_reports* reports = nullptr;
  const lf_status s = lf_run_suite(opt.command.c_str(), &cfg, &reports);
  if (s != LF_OK) {
    std::cerr << lf_status_name(s) << ": " << lf_last_error() << "\n";
    return s == LF_ERR_PARAM || s == LF_ERR_PARSE ? 2 : 1;
  }

  if (opt.format == "json") {
    print_json(reports, std::cout);
  } else {
    print_text(reports, std::cout);
  }
  bool ok = lf_reports_all_passed(reports) != 0;
  if (!opt.out.empty()) ok = write_outputs(reports, opt.out) && ok;
  if (opt.format == "text") {
    size_t failed = 0;
    lf_report_view v{};
    for (size_t i = 0; i < lf_reports_count(reports); ++i) {
      lf_reports_get(reports, i, &v);
      failed += v.passed ? 0 : 1;
    }
    std::cout << "\n" << lf_reports_count(reports) - failed << "/" << lf_reports_count(reports) << " checks passed\n";
  }
  lf_reports_free(reports);
  return ok ? 0 : 1;
}
