// euler-horizon: command-line front end over the C API.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <regex>
#include <string>

#include "euler_horizon/euler_horizon.h"

namespace {

enum Exit { kDecided = 0, kInputError = 1, kInternal = 2, kInconclusive = 3 };

int exit_code_for(eh_status s) {
  switch (s) {
    case EH_OK: return kDecided;
    case EH_SYNTAX_ERROR:
    case EH_NORMALIZATION_ERROR:
    case EH_DIVISION_BY_ZERO_POLY:
    case EH_DEGENERATE_INPUT:
    case EH_INVALID_ARGUMENT:
    case EH_MISSING_ZEROS_FILE:
    case EH_IO_ERROR:
    case EH_CONVERGENCE_DOMAIN:
    case EH_DOMAIN_ERROR:
    case EH_POLE_AT_ONE:
    case EH_FACTOR_POLE:
      return kInputError;
    case EH_INCONCLUSIVE:
    case EH_TRUNCATION_INSUFFICIENT:
      return kInconclusive;
    default: return kInternal;
  }
}

int fail(eh_status s) {
  std::cerr << "error: " << eh_status_name(s) << ": " << eh_last_error() << '\n';
  return exit_code_for(s);
}

struct StrDeleter {
  void operator()(char* p) const { eh_string_free(p); }
};
using OwnedStr = std::unique_ptr<char, StrDeleter>;

struct RationalDeleter {
  void operator()(eh_rational* p) const { eh_rational_destroy(p); }
};
struct ConfigDeleter {
  void operator()(eh_config* p) const { eh_config_destroy(p); }
};
struct ReportDeleter {
  void operator()(eh_report* p) const { eh_report_destroy(p); }
};

// Writes to the path, or stdout for "-" or an empty path.
bool emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: IoError: cannot write '" << path << "'\n";
    return false;
  }
  out << text;
  return static_cast<bool>(out);
}

struct Options {
  std::string expr;
  int ydeg = 24;
  std::int64_t prime_bound = 10000;
  double margin_tol = 1e-6;
  std::string zeros_file;
  std::string json;
  std::string csv;
  std::string only;
  double T = 50;
  std::string s = "3";
};

std::optional<std::pair<double, double>> parse_complex(const std::string& text) {
  static const std::regex re(
      R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*(?:([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i)?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re) || (!m[1].matched && !m[2].matched)) return std::nullopt;
  const double re_part = m[1].matched ? std::stod(m[1].str()) : 0.0;
  double im_part = 0;
  if (m[2].matched) {
    im_part = m[3].matched ? std::stod(m[3].str()) : 1.0;
    if (m[2].str() == "-") im_part = -im_part;
  }
  return std::make_pair(re_part, im_part);
}

std::unique_ptr<eh_config, ConfigDeleter> make_config(const Options& o, eh_status& status) {
  std::unique_ptr<eh_config, ConfigDeleter> cfg(eh_config_create());
  status = EH_OK;
  if (!cfg) {
    status = EH_INTERNAL;
    return cfg;
  }
  if ((status = eh_config_set_ydeg(cfg.get(), o.ydeg)) != EH_OK) return cfg;
  if ((status = eh_config_set_prime_bound(cfg.get(), o.prime_bound)) != EH_OK) return cfg;
  if ((status = eh_config_set_margin_tol(cfg.get(), o.margin_tol)) != EH_OK) return cfg;
  std::string zeros = o.zeros_file;
  if (zeros.empty())
    if (const char* env = std::getenv("EULER_HORIZON_ZEROS")) zeros = env;
  status = eh_config_set_zeros_file(cfg.get(), zeros.empty() ? nullptr : zeros.c_str());
  return cfg;
}

int run_analyze(const Options& o) {
  eh_status st;
  auto cfg = make_config(o, st);
  if (st != EH_OK) return fail(st);
  eh_rational* raw = nullptr;
  if ((st = eh_rational_parse(o.expr.c_str(), &raw)) != EH_OK) return fail(st);
  std::unique_ptr<eh_rational, RationalDeleter> w(raw);
  eh_report* rep = nullptr;
  if ((st = eh_analyze(w.get(), cfg.get(), o.expr.c_str(), &rep)) != EH_OK) return fail(st);
  std::unique_ptr<eh_report, ReportDeleter> report(rep);
  char* json = nullptr;
  if ((st = eh_report_json(report.get(), &json)) != EH_OK) return fail(st);
  OwnedStr text(json);
  if (!emit(o.json, text.get())) return kInputError;
  if (eh_report_case(report.get()) == 0) {
    std::cerr << "inconclusive: no case could be decided at this truncation\n";
    return kInconclusive;
  }
  return kDecided;
}

int run_expand(const Options& o) {
  eh_rational* raw = nullptr;
  eh_status st = eh_rational_parse(o.expr.c_str(), &raw);
  if (st != EH_OK) return fail(st);
  std::unique_ptr<eh_rational, RationalDeleter> w(raw);
  char* csv = nullptr;
  if ((st = eh_expand_csv(w.get(), o.ydeg, &csv)) != EH_OK) return fail(st);
  OwnedStr text(csv);
  return emit(o.csv, text.get()) ? kDecided : kInputError;
}

int run_zeros(const Options& o) {
  eh_status st;
  auto cfg = make_config(o, st);
  if (st != EH_OK) return fail(st);
  eh_rational* raw = nullptr;
  if ((st = eh_rational_parse(o.expr.c_str(), &raw)) != EH_OK) return fail(st);
  std::unique_ptr<eh_rational, RationalDeleter> w(raw);
  char* csv = nullptr;
  if ((st = eh_zeros_csv(w.get(), cfg.get(), &csv)) != EH_OK) return fail(st);
  OwnedStr text(csv);
  return emit(o.csv, text.get()) ? kDecided : kInputError;
}

int run_atlas(const Options& o) {
  eh_status st;
  auto cfg = make_config(o, st);
  if (st != EH_OK) return fail(st);
  eh_rational* raw = nullptr;
  if ((st = eh_rational_parse(o.expr.c_str(), &raw)) != EH_OK) return fail(st);
  std::unique_ptr<eh_rational, RationalDeleter> w(raw);
  eh_report* rep = nullptr;
  if ((st = eh_analyze(w.get(), cfg.get(), o.expr.c_str(), &rep)) != EH_OK) return fail(st);
  std::unique_ptr<eh_report, ReportDeleter> report(rep);
  const bool as_json = !o.json.empty();
  char* out = nullptr;
  if ((st = eh_atlas(report.get(), o.T, as_json ? 1 : 0, &out)) != EH_OK) return fail(st);
  OwnedStr text(out);
  return emit(as_json ? o.json : o.csv, text.get()) ? kDecided : kInputError;
}

int run_eval(const Options& o) {
  const auto s = parse_complex(o.s);
  if (!s) {
    std::cerr << "error: InvalidArgument: cannot parse complex number '" << o.s << "'\n";
    return kInputError;
  }
  eh_status st;
  auto cfg = make_config(o, st);
  if (st != EH_OK) return fail(st);
  eh_rational* raw = nullptr;
  if ((st = eh_rational_parse(o.expr.c_str(), &raw)) != EH_OK) return fail(st);
  std::unique_ptr<eh_rational, RationalDeleter> w(raw);
  double vr = 0;
  double vi = 0;
  double tail = 0;
  st = eh_eval(w.get(), cfg.get(), s->first, s->second, &vr, &vi, &tail);
  if (st != EH_OK && st != EH_LOCAL_FACTOR_ZERO) return fail(st);
  char buf[256];
  if (!o.json.empty()) {
    std::snprintf(buf, sizeof buf,
                  "{\n  \"s\": {\"re\": %.17g, \"im\": %.17g},\n  \"prime_bound\": %lld,\n  \"value\": {\"re\": %.17g, "
                  "\"im\": %.17g},\n  \"tail_bound\": %s,\n  \"local_factor_zero\": %s\n}\n",
                  s->first, s->second, static_cast<long long>(o.prime_bound), vr, vi,
                  std::isfinite(tail) ? std::to_string(tail).c_str() : "null",
                  st == EH_LOCAL_FACTOR_ZERO ? "true" : "false");
    if (!emit(o.json, buf)) return kInputError;
  } else {
    std::snprintf(buf, sizeof buf, "value = %.15g%+.15gi\ntail_bound = %.3g\n", vr, vi, tail);
    std::fputs(buf, stdout);
    if (st == EH_LOCAL_FACTOR_ZERO) std::printf("local factor vanishes: %s\n", eh_last_error());
  }
  return kDecided;
}

int run_corpus_list() {
  char* out = nullptr;
  const eh_status st = eh_corpus_list_json(&out);
  if (st != EH_OK) return fail(st);
  OwnedStr text(out);
  std::fputs(text.get(), stdout);
  return kDecided;
}

int run_corpus(const Options& o) {
  eh_status st;
  auto cfg = make_config(o, st);
  if (st != EH_OK) return fail(st);
  const char* ids[] = {"ex51", "ex52a", "ex53a", "ex53b", "ex54a", "ex55"};
  int total = 0;
  int passed_count = 0;
  for (const char* id : ids) {
    if (!o.only.empty() && o.only != id) continue;
    ++total;
    int passed = 0;
    char* out = nullptr;
    st = eh_corpus_run(id, cfg.get(), &passed, &out);
    if (st != EH_OK) {
      std::printf("%s ERROR %s: %s\n", id, eh_status_name(st), eh_last_error());
      continue;
    }
    OwnedStr text(out);
    std::printf("%s\n", text.get());
    passed_count += passed;
  }
  if (total == 0) {
    std::cerr << "error: InvalidArgument: unknown or unsupported corpus id '" << o.only << "'\n";
    return kInputError;
  }
  std::printf("%d/%d passed\n", passed_count, total);
  return passed_count == total ? kDecided : kInternal;
}

void add_common(CLI::App* cmd, Options& o, bool needs_expr) {
  auto* e = cmd->add_option("--expr", o.expr, "rational function W(X,Y)");
  if (needs_expr) e->required();
  cmd->add_option("--ydeg", o.ydeg, "Y-degree truncation bound")->capture_default_str();
  cmd->add_option("--prime-bound", o.prime_bound, "largest prime scanned or multiplied")->capture_default_str();
  cmd->add_option("--margin-tol", o.margin_tol, "margin separating zeros from the line Re s = beta")->capture_default_str();
  cmd->add_option("--zeros-file", o.zeros_file, "zeta zero ordinates (default: $EULER_HORIZON_ZEROS)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euler product singularity analysis"};
  app.require_subcommand(1);
  Options o;

  auto* analyze = app.add_subcommand("analyze", "classify W and print a JSON report");
  add_common(analyze, o, true);
  analyze->add_option("--json", o.json, "output path for the report (default stdout)");

  auto* expand = app.add_subcommand("expand", "binomial product expansion as CSV n,m,c");
  add_common(expand, o, true);
  expand->add_option("--csv", o.csv, "output path (default stdout)");

  auto* zeros = app.add_subcommand("zeros", "local roots per prime as CSV");
  add_common(zeros, o, true);
  zeros->add_option("--csv", o.csv, "output path (default stdout)");

  auto* atlas = app.add_subcommand("atlas", "zeros and poles right of beta");
  add_common(atlas, o, true);
  atlas->add_option("--T", o.T, "height bound |Im s| < T")->capture_default_str();
  atlas->add_option("--csv", o.csv, "CSV output path (default stdout)");
  atlas->add_option("--json", o.json, "JSON output path instead of CSV");

  auto* eval = app.add_subcommand("eval", "partial Euler product at s");
  add_common(eval, o, true);
  eval->add_option("--s", o.s, "complex point, e.g. 3+0.5i")->capture_default_str();
  eval->add_option("--json", o.json, "JSON output path ('-' for stdout)");

  auto* corpus = app.add_subcommand("corpus", "built-in examples");
  corpus->require_subcommand(1);
  corpus->add_subcommand("list", "list corpus entries");
  auto* run = corpus->add_subcommand("run", "run corpus entries and compare with pinned values");
  run->add_option("--only", o.only, "run a single entry");
  add_common(run, o, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  if (*analyze) return run_analyze(o);
  if (*expand) return run_expand(o);
  if (*zeros) return run_zeros(o);
  if (*atlas) return run_atlas(o);
  if (*eval) return run_eval(o);
  if (*corpus) {
    if (corpus->got_subcommand("list")) return run_corpus_list();
    return run_corpus(o);
  }
  return kInputError;
}
