#include <cstdlib>
#include <cstring>
#include <json.hpp>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "euler_horizon/analytic.hpp"
#include "euler_horizon/classifier.hpp"
#include "euler_horizon/corpus.hpp"
#include "euler_horizon/error.hpp"
#include "euler_horizon/euler_horizon.h"
#include "euler_horizon/report.hpp"

struct eh_rational {
  eh::BivariateRational w;
};

struct eh_config {
  eh::RunConfig cfg;
};

struct eh_report {
  eh::CaseReport report;
  std::optional<std::string> zeros_file;
};

namespace {

thread_local std::string last_error;

static_assert(static_cast<int>(eh::ErrorCode::Internal) + 1 == EH_INTERNAL, "status table out of sync");

eh_status to_status(eh::ErrorCode c) { return static_cast<eh_status>(static_cast<int>(c) + 1); }

template <class F>
eh_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const eh::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return EH_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return EH_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

eh_status null_argument() {
  last_error = "null argument";
  return EH_INVALID_ARGUMENT;
}

eh::Abscissae abscissae_for(const eh::BivariateRational& w, int ydeg) {
  const int m = std::max(ydeg, 2 * w.degree_y());
  return eh::compute_alpha_beta(eh::series_expand(w, m), w);
}

}  // namespace

extern "C" {

const char* eh_status_name(eh_status status) {
  if (status == EH_OK) return "Ok";
  if (status < EH_OK || status > EH_INTERNAL) return "Unknown";
  return eh::error_code_name(static_cast<eh::ErrorCode>(static_cast<int>(status) - 1)).data();
}

const char* eh_last_error(void) { return last_error.c_str(); }

void eh_string_free(char* s) { std::free(s); }

eh_config* eh_config_create(void) {
  try {
    return new eh_config{};
  } catch (...) {
    return nullptr;
  }
}

void eh_config_destroy(eh_config* cfg) { delete cfg; }

eh_status eh_config_set_ydeg(eh_config* cfg, int ydeg) {
  if (!cfg) return null_argument();
  if (ydeg < 4) {
    last_error = "Y-degree bound must be at least 4";
    return EH_INVALID_ARGUMENT;
  }
  cfg->cfg.ydeg_bound = ydeg;
  return EH_OK;
}

eh_status eh_config_set_prime_bound(eh_config* cfg, int64_t bound) {
  if (!cfg) return null_argument();
  if (bound < 100) {
    last_error = "prime bound must be at least 100";
    return EH_INVALID_ARGUMENT;
  }
  cfg->cfg.prime_bound = bound;
  return EH_OK;
}

eh_status eh_config_set_margin_tol(eh_config* cfg, double tol) {
  if (!cfg) return null_argument();
  if (!(tol >= 0)) {
    last_error = "margin tolerance must be non-negative";
    return EH_INVALID_ARGUMENT;
  }
  cfg->cfg.margin_tol = tol;
  return EH_OK;
}

eh_status eh_config_set_density_threshold(eh_config* cfg, double threshold) {
  if (!cfg) return null_argument();
  if (!(threshold >= 0 && threshold <= 1)) {
    last_error = "density threshold must lie in [0, 1]";
    return EH_INVALID_ARGUMENT;
  }
  cfg->cfg.density_threshold = threshold;
  return EH_OK;
}

eh_status eh_config_set_zeros_file(eh_config* cfg, const char* path) {
  if (!cfg) return null_argument();
  if (path) {
    cfg->cfg.zeros_file = std::string(path);
  } else {
    cfg->cfg.zeros_file.reset();
  }
  return EH_OK;
}

eh_status eh_rational_parse(const char* text, eh_rational** out) {
  if (!text || !out) return null_argument();
  *out = nullptr;
  return guarded([&] {
    *out = new eh_rational{eh::parse_expression(text)};
    return EH_OK;
  });
}

void eh_rational_destroy(eh_rational* w) { delete w; }

eh_status eh_rational_to_string(const eh_rational* w, char** out) {
  if (!w || !out) return null_argument();
  return guarded([&] {
    *out = dup_string(eh::to_string(w->w));
    return EH_OK;
  });
}

eh_status eh_analyze(const eh_rational* w, const eh_config* cfg, const char* expr, eh_report** out) {
  if (!w || !cfg || !out) return null_argument();
  *out = nullptr;
  return guarded([&] {
    auto* r = new eh_report{eh::classify(w->w, cfg->cfg, expr ? expr : ""), cfg->cfg.zeros_file};
    *out = r;
    return EH_OK;
  });
}

void eh_report_destroy(eh_report* r) { delete r; }

int eh_report_case(const eh_report* r) { return r && r->report.case_id ? *r->report.case_id : 0; }

eh_status eh_report_json(const eh_report* r, char** out) {
  if (!r || !out) return null_argument();
  return guarded([&] {
    *out = dup_string(eh::report_json(r->report));
    return EH_OK;
  });
}

eh_status eh_expand_csv(const eh_rational* w, int ydeg, char** out) {
  if (!w || !out) return null_argument();
  return guarded([&] {
    if (ydeg < 1) throw eh::Error(eh::ErrorCode::InvalidArgument, "Y-degree bound must be positive");
    const eh::TruncatedSeries s = eh::series_expand(w->w, ydeg);
    *out = dup_string(eh::expansion_csv(eh::peel(s, eh::slope_max(w->w))));
    return EH_OK;
  });
}

eh_status eh_zeros_csv(const eh_rational* w, const eh_config* cfg, char** out) {
  if (!w || !cfg || !out) return null_argument();
  return guarded([&] {
    const eh::Abscissae ab = abscissae_for(w->w, cfg->cfg.ydeg_bound);
    std::vector<eh::LocalZeroRecord> records;
    eh::scan_primes(w->w, ab.beta, cfg->cfg.prime_bound, cfg->cfg.margin_tol, &records);
    *out = dup_string(eh::zeros_csv(records, ab.beta));
    return EH_OK;
  });
}

eh_status eh_atlas(const eh_report* r, double T, int as_json, char** out) {
  if (!r || !out) return null_argument();
  return guarded([&] {
    std::vector<double> zeros;
    if (r->zeros_file) zeros = eh::load_zeros(*r->zeros_file);
    const eh::SingularityAtlas atlas = eh::atlas_for(r->report, T, zeros);
    *out = dup_string(as_json ? eh::atlas_json(atlas) : eh::atlas_csv(atlas));
    return EH_OK;
  });
}

eh_status eh_eval(const eh_rational* w, const eh_config* cfg, double re, double im, double* value_re,
                  double* value_im, double* tail_bound) {
  if (!w || !cfg || !value_re || !value_im || !tail_bound) return null_argument();
  return guarded([&] {
    eh::Slope alpha(0, 1);
    if (!w->w.is_degenerate()) alpha = abscissae_for(w->w, cfg->cfg.ydeg_bound).alpha;
    const eh::EulerValue v = eh::euler_eval(w->w, alpha, {re, im}, cfg->cfg.prime_bound);
    *value_re = v.value.real();
    *value_im = v.value.imag();
    *tail_bound = v.tail_bound;
    if (v.local_zero) {
      last_error = "local factor vanishes at p = " + std::to_string(v.zero_prime);
      return EH_LOCAL_FACTOR_ZERO;
    }
    return EH_OK;
  });
}

eh_status eh_zeta(double re, double im, double* value_re, double* value_im) {
  if (!value_re || !value_im) return null_argument();
  return guarded([&] {
    const eh::Complex z = eh::zeta({re, im});
    *value_re = z.real();
    *value_im = z.imag();
    return EH_OK;
  });
}

eh_status eh_corpus_list_json(char** out) {
  if (!out) return null_argument();
  return guarded([&] {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const eh::CorpusEntry& e : eh::corpus()) {
      nlohmann::ordered_json j;
      j["id"] = e.id;
      j["expr"] = e.expr;
      j["supported"] = e.supported;
      j["expected_case"] = e.supported ? nlohmann::ordered_json(e.expected_case) : nlohmann::ordered_json(nullptr);
      j["expected_beta"] = e.supported ? nlohmann::ordered_json(e.expected_beta.to_string()) : nlohmann::ordered_json(nullptr);
      j["notes"] = e.notes;
      arr.push_back(j);
    }
    *out = dup_string(arr.dump(2) + "\n");
    return EH_OK;
  });
}

eh_status eh_corpus_run(const char* id, const eh_config* cfg, int* passed, char** out) {
  if (!id || !cfg || !passed || !out) return null_argument();
  return guarded([&] {
    const eh::CorpusEntry* e = eh::find_corpus_entry(id);
    if (!e) throw eh::Error(eh::ErrorCode::InvalidArgument, std::string("unknown corpus entry ") + id);
    const eh::CorpusResult res = eh::run_corpus_entry(*e, cfg->cfg);
    std::ostringstream os;
    os << res.id << ' ' << (res.passed ? "PASS" : "FAIL") << " case="
       << (res.got_case ? std::to_string(*res.got_case) : std::string("unset")) << " expected=" << e->expected_case
       << " beta=" << res.got_beta << ' ' << res.message;
    *passed = res.passed ? 1 : 0;
    *out = dup_string(os.str());
    return EH_OK;
  });
}

}  // extern "C"
