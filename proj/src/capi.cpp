#include "postulation/postulation.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <string>

#include "checked.hpp"
#include "combinatorics.hpp"
#include "config.hpp"
#include "engine.hpp"
#include "gf.hpp"
#include "rng.hpp"

using namespace postulation;

struct pst_config {
  SchemeConfig cfg;
};

struct pst_verdict {
  Verdict v;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
pst_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    return fn();
  } catch (const RangeError& e) {
    g_last_error = e.what();
    return PST_ERR_RANGE;
  } catch (const OverflowError& e) {
    g_last_error = e.what();
    return PST_ERR_OVERFLOW;
  } catch (const SamplingError& e) {
    g_last_error = e.what();
    return PST_ERR_SAMPLING;
  } catch (const UnsupportedSplitError& e) {
    g_last_error = e.what();
    return PST_ERR_UNSUPPORTED;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return PST_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PST_ERR_INTERNAL;
  }
}

pst_status invalid(const char* msg) {
  g_last_error = msg;
  return PST_ERR_INVALID_ARGUMENT;
}

bool to_placement(pst_placement in, Placement& out) {
  switch (in) {
    case PST_FREE: out = Placement::Free; return true;
    case PST_IN_HYPERPLANE: out = Placement::InHyperplane; return true;
    case PST_ON_FIRST_RULING: out = Placement::OnFirstRuling; return true;
    case PST_ON_SECOND_RULING: out = Placement::OnSecondRuling; return true;
    case PST_SUPPORT_ON_QUADRIC: out = Placement::SupportOnQuadric; return true;
  }
  return false;
}

pst_status add_component(pst_config* cfg, const ComponentSpec& base, int64_t count,
                         pst_placement placement) {
  if (cfg == nullptr) return invalid("configuration handle is null");
  ComponentSpec spec = base;
  if (!to_placement(placement, spec.placement)) return invalid("unknown placement value");
  if (count < 0) {
    g_last_error = "component count must be nonnegative";
    return PST_ERR_RANGE;
  }
  // Additions are validated eagerly and rolled back on failure, so a handle
  // that accepted every call is always in a usable state.
  return guarded([&] {
    const size_t before = cfg->cfg.components.size();
    try {
      cfg->cfg.add(spec, count);
      cfg->cfg.validate();
    } catch (...) {
      cfg->cfg.components.resize(before);
      throw;
    }
    return PST_OK;
  });
}

void copy_name(char (&dst)[PST_SCHEDULE_NAME_LEN], const std::string& src) {
  const size_t n = std::min(src.size(), static_cast<size_t>(PST_SCHEDULE_NAME_LEN - 1));
  std::memcpy(dst, src.data(), n);
  dst[n] = '\0';
}

}  // namespace

extern "C" {

const char* pst_status_name(pst_status status) {
  switch (status) {
    case PST_OK: return "ok";
    case PST_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case PST_ERR_RANGE: return "range_error";
    case PST_ERR_OVERFLOW: return "overflow";
    case PST_ERR_SAMPLING: return "sampling_error";
    case PST_ERR_UNSUPPORTED: return "unsupported_split";
    case PST_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* pst_last_error(void) { return g_last_error.c_str(); }

const char* pst_version(void) { return "1.0.0"; }

uint64_t pst_default_prime(void) { return kDefaultPrime; }

uint64_t pst_derive_seed(uint64_t base, uint64_t index) { return derive_seed(base, index); }

pst_config* pst_config_new(int32_t n, int32_t d) {
  g_last_error.clear();
  if (n < 2 || d < 1) {
    g_last_error = "require ambient dimension >= 2 and degree >= 1";
    return nullptr;
  }
  pst_config* cfg = new (std::nothrow) pst_config;
  if (cfg == nullptr) {
    g_last_error = "out of memory";
    return nullptr;
  }
  cfg->cfg.n = n;
  cfg->cfg.d = d;
  return cfg;
}

void pst_config_free(pst_config* cfg) { delete cfg; }

pst_status pst_config_with_hyperplane(pst_config* cfg) {
  if (cfg == nullptr) return invalid("configuration handle is null");
  return guarded([&] {
    cfg->cfg.with_hyperplane = true;
    try {
      cfg->cfg.validate();
    } catch (...) {
      cfg->cfg.with_hyperplane = false;
      throw;
    }
    return PST_OK;
  });
}

pst_status pst_config_with_quadric(pst_config* cfg) {
  if (cfg == nullptr) return invalid("configuration handle is null");
  return guarded([&] {
    cfg->cfg.with_quadric = true;
    try {
      cfg->cfg.validate();
    } catch (...) {
      cfg->cfg.with_quadric = false;
      throw;
    }
    return PST_OK;
  });
}

pst_status pst_config_add_lines(pst_config* cfg, int64_t count, pst_placement placement) {
  return add_component(cfg, ComponentSpec::line(), count, placement);
}

pst_status pst_config_add_fat_space(pst_config* cfg, int32_t space_dim, int32_t multiplicity,
                                    int64_t count, pst_placement placement) {
  return add_component(cfg, ComponentSpec::fat_space(space_dim, multiplicity), count, placement);
}

pst_status pst_config_add_fat_points(pst_config* cfg, int32_t multiplicity, int64_t count,
                                     pst_placement placement) {
  return add_component(cfg, ComponentSpec::fat_point(multiplicity), count, placement);
}

pst_status pst_config_add_collinear(pst_config* cfg, int64_t points_on_line, int64_t count,
                                    pst_placement placement) {
  return add_component(cfg, ComponentSpec::collinear(points_on_line), count, placement);
}

pst_status pst_config_add_sundials(pst_config* cfg, int64_t count, pst_placement placement) {
  return add_component(cfg, ComponentSpec::sundial(), count, placement);
}

pst_status pst_expected(const pst_config* cfg, pst_expected_counts* out) {
  if (cfg == nullptr || out == nullptr) return invalid("null handle or out pointer");
  return guarded([&] {
    const ExpectedCounts c = expected_counts(cfg->cfg);
    out->ambient = c.ambient;
    out->conditions = c.conditions;
    out->expected_h0 = c.expected_h0;
    out->expected_h1 = c.expected_h1;
    out->virtual_h0 = c.virtual_h0;
    return PST_OK;
  });
}

pst_status pst_classify_exception(int32_t n, int32_t d, int32_t space_dim, int32_t multiplicity,
                                  int64_t lines, int32_t* exceptional, int64_t* virtual_defect) {
  if (exceptional == nullptr || virtual_defect == nullptr) return invalid("null out pointer");
  return guarded([&] {
    const ExceptionInfo info = classify_exception(n, d, space_dim, multiplicity, lines);
    *exceptional = info.exceptional ? 1 : 0;
    *virtual_defect = info.virtual_defect;
    return PST_OK;
  });
}

pst_status pst_verify(const pst_config* cfg, int32_t trials, uint64_t seed, uint64_t prime,
                      pst_verdict** out) {
  if (cfg == nullptr || out == nullptr) return invalid("null handle or out pointer");
  *out = nullptr;
  return guarded([&] {
    const Gf gf(prime == 0 ? kDefaultPrime : prime);
    Verdict v = verify_postulation(cfg->cfg, trials, seed, gf);
    *out = new pst_verdict{std::move(v)};
    return PST_OK;
  });
}

void pst_verdict_free(pst_verdict* v) { delete v; }

int64_t pst_verdict_best_rank(const pst_verdict* v) { return v->v.best_rank; }
int64_t pst_verdict_observed_h0(const pst_verdict* v) { return v->v.observed_h0; }
int64_t pst_verdict_observed_h1(const pst_verdict* v) { return v->v.observed_h1; }
int64_t pst_verdict_defect(const pst_verdict* v) { return v->v.defect; }
int64_t pst_verdict_virtual_defect(const pst_verdict* v) { return v->v.virtual_defect; }
int32_t pst_verdict_certified(const pst_verdict* v) { return v->v.certified ? 1 : 0; }
int32_t pst_verdict_trials(const pst_verdict* v) { return v->v.trials_run; }

int64_t pst_verdict_trial_rank(const pst_verdict* v, int32_t index) {
  if (v == nullptr || index < 0 || index >= static_cast<int32_t>(v->v.trial_ranks.size()))
    return -1;
  return v->v.trial_ranks[static_cast<size_t>(index)];
}

pst_status pst_schedule(int32_t n, int32_t d, pst_schedule_report* out) {
  if (out == nullptr) return invalid("null out pointer");
  return guarded([&] {
    const Schedule s = verify_schedule(n, d);
    *out = pst_schedule_report{};
    out->n = s.n;
    out->d = s.d;
    out->lines = s.square.lines;
    out->collinear_points = s.square.collinear_points;
    out->kept_lines = s.residual.kept_lines;
    out->sundial_pairs = s.residual.sundial_pairs;
    out->specialized_lines = s.residual.specialized_lines;
    out->has_trace = s.has_trace ? 1 : 0;
    out->trace_lines = s.trace.specialized_lines;
    out->trace_points = s.trace.specialized_points;
    out->has_ruling = s.has_ruling ? 1 : 0;
    out->ruling_lines = s.ruling.ruling_lines;
    out->surface_points = s.ruling.surface_points;
    const int32_t count =
        static_cast<int32_t>(std::min<size_t>(s.checks.size(), PST_SCHEDULE_MAX_CHECKS));
    out->num_checks = count;
    for (int32_t i = 0; i < count; ++i) {
      copy_name(out->checks[i].name, s.checks[static_cast<size_t>(i)].name);
      out->checks[i].holds = s.checks[static_cast<size_t>(i)].holds ? 1 : 0;
    }
    out->all_hold = s.all_hold ? 1 : 0;
    return PST_OK;
  });
}

}  // extern "C"
