#include "saw/capi.h"

#include <cmath>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "asymptotics.hpp"
#include "estimator.hpp"
#include "exact_enum.hpp"
#include "genfunc.hpp"
#include "lattice.hpp"

/* Handle definitions. The header only forward-declares these. */

struct saw_run {
    saw::RunSpec spec;
    std::vector<saw::Sample> samples;
};

struct saw_estimate {
    saw::EstimateResult result;
    saw::BigInt mean_num;
    saw::BigInt mean_den;
};

struct saw_enum_report {
    saw::EnumReport report;
};

struct saw_moments {
    std::vector<std::pair<saw::BigInt, saw::BigInt>> rows;  // (E(X)^2, E(X^2))
};

struct saw_asym {
    saw::AsymptoticData data;
};

struct saw_bounds {
    saw::BoundsReport report;
};

namespace {

thread_local std::string g_last_error;

saw_status fail(saw_status code, const char* what) {
    g_last_error = what ? what : "unknown error";
    return code;
}

// Runs fn, translating C++ exceptions into status codes.
template <typename Fn>
saw_status guarded(Fn&& fn) {
    try {
        fn();
        return SAW_OK;
    } catch (const saw::LimitExceeded& e) {
        return fail(SAW_LIMIT_EXCEEDED, e.what());
    } catch (const saw::EmptyAccumulator& e) {
        return fail(SAW_EMPTY, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(SAW_INVALID_ARGUMENT, e.what());
    } catch (const std::domain_error& e) {
        return fail(SAW_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(SAW_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(SAW_INTERNAL, e.what());
    }
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(::operator new(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

saw::Model to_model(saw_model m) {
    switch (m) {
        case SAW_MODEL_CROSSING: return saw::Model::crossing;
        case SAW_MODEL_DIRECTED: return saw::Model::directed;
        case SAW_MODEL_NES: return saw::Model::nes;
        case SAW_MODEL_UNTRAPPED: return saw::Model::untrapped;
    }
    throw std::invalid_argument("unknown model code");
}

saw_status checked_sample(const saw_run* run, uint64_t i,
                          const saw::Sample** s) {
    if (!run) return fail(SAW_INVALID_ARGUMENT, "run is null");
    if (i >= run->samples.size())
        return fail(SAW_INVALID_ARGUMENT, "sample index out of range");
    *s = &run->samples[i];
    return SAW_OK;
}

saw_status render_samples(const std::vector<saw::Sample>& samples, int cell,
                          int columns, int box_side, char** svg_out) {
    return guarded([&] {
        std::vector<saw::Walk> walks;
        std::vector<std::vector<std::uint8_t>> sizes;
        walks.reserve(samples.size());
        sizes.reserve(samples.size());
        for (const saw::Sample& s : samples) {
            walks.push_back(s.walk);
            sizes.push_back(s.trace.per_step);
        }
        saw::RenderOptions opt;
        if (cell > 0) opt.cell = cell;
        if (columns > 0) opt.columns = columns;
        opt.box_side = box_side;
        *svg_out = copy_string(saw::render_svg(walks, sizes, opt));
    });
}

}  // namespace

extern "C" {

const char* saw_last_error(void) { return g_last_error.c_str(); }

const char* saw_version(void) { return "1.0.0"; }

void saw_string_free(char* s) { ::operator delete(s); }

/* ---------- sampled walk batches ---------- */

saw_status saw_run_new(saw_model model, int k, int l, int length,
                       uint64_t n, uint64_t seed, saw_run** out) {
    if (!out) return fail(SAW_INVALID_ARGUMENT, "out is null");
    *out = nullptr;
    return guarded([&] {
        auto run = std::make_unique<saw_run>();
        run->spec.model = to_model(model);
        run->spec.k = k;
        run->spec.l = l;
        run->spec.length = length;
        run->spec.samples = n;
        run->spec.seed = seed;
        run->samples = saw::run_samples(run->spec);
        *out = run.release();
    });
}

void saw_run_free(saw_run* run) { delete run; }

uint64_t saw_run_count(const saw_run* run) {
    return run ? run->samples.size() : 0;
}

saw_status saw_run_steps(const saw_run* run, uint64_t i, char** out) {
    if (!out) return fail(SAW_INVALID_ARGUMENT, "out is null");
    const saw::Sample* s = nullptr;
    if (saw_status st = checked_sample(run, i, &s)) return st;
    return guarded([&] { *out = copy_string(saw::steps_to_string(s->walk.steps)); });
}

saw_status saw_run_invp(const saw_run* run, uint64_t i, char** out) {
    if (!out) return fail(SAW_INVALID_ARGUMENT, "out is null");
    const saw::Sample* s = nullptr;
    if (saw_status st = checked_sample(run, i, &s)) return st;
    return guarded([&] { *out = copy_string(s->trace.inv_p().str()); });
}

saw_status saw_run_powers(const saw_run* run, uint64_t i,
                          uint32_t* a, uint32_t* b) {
    if (!a || !b) return fail(SAW_INVALID_ARGUMENT, "a/b is null");
    const saw::Sample* s = nullptr;
    if (saw_status st = checked_sample(run, i, &s)) return st;
    *a = static_cast<uint32_t>(s->trace.a);
    *b = static_cast<uint32_t>(s->trace.b);
    return SAW_OK;
}

saw_status saw_run_per_step(const saw_run* run, uint64_t i,
                            const uint8_t** data, size_t* len) {
    if (!data || !len) return fail(SAW_INVALID_ARGUMENT, "data/len is null");
    const saw::Sample* s = nullptr;
    if (saw_status st = checked_sample(run, i, &s)) return st;
    *data = s->trace.per_step.data();
    *len = s->trace.per_step.size();
    return SAW_OK;
}

saw_status saw_run_render(const saw_run* run, int cell, int columns,
                          char** svg_out) {
    if (!svg_out) return fail(SAW_INVALID_ARGUMENT, "svg_out is null");
    if (!run) return fail(SAW_INVALID_ARGUMENT, "run is null");
    const saw::Model m = run->spec.model;
    const bool boxed = m == saw::Model::crossing || m == saw::Model::directed;
    return render_samples(run->samples, cell, columns,
                          boxed ? run->spec.k : -1, svg_out);
}

/* ---------- estimation ---------- */

saw_status saw_estimate_new(saw_model model, int k, int l, int length,
                            uint64_t n, uint64_t seed, int threads,
                            saw_estimate** out) {
    if (!out) return fail(SAW_INVALID_ARGUMENT, "out is null");
    *out = nullptr;
    return guarded([&] {
        saw::RunSpec spec;
        spec.model = to_model(model);
        spec.k = k;
        spec.l = l;
        spec.length = length;
        spec.samples = n;
        spec.seed = seed;
        spec.threads = threads > 1 ? static_cast<unsigned>(threads) : 1;
        saw::MomentAccumulator acc = saw::run_moments(spec);
        auto e = std::make_unique<saw_estimate>();
        e->result = saw::estimate(acc);
        e->mean_num = boost::multiprecision::numerator(e->result.mean);
        e->mean_den = boost::multiprecision::denominator(e->result.mean);
        *out = e.release();
    });
}

void saw_estimate_free(saw_estimate* e) { delete e; }

uint64_t saw_estimate_samples(const saw_estimate* e) {
    return e ? e->result.n : 0;
}

saw_status saw_estimate_mean(const saw_estimate* e, char** num, char** den) {
    if (!e) return fail(SAW_INVALID_ARGUMENT, "estimate is null");
    if (!num || !den) return fail(SAW_INVALID_ARGUMENT, "num/den is null");
    return guarded([&] {
        *num = copy_string(e->mean_num.str());
        *den = copy_string(e->mean_den.str());
    });
}

saw_status saw_estimate_stats(const saw_estimate* e, double* log10_mean,
                              double* std_error, double* relative_variance) {
    if (!e) return fail(SAW_INVALID_ARGUMENT, "estimate is null");
    if (log10_mean) *log10_mean = e->result.log10_mean;
    if (std_error) *std_error = e->result.std_error;
    if (relative_variance) *relative_variance = e->result.relative_variance;
    return SAW_OK;
}

/* ---------- exact enumeration ---------- */

saw_status saw_enumerate(saw_model model, int k, int l,
                         saw_enum_report** out) {
    if (!out) return fail(SAW_INVALID_ARGUMENT, "out is null");
    *out = nullptr;
    return guarded([&] {
        const saw::EnumLimits limits;
        saw::EnumReport rep;
        switch (to_model(model)) {
            case saw::Model::crossing: rep = saw::enumerate_crossing(k, limits); break;
            case saw::Model::directed: rep = saw::enumerate_directed(k, limits); break;
            case saw::Model::nes: rep = saw::enumerate_nes(k, l, limits); break;
            default:
                throw std::invalid_argument(
                    "enumerate: untrapped walks have no finite enumeration");
        }
        *out = new saw_enum_report{std::move(rep)};
    });
}

void saw_enum_report_free(saw_enum_report* r) { delete r; }

saw_status saw_enum_count(const saw_enum_report* r, char** out) {
    if (!r || !out) return fail(SAW_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = copy_string(r->report.count.str()); });
}

saw_status saw_enum_weighted_sum(const saw_enum_report* r, char** out) {
    if (!r || !out) return fail(SAW_INVALID_ARGUMENT, "null argument");
    if (!r->report.weighted_sum)
        return fail(SAW_EMPTY, "report has no weighted sum");
    return guarded([&] { *out = copy_string(r->report.weighted_sum->str()); });
}

saw_status saw_enum_weighted_sq_sum(const saw_enum_report* r, char** out) {
    if (!r || !out) return fail(SAW_INVALID_ARGUMENT, "null argument");
    if (!r->report.weighted_sq_sum)
        return fail(SAW_EMPTY, "report has no weighted square sum");
    return guarded([&] { *out = copy_string(r->report.weighted_sq_sum->str()); });
}

saw_status saw_render_crossing_walks(int k, int cell, int columns,
                                     char** svg_out) {
    if (!svg_out) return fail(SAW_INVALID_ARGUMENT, "svg_out is null");
    std::vector<saw::Sample> all;
    if (saw_status st = guarded([&] {
            all = saw::crossing_support(k, saw::EnumLimits{});
        }))
        return st;
    return render_samples(all, cell, columns, k, svg_out);
}

/* ---------- exact moment tables ---------- */

saw_status saw_moments_new(saw_model model, int k, int lmax,
                           saw_moments** out) {
    if (!out) return fail(SAW_INVALID_ARGUMENT, "out is null");
    *out = nullptr;
    return guarded([&] {
        if (lmax < 1) throw std::invalid_argument("moments: lmax must be >= 1");
        auto m = std::make_unique<saw_moments>();
        switch (to_model(model)) {
            case saw::Model::nes: {
                saw::RationalSeries gf = saw::nes_moment_gf(k);
                for (int l = 1; l <= lmax; ++l)
                    m->rows.emplace_back(
                        saw::nes_first_moment_sq(k, static_cast<unsigned>(l)),
                        gf.coeff(static_cast<unsigned>(l)));
                break;
            }
            case saw::Model::directed: {
                for (int kk = 1; kk <= lmax; ++kk) {
                    saw::BigInt m1 = saw::directed_first_moment(kk);
                    m->rows.emplace_back(m1 * m1, saw::directed_second_moment(kk));
                }
                break;
            }
            default:
                throw std::invalid_argument(
                    "moments: closed moment tables exist for nes and directed only");
        }
        *out = m.release();
    });
}

void saw_moments_free(saw_moments* m) { delete m; }

int saw_moments_rows(const saw_moments* m) {
    return m ? static_cast<int>(m->rows.size()) : 0;
}

saw_status saw_moments_row(const saw_moments* m, int idx,
                           char** mean_sq, char** second_moment) {
    if (!m || !mean_sq || !second_moment)
        return fail(SAW_INVALID_ARGUMENT, "null argument");
    if (idx < 1 || idx > static_cast<int>(m->rows.size()))
        return fail(SAW_INVALID_ARGUMENT, "row index out of range");
    return guarded([&] {
        *mean_sq = copy_string(m->rows[idx - 1].first.str());
        *second_moment = copy_string(m->rows[idx - 1].second.str());
    });
}

/* ---------- singularity analysis ---------- */

saw_status saw_asym_new(int k, saw_asym** out) {
    if (!out) return fail(SAW_INVALID_ARGUMENT, "out is null");
    *out = nullptr;
    return guarded([&] { *out = new saw_asym{saw::verify_expansions(k)}; });
}

void saw_asym_free(saw_asym* a) { delete a; }

saw_status saw_asym_rho(const saw_asym* a, char** out) {
    if (!a || !out) return fail(SAW_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = copy_string(a->data.rho.str(50)); });
}

saw_status saw_asym_alpha(const saw_asym* a, char** out) {
    if (!a || !out) return fail(SAW_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = copy_string(a->data.alpha.str(50)); });
}

saw_status saw_asym_check(const saw_asym* a, int which, int variant,
                          double* residual, double* next_order,
                          double* ratio) {
    if (!a) return fail(SAW_INVALID_ARGUMENT, "handle is null");
    const saw::ExpansionCheck* c = nullptr;
    if (which == 0)
        c = variant == 0 ? &a->data.rho_reference
          : variant == 1 ? &a->data.rho_corrected : nullptr;
    else if (which == 1)
        c = variant == 0 ? &a->data.alpha_reference
          : variant == 1 ? &a->data.alpha_corrected : nullptr;
    if (!c) return fail(SAW_INVALID_ARGUMENT, "which must be 0/1, variant 0/1");
    if (residual) *residual = c->residual.convert_to<double>();
    if (next_order) *next_order = c->next_order.convert_to<double>();
    if (ratio) *ratio = c->ratio.convert_to<double>();
    return SAW_OK;
}

/* ---------- growth-constant bounds ---------- */

saw_status saw_bounds_new(int kmax, saw_bounds** out) {
    if (!out) return fail(SAW_INVALID_ARGUMENT, "out is null");
    *out = nullptr;
    return guarded([&] {
        if (kmax < 1) throw std::invalid_argument("bounds: kmax must be >= 1");
        const saw::EnumLimits limits;
        std::vector<saw::EnumReport> rows;
        for (int k = 1; k <= kmax; ++k)
            rows.push_back(saw::enumerate_crossing(k, limits));
        *out = new saw_bounds{saw::growth_bounds(rows)};
    });
}

void saw_bounds_free(saw_bounds* b) { delete b; }

saw_status saw_bounds_values(const saw_bounds* b, double* lambda_lb,
                             double* beta_lb) {
    if (!b) return fail(SAW_INVALID_ARGUMENT, "handle is null");
    if (lambda_lb) *lambda_lb = b->report.lambda_lb;
    if (beta_lb) *beta_lb = b->report.beta_lb;
    return SAW_OK;
}

int saw_bounds_rows(const saw_bounds* b) {
    return b ? static_cast<int>(b->report.rows.size()) : 0;
}

saw_status saw_bounds_row(const saw_bounds* b, int k, char** count,
                          char** weighted_sum) {
    if (!b || !count || !weighted_sum)
        return fail(SAW_INVALID_ARGUMENT, "null argument");
    if (k < 1 || k > static_cast<int>(b->report.rows.size()))
        return fail(SAW_INVALID_ARGUMENT, "row index out of range");
    return guarded([&] {
        const saw::EnumReport& r = b->report.rows[static_cast<size_t>(k - 1)];
        *count = copy_string(r.count.str());
        *weighted_sum = copy_string(r.weighted_sum->str());
    });
}

}  // extern "C"
