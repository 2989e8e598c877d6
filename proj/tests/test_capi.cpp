#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <string>

#include "saw/capi.h"

namespace {

// Takes ownership of a char* returned through the API.
struct Str {
    char* p = nullptr;
    ~Str() { saw_string_free(p); }
    std::string get() const { return p ? p : ""; }
};

unsigned long long pow_ull(unsigned long long base, uint32_t e) {
    unsigned long long r = 1;
    while (e--) r *= base;
    return r;
}

}  // namespace

TEST_CASE("version and error state") {
    CHECK(std::string(saw_version()) == "1.0.0");
    saw_enum_report* r = nullptr;
    CHECK(saw_enumerate(SAW_MODEL_CROSSING, 0, 0, &r) == SAW_INVALID_ARGUMENT);
    CHECK(r == nullptr);
    CHECK(std::string(saw_last_error()).size() > 0);
}

TEST_CASE("exhaustive reports cross the boundary as decimal strings") {
    saw_enum_report* r = nullptr;
    REQUIRE(saw_enumerate(SAW_MODEL_CROSSING, 2, 0, &r) == SAW_OK);
    Str count, ws, ws2;
    CHECK(saw_enum_count(r, &count.p) == SAW_OK);
    CHECK(saw_enum_weighted_sum(r, &ws.p) == SAW_OK);
    CHECK(saw_enum_weighted_sq_sum(r, &ws2.p) == SAW_OK);
    CHECK(count.get() == "12");
    CHECK(ws.get() == "152");
    CHECK(ws2.get() == "2016");
    saw_enum_report_free(r);

    // k = 5 still counts but carries no weighted sums.
    REQUIRE(saw_enumerate(SAW_MODEL_CROSSING, 5, 0, &r) == SAW_OK);
    Str big;
    CHECK(saw_enum_count(r, &big.p) == SAW_OK);
    CHECK(big.get() == "1262816");
    Str none;
    CHECK(saw_enum_weighted_sum(r, &none.p) == SAW_EMPTY);
    CHECK(none.p == nullptr);
    saw_enum_report_free(r);

    CHECK(saw_enumerate(SAW_MODEL_CROSSING, 6, 0, &r) == SAW_LIMIT_EXCEEDED);
    CHECK(saw_enumerate(SAW_MODEL_UNTRAPPED, 2, 0, &r) == SAW_INVALID_ARGUMENT);
    CHECK(saw_enumerate(SAW_MODEL_CROSSING, 2, 0, nullptr) == SAW_INVALID_ARGUMENT);

    REQUIRE(saw_enumerate(SAW_MODEL_NES, 2, 2, &r) == SAW_OK);
    Str nes_ws;
    CHECK(saw_enum_weighted_sum(r, &nes_ws.p) == SAW_OK);
    CHECK(nes_ws.get() == "96");
    saw_enum_report_free(r);
}

TEST_CASE("sampled batches expose steps, probabilities and traces") {
    saw_run* run = nullptr;
    REQUIRE(saw_run_new(SAW_MODEL_CROSSING, 3, 0, 0, 40, 7, &run) == SAW_OK);
    CHECK(saw_run_count(run) == 40);

    for (uint64_t i = 0; i < 40; ++i) {
        Str steps, invp;
        uint32_t a = 0, b = 0;
        const uint8_t* sizes = nullptr;
        size_t len = 0;
        REQUIRE(saw_run_steps(run, i, &steps.p) == SAW_OK);
        REQUIRE(saw_run_invp(run, i, &invp.p) == SAW_OK);
        REQUIRE(saw_run_powers(run, i, &a, &b) == SAW_OK);
        REQUIRE(saw_run_per_step(run, i, &sizes, &len) == SAW_OK);

        CHECK(len == steps.get().size());
        unsigned long long product = 1;
        for (size_t j = 0; j < len; ++j) {
            CHECK(sizes[j] >= 1);
            CHECK(sizes[j] <= 3);
            product *= sizes[j];
        }
        CHECK(std::to_string(product) == invp.get());
        CHECK(product == pow_ull(2, a) * pow_ull(3, b));
    }

    Str bad;
    CHECK(saw_run_steps(run, 40, &bad.p) == SAW_INVALID_ARGUMENT);

    Str svg;
    REQUIRE(saw_run_render(run, 16, 8, &svg.p) == SAW_OK);
    CHECK(svg.get().substr(0, 4) == "<svg");
    CHECK(svg.get().find("</svg>") != std::string::npos);
    saw_run_free(run);
}

TEST_CASE("identical run arguments reproduce the batch") {
    saw_run* a = nullptr;
    saw_run* b = nullptr;
    REQUIRE(saw_run_new(SAW_MODEL_NES, 2, 5, 0, 25, 99, &a) == SAW_OK);
    REQUIRE(saw_run_new(SAW_MODEL_NES, 2, 5, 0, 25, 99, &b) == SAW_OK);
    for (uint64_t i = 0; i < 25; ++i) {
        Str sa, sb;
        REQUIRE(saw_run_steps(a, i, &sa.p) == SAW_OK);
        REQUIRE(saw_run_steps(b, i, &sb.p) == SAW_OK);
        CHECK(sa.get() == sb.get());
        size_t e = 0;
        for (char c : sa.get()) {
            CHECK(c != 'W');
            if (c == 'E') ++e;
        }
        CHECK(e == 5);
    }
    saw_run_free(a);
    saw_run_free(b);

    saw_run* u = nullptr;
    REQUIRE(saw_run_new(SAW_MODEL_UNTRAPPED, 0, 0, 25, 3, 5, &u) == SAW_OK);
    Str steps;
    REQUIRE(saw_run_steps(u, 0, &steps.p) == SAW_OK);
    CHECK(steps.get().size() == 25);
    const uint8_t* sizes = nullptr;
    size_t len = 0;
    REQUIRE(saw_run_per_step(u, 0, &sizes, &len) == SAW_OK);
    CHECK(len == 25);
    CHECK(sizes[0] == 4);
    saw_run_free(u);

    saw_run* bad = nullptr;
    CHECK(saw_run_new(static_cast<saw_model>(99), 2, 0, 0, 1, 0, &bad) ==
          SAW_INVALID_ARGUMENT);
    CHECK(bad == nullptr);
}

TEST_CASE("estimates carry an exact mean and summary stats") {
    saw_estimate* e = nullptr;
    REQUIRE(saw_estimate_new(SAW_MODEL_NES, 2, 2, 0, 2000, 21, 1, &e) == SAW_OK);
    CHECK(saw_estimate_samples(e) == 2000);

    Str num, den;
    REQUIRE(saw_estimate_mean(e, &num.p, &den.p) == SAW_OK);
    const double mean = std::strtod(num.get().c_str(), nullptr) /
                        std::strtod(den.get().c_str(), nullptr);
    CHECK(mean > 5.0);
    CHECK(mean < 13.0);  // true count is 9

    double lg = 0, se = 0, rv = 0;
    REQUIRE(saw_estimate_stats(e, &lg, &se, &rv) == SAW_OK);
    CHECK(lg == doctest::Approx(std::log10(mean)).epsilon(1e-12));
    CHECK(se > 0);
    CHECK(rv > 0);

    saw_estimate* e2 = nullptr;
    REQUIRE(saw_estimate_new(SAW_MODEL_NES, 2, 2, 0, 2000, 21, 1, &e2) == SAW_OK);
    Str num2, den2;
    REQUIRE(saw_estimate_mean(e2, &num2.p, &den2.p) == SAW_OK);
    CHECK(num.get() == num2.get());
    CHECK(den.get() == den2.get());
    saw_estimate_free(e2);

    saw_estimate* mt = nullptr;
    REQUIRE(saw_estimate_new(SAW_MODEL_NES, 2, 2, 0, 2000, 21, 2, &mt) == SAW_OK);
    CHECK(saw_estimate_samples(mt) == 2000);
    saw_estimate_free(mt);
    saw_estimate_free(e);

    saw_estimate* empty = nullptr;
    CHECK(saw_estimate_new(SAW_MODEL_NES, 2, 2, 0, 0, 21, 1, &empty) == SAW_EMPTY);
    CHECK(empty == nullptr);
}

TEST_CASE("moment tables") {
    saw_moments* m = nullptr;
    REQUIRE(saw_moments_new(SAW_MODEL_NES, 2, 4, &m) == SAW_OK);
    CHECK(saw_moments_rows(m) == 4);
    Str m1, m2;
    REQUIRE(saw_moments_row(m, 1, &m1.p, &m2.p) == SAW_OK);
    CHECK(m1.get() == "9");
    CHECK(m2.get() == "10");
    Str m1b, m2b;
    REQUIRE(saw_moments_row(m, 2, &m1b.p, &m2b.p) == SAW_OK);
    CHECK(m1b.get() == "81");
    CHECK(m2b.get() == "96");
    Str bad1, bad2;
    CHECK(saw_moments_row(m, 0, &bad1.p, &bad2.p) == SAW_INVALID_ARGUMENT);
    CHECK(saw_moments_row(m, 5, &bad1.p, &bad2.p) == SAW_INVALID_ARGUMENT);
    saw_moments_free(m);

    REQUIRE(saw_moments_new(SAW_MODEL_DIRECTED, 0, 3, &m) == SAW_OK);
    CHECK(saw_moments_rows(m) == 3);
    Str d1, d2;
    REQUIRE(saw_moments_row(m, 1, &d1.p, &d2.p) == SAW_OK);
    CHECK(d1.get() == "4");
    // E(X^2) = sum of 1/p over the two walks EN and NE, each with p = 1/2.
    CHECK(d2.get() == "4");
    Str d1b, d2b;
    REQUIRE(saw_moments_row(m, 2, &d1b.p, &d2b.p) == SAW_OK);
    CHECK(d1b.get() == "36");
    CHECK(d2b.get() == "40");
    saw_moments_free(m);

    CHECK(saw_moments_new(SAW_MODEL_CROSSING, 2, 3, &m) == SAW_INVALID_ARGUMENT);
}

TEST_CASE("singularity analysis handles") {
    saw_asym* a = nullptr;
    REQUIRE(saw_asym_new(2, &a) == SAW_OK);
    Str rho, alpha;
    REQUIRE(saw_asym_rho(a, &rho.p) == SAW_OK);
    REQUIRE(saw_asym_alpha(a, &alpha.p) == SAW_OK);
    CHECK(rho.get().substr(0, 7) == "0.10391");
    CHECK(alpha.get().substr(0, 6) == "1.0367");
    saw_asym_free(a);

    REQUIRE(saw_asym_new(12, &a) == SAW_OK);
    double res = 0, next = 0, ratio_ref = 0, ratio_corr = 0;
    REQUIRE(saw_asym_check(a, 0, 0, &res, &next, &ratio_ref) == SAW_OK);
    REQUIRE(saw_asym_check(a, 0, 1, &res, &next, &ratio_corr) == SAW_OK);
    CHECK(ratio_corr < ratio_ref);
    CHECK(saw_asym_check(a, 2, 0, &res, &next, &ratio_ref) ==
          SAW_INVALID_ARGUMENT);
    saw_asym_free(a);

    CHECK(saw_asym_new(1, &a) == SAW_INVALID_ARGUMENT);
    CHECK(a == nullptr);
}

TEST_CASE("growth bound handles") {
    saw_bounds* b = nullptr;
    REQUIRE(saw_bounds_new(2, &b) == SAW_OK);
    double lambda = 0, beta = 0;
    REQUIRE(saw_bounds_values(b, &lambda, &beta) == SAW_OK);
    CHECK(lambda == doctest::Approx(1.3179806292130023).epsilon(1e-12));
    CHECK(beta > 1.8);
    CHECK(saw_bounds_rows(b) == 2);
    Str count, ws;
    REQUIRE(saw_bounds_row(b, 2, &count.p, &ws.p) == SAW_OK);
    CHECK(count.get() == "12");
    CHECK(ws.get() == "152");
    Str bad1, bad2;
    CHECK(saw_bounds_row(b, 3, &bad1.p, &bad2.p) == SAW_INVALID_ARGUMENT);
    saw_bounds_free(b);

    CHECK(saw_bounds_new(5, &b) == SAW_INVALID_ARGUMENT);
    CHECK(saw_bounds_new(0, &b) == SAW_INVALID_ARGUMENT);
}

TEST_CASE("exhaustive crossing figure") {
    Str svg;
    REQUIRE(saw_render_crossing_walks(2, 20, 4, &svg.p) == SAW_OK);
    const std::string s = svg.get();
    size_t n = 0;
    for (size_t pos = s.find("<polyline"); pos != std::string::npos;
         pos = s.find("<polyline", pos + 1))
        ++n;
    CHECK(n == 12);
    CHECK(saw_render_crossing_walks(0, 20, 4, &svg.p) == SAW_INVALID_ARGUMENT);
}
