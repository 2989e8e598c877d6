// Acceptance gate: ten end-to-end criteria, one verdict line each.
// Exits nonzero if any criterion fails. Randomized criteria run on
// pinned seeds so the gate is deterministic.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "asymptotics.hpp"
#include "estimator.hpp"
#include "exact_enum.hpp"
#include "genfunc.hpp"
#include "samplers.hpp"

using namespace saw;

namespace {

struct Verdict {
    bool ok = false;
    std::string detail;
};

std::string fmt(double x, const char* spec = "%.6g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, x);
    return buf;
}

Verdict nes_moments_exact() {
    int pairs = 0;
    for (int k = 1; k <= 4; ++k) {
        RationalSeries gf = nes_moment_gf(k);
        for (int l = 1; l <= 6; ++l) {
            const EnumReport rep = enumerate_nes(k, l);
            if (rep.count != int_pow(k + 1, l)) return {false, "count mismatch"};
            if (!rep.weighted_sum) return {false, "missing weighted sum"};
            if (gf.coeff(static_cast<unsigned>(l)) != *rep.weighted_sum)
                return {false,
                        "series coefficient vs enumeration mismatch at k=" +
                            std::to_string(k) + ", l=" + std::to_string(l)};
            ++pairs;
        }
    }
    RationalSeries g2 = nes_moment_gf(2);
    if (g2.coeff(1) != 10 || g2.coeff(2) != 96)
        return {false, "k=2 second moments are not 10, 96"};
    return {true, std::to_string(pairs) +
                      " (k,l) pairs agree exactly; k=2 row starts 10, 96"};
}

Verdict directed_three_way() {
    const std::vector<BigInt> coeffs = directed_gf_coeffs(12);
    for (int k = 1; k <= 12; ++k) {
        const BigInt closed = directed_second_moment(k);
        const EnumReport rep = enumerate_directed(k);
        if (closed != coeffs[static_cast<size_t>(k)])
            return {false, "closed sum vs series at k=" + std::to_string(k)};
        if (!rep.weighted_sum || closed != *rep.weighted_sum)
            return {false, "closed sum vs enumeration at k=" + std::to_string(k)};
        if (rep.count != binomial(2 * k, k))
            return {false, "count vs binomial at k=" + std::to_string(k)};
    }
    return {true,
            "closed sum, series and enumeration agree for k <= 12 "
            "(k=2 gives 40); counts match binom(2k,k)"};
}

Verdict crossing_ground_truth() {
    const EnumReport one = enumerate_crossing(1);
    const EnumReport two = enumerate_crossing(2);
    const EnumReport three_a = enumerate_crossing(3);
    const EnumReport three_b = enumerate_crossing(3);
    if (one.count != 2) return {false, "c(1) != 2"};
    if (two.count != 12) return {false, "c(2) != 12"};
    if (!two.weighted_sum || *two.weighted_sum != 152)
        return {false, "d(2) != 152"};
    if (three_a.count != three_b.count ||
        *three_a.weighted_sum != *three_b.weighted_sum)
        return {false, "k=3 enumeration unstable across runs"};
    if (three_a.count != 184 || *three_a.weighted_sum != 49776)
        return {false, "frozen k=3 values changed: c(3)=" +
                           three_a.count.str() + ", d(3)=" +
                           three_a.weighted_sum->str()};
    return {true,
            "c(1)=2, c(2)=12, d(2)=152; repeated runs reproduce the frozen "
            "c(3)=184, d(3)=49776"};
}

Verdict estimator_coverage() {
    int covered = 0;
    for (std::uint64_t seed = 101; seed <= 120; ++seed) {
        RunSpec spec;
        spec.model = Model::crossing;
        spec.k = 3;
        spec.samples = 50000;
        spec.seed = seed;
        const EstimateResult r = estimate(run_moments(spec));
        const double mean = r.mean.convert_to<double>();
        if (std::abs(mean - 184.0) <= 3.0 * r.std_error) ++covered;
    }
    return {covered >= 18,
            "3-standard-error interval covered the exact count 184 in " +
                std::to_string(covered) +
                "/20 runs of 50000 samples (seeds 101..120, need >= 18)"};
}

Verdict large_square_magnitude() {
    RunSpec spec;
    spec.model = Model::crossing;
    spec.k = 10;
    spec.samples = 10000;
    spec.seed = 1;
    const EstimateResult r = estimate(run_moments(spec));
    const bool ok = r.log10_mean >= 23.3 && r.log10_mean <= 24.7;
    return {ok,
            "log10(mean) = " + fmt(r.log10_mean, "%.4f") +
                " for 10000 samples at k=10, inside [23.3, 24.7]; the exact "
                "count is 1.5687e24 and classic sampling estimates of it "
                "are 1.78e24 and 1.38e24 (run is stochastic; the band, not "
                "the point value, is the contract)"};
}

Verdict pole_and_residue_expansions() {
    const Float50 rho2 = dominant_pole(2);
    const Float50 closed = (sqrt(Float50(105)) - 9) / 12;
    const Float50 diff = abs(rho2 - closed);
    const bool ok_closed = diff < Float50("1e-20");

    double ref_max = 0, corr_max = 0;
    for (int k = 10; k <= 16; ++k) {
        const AsymptoticData d = verify_expansions(k);
        ref_max = std::max(ref_max, d.rho_reference.ratio.convert_to<double>());
        ref_max = std::max(ref_max, d.alpha_reference.ratio.convert_to<double>());
        corr_max = std::max(corr_max, d.rho_corrected.ratio.convert_to<double>());
        corr_max = std::max(corr_max, d.alpha_corrected.ratio.convert_to<double>());
    }
    const bool ok_ratio = ref_max <= 10.0;

    const Float50 alpha20 = residue_at_pole(20, dominant_pole(20));
    const double gap20 = (alpha20 - Float50(3) / 2).convert_to<double>();
    const bool ok_alpha = std::abs(gap20) < 1e-4;

    std::string detail =
        "|rho_2 - (sqrt(105)-9)/12| = " + fmt(diff.convert_to<double>()) +
        (ok_closed ? " (< 1e-20)" : " (>= 1e-20)") +
        "; |alpha_20 - 3/2| = " + fmt(std::abs(gap20)) +
        (ok_alpha ? " (< 1e-4)" : " (>= 1e-4)") +
        "; k=10..16 residual/next-order ratios: reference set max " +
        fmt(ref_max, "%.3g") + ", corrected set max " + fmt(corr_max, "%.3g") +
        " against the required bound 10. Neither coefficient set meets the "
        "bound: the first omitted term of the corrected expansions carries "
        "coefficients near 72k^3 (rho) and 46k^4 (alpha), so the bare "
        "k^3/32^k and k^4/16^k magnitudes undercount it by that factor, and "
        "the reference set is further off by orders of magnitude from the "
        "4^-k term on (its higher coefficients are inconsistent with the "
        "kernel equation the expansions derive from). The corrected set does "
        "track the true values: its k=12 relative error is 1.3e-9.";
    return {ok_closed && ok_ratio && ok_alpha, detail};
}

Verdict variance_power_law() {
    const VarianceLaw v = variance_law_check(10, 8);
    const bool ok = v.ratio >= 0.8 && v.ratio <= 1.2;
    return {ok, "Var / ((3/2) 2^{(k+1)l}) = " + fmt(v.ratio, "%.5f") +
                    " at k=10, l=8, inside [0.8, 1.2]"};
}

Verdict trap_oracle_equivalence() {
    RandomStream rng(424242);
    long long checks = 0, traps = 0, disagreements = 0;
    for (int i = 0; i < 10000; ++i) {
        const int len = 1 + static_cast<int>(rng.uniform_below(200));
        const Sample s = sample_untrapped(len, rng);
        Walk w{Point{0, 0}, {}};
        PointSet seen;
        seen.insert(w.start);
        for (Dir d : s.walk.steps) {
            const Point head = w.end();
            for (Dir c : kAllDirs) {
                if (seen.count(step(head, c))) continue;
                ++checks;
                const bool fast = is_trapping_step(w, c);
                const bool slow = is_trapping_step_oracle(w, c);
                if (fast != slow) ++disagreements;
                if (fast) ++traps;
            }
            w.steps.push_back(d);
            seen.insert(w.end());
        }
    }
    return {disagreements == 0,
            std::to_string(disagreements) + " disagreements over " +
                std::to_string(checks) + " candidate steps of 10000 walks (" +
                std::to_string(traps) + " trapping candidates seen)"};
}

Verdict multivariate_consistency() {
    for (int k = 1; k <= 6; ++k) {
        const StripMulti s = strip_gf_multivariate(k);
        if (s.n.specialize_prob() * nes_g(k) != nes_n(k) * s.g.specialize_prob())
            return {false, "specialization identity fails at k=" +
                               std::to_string(k)};
        const auto q = t_kk_quotient(k);
        if (!q) return {false, "F_" + std::to_string(k) +
                                   " is not divisible by G_" + std::to_string(k)};
        if (*q * s.g != t_kk_denominator(k))
            return {false, "quotient check fails at k=" + std::to_string(k)};
    }
    return {true,
            "specialization collapses the four-variable series onto the "
            "one-variable pair, and G_k divides F_k, exactly for k <= 6"};
}

Verdict growth_bound_table() {
    std::vector<EnumReport> rows;
    std::vector<BoundsReport> bounds;
    for (int k = 1; k <= 3; ++k) {
        rows.push_back(enumerate_crossing(k));
        bounds.push_back(growth_bounds(rows));
    }
    for (int i = 1; i < 3; ++i) {
        if (bounds[i].lambda_lb < bounds[i - 1].lambda_lb)
            return {false, "lambda bound not monotone in the table prefix"};
        if (bounds[i].beta_lb < bounds[i - 1].beta_lb)
            return {false, "beta bound not monotone in the table prefix"};
    }
    const double want = std::pow(12.0, 1.0 / 9.0);
    if (std::abs(bounds[1].lambda_lb - want) > 1e-12)
        return {false, "k <= 2 truncation does not give 12^(1/9)"};
    return {true, "lambda_lb rises " + fmt(bounds[0].lambda_lb, "%.5f") +
                      " -> " + fmt(bounds[1].lambda_lb, "%.5f") + " -> " +
                      fmt(bounds[2].lambda_lb, "%.5f") +
                      "; the k <= 2 value equals 12^(1/9) = 1.3180 and "
                      "beta_lb reaches " + fmt(bounds[2].beta_lb, "%.5f")};
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* name;
        Verdict (*run)();
    };
    const Entry entries[] = {
        {1, "exact strip moments", &nes_moments_exact},
        {2, "directed moments three ways", &directed_three_way},
        {3, "crossing-walk ground truth", &crossing_ground_truth},
        {4, "estimator coverage", &estimator_coverage},
        {5, "large-square order of magnitude", &large_square_magnitude},
        {6, "pole and residue expansions", &pole_and_residue_expansions},
        {7, "variance power law", &variance_power_law},
        {8, "trap-detection equivalence", &trap_oracle_equivalence},
        {9, "multivariate consistency", &multivariate_consistency},
        {10, "growth-constant bounds", &growth_bound_table},
    };

    int failed = 0;
    for (const Entry& e : entries) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = e.run();
        } catch (const std::exception& ex) {
            v = {false, std::string("exception: ") + ex.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        std::printf("criterion %d (%s): %s - %s [%.1fs]\n", e.id, e.name,
                    v.ok ? "PASS" : "FAIL", v.detail.c_str(), secs);
        std::fflush(stdout);
        if (!v.ok) ++failed;
    }
    std::printf("acceptance: %d/10 criteria passed\n", 10 - failed);
    return failed == 0 ? 0 : 1;
}
