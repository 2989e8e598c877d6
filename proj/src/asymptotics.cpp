#include "asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace saw {

namespace {

Float50 to_f50(const BigRat& r) {
    return Float50(boost::multiprecision::numerator(r)) /
           Float50(boost::multiprecision::denominator(r));
}

Float50 pow2_f50(int e) {
    return boost::multiprecision::ldexp(Float50(1), e);
}

}  // namespace

Float50 dominant_pole(int k) {
    if (k < 1) throw std::invalid_argument("dominant_pole: k must be >= 1");
    if (k == 1) return Float50(1) / 4;  // G_1 = 1 - 4x; root outside (0, 1/9)

    const Polynomial g = nes_g(k);
    BigRat lo(0);
    BigRat hi = BigRat(1, 9) - BigRat(1, 1000000000);
    // G_k(0) = 1 > 0 and the dominant root is the only one in (0, 1/9).
    if (g.eval(hi) >= 0)
        throw std::runtime_error("dominant_pole: no sign change in (0, 1/9)");
    for (int i = 0; i < 80; ++i) {
        BigRat mid = (lo + hi) / 2;
        if (g.eval(mid) > 0) lo = mid; else hi = mid;
    }

    Float50 x = to_f50((lo + hi) / 2);
    const Polynomial gd = g.derivative();
    for (int i = 0; i < 60; ++i) {
        Float50 f = g.eval(x);
        Float50 fp = gd.eval(x);
        Float50 dx = f / fp;
        x -= dx;
        if (abs(dx) < abs(x) * Float50("1e-48")) break;
    }
    if (!(abs(g.eval(x)) < Float50("1e-30")))
        throw std::runtime_error("dominant_pole: Newton refinement did not converge");
    return x;
}

Float50 residue_at_pole(int k, const Float50& rho) {
    if (k < 1) throw std::invalid_argument("residue_at_pole: k must be >= 1");
    Float50 gd = nes_g(k).derivative().eval(rho);
    if (abs(gd) < Float50("1e-30"))
        throw std::runtime_error("residue_at_pole: G_k'(rho) vanishes; pole is not simple");
    return -2 * nes_n(k).eval(rho) / gd;
}

Float50 rho_expansion_reference(int k) {
    const Float50 p2 = pow2_f50(k + 1);
    const Float50 p4 = p2 * p2, p8 = p4 * p2, p16 = p8 * p2;
    const double kk = k;
    return 1 / p2 + Float50(9) / (2 * p4) - Float50(12 * kk - 23) / (2 * p8) +
           (Float50(36 * kk * kk - 54 * kk) - Float50(87) / 8) / p16;
}

Float50 rho_expansion_corrected(int k) {
    const Float50 p2 = pow2_f50(k + 1);
    const Float50 p4 = p2 * p2, p8 = p4 * p2, p16 = p8 * p2;
    const double kk = k;
    return 1 / p2 - Float50(3 * (2 * kk - 3)) / (2 * p4) +
           Float50(27 * kk * kk - 66 * kk + 23) / (2 * p8) -
           Float50(3) * (192 * kk * kk * kk - 624 * kk * kk + 420 * kk + 29) / (8 * p16);
}

Float50 alpha_expansion_reference(int k) {
    const Float50 p2 = pow2_f50(k + 2);
    const Float50 p4 = pow2_f50(2 * (k + 1)), p8 = pow2_f50(3 * (k + 1));
    const double kk = k;
    return Float50(3) / 2 - Float50(9 * kk - 4) / p2 +
           Float50(27 * kk * kk - 48 * kk + 1) / (2 * p4) -
           Float50(81 * kk * kk * kk - 306 * kk * kk + 75 * kk + 140) / (2 * p8);
}

Float50 alpha_expansion_corrected(int k) {
    const Float50 p2 = pow2_f50(k + 2);
    const Float50 p4 = pow2_f50(2 * (k + 1)), p8 = pow2_f50(3 * (k + 1));
    const double kk = k;
    return Float50(3) / 2 - Float50(9 * kk - 4) / p2 +
           Float50(54 * kk * kk - 60 * kk + 1) / (2 * p4) -
           Float50(729 * kk * kk * kk - 1296 * kk * kk + 162 * kk + 280) / (4 * p8);
}

namespace {

ExpansionCheck make_check(const Float50& value, const Float50& prediction,
                          const Float50& next_order) {
    ExpansionCheck c;
    c.prediction = prediction;
    c.residual = value - prediction;
    c.next_order = next_order;
    c.ratio = abs(c.residual) / next_order;
    return c;
}

}  // namespace

AsymptoticData verify_expansions(int k) {
    if (k < 2) throw std::invalid_argument("verify_expansions: k must be >= 2");
    AsymptoticData d;
    d.k = k;
    d.rho = dominant_pole(k);
    d.alpha = residue_at_pole(k, d.rho);

    const Float50 kf(k);
    const Float50 next_rho = kf * kf * kf / pow(Float50(32), k);
    const Float50 next_alpha = kf * kf * kf * kf / pow(Float50(16), k);

    d.rho_reference = make_check(d.rho, rho_expansion_reference(k), next_rho);
    d.rho_corrected = make_check(d.rho, rho_expansion_corrected(k), next_rho);
    d.alpha_reference = make_check(d.alpha, alpha_expansion_reference(k), next_alpha);
    d.alpha_corrected = make_check(d.alpha, alpha_expansion_corrected(k), next_alpha);
    return d;
}

VarianceLaw variance_law_check(int k, int l) {
    if (k < 1 || l < 1) throw std::invalid_argument("variance_law_check: k, l must be >= 1");
    VarianceLaw v;
    v.k = k;
    v.l = l;
    const BigInt m2 = nes_moment_gf(k).coeff(static_cast<unsigned>(l));
    const BigInt m1sq = nes_first_moment_sq(k, static_cast<unsigned>(l));
    v.exact_variance = m2 - m1sq;
    v.predicted_variance = 3 * int_pow(2, static_cast<unsigned>((k + 1) * l) - 1);
    v.ratio = (Float50(v.exact_variance) / Float50(v.predicted_variance)).convert_to<double>();
    v.relvar_exact = (Float50(m2) / Float50(m1sq) - 1).convert_to<double>();
    v.relvar_predicted =
        (Float50(3) / 2 * pow(pow2_f50(k + 1) / Float50(BigInt(k + 1) * (k + 1)), l))
            .convert_to<double>();
    v.relvar_ratio = v.relvar_exact / v.relvar_predicted;
    return v;
}

namespace {

bool on_cut(const Float50& re) {
    return re >= -1 && re <= Float50(-1) / 9;
}

}  // namespace

Complex50 algebraic_s(const Complex50& x) {
    if (x.imag() == 0 && on_cut(x.real()))
        throw std::domain_error("algebraic_s: x lies on the branch cut [-1, -1/9]");
    const Complex50 w = 5 + 9 * x;
    const Complex50 root = 3 * sqrt((1 + x) * (1 + 9 * x));
    Complex50 s = (w - root) / 4;
    Complex50 t = (w + root) / 4;
    // The two roots of s + 1/s = w/2 have product 1; return the small one.
    return abs(s) <= abs(t) ? s : t;
}

Float50 algebraic_s_real(const Float50& x) {
    if (on_cut(x))
        throw std::domain_error("algebraic_s: x lies on the branch cut [-1, -1/9]");
    const Float50 w = 5 + 9 * x;
    const Float50 root = 3 * sqrt((1 + x) * (1 + 9 * x));
    Float50 s = (w - root) / 4;
    Float50 t = (w + root) / 4;
    return abs(s) <= abs(t) ? s : t;
}

namespace {

Float50 p_weight(const Float50& s, const Float50& x) { return 1 + 2 * x - 2 * s * (1 - x); }
Float50 q_weight(const Float50& s) { return -1 - s; }

// Closed forms for G_m and N_m in terms of S = S(x).
void gns_closed(int m, const Float50& x, Float50& g_out, Float50& n_out) {
    const Float50 s = algebraic_s_real(x);
    const Float50 si = 1 / s;
    const int j = (m % 2 == 0) ? m / 2 : (m - 1) / 2;
    const Float50 sj = pow(s, j);
    const Float50 sij = 1 / sj;
    const Float50 p_si = p_weight(si, x), p_s = p_weight(s, x);
    const Float50 q_si = q_weight(si), q_s = q_weight(s);
    const Float50 twoj = pow2_f50(j);
    if (m % 2 == 0) {
        g_out = -(twoj / 3) * (p_si * sj + p_s * sij);
        n_out = -(twoj / 3) * (q_si * sj + q_s * sij - 3 * (sj - sij * s) / (s - 1));
    } else {
        g_out = -(twoj / (1 + s)) * (p_si * sj * s + p_s * sij);
        n_out = -(twoj / (1 + s)) * (q_si * sj * s + q_s * sij - 3 * (sj - sij) / (1 - si));
    }
}

}  // namespace

GnsCheck gns_identity_check(int k, const std::vector<Float50>& xs, const Float50& tol) {
    if (k < 1) throw std::invalid_argument("gns_identity_check: k must be >= 1");
    if (xs.empty()) throw std::invalid_argument("gns_identity_check: no sample points");
    const Polynomial g = nes_g(k), n = nes_n(k);
    GnsCheck out;
    out.max_rel_err_g = 0;
    out.max_rel_err_n = 0;
    for (const Float50& x : xs) {
        Float50 gc, nc;
        gns_closed(k, x, gc, nc);
        const Float50 gp = g.eval(x), np = n.eval(x);
        out.max_rel_err_g = std::max(out.max_rel_err_g, abs(gc - gp) / abs(gp));
        out.max_rel_err_n = std::max(out.max_rel_err_n, abs(nc - np) / abs(np));
    }
    out.ok = out.max_rel_err_g <= tol && out.max_rel_err_n <= tol;
    return out;
}

BoundsReport growth_bounds(const std::vector<EnumReport>& crossing_reports) {
    if (crossing_reports.empty())
        throw std::invalid_argument("growth_bounds: empty report table");
    BoundsReport out;
    out.rows = crossing_reports;
    Float50 lam = 0, beta = 0;
    const Float50 sqrt2 = sqrt(Float50(2));
    int expect = 1;
    for (const EnumReport& r : crossing_reports) {
        if (r.model != Model::crossing || r.k != expect++)
            throw std::invalid_argument(
                "growth_bounds: reports must be crossing walks for contiguous k from 1");
        if (!r.weighted_sum)
            throw std::invalid_argument("growth_bounds: weighted sums required");
        const Float50 e = Float50(1) / ((r.k + 1) * (r.k + 1));
        lam = std::max(lam, pow(Float50(r.count), e));
        beta = std::max(beta, pow(sqrt2 * Float50(*r.weighted_sum), e));
    }
    out.lambda_lb = lam.convert_to<double>();
    out.beta_lb = beta.convert_to<double>();
    return out;
}

}  // namespace saw
