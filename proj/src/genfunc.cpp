#include "genfunc.hpp"

#include <stdexcept>

namespace saw {

namespace {

void require_k(int k, int min) {
    if (k < min) throw std::invalid_argument("strip height k out of range");
}

Polynomial strip_recurrence(int k, const Polynomial seeds[4]) {
    if (k <= 4) return seeds[k - 1];
    const Polynomial step({5, 9});  // 5 + 9x
    Polynomial pm4 = seeds[(k % 2 == 0) ? 1 : 0];  // index k-4 ancestor parity seed
    Polynomial pm2 = seeds[(k % 2 == 0) ? 3 : 2];
    Polynomial cur;
    for (int i = (k % 2 == 0) ? 6 : 5; i <= k; i += 2) {
        cur = step * pm2 - pm4.scaled(4);
        pm4 = pm2;
        pm2 = cur;
    }
    return cur;
}

}  // namespace

Polynomial nes_n(int k) {
    require_k(k, 1);
    static const Polynomial seeds[4] = {
        Polynomial({2}),            // N_1
        Polynomial({5, 3}),         // N_2
        Polynomial({11, 9}),        // N_3
        Polynomial({23, 54, 27}),   // N_4
    };
    return strip_recurrence(k, seeds);
}

Polynomial nes_g(int k) {
    require_k(k, 1);
    static const Polynomial seeds[4] = {
        Polynomial({1, -4}),             // G_1
        Polynomial({1, -9, -6}),         // G_2
        Polynomial({1, -19, -18}),       // G_3
        Polynomial({1, -36, -99, -54}),  // G_4
    };
    return strip_recurrence(k, seeds);
}

RationalSeries nes_moment_gf(int k) {
    return RationalSeries(Polynomial::monomial(2, 1) * nes_n(k), nes_g(k));
}

RationalSeries first_moment_gf(int k) {
    require_k(k, 1);
    BigInt m = BigInt(k + 1) * (k + 1);
    return RationalSeries(Polynomial::monomial(m, 1), Polynomial({1, -m}));
}

BigInt nes_first_moment_sq(int k, unsigned l) {
    require_k(k, 1);
    return int_pow(BigInt(k + 1), 2 * l);
}

namespace {

using MP = MultiPolynomial;

MP mp_const(int v) { return MP::constant(v); }

// Shared kernel coefficient 1 - x + y^2 (1 + x).
MP kernel_coeff() {
    MP x = MP::var_x(), y = MP::var_y();
    return mp_const(1) - x + y * y * (mp_const(1) + x);
}

MP strip_multi_recurrence(int k, const MP seeds[4], int first_seed_index) {
    // seeds[i] is the value at index first_seed_index + i; the
    // recurrence has step 2, so parity picks the seed pair.
    int last_seed = first_seed_index + 3;
    if (k <= last_seed) return seeds[k - first_seed_index];
    const MP coeff = kernel_coeff();
    const MP y2 = MP::var_y() * MP::var_y();
    int parity = (k - first_seed_index) % 2;
    MP pm4 = seeds[parity];
    MP pm2 = seeds[parity + 2];
    MP cur;
    for (int i = first_seed_index + parity + 4; i <= k; i += 2) {
        cur = coeff * pm2 - y2 * pm4;
        pm4 = pm2;
        pm2 = cur;
    }
    return cur;
}

}  // namespace

StripMulti strip_gf_multivariate(int k) {
    require_k(k, 1);
    MP x = MP::var_x(), y = MP::var_y(), a = MP::var_a(), b = MP::var_b();
    MP one = mp_const(1);

    // N_{-1} = (1 - x - xy)(b - y)/y^2, N_0 = (b - xb + xy)/y,
    // N_1 = 1 + b, N_2 = 1 - x + y + by(1 + x).
    const MP n_seeds[4] = {
        (one - x - x * y) * (b - y) * MP::monomial(1, 0, -2, 0, 0),
        (b - x * b + x * y) * MP::monomial(1, 0, -1, 0, 0),
        one + b,
        one - x + y + b * y * (one + x),
    };
    // G_0 = (x-1)ab/y - (x+1)(a-1), G_1 = 1 - a - ab,
    // G_2 = (1-x)(1-a) - (x+1)yab, G_3 = (1-x-xy)(1-a) - yab(x+y+xy).
    const MP g_seeds[4] = {
        (x - one) * a * b * MP::monomial(1, 0, -1, 0, 0) - (x + one) * (a - one),
        one - a - a * b,
        (one - x) * (one - a) - (x + one) * y * a * b,
        (one - x - x * y) * (one - a) - y * a * b * (x + y + x * y),
    };

    StripMulti out;
    out.n = strip_multi_recurrence(k, n_seeds, -1);
    out.g = strip_multi_recurrence(k, g_seeds, 0);
    return out;
}

MultiPolynomial t_kk_denominator(int k) {
    require_k(k, 1);
    MP x = MP::var_x(), y = MP::var_y(), a = MP::var_a(), b = MP::var_b();
    MP one = mp_const(1);
    MP f1 = (one - a - a * b) * (one - a + a * b);
    MP f2 = (one - a + b * y * a) * ((one - x) * (one - a) - (x + one) * y * a * b);
    if (k == 1) return f1;
    if (k == 2) return f2;
    const MP coeff = kernel_coeff();
    const MP y2 = MP::var_y() * MP::var_y();
    MP prev = f1, cur = f2;
    for (int i = 3; i <= k; ++i) {
        MP next = coeff * cur - y2 * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::optional<MultiPolynomial> t_kk_quotient(int k) {
    return divide_exact(t_kk_denominator(k), strip_gf_multivariate(k).g);
}

std::vector<BigInt> directed_gf_coeffs(int kmax) {
    if (kmax < 0) throw std::invalid_argument("directed_gf_coeffs: negative order");
    // A(x) = 3 (1-16x)^{-1/2} - 1 has coefficients 3 binom(2n,n) 4^n - [n=0],
    // and the prefactor 2x/(1+2x) convolves them with 2 (-2)^j, shifted by 1.
    std::vector<BigInt> a(kmax + 1);
    for (int n = 0; n <= kmax; ++n) {
        a[n] = 3 * binomial(2 * n, n) * int_pow(4, n);
        if (n == 0) a[n] -= 1;
    }
    std::vector<BigInt> d(kmax + 1);
    for (int k = 1; k <= kmax; ++k) {
        BigInt acc = 0;
        BigInt f = 2;  // 2 (-2)^{k-1-m} as m runs down from k-1
        for (int m = k - 1; m >= 0; --m) {
            acc += f * a[m];
            f *= -2;
        }
        d[k] = acc;
    }
    return d;
}

BigInt directed_second_moment(int k) {
    if (k < 1) throw std::invalid_argument("directed_second_moment: k must be >= 1");
    BigInt acc = 0;
    for (int i = 0; i <= k - 1; ++i)
        acc += int_pow(2, k + i + 1) * binomial(k + i - 1, i);
    return acc;
}

BigInt directed_first_moment(int k) {
    if (k < 0) throw std::invalid_argument("directed_first_moment: k must be >= 0");
    return binomial(2 * k, k);
}

}  // namespace saw
