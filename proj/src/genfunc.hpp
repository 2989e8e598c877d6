#pragma once

#include <optional>
#include <vector>

#include "polynomial.hpp"

namespace saw {

// Numerator polynomial N_k of the strip second-moment series, k >= 1.
// N_k = (5+9x) N_{k-2} - 4 N_{k-4} with N_1..N_4 as seeds.
Polynomial nes_n(int k);

// Denominator polynomial G_k, same recurrence, seeds G_1..G_4.
Polynomial nes_g(int k);

// M_k(x) = 2x N_k(x) / G_k(x): coefficient of x^l is the exact second
// moment E(X^2) of the NES importance sampler on the k x l rectangle.
RationalSeries nes_moment_gf(int k);

// (k+1)^2 x / (1 - (k+1)^2 x): coefficient of x^l is E(X)^2 = (k+1)^{2l}.
RationalSeries first_moment_gf(int k);

// E(X)^2 for the k x l rectangle, i.e. (k+1)^{2l}.
BigInt nes_first_moment_sq(int k, unsigned l);

// Contact-weighted strip generating function T_k(x, y, a, b; 1) written
// as a ratio of four-variable polynomials. Both satisfy
//   P_k = (1 - x + y^2 (1+x)) P_{k-2} - y^2 P_{k-4}
// with Laurent seed values below k = 1.
struct StripMulti {
    MultiPolynomial n;
    MultiPolynomial g;
};
StripMulti strip_gf_multivariate(int k);

// Denominator F_k of the top-corner series T_{k,k} = b y^{k-1} / F_k.
// F_k = (1 - x + (1+x) y^2) F_{k-1} - y^2 F_{k-2}.
MultiPolynomial t_kk_denominator(int k);

// F_k / G_k when the division is exact (it should be, for every k).
std::optional<MultiPolynomial> t_kk_quotient(int k);

// Coefficients x^0..x^kmax of the directed-walk second-moment series
//   2x/(1+2x) * (3 (1-16x)^{-1/2} - 1).
std::vector<BigInt> directed_gf_coeffs(int kmax);

// Same coefficient via the closed binomial sum
//   sum_{i=0}^{k-1} 2^{k+i+1} binom(k+i-1, i).
BigInt directed_second_moment(int k);

// E(X) for the directed sampler on the k x k square: binom(2k, k).
BigInt directed_first_moment(int k);

}  // namespace saw
