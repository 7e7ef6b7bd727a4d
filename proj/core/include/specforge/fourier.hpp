#pragma once

// Fourier transforms of the discrete factors (direct sums and closed forms),
// truncated infinite products with rigorous tail bounds, integer zero sets,
// the zero-set partition check, the sinc factorization identity and the
// lower-bound constant c. Convention: f^(xi) = integral e^{-2 pi i xi x} df(x).
//
// This is the only layer that computes in floating point; every truncation
// carries an explicit bound, and summation orders are fixed (sorted atoms,
// ascending factor index) so results are reproducible bit for bit.

#include "specforge/ladder.hpp"
#include "specforge/measure.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace specforge {

using Complex = std::complex<double>;

// Direct summation over atoms in canonical (sorted) order. 1-dim only.
Complex ft_discrete(const DiscreteMeasure& m, double xi);

// Batched variant: positions are converted to double once. Same values, same
// order of operations per point, as ft_discrete.
std::vector<Complex> ft_discrete_grid(const DiscreteMeasure& m,
                                      const std::vector<double>& xis);

// Closed form for nu_j of ladder l:
//   e^{-pi i (N_j - 1) xi / P_j} * sin(pi xi / P_{j-1}) / (N_j sin(pi xi / P_j)).
// Trig arguments are range-reduced against exact integer multiples of the
// grid, so the quotient stays fully accurate near the roots, integer zeros
// evaluate to exact 0.0, and the removable singularities (xi an exact
// multiple of P_j) return exact 1.0.
Complex ft_factor(const Ladder& l, std::size_t j, double xi);

// Transform of Lebesgue measure on [0, 1/scale]: e^{-pi i xi/scale} sinc(xi/scale).
Complex ft_lebesgue_tail(double xi, double scale);

struct TruncatedFt {
  Complex value;
  double tail_bound;  // true value lies in value * [1 - B, 1 + B]
};

// Product of the first min(K, available) factors of spec's side; for a type1
// spec with the tail on this side the exact tail transform is included and
// the bound is pure rounding slop. For type2, the bound covers the skipped
// in-ladder factors plus any continuation with entries >= 2 (virtual all-2
// closure): per factor |nu_j^(xi) - 1| <= pi |xi| / P_{j-1}.
TruncatedFt ft_truncated_product(const FactorSpec& spec, std::size_t K, double xi);

struct ZeroSetWindow {
  std::int64_t window = 0;               // [-W, W]
  std::vector<std::int64_t> members;     // sorted
};

// Integer zeros of nu_j^: multiples of P_{n-1} that are not multiples of P_n,
// restricted to [-W, W].
ZeroSetWindow zero_set_factor(const Ladder& l, std::size_t n, std::int64_t W);

// For every integer 1 <= |m| <= W decides structurally which side's transform
// vanishes (the factor of index 1 + max{n : P_n | m}, or the Lebesgue tail for
// type1) and confirms numerically: the vanishing side below eps, the other
// side above eps with its tail bound leaving no ambiguity. Throws
// std::runtime_error on ambiguous classification (prefix too short for W).
bool check_zero_partition(const FactorSpec& specA, const FactorSpec& specB,
                          std::int64_t W, double eps);

// Partial product of prod_j (1 - (3 pi^2/32) * 16^{-(j-1)})^2 until the
// rigorous tail correction drops below tol. Result is in (0, 1).
double compute_c(const FactorSpec& spec, double tol);

struct SincResidual {
  double residual;  // |mu^_K(xi) nu^_K(xi) tail^ - L^_[0,1](xi)|
  double bound;     // conservative rounding-error bound for the residual
};

// The complementary product identity: the two truncated side products times
// the closed-form transform of L_[0, 1/P_M] equal the transform of L_[0,1]
// exactly; the residual measures floating-point noise only. Pairs that carry
// their own interval component are always evaluated with full sides, since
// the identity only closes there at the native scale.
SincResidual sinc_identity_residual(const FactorSpec& specA,
                                    const FactorSpec& specB, std::size_t K,
                                    double xi);

}  // namespace specforge
