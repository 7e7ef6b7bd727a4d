#pragma once

// Spectra of the ladder factors: digit sets A_n = P_{n-1} {0..N_n-1}, finite
// direct sums Lambda_k, lattice-period spectra for the Lebesgue-tail side,
// exact and numeric orthogonality checks, the Q function and integer tiling
// checks.

#include "specforge/fourier.hpp"
#include "specforge/ladder.hpp"
#include "specforge/measure.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace specforge {

// base is sorted and duplicate-free; a present period M means base + M Z
// (per axis in dim > 1, same M on every axis), with base elements in distinct
// residue tuples mod M.
struct Spectrum {
  std::vector<std::vector<std::int64_t>> base;  // inner size = dim
  std::optional<std::int64_t> period;
  std::size_t dim = 1;

  std::size_t size() const { return base.size(); }
  bool finite() const { return !period.has_value(); }
  void validate() const;  // throws std::invalid_argument

  static Spectrum finite1d(std::vector<std::int64_t> values);
  static Spectrum periodic1d(std::vector<std::int64_t> values, std::int64_t M);

  bool operator==(const Spectrum& other) const;
};

struct DigitSet {
  std::size_t n = 0;
  std::vector<std::int64_t> values;  // P_{n-1} * {0..N_n-1}
};

DigitSet digit_set(const Ladder& l, std::size_t n);

// Lambda_k = direct sum of the side's first k digit sets; verifies the
// direct-sum property (all sums distinct) and throws std::logic_error on a
// collision (impossible for valid ladders).
Spectrum lambda_k(const FactorSpec& spec, std::size_t k);

// Spectrum of the type1 side carrying the Lebesgue tail:
// (direct sum of the side's digit sets) + P_{2k} Z.
Spectrum type1_spectrum_tail_side(const FactorSpec& spec);

// Exact certificate: every nonzero difference of s lies in some side factor's
// integer zero set, and |s| equals the approximant's atom count.
bool gram_check_structural(const FactorSpec& spec, std::size_t k, const Spectrum& s);

// Independent numeric oracle: max |<e_a, e_b>_{L^2(m)} - delta_ab| <= eps by
// direct summation (reduced to the difference function on distinct
// differences, which is an exact reformulation).
bool gram_check_numeric(const DiscreteMeasure& m, const Spectrum& s, double eps);

struct QValue {
  double value;
  double bound;
};

// Q(xi) = sum_{lambda in s} |mu^(xi + lambda)|^2 with mu^ evaluated through
// ft_truncated_product at truncation K; bound accumulates the per-term
// rigorous bounds. s must be finite.
QValue q_function(const FactorSpec& spec, const Spectrum& s, std::size_t K,
                  double xi);

// Exact Q for a periodic spectrum base + P Z of a type1 tail side: the
// discrete part alpha lives on {t/P}, so alpha^ is P-periodic and
// sum_{m in Z} sinc^2(x + m) = 1 collapses the lattice sum to
// Q(xi) = sum_{b in base} |alpha^(xi + b)|^2.
QValue q_function_periodic(const FactorSpec& spec, const Spectrum& s, double xi);

// Unique-representation check for sA + sB (or sA - sB when negateB) against
// the integers of [-W, W]:
//  - finite x finite: every integer (lattice point) of the window intersected
//    with the attainable hull has exactly one representation;
//  - finite x periodic: exact residue cover mod the period (any W);
//  - periodic x periodic: false (no unique representations).
bool tiling_check(const Spectrum& sA, const Spectrum& sB, std::int64_t W,
                  bool negateB);

// Attainable hull [min sum, max sum] per axis of sA (+/-) sB when both are
// finite; used for the certified exhaustion intervals.
std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> tiling_hull(
    const Spectrum& sA, const Spectrum& sB, bool negateB);

// Cartesian product. All parts 1-dim; either all finite, or all periodic
// (periods are unified to their lcm).
Spectrum product_spectrum(const std::vector<Spectrum>& parts);

}  // namespace specforge
