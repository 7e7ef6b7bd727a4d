#pragma once

// Translate extraction on grid-resolved sets (L_Omega * nu = L_Q forces nu to
// be a finite uniform atom system) and d-dimensional pair assembly with
// marginal verification.

#include "specforge/ladder.hpp"
#include "specforge/measure.hpp"
#include "specforge/rational.hpp"

#include <cstdint>
#include <vector>

namespace specforge {

// Cell j represents [j/m, (j+1)/m). At least one cell is set.
struct GridMask {
  std::int64_t m = 1;
  std::vector<bool> cells;

  void validate() const;  // throws std::invalid_argument
};

struct TranslateSystem {
  std::vector<Rational> offsets;  // sorted, denominators divide m
  std::int64_t count = 0;         // |offsets|
};

// Greedy left-to-right peeling: the leftmost uncovered cell of q must start a
// copy of omega; returns offsets with q = disjoint union of (omega + a_k).
// Throws std::runtime_error when no exact tiling exists at this resolution
// (cell-count obstruction, overlap, or leftover cells).
TranslateSystem extract_translates(const GridMask& omega, const GridMask& q);

// Level-k d-dim approximant pair: component i is the level-k approximant of
// (sigmas[i], taus[i]). Marginal factorization along every axis is checked.
std::pair<DiscreteMeasure, DiscreteMeasure> product_pair(
    const std::vector<FactorSpec>& sigmas, const std::vector<FactorSpec>& taus,
    std::size_t k);

// Convolutions of corresponding marginals are uniform on their axis grids.
// n = 0 infers each axis grid from the atom denominators; n > 0 requires that
// exact order on every axis.
bool verify_marginal_factorization(const DiscreteMeasure& mu,
                                   const DiscreteMeasure& nu, const BigInt& n);

}  // namespace specforge
