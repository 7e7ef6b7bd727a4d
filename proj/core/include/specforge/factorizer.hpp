#pragma once

// Inverse direction: recover the ladder from complementary data, either a
// pair of discrete measures convolving to the uniform grid measure or an
// integer set pair with A + B = {0..n-1} (unique sums), plus the finite
// analogues of the symmetry and support-bound lemmas and a brute-force
// enumeration oracle.

#include "specforge/ladder.hpp"
#include "specforge/measure.hpp"
#include "specforge/rational.hpp"

#include <cstdint>
#include <vector>

namespace specforge {

struct SetPair {
  std::vector<std::int64_t> A;
  std::vector<std::int64_t> B;
  std::int64_t n = 1;
};

enum class PairSide { A, B };

struct LadderWithSides {
  Ladder ladder;        // peel order = ladder order (coarsest factor first)
  PairSide first_side;  // input owning the finest factor (units digits, atoms
                        // at spacing 1/n); PairSide::A for the empty ladder
};

// Alternating peeling. At each stage exactly one side's weight vector splits
// into N >= 2 identical consecutive blocks (maximal N = length / minimal
// period); that uniform factor is peeled and the remainder rescaled to its
// block. Throws std::invalid_argument when the inputs are not a complementary
// pair (convolution not uniform, or no side peels). Every intermediate is
// checked to be uniform on its support.
LadderWithSides factor_uniform_pair(const DiscreteMeasure& p,
                                    const DiscreteMeasure& q);

// Wraps factor_uniform_pair on (1/|A|) delta_{A/n}, (1/|B|) delta_{B/n} after
// verifying A + B = {0..n-1} with unique sums, n = |A| |B|.
LadderWithSides factor_sets(const SetPair& sp);

// Expand a factorizer result back to the set pair it came from: the side
// measures' supports scaled by n. first element of the result is side A.
SetPair expand_to_sets(const LadderWithSides& lws);

// Side measures of a ladder under an alternating assignment starting with
// the side owning nu_1. Helper used by round-trip checks and the CLI.
std::pair<DiscreteMeasure, DiscreteMeasure> expand_pair(const Ladder& l,
                                                        const Assignment& a);

// All (A, B) with 0 in both, A + B = {0..n-1} uniquely; deterministic order
// (sorted by A lexicographically). n <= 64.
std::vector<SetPair> enumerate_complementary_pairs(std::int64_t n);

// Weights symmetric about the support midpoint (exact).
bool symmetry_check(const DiscreteMeasure& p);

// For centered p with support [-a, a] and r the smallest positive integer
// zero of p^ (caller-established): exact check 1/(4r) <= a <= 1/(2r).
bool support_bound_check(const DiscreteMeasure& p, std::int64_t r);

}  // namespace specforge
