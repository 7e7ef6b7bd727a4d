#pragma once

// Ladders N = (N_1, ..., N_L), their discrete factors
// nu_k = (1/N_k) sum_{j<N_k} delta_{j/(N_1...N_k)}, factor specifications
// (which side of a complementary pair a factor describes), assignments and
// canonicalization, and the exact factorization identity check.

#include "specforge/measure.hpp"
#include "specforge/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace specforge {

// Entries are >= 2; the empty ladder is the degenerate pair (delta_0, L_[0,1]).
// Entries above 2^32 are rejected at parse time by json_io / the CLI.
using Ladder = std::vector<std::int64_t>;

enum class Side { odd, even };

inline Side other_side(Side s) { return s == Side::odd ? Side::even : Side::odd; }

enum class DecompositionType { type1, type2 };

// Describes one factor of a complementary pair built from `ladder`:
//  - type2: the weak limit of the side's factors, handled through finite
//    truncation levels only;
//  - type1: the ladder has even length 2k; the side without the tail is the
//    full finite convolution of its k factors, the side with `tail_on` also
//    carries Lebesgue measure on [0, 1/(N_1...N_2k)].
struct FactorSpec {
  Ladder ladder;
  DecompositionType type = DecompositionType::type2;
  Side side = Side::odd;
  std::size_t level = 0;                 // truncation level k
  std::optional<Side> tail_on;           // type1 only

  // Ladder indices (1-based) collected by `side`: odd -> 1,3,5,...
  std::vector<std::size_t> side_indices() const;
  std::size_t side_count() const { return side_indices().size(); }
  bool has_tail() const { return tail_on && *tail_on == side; }

  // Throws std::invalid_argument when the invariants fail.
  void validate() const;
};

struct Assignment {
  std::vector<Side> labels;  // labels[k] is the side receiving nu_{k+1}
};

// Products P_k = N_1...N_k, with P_0 = 1; index k in [0, |l|].
BigInt ladder_product(const Ladder& l, std::size_t k);

// nu_k for 1 <= k <= |l|.
DiscreteMeasure nu_factor(const Ladder& l, std::size_t k);

// Convolution of the first k factors of spec.side; k = 0 gives delta_0.
DiscreteMeasure approximant(const FactorSpec& spec, std::size_t k);

struct CanonicalizeResult {
  Ladder ladder;
  Assignment assignment;            // strictly alternating
  FactorSpec first;                 // spec for assignment.labels.front()'s side
  FactorSpec second;                // spec for the other side
};

// Merges consecutive same-side entries (N_k, N_{k+1} -> N_k*N_{k+1}); the
// expanded side measures are unchanged.
CanonicalizeResult canonicalize(const Ladder& l, const Assignment& a);

// Exact check that nu_1 * ... * nu_L is uniform on {j/(N_1...N_L)}.
bool verify_pair(const Ladder& l);

// Exact check that the convolution of `factors` is uniform on {j/n}. Uses a
// dense integer-index chain when every factor is uniform-weighted on the
// grid, and exact rational convolution otherwise.
bool verify_convolves_to_uniform(const std::vector<DiscreteMeasure>& factors,
                                 const BigInt& n);

}  // namespace specforge
