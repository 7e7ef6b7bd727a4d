#include "specforge/factorizer.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>

namespace specforge {

namespace {

constexpr std::int64_t kMaxGrid = std::int64_t(1) << 26;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  return to_int64(BigInt(a) * b);
}

// Indices of the support on the grid {j/n}; throws when the measure does not
// sit exactly on that grid.
std::vector<std::int64_t> grid_indices(const DiscreteMeasure& m, std::int64_t n) {
  std::vector<std::int64_t> idx;
  idx.reserve(m.size());
  for (const Atom& a : m.atoms()) {
    const Rational scaled = a.pos[0] * n;
    if (denominator(scaled) != 1) {
      throw std::invalid_argument("support is not on the grid {j/n}");
    }
    const BigInt t = numerator(scaled);
    if (t < 0 || t >= n) {
      throw std::invalid_argument("support leaves [0, 1)");
    }
    idx.push_back(to_int64(t));
  }
  return idx;
}

// Minimal rho | cur with S = (S mod rho) + rho {0, ..., cur/rho - 1}; cur when
// the set is not block periodic at all. S is sorted, subset of [0, cur).
std::int64_t minimal_block_period(const std::vector<std::int64_t>& S,
                                  std::int64_t cur) {
  for (std::int64_t rho = 1; rho < cur; ++rho) {
    if (cur % rho != 0) continue;
    const std::int64_t copies = cur / rho;
    if (S.size() % static_cast<std::size_t>(copies) != 0) continue;
    const std::size_t base_size = S.size() / static_cast<std::size_t>(copies);
    // S is sorted, so its first base_size elements are exactly the candidate
    // base block iff they all lie below rho.
    if (S[base_size - 1] >= rho) continue;
    std::unordered_set<std::int64_t> base(S.begin(),
                                          S.begin() + static_cast<std::ptrdiff_t>(base_size));
    bool ok = true;
    for (std::int64_t s : S) {
      if (!base.count(s % rho)) {
        ok = false;
        break;
      }
    }
    // Every element reduces into the base and the counts match, so each
    // residue class is complete.
    if (ok) return rho;
  }
  return cur;
}

}  // namespace

LadderWithSides factor_uniform_pair(const DiscreteMeasure& p,
                                    const DiscreteMeasure& q) {
  if (p.dim() != 1 || q.dim() != 1) {
    throw std::invalid_argument("factor_uniform_pair: 1-dim measures only");
  }
  if (!p.uniform_weights() || !q.uniform_weights()) {
    throw std::invalid_argument(
        "factor_uniform_pair: inputs must be uniform on their supports");
  }
  const std::int64_t n = checked_mul(static_cast<std::int64_t>(p.size()),
                                     static_cast<std::int64_t>(q.size()));
  if (n > kMaxGrid) {
    throw std::length_error("factor_uniform_pair: grid order over cap");
  }

  std::vector<std::int64_t> Sp = grid_indices(p, n);
  std::vector<std::int64_t> Sq = grid_indices(q, n);

  // Exact complementary-pair precondition: the convolution is uniform on
  // {j/n}, i.e. every sum appears exactly once.
  {
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(n), 0);
    for (std::int64_t a : Sp) {
      for (std::int64_t b : Sq) {
        if (seen[static_cast<std::size_t>(a + b)]++) {
          throw std::invalid_argument(
              "factor_uniform_pair: convolution is not uniform on {j/n}");
        }
      }
    }
    // |Sp| |Sq| = n, so full coverage follows from uniqueness.
  }

  LadderWithSides out;
  out.first_side = PairSide::A;

  std::int64_t cur = n;
  PairSide last_peel = PairSide::A;
  while (cur > 1) {
    if (BigInt(Sp.size()) * BigInt(Sq.size()) != cur) {
      throw std::invalid_argument("factor_uniform_pair: inconsistent stage");
    }
    const std::int64_t rho_p = minimal_block_period(Sp, cur);
    const std::int64_t rho_q = minimal_block_period(Sq, cur);
    const bool peel_p = rho_p < cur && Sp.size() > 1;
    const bool peel_q = rho_q < cur && Sq.size() > 1;
    if (peel_p == peel_q) {
      // Both is impossible for complementary pairs (the coarse factors would
      // share an integer zero, but the uniform-grid transform has simple
      // zeros); neither means the input was not a complementary pair.
      throw std::invalid_argument(
          peel_p ? "factor_uniform_pair: ambiguous peel (invalid input)"
                 : "factor_uniform_pair: no side is block-periodic");
    }
    auto& S = peel_p ? Sp : Sq;
    const std::int64_t rho = peel_p ? rho_p : rho_q;
    const std::int64_t N = cur / rho;
    out.ladder.push_back(N);
    last_peel = peel_p ? PairSide::A : PairSide::B;
    // Remainder: the base block (first |S|/N elements, all below rho).
    S.resize(S.size() / static_cast<std::size_t>(N));
    cur = rho;
  }
  if (!(Sp == std::vector<std::int64_t>{0} && Sq == std::vector<std::int64_t>{0})) {
    throw std::invalid_argument("factor_uniform_pair: peeling left a remainder");
  }
  // The last peel removes the finest factor (atom spacing 1/n, the units
  // digits of the expansion).
  if (!out.ladder.empty()) out.first_side = last_peel;
  return out;
}

namespace {

DiscreteMeasure set_measure(const std::vector<std::int64_t>& S, std::int64_t n) {
  std::vector<Atom> atoms;
  atoms.reserve(S.size());
  const Rational w(1, static_cast<std::int64_t>(S.size()));
  for (std::int64_t s : S) atoms.push_back(Atom{{Rational(s, n)}, w});
  return DiscreteMeasure(std::move(atoms));
}

void validate_set(const std::vector<std::int64_t>& S, const char* name) {
  if (S.empty()) throw std::invalid_argument(std::string(name) + " is empty");
  if (!std::is_sorted(S.begin(), S.end())) {
    throw std::invalid_argument(std::string(name) + " must be sorted");
  }
  if (std::adjacent_find(S.begin(), S.end()) != S.end()) {
    throw std::invalid_argument(std::string(name) + " has duplicates");
  }
  if (S.front() < 0) {
    throw std::invalid_argument(std::string(name) + " has negative elements");
  }
  if (S.front() != 0) {
    throw std::invalid_argument(std::string(name) + " must contain 0");
  }
}

}  // namespace

LadderWithSides factor_sets(const SetPair& sp) {
  validate_set(sp.A, "A");
  validate_set(sp.B, "B");
  const std::int64_t n = checked_mul(static_cast<std::int64_t>(sp.A.size()),
                                     static_cast<std::int64_t>(sp.B.size()));
  if (sp.n != n) {
    throw std::invalid_argument("factor_sets: n must equal |A| * |B|");
  }
  if (n > kMaxGrid) throw std::length_error("factor_sets: n over cap");
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(n), 0);
  for (std::int64_t a : sp.A) {
    for (std::int64_t b : sp.B) {
      const std::int64_t s = a + b;
      if (s >= n || seen[static_cast<std::size_t>(s)]++) {
        throw std::invalid_argument(
            "factor_sets: sums are not uniquely {0..n-1}");
      }
    }
  }
  return factor_uniform_pair(set_measure(sp.A, n), set_measure(sp.B, n));
}

SetPair expand_to_sets(const LadderWithSides& lws) {
  const Ladder& l = lws.ladder;
  const std::size_t L = l.size();
  const std::int64_t n = to_int64(ladder_product(l, L));
  std::vector<std::int64_t> sets[2];
  sets[0] = {0};
  sets[1] = {0};
  // nu_L belongs to first_side and ownership alternates downward.
  for (std::size_t k = 1; k <= L; ++k) {
    const bool to_first = ((L - k) % 2 == 0);
    const std::size_t who =
        (to_first == (lws.first_side == PairSide::A)) ? 0 : 1;
    const std::int64_t scale = to_int64(BigInt(n) / ladder_product(l, k));
    std::vector<std::int64_t> next;
    next.reserve(sets[who].size() * static_cast<std::size_t>(l[k - 1]));
    for (std::int64_t j = 0; j < l[k - 1]; ++j) {
      for (std::int64_t v : sets[who]) next.push_back(v + j * scale);
    }
    sets[who] = std::move(next);
  }
  std::sort(sets[0].begin(), sets[0].end());
  std::sort(sets[1].begin(), sets[1].end());
  return SetPair{std::move(sets[0]), std::move(sets[1]), n};
}

std::pair<DiscreteMeasure, DiscreteMeasure> expand_pair(const Ladder& l,
                                                        const Assignment& a) {
  if (a.labels.size() != l.size()) {
    throw std::invalid_argument("expand_pair: labels length must match ladder");
  }
  DiscreteMeasure odd = DiscreteMeasure::point_mass_zero();
  DiscreteMeasure even = DiscreteMeasure::point_mass_zero();
  for (std::size_t k = 1; k <= l.size(); ++k) {
    if (a.labels[k - 1] == Side::odd) {
      odd = convolve(odd, nu_factor(l, k));
    } else {
      even = convolve(even, nu_factor(l, k));
    }
  }
  return {odd, even};
}

namespace {

struct PairSearch {
  std::int64_t n;
  std::uint64_t full;
  std::uint64_t covered;
  std::vector<std::int64_t> A, B;
  std::vector<SetPair>* out;

  void record() {
    out->push_back(SetPair{A, B, n});
  }

  bool try_add(std::vector<std::int64_t>& target,
               const std::vector<std::int64_t>& partner, std::int64_t x) {
    std::uint64_t added = 0;
    for (std::int64_t b : partner) {
      const std::int64_t s = x + b;
      if (s >= n) return false;
      const std::uint64_t bit = std::uint64_t(1) << s;
      if ((covered | added) & bit) return false;
      added |= bit;
    }
    covered |= added;
    target.push_back(x);
    return true;
  }

  void undo(std::vector<std::int64_t>& target,
            const std::vector<std::int64_t>& partner, std::int64_t x) {
    for (std::int64_t b : partner) covered &= ~(std::uint64_t(1) << (x + b));
    covered |= 1;  // 0 = 0 + 0 stays covered
    target.pop_back();
  }

  void dfs() {
    if (covered == full) {
      record();
      return;
    }
    const std::int64_t x = std::countr_zero(~covered);
    // The smallest uncovered value must itself join one of the sets: in any
    // completion x = a + b, and a positive a < x is covered now, so by
    // uniqueness its current representation is a + 0, forcing a (and likewise
    // b) into the current sets, which would make x covered already.
    if (try_add(A, B, x)) {
      dfs();
      undo(A, B, x);
    }
    if (try_add(B, A, x)) {
      dfs();
      undo(B, A, x);
    }
  }
};

}  // namespace

std::vector<SetPair> enumerate_complementary_pairs(std::int64_t n) {
  if (n < 1 || n > 64) {
    throw std::invalid_argument("enumerate_complementary_pairs: need 1 <= n <= 64");
  }
  std::vector<SetPair> out;
  if (n == 1) {
    out.push_back(SetPair{{0}, {0}, 1});
    return out;
  }
  PairSearch search{n,
                    (n == 64) ? ~std::uint64_t(0)
                              : ((std::uint64_t(1) << n) - 1),
                    1,
                    {0},
                    {0},
                    &out};
  search.dfs();
  std::sort(out.begin(), out.end(), [](const SetPair& x, const SetPair& y) {
    return x.A < y.A;
  });
  return out;
}

bool symmetry_check(const DiscreteMeasure& p) {
  if (p.dim() != 1) throw std::invalid_argument("symmetry_check: 1-dim only");
  const auto& atoms = p.atoms();
  const Rational twice_mid = atoms.front().pos[0] + atoms.back().pos[0];
  const std::size_t n = atoms.size();
  for (std::size_t i = 0; i <= n / 2; ++i) {
    const Atom& a = atoms[i];
    const Atom& b = atoms[n - 1 - i];
    if (a.pos[0] + b.pos[0] != twice_mid) return false;
    if (a.weight != b.weight) return false;
  }
  return true;
}

bool support_bound_check(const DiscreteMeasure& p, std::int64_t r) {
  if (p.dim() != 1) throw std::invalid_argument("support_bound_check: 1-dim only");
  if (r < 1) throw std::invalid_argument("support_bound_check: r must be >= 1");
  const Rational lo = p.atoms().front().pos[0];
  const Rational hi = p.atoms().back().pos[0];
  if (lo != -hi) return false;  // not centered
  const Rational a = hi;
  return Rational(1, 4 * r) <= a && a <= Rational(1, 2 * r);
}

}  // namespace specforge
