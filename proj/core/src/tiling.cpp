#include "specforge/tiling.hpp"

#include <stdexcept>
#include <string>

namespace specforge {

void GridMask::validate() const {
  if (m < 1) throw std::invalid_argument("grid mask: resolution must be >= 1");
  if (cells.empty()) throw std::invalid_argument("grid mask: no cells");
  bool any = false;
  for (bool c : cells) any = any || c;
  if (!any) throw std::invalid_argument("grid mask: all cells empty");
}

TranslateSystem extract_translates(const GridMask& omega, const GridMask& q) {
  omega.validate();
  q.validate();
  if (omega.m != q.m) {
    throw std::invalid_argument("extract_translates: resolutions differ");
  }

  std::vector<std::int64_t> O;
  for (std::size_t i = 0; i < omega.cells.size(); ++i) {
    if (omega.cells[i]) O.push_back(static_cast<std::int64_t>(i));
  }
  std::vector<bool> remaining = q.cells;
  std::size_t q_count = 0;
  for (bool c : remaining) q_count += c;
  if (q_count % O.size() != 0) {
    throw std::runtime_error(
        "extract_translates: cell counts obstruct a tiling (" +
        std::to_string(O.size()) + " does not divide " +
        std::to_string(q_count) + ")");
  }

  TranslateSystem out;
  // The leftmost uncovered cell must be the leftmost cell of some copy of
  // omega, which pins the copy's offset; greedy peeling is therefore forced
  // and the partition, when it exists, is unique.
  for (std::size_t u = 0; u < remaining.size(); ++u) {
    if (!remaining[u]) continue;
    const std::int64_t shift = static_cast<std::int64_t>(u) - O.front();
    for (std::int64_t o : O) {
      const std::int64_t cell = o + shift;
      if (cell < 0 || cell >= static_cast<std::int64_t>(remaining.size()) ||
          !remaining[static_cast<std::size_t>(cell)]) {
        throw std::runtime_error(
            "extract_translates: no copy of omega fits at cell " +
            std::to_string(u));
      }
      remaining[static_cast<std::size_t>(cell)] = false;
    }
    out.offsets.push_back(Rational(shift, q.m));
  }
  out.count = static_cast<std::int64_t>(out.offsets.size());
  return out;
}

std::pair<DiscreteMeasure, DiscreteMeasure> product_pair(
    const std::vector<FactorSpec>& sigmas, const std::vector<FactorSpec>& taus,
    std::size_t k) {
  if (sigmas.empty() || sigmas.size() != taus.size()) {
    throw std::invalid_argument("product_pair: axis lists must match and be nonempty");
  }
  for (std::size_t i = 0; i < sigmas.size(); ++i) {
    sigmas[i].validate();
    taus[i].validate();
    if (sigmas[i].ladder != taus[i].ladder || sigmas[i].type != taus[i].type ||
        sigmas[i].side == taus[i].side || sigmas[i].tail_on != taus[i].tail_on) {
      throw std::invalid_argument("product_pair: axis " + std::to_string(i) +
                                  " specs are not complementary");
    }
  }
  DiscreteMeasure mu = approximant(sigmas[0], k);
  DiscreteMeasure nu = approximant(taus[0], k);
  for (std::size_t i = 1; i < sigmas.size(); ++i) {
    mu = product(mu, approximant(sigmas[i], k));
    nu = product(nu, approximant(taus[i], k));
  }
  if (!verify_marginal_factorization(mu, nu, BigInt(0))) {
    throw std::logic_error("product_pair: marginal factorization failed");
  }
  return {mu, nu};
}

bool verify_marginal_factorization(const DiscreteMeasure& mu,
                                   const DiscreteMeasure& nu, const BigInt& n) {
  if (mu.dim() != nu.dim()) return false;
  for (std::size_t axis = 0; axis < mu.dim(); ++axis) {
    const DiscreteMeasure ma = marginal(mu, axis);
    const DiscreteMeasure mb = marginal(nu, axis);
    BigInt grid(1);
    if (n > 0) {
      grid = n;
    } else {
      for (const Atom& a : ma.atoms()) grid = lcm(grid, denominator(a.pos[0]));
      for (const Atom& a : mb.atoms()) grid = lcm(grid, denominator(a.pos[0]));
    }
    if (!verify_convolves_to_uniform({ma, mb}, grid)) return false;
  }
  return true;
}

}  // namespace specforge
