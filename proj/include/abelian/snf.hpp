#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "abelian/matrix.hpp"

namespace abelian {

// Smith Normal Form decomposition U*A*V = D with U, V unimodular and D
// diagonal, nonnegative, each diagonal entry dividing the next.
struct SnfResult {
  IntMatrix U;  // rows x rows
  IntMatrix D;  // rows x cols
  IntMatrix V;  // cols x cols

  std::vector<BigInt> diagonal() const {
    std::vector<BigInt> d;
    for (std::size_t i = 0; i < D.rows() && i < D.cols(); ++i) d.push_back(D(i, i));
    return d;
  }
};

namespace detail {

// Position of the entry with minimal nonzero |value| in the submatrix
// starting at (t, t); nullopt when that submatrix is zero.
inline std::optional<std::pair<std::size_t, std::size_t>> min_abs_pivot(
    const IntMatrix& m, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  BigInt best_abs = 0;
  for (std::size_t i = t; i < m.rows(); ++i)
    for (std::size_t j = t; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      BigInt a = abs(m(i, j));
      if (!best || a < best_abs) {
        best = {{i, j}};
        best_abs = std::move(a);
      }
    }
  return best;
}

}  // namespace detail

// Classic row/column reduction with minimal-|pivot| selection and a
// divisibility fixup pass per diagonal position. Deterministic.
inline SnfResult smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (m == 0 || n == 0)
    throw std::invalid_argument("smith_normal_form requires at least one row and one column");

  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);
  IntMatrix d = a;

  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      auto pivot = detail::min_abs_pivot(d, t);
      if (!pivot) break;  // rest of the matrix is zero
      auto [pi, pj] = *pivot;
      if (pi != t) {
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
      }
      if (pj != t) {
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
      }

      bool reduced = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        BigInt q = d(i, t) / d(t, t);
        if (q != 0) {
          d.add_row(i, t, -q);
          u.add_row(i, t, -q);
        }
        if (d(i, t) != 0) reduced = true;  // remainder left; re-pivot
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        BigInt q = d(t, j) / d(t, t);
        if (q != 0) {
          d.add_col(j, t, -q);
          v.add_col(j, t, -q);
        }
        if (d(t, j) != 0) reduced = true;
      }
      if (reduced) continue;

      // Row and column at t are clear. Enforce that the pivot divides the
      // remaining submatrix, pulling a violating row up if not.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < m && divides_all; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row(t, i, 1);
            u.add_row(t, i, 1);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (t < m && d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return SnfResult{std::move(u), std::move(d), std::move(v)};
}

// Structure of (Z/m1 x ... x Z/mr) / <relation generators> together with the
// coordinate map from ambient coordinates to quotient coordinates.
struct QuotientStructure {
  // Invariant factors of the quotient, each >= 2, each dividing the next.
  // Empty when the quotient is trivial.
  std::vector<std::int64_t> invariant_factors;
  // One row per invariant factor; quotient coordinate i of an ambient
  // element x is (projection row i . x) mod invariant_factors[i]. Entries
  // are already reduced into [0, invariant_factors[i]).
  std::vector<std::vector<std::int64_t>> projection;

  std::vector<std::int64_t> project(const std::vector<std::int64_t>& ambient) const {
    if (!projection.empty() && ambient.size() != projection.front().size())
      throw std::invalid_argument("ambient coordinate count mismatch");
    std::vector<std::int64_t> out(invariant_factors.size(), 0);
    for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < ambient.size(); ++j) {
        std::int64_t term = checked_mul(projection[i][j], mod_reduce(ambient[j], invariant_factors[i]));
        acc = mod_reduce(checked_add(acc, term), invariant_factors[i]);
      }
      out[i] = acc;
    }
    return out;
  }
};

// Invariant factors of (Z/m1 x ... x Z/mr) / <gens>, computed as the SNF of
// the r x (r+s) matrix [diag(m) | generator columns]. Unit factors are
// discarded; the projection rows come from the corresponding rows of U.
inline QuotientStructure quotient_invariants(
    const std::vector<std::int64_t>& ambient_moduli,
    const std::vector<std::vector<std::int64_t>>& relation_generators) {
  const std::size_t r = ambient_moduli.size();
  for (std::int64_t m : ambient_moduli)
    if (m < 1) throw std::invalid_argument("ambient moduli must be positive");
  for (const auto& g : relation_generators)
    if (g.size() != r)
      throw std::invalid_argument("relation generator has wrong length");

  if (r == 0) return QuotientStructure{{}, {}};

  const std::size_t s = relation_generators.size();
  IntMatrix rel(r, r + s);
  for (std::size_t i = 0; i < r; ++i) rel(i, i) = ambient_moduli[i];
  for (std::size_t j = 0; j < s; ++j)
    for (std::size_t i = 0; i < r; ++i) rel(i, r + j) = relation_generators[j][i];

  SnfResult snf = smith_normal_form(rel);

  std::vector<std::int64_t> factors;
  std::vector<std::size_t> kept_rows;
  for (std::size_t i = 0; i < r; ++i) {
    // diag(m) has full row rank, so every diagonal entry is nonzero here;
    // every factor divides the ambient order and thus fits in 64 bits
    std::int64_t di = to_int64(snf.D(i, i));
    if (di >= 2) {
      factors.push_back(di);
      kept_rows.push_back(i);
    }
  }

  std::vector<std::vector<std::int64_t>> proj(kept_rows.size(),
                                              std::vector<std::int64_t>(r, 0));
  for (std::size_t i = 0; i < kept_rows.size(); ++i)
    for (std::size_t j = 0; j < r; ++j)
      proj[i][j] = to_int64(mod_reduce(snf.U(kept_rows[i], j), BigInt(factors[i])));

  return QuotientStructure{std::move(factors), std::move(proj)};
}

}  // namespace abelian
