#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "abelian/numeric.hpp"
#include "abelian/snf.hpp"

namespace abelian {

// Element of a finite abelian group in product coordinates, always stored
// fully reduced: coords[i] in [0, moduli[i]).
struct GroupElement {
  std::vector<std::int64_t> coords;

  std::size_t rank() const noexcept { return coords.size(); }

  bool is_zero() const noexcept {
    return std::all_of(coords.begin(), coords.end(),
                       [](std::int64_t c) { return c == 0; });
  }

  auto operator<=>(const GroupElement&) const = default;
};

// A finite abelian group as a direct product of cyclic groups
// Z/m1 x ... x Z/mk, every mi >= 2. The empty product is the trivial group.
// The factored form is kept exactly as supplied; the canonical
// invariant-factor shape is a separate, explicit computation.
class FinAbGroup {
public:
  explicit FinAbGroup(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
    for (std::int64_t m : moduli_)
      if (m < 2)
        throw std::invalid_argument("every modulus must be >= 2, got " + std::to_string(m));
  }

  static FinAbGroup trivial() { return FinAbGroup(std::vector<std::int64_t>{}); }

  const std::vector<std::int64_t>& moduli() const noexcept { return moduli_; }
  std::size_t rank() const noexcept { return moduli_.size(); }

  std::int64_t order() const {
    std::int64_t n = 1;
    for (std::int64_t m : moduli_) n = checked_mul(n, m);
    return n;
  }

  bool is_trivial() const noexcept { return moduli_.empty(); }

  GroupElement zero() const {
    return GroupElement{std::vector<std::int64_t>(rank(), 0)};
  }

  // Reduce arbitrary integer coordinates into the group.
  GroupElement element(std::vector<std::int64_t> coords) const {
    check_rank(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i)
      coords[i] = mod_reduce(coords[i], moduli_[i]);
    return GroupElement{std::move(coords)};
  }

  // i-th standard generator e_i = (0, ..., 1, ..., 0).
  GroupElement generator(std::size_t i) const {
    if (i >= rank()) throw std::invalid_argument("generator index out of range");
    GroupElement e = zero();
    e.coords[i] = 1;
    return e;
  }

  bool contains(const GroupElement& x) const noexcept {
    if (x.rank() != rank()) return false;
    for (std::size_t i = 0; i < rank(); ++i)
      if (x.coords[i] < 0 || x.coords[i] >= moduli_[i]) return false;
    return true;
  }

  GroupElement add(const GroupElement& x, const GroupElement& y) const {
    check_rank(x.rank());
    check_rank(y.rank());
    GroupElement r = zero();
    for (std::size_t i = 0; i < rank(); ++i)
      r.coords[i] = mod_reduce(checked_add(x.coords[i], y.coords[i]), moduli_[i]);
    return r;
  }

  GroupElement neg(const GroupElement& x) const {
    check_rank(x.rank());
    GroupElement r = zero();
    for (std::size_t i = 0; i < rank(); ++i)
      r.coords[i] = mod_reduce(checked_neg(x.coords[i]), moduli_[i]);
    return r;
  }

  GroupElement sub(const GroupElement& x, const GroupElement& y) const {
    return add(x, neg(y));
  }

  GroupElement scalar_mul(std::int64_t n, const GroupElement& x) const {
    check_rank(x.rank());
    GroupElement r = zero();
    for (std::size_t i = 0; i < rank(); ++i)
      r.coords[i] = mod_reduce(checked_mul(mod_reduce(n, moduli_[i]), x.coords[i]), moduli_[i]);
    return r;
  }

  // Least n >= 1 with n*x = 0: lcm over coordinates of m_i / gcd(m_i, x_i).
  std::int64_t element_order(const GroupElement& x) const {
    check_rank(x.rank());
    std::int64_t n = 1;
    for (std::size_t i = 0; i < rank(); ++i)
      n = checked_lcm(n, moduli_[i] / std::gcd(moduli_[i], x.coords[i]));
    return n;
  }

  // All elements in lexicographic coordinate order. Size is order().
  std::vector<GroupElement> elements() const {
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(order()));
    GroupElement cur = zero();
    for (;;) {
      out.push_back(cur);
      std::size_t i = rank();
      while (i > 0) {
        --i;
        if (++cur.coords[i] < moduli_[i]) break;
        cur.coords[i] = 0;
        if (i == 0) return out;
      }
      if (rank() == 0) return out;
    }
  }

  bool operator==(const FinAbGroup&) const = default;

private:
  void check_rank(std::size_t r) const {
    if (r != rank())
      throw std::invalid_argument("element rank " + std::to_string(r) +
                                  " does not match group rank " + std::to_string(rank()));
  }

  std::vector<std::int64_t> moduli_;
};

// A model of the pointed theory: a nontrivial group with a distinguished
// nonzero element. The trivial group admits no such pair.
struct PointedGroup {
  FinAbGroup group;
  GroupElement point;

  PointedGroup(FinAbGroup g, GroupElement p) : group(std::move(g)), point(std::move(p)) {
    if (!group.contains(point))
      throw std::invalid_argument("distinguished element does not lie in the group");
    if (point.is_zero())
      throw std::invalid_argument("distinguished element must be nonzero (g != 0)");
  }

  bool operator==(const PointedGroup&) const = default;
};

// Invariant-factor form d1 | d2 | ... of G. Two finite abelian groups are
// isomorphic exactly when these lists are equal.
inline std::vector<std::int64_t> canonical_invariant_factors(const FinAbGroup& g) {
  return quotient_invariants(g.moduli(), {}).invariant_factors;
}

// One representative per isomorphism class of abelian group of order n,
// assembled from partitions of each prime exponent. Deterministic order:
// primes ascending, partition parts descending, partitions largest-first.
inline std::vector<FinAbGroup> abelian_groups_of_order(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("group order must be >= 1");
  auto prime_factors = factorize(n);

  // per prime: all moduli blocks p^part for each partition of the exponent
  std::vector<std::vector<std::vector<std::int64_t>>> blocks;
  for (auto [p, e] : prime_factors) {
    std::vector<std::vector<std::int64_t>> choices;
    for (const auto& part : partitions(e)) {
      std::vector<std::int64_t> moduli;
      for (int piece : part) moduli.push_back(checked_pow(p, piece));
      choices.push_back(std::move(moduli));
    }
    blocks.push_back(std::move(choices));
  }

  std::vector<FinAbGroup> classes;
  std::vector<std::size_t> pick(blocks.size(), 0);
  for (;;) {
    std::vector<std::int64_t> moduli;
    for (std::size_t i = 0; i < blocks.size(); ++i)
      for (std::int64_t m : blocks[i][pick[i]]) moduli.push_back(m);
    classes.push_back(FinAbGroup(std::move(moduli)));

    std::size_t i = blocks.size();
    while (i > 0) {
      --i;
      if (++pick[i] < blocks[i].size()) break;
      pick[i] = 0;
      if (i == 0) return classes;
    }
    if (blocks.empty()) return classes;
  }
}

}  // namespace abelian
