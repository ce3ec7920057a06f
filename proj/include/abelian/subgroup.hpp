#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "abelian/errors.hpp"
#include "abelian/group.hpp"

namespace abelian {

// Exhaustive enumeration refuses groups larger than this unless the caller
// raises the bound explicitly. (Z/2)^8 already has ~400k subgroups.
inline constexpr std::int64_t kDefaultEnumerationBound = 256;

namespace detail {

// Dense lookup tables for one finite group: elements in lexicographic order
// (index == mixed-radix rank), plus addition and negation tables.
struct ElementTable {
  explicit ElementTable(const FinAbGroup& g) : group(g) {
    std::int64_t n = g.order();
    if (n > kTableCap)
      throw BoundExceeded("element table over a group of order " + std::to_string(n) +
                              " exceeds the internal cap " + std::to_string(kTableCap),
                          kTableCap);
    size = static_cast<std::size_t>(n);
    elements = g.elements();
    strides.assign(g.rank(), 1);
    for (std::size_t i = g.rank(); i-- > 1;)
      strides[i - 1] = strides[i] * static_cast<std::size_t>(g.moduli()[i]);
    add.resize(size * size);
    neg.resize(size);
    for (std::size_t a = 0; a < size; ++a) {
      neg[a] = static_cast<std::uint16_t>(rank_of(g.neg(elements[a])));
      for (std::size_t b = 0; b <= a; ++b) {
        auto r = static_cast<std::uint16_t>(rank_of(g.add(elements[a], elements[b])));
        add[a * size + b] = r;
        add[b * size + a] = r;
      }
    }
  }

  std::size_t rank_of(const GroupElement& x) const {
    std::size_t r = 0;
    for (std::size_t i = 0; i < strides.size(); ++i)
      r += strides[i] * static_cast<std::size_t>(x.coords[i]);
    return r;
  }

  std::uint16_t add_rank(std::size_t a, std::size_t b) const { return add[a * size + b]; }
  std::uint16_t sub_rank(std::size_t a, std::size_t b) const { return add[a * size + neg[b]]; }

  static constexpr std::int64_t kTableCap = 1 << 12;  // add table: 32 MiB at worst

  FinAbGroup group;
  std::size_t size = 0;
  std::vector<GroupElement> elements;
  std::vector<std::size_t> strides;
  std::vector<std::uint16_t> add;
  std::vector<std::uint16_t> neg;
};

// Subgroup as a bitmask over element ranks.
using Mask = std::vector<std::uint64_t>;

inline Mask make_mask(std::size_t size) { return Mask((size + 63) / 64, 0); }
inline bool mask_test(const Mask& m, std::size_t i) { return (m[i >> 6] >> (i & 63)) & 1; }
inline void mask_set(Mask& m, std::size_t i) { m[i >> 6] |= std::uint64_t{1} << (i & 63); }

struct MaskHash {
  std::size_t operator()(const Mask& m) const noexcept {
    std::size_t h = m.size();
    for (std::uint64_t w : m) h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// Closure of an already-closed set under one additional element: the union
// of the shifted copies closed + k*x.
inline Mask close_with(const ElementTable& tbl, const Mask& closed, std::size_t x) {
  Mask out = closed;
  std::vector<std::size_t> base;
  for (std::size_t i = 0; i < tbl.size; ++i)
    if (mask_test(closed, i)) base.push_back(i);
  std::size_t shift = x;
  while (shift != 0) {
    for (std::size_t e : base) mask_set(out, tbl.add_rank(e, shift));
    shift = tbl.add_rank(shift, x);
  }
  return out;
}

inline std::vector<std::size_t> mask_ranks(const Mask& m, std::size_t size) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size; ++i)
    if (mask_test(m, i)) out.push_back(i);
  return out;
}

}  // namespace detail

// A subgroup carrying both a generating set and the full, lexicographically
// sorted element list. The sorted element list is the canonical identity:
// two Subgroup values are equal exactly when parents and element lists agree.
class Subgroup {
public:
  // Closure of gens under the group operations (breadth-first saturation).
  static Subgroup generated(const FinAbGroup& parent, std::vector<GroupElement> gens) {
    for (const auto& g : gens)
      if (!parent.contains(g))
        throw std::invalid_argument("subgroup generator does not lie in the parent group");
    std::set<GroupElement> closure{parent.zero()};
    std::deque<GroupElement> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
      GroupElement cur = std::move(frontier.front());
      frontier.pop_front();
      for (const auto& g : gens) {
        GroupElement next = parent.add(cur, g);
        if (closure.insert(next).second) frontier.push_back(next);
      }
    }
    return Subgroup(parent, std::move(gens),
                    std::vector<GroupElement>(closure.begin(), closure.end()));
  }

  // Wrap a full element set. Verifies closure under the group operations and
  // derives a small generating set greedily.
  static Subgroup from_elements(const FinAbGroup& parent, std::vector<GroupElement> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    std::set<GroupElement> set(elems.begin(), elems.end());
    if (!set.count(parent.zero()))
      throw std::invalid_argument("subgroup element set must contain 0");
    for (const auto& x : elems) {
      if (!parent.contains(x))
        throw std::invalid_argument("subgroup element does not lie in the parent group");
      if (!set.count(parent.neg(x)))
        throw std::invalid_argument("subgroup element set is not closed under negation");
      for (const auto& y : elems)
        if (!set.count(parent.add(x, y)))
          throw std::invalid_argument("subgroup element set is not closed under addition");
    }

    // greedy generator extraction
    std::vector<GroupElement> gens;
    std::set<GroupElement> have{parent.zero()};
    for (const auto& x : elems) {
      if (have.count(x)) continue;
      gens.push_back(x);
      std::set<GroupElement> grown;
      for (const auto& base : have) {
        GroupElement shifted = base;
        do {
          grown.insert(shifted);
          shifted = parent.add(shifted, x);
        } while (shifted != base);
      }
      have = std::move(grown);
    }
    return Subgroup(parent, std::move(gens), std::move(elems));
  }

  const FinAbGroup& parent() const noexcept { return parent_; }
  const std::vector<GroupElement>& generators() const noexcept { return generators_; }
  const std::vector<GroupElement>& elements() const noexcept { return elements_; }

  std::int64_t order() const noexcept { return static_cast<std::int64_t>(elements_.size()); }

  bool contains(const GroupElement& x) const {
    if (x.rank() != parent_.rank())
      throw std::invalid_argument("element rank does not match the subgroup's parent");
    return std::binary_search(elements_.begin(), elements_.end(), x);
  }

  bool is_trivial() const noexcept { return elements_.size() == 1; }
  bool is_proper() const { return order() != parent_.order(); }

  bool operator==(const Subgroup& o) const {
    return parent_ == o.parent_ && elements_ == o.elements_;
  }

  // Canonical order: by size, then lexicographically by element list.
  bool operator<(const Subgroup& o) const {
    if (elements_.size() != o.elements_.size())
      return elements_.size() < o.elements_.size();
    return elements_ < o.elements_;
  }

private:
  Subgroup(FinAbGroup parent, std::vector<GroupElement> gens, std::vector<GroupElement> elems)
      : parent_(std::move(parent)), generators_(std::move(gens)), elements_(std::move(elems)) {}

  friend Subgroup subgroup_sum(const Subgroup&, const Subgroup&);
  friend std::vector<Subgroup> all_subgroups(const FinAbGroup&, std::int64_t);

  FinAbGroup parent_;
  std::vector<GroupElement> generators_;
  std::vector<GroupElement> elements_;
};

// H + K = {h + k : h in H, k in K}, closed by construction.
inline Subgroup subgroup_sum(const Subgroup& h, const Subgroup& k) {
  if (h.parent() != k.parent())
    throw std::invalid_argument("subgroup sum requires a common parent group");
  const FinAbGroup& g = h.parent();
  std::set<GroupElement> sums;
  for (const auto& a : h.elements())
    for (const auto& b : k.elements()) sums.insert(g.add(a, b));
  std::vector<GroupElement> gens = h.generators();
  gens.insert(gens.end(), k.generators().begin(), k.generators().end());
  return Subgroup(g, std::move(gens), std::vector<GroupElement>(sums.begin(), sums.end()));
}

// Every subgroup of G exactly once, canonically ordered (size, then element
// list). Saturation from {0}: repeatedly extend each found subgroup by each
// outside element and close.
inline std::vector<Subgroup> all_subgroups(const FinAbGroup& g,
                                           std::int64_t bound = kDefaultEnumerationBound) {
  std::int64_t n = g.order();
  if (n > bound)
    throw BoundExceeded("subgroup enumeration over a group of order " + std::to_string(n) +
                            " exceeds the enumeration bound " + std::to_string(bound),
                        bound);

  detail::ElementTable tbl(g);
  detail::Mask zero_only = detail::make_mask(tbl.size);
  detail::mask_set(zero_only, 0);

  std::unordered_set<detail::Mask, detail::MaskHash> seen{zero_only};
  std::deque<detail::Mask> work{zero_only};
  while (!work.empty()) {
    detail::Mask cur = std::move(work.front());
    work.pop_front();
    for (std::size_t x = 1; x < tbl.size; ++x) {
      if (detail::mask_test(cur, x)) continue;
      detail::Mask grown = detail::close_with(tbl, cur, x);
      if (seen.insert(grown).second) work.push_back(std::move(grown));
    }
  }

  std::vector<Subgroup> out;
  out.reserve(seen.size());
  for (const auto& mask : seen) {
    std::vector<GroupElement> elems;
    std::vector<GroupElement> gens;
    detail::Mask have = zero_only;
    for (std::size_t i = 0; i < tbl.size; ++i) {
      if (!detail::mask_test(mask, i)) continue;
      elems.push_back(tbl.elements[i]);
      if (!detail::mask_test(have, i)) {
        gens.push_back(tbl.elements[i]);
        have = detail::close_with(tbl, have, i);
      }
    }
    out.push_back(Subgroup(g, std::move(gens), std::move(elems)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// The unique maximal p-subgroup of G: all elements of p-power order,
// generated by (m_i / p^{v_p(m_i)}) e_i over the coordinates p divides.
inline Subgroup primary_component(const FinAbGroup& g, std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    std::int64_t cofactor = g.moduli()[i];
    while (cofactor % p == 0) cofactor /= p;
    if (cofactor != g.moduli()[i])
      gens.push_back(g.scalar_mul(cofactor, g.generator(i)));
  }
  return Subgroup::generated(g, std::move(gens));
}

}  // namespace abelian
