#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "abelian/subgroup.hpp"

namespace abelian {

enum class DecideMethod { bruteforce, structural, both };

enum class StructuralFailure {
  order_not_prime_power,        // o(g) has two distinct prime divisors
  primary_component_not_cyclic  // the p-part of G needs more than one factor
};

// Verdict of a base-membership decision, with enough evidence to re-check it:
// a refuting pair of proper subgroups from the brute-force route, or the
// (p, n) shape of the cyclic p-component from the structural route.
struct BaseVerdict {
  bool is_base = false;
  DecideMethod method = DecideMethod::both;
  std::optional<std::pair<Subgroup, Subgroup>> refuting_pair;        // bruteforce, false
  std::optional<StructuralFailure> structural_failure;               // structural, false
  std::optional<std::pair<std::int64_t, int>> prime_power;           // structural, true
};

namespace detail {

// Shared per-group state for brute-force decisions: the canonically ordered
// proper subgroups, as rank bitmasks plus element-rank lists.
struct BruteforceContext {
  explicit BruteforceContext(const FinAbGroup& g, std::int64_t bound)
      : subgroups(all_subgroups(g, bound)), table(g) {
    for (const auto& s : subgroups) {
      Mask m = make_mask(table.size);
      std::vector<std::size_t> ranks;
      ranks.reserve(s.elements().size());
      for (const auto& e : s.elements()) {
        std::size_t r = table.rank_of(e);
        mask_set(m, r);
        ranks.push_back(r);
      }
      masks.push_back(std::move(m));
      rank_lists.push_back(std::move(ranks));
    }
  }

  std::vector<Subgroup> subgroups;  // canonical order; last one is G itself
  ElementTable table;
  std::vector<Mask> masks;
  std::vector<std::vector<std::size_t>> rank_lists;
};

// g in H+K  iff  some h in H has g-h in K.
inline bool sum_contains(const BruteforceContext& ctx, std::size_t h_idx, std::size_t k_idx,
                         std::size_t g_rank) {
  const Mask& k_mask = ctx.masks[k_idx];
  for (std::size_t h : ctx.rank_lists[h_idx])
    if (mask_test(k_mask, ctx.table.sub_rank(g_rank, h))) return true;
  return false;
}

inline BaseVerdict bruteforce_with(const BruteforceContext& ctx, const GroupElement& g) {
  const std::size_t g_rank = ctx.table.rank_of(g);
  // Proper subgroups are everything but the last (the whole group); pairs
  // where either side already contains g cannot violate the property.
  const std::size_t proper = ctx.subgroups.size() - 1;
  for (std::size_t i = 0; i < proper; ++i) {
    if (mask_test(ctx.masks[i], g_rank)) continue;
    for (std::size_t j = i; j < proper; ++j) {
      if (mask_test(ctx.masks[j], g_rank)) continue;
      if (sum_contains(ctx, i, j, g_rank)) {
        BaseVerdict v;
        v.is_base = false;
        v.method = DecideMethod::bruteforce;
        v.refuting_pair = {{ctx.subgroups[i], ctx.subgroups[j]}};
        return v;
      }
    }
  }
  BaseVerdict v;
  v.is_base = true;
  v.method = DecideMethod::bruteforce;
  return v;
}

}  // namespace detail

// Decide base membership by scanning every unordered pair of proper
// subgroups for a violation of: g in H+K implies g in H or g in K.
// (The converse implication is automatic since H and K embed in H+K.)
inline BaseVerdict is_base_bruteforce(const PointedGroup& pg,
                                      std::int64_t bound = kDefaultEnumerationBound) {
  detail::BruteforceContext ctx(pg.group, bound);
  return detail::bruteforce_with(ctx, pg.point);
}

// Decide base membership structurally, without enumerating subgroups:
// (G, g) is a base iff o(g) = p^m for a prime p and the p-component of G is
// cyclic (for finite abelian G the p-component is the unique maximal
// p-subgroup, and cyclic means it is Z/p^n).
inline BaseVerdict is_base_structural(const PointedGroup& pg) {
  BaseVerdict v;
  v.method = DecideMethod::structural;

  auto decomposition = prime_power_decompose(pg.group.element_order(pg.point));
  if (!decomposition) {
    v.is_base = false;
    v.structural_failure = StructuralFailure::order_not_prime_power;
    return v;
  }
  const std::int64_t p = decomposition->first;

  int component_exponent = 0;
  std::size_t factors_divisible = 0;
  for (std::int64_t m : pg.group.moduli()) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) {
      ++factors_divisible;
      component_exponent = e;
    }
  }
  // p divides o(g), so at least one factor is divisible by p.
  if (factors_divisible > 1) {
    v.is_base = false;
    v.structural_failure = StructuralFailure::primary_component_not_cyclic;
    return v;
  }
  v.is_base = true;
  v.prime_power = {{p, component_exponent}};
  return v;
}

// Necessary condition fast path: a base's distinguished element has
// prime-power order.
inline bool is_prime_power_order_necessary(const PointedGroup& pg) {
  return prime_power_decompose(pg.group.element_order(pg.point)).has_value();
}

// The two deciders returned different answers somewhere. This is always an
// implementation bug: the structural characterization is exact.
class DecideDisagreement : public std::logic_error {
public:
  DecideDisagreement(const PointedGroup& pg, bool bruteforce_says, bool structural_says)
      : std::logic_error(describe(pg, bruteforce_says, structural_says)), pointed_(pg) {}

  const PointedGroup& counterexample() const noexcept { return pointed_; }

private:
  static std::string describe(const PointedGroup& pg, bool bf, bool st) {
    std::ostringstream os;
    os << "decider disagreement on (";
    for (std::size_t i = 0; i < pg.group.rank(); ++i)
      os << (i ? " x " : "") << "Z/" << pg.group.moduli()[i];
    os << ", (";
    for (std::size_t i = 0; i < pg.point.rank(); ++i)
      os << (i ? "," : "") << pg.point.coords[i];
    os << ")): bruteforce says " << (bf ? "base" : "not a base") << ", structural says "
       << (st ? "base" : "not a base");
    return os.str();
  }

  PointedGroup pointed_;
};

struct BaseRow {
  FinAbGroup group;
  GroupElement g;
  BaseVerdict verdict;
};

// One row per (isomorphism class of order 2..max_order, nonzero g), in
// deterministic order: group order, then canonical invariant factors, then
// g lexicographically. With method = both the two deciders are run on every
// cell and any disagreement throws DecideDisagreement.
inline std::vector<BaseRow> enumerate_bases(std::int64_t max_order, DecideMethod method,
                                            std::int64_t bound = kDefaultEnumerationBound) {
  if (max_order > bound)
    throw BoundExceeded("base enumeration up to order " + std::to_string(max_order) +
                            " exceeds the enumeration bound " + std::to_string(bound),
                        bound);

  std::vector<BaseRow> rows;
  for (std::int64_t n = 2; n <= max_order; ++n) {
    std::vector<FinAbGroup> classes = abelian_groups_of_order(n);
    std::sort(classes.begin(), classes.end(),
              [](const FinAbGroup& a, const FinAbGroup& b) {
                return canonical_invariant_factors(a) < canonical_invariant_factors(b);
              });
    for (const FinAbGroup& g : classes) {
      std::optional<detail::BruteforceContext> ctx;
      if (method != DecideMethod::structural) ctx.emplace(g, bound);
      for (const auto& x : g.elements()) {
        if (x.is_zero()) continue;
        PointedGroup pg(g, x);
        BaseVerdict verdict;
        if (method == DecideMethod::bruteforce) {
          verdict = detail::bruteforce_with(*ctx, x);
        } else if (method == DecideMethod::structural) {
          verdict = is_base_structural(pg);
        } else {
          BaseVerdict bf = detail::bruteforce_with(*ctx, x);
          BaseVerdict st = is_base_structural(pg);
          if (bf.is_base != st.is_base) throw DecideDisagreement(pg, bf.is_base, st.is_base);
          verdict = std::move(st);
          verdict.method = DecideMethod::both;
          verdict.refuting_pair = std::move(bf.refuting_pair);
        }
        rows.push_back(BaseRow{g, x, std::move(verdict)});
      }
    }
  }
  return rows;
}

}  // namespace abelian
