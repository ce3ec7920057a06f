#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "abelian/hom.hpp"
#include "abelian/snf.hpp"

namespace abelian {

// Concrete reason a span admits no amalgam: an element of one leg's kernel
// that the other leg sends to its distinguished point.
struct NonAmalgamWitness {
  GroupElement element;  // in the span's source group
  // true:  left(element) = 0 and right(element) = l
  // false: right(element) = 0 and left(element) = k
  bool in_left_kernel;
};

struct ConditionResult {
  bool amalgamable;
  std::optional<NonAmalgamWitness> witness;  // present when not amalgamable
};

// The kernel criterion: amalgamable iff l is not in h(ker f) and k is not
// in f(ker h).
inline ConditionResult amalgamability_condition(const Span& span,
                                                std::int64_t bound = kDefaultEnumerationBound) {
  Subgroup ker_left = kernel(span.left, bound);
  for (const auto& a : ker_left.elements())
    if (span.right.apply(a) == span.right_target.point)
      return {false, NonAmalgamWitness{a, true}};
  Subgroup ker_right = kernel(span.right, bound);
  for (const auto& a : ker_right.elements())
    if (span.left.apply(a) == span.left_target.point)
      return {false, NonAmalgamWitness{a, false}};
  return {true, std::nullopt};
}

// The pushout of a span: (K (+) L) / H with H generated by the differences
// (f(e_i), -h(e_i)), in invariant-factor coordinates.
struct AmalgamResult {
  bool amalgamable;          // d != 0
  FinAbGroup quotient;       // the pushout group D
  GroupElement d;            // class of (k, 0) == class of (0, l)
  Homomorphism left_map;     // K -> D, x |-> class of (x, 0)
  Homomorphism right_map;    // L -> D, y |-> class of (0, y)
  std::optional<PointedGroup> amalgam;       // (D, d) when amalgamable
  std::optional<NonAmalgamWitness> witness;  // when not amalgamable
};

inline constexpr std::int64_t kWitnessScanCap = 1 << 16;

inline AmalgamResult pushout(const Span& span) {
  const FinAbGroup& k_group = span.left.codomain();
  const FinAbGroup& l_group = span.right.codomain();
  const std::size_t rk = k_group.rank();
  const std::size_t rl = l_group.rank();

  std::vector<std::int64_t> sum_moduli = k_group.moduli();
  sum_moduli.insert(sum_moduli.end(), l_group.moduli().begin(), l_group.moduli().end());

  // H = <(f(e_i), -h(e_i))>: the generator image of a |-> (f(a), h(-a))
  std::vector<std::vector<std::int64_t>> relations;
  for (std::size_t i = 0; i < span.source.group.rank(); ++i) {
    const GroupElement fi = span.left.images()[i];
    const GroupElement hi = l_group.neg(span.right.images()[i]);
    std::vector<std::int64_t> rel = fi.coords;
    rel.insert(rel.end(), hi.coords.begin(), hi.coords.end());
    relations.push_back(std::move(rel));
  }

  QuotientStructure q = quotient_invariants(sum_moduli, relations);
  FinAbGroup quotient(q.invariant_factors);

  auto embed_left = [&](const GroupElement& x) {
    std::vector<std::int64_t> padded = x.coords;
    padded.resize(rk + rl, 0);
    return quotient.element(q.project(padded));
  };
  auto embed_right = [&](const GroupElement& y) {
    std::vector<std::int64_t> padded(rk, 0);
    padded.insert(padded.end(), y.coords.begin(), y.coords.end());
    return quotient.element(q.project(padded));
  };

  std::vector<GroupElement> left_images;
  for (std::size_t i = 0; i < rk; ++i) left_images.push_back(embed_left(k_group.generator(i)));
  std::vector<GroupElement> right_images;
  for (std::size_t i = 0; i < rl; ++i) right_images.push_back(embed_right(l_group.generator(i)));

  Homomorphism left_map(k_group, quotient, std::move(left_images));
  Homomorphism right_map(l_group, quotient, std::move(right_images));
  GroupElement d = embed_left(span.left_target.point);

  AmalgamResult result{!d.is_zero(), quotient,          d, std::move(left_map),
                       std::move(right_map), std::nullopt, std::nullopt};
  if (result.amalgamable) {
    result.amalgam = PointedGroup(quotient, d);
  } else {
    // d = 0 means (k, 0) lies in H, i.e. some a has f(a) = k and h(a) = 0.
    // Surface it when the source is small enough to scan.
    if (span.source.group.order() <= kWitnessScanCap) {
      for (const auto& a : span.source.group.elements()) {
        if (span.right.apply(a).is_zero() &&
            span.left.apply(a) == span.left_target.point) {
          result.witness = NonAmalgamWitness{a, false};
          break;
        }
      }
    }
  }
  return result;
}

// Exhaustive commutativity and pointedness check of a completed square.
inline bool verify_square(const Span& span, const AmalgamResult& result) {
  if (!result.amalgamable || !result.amalgam) return false;
  if (result.d.is_zero()) return false;
  if (result.left_map.domain() != span.left.codomain() ||
      result.right_map.domain() != span.right.codomain() ||
      result.left_map.codomain() != result.quotient ||
      result.right_map.codomain() != result.quotient)
    return false;
  if (!is_pointed_hom(result.left_map, span.left_target, *result.amalgam)) return false;
  if (!is_pointed_hom(result.right_map, span.right_target, *result.amalgam)) return false;
  for (const auto& x : span.source.group.elements()) {
    if (result.left_map.apply(span.left.apply(x)) !=
        result.right_map.apply(span.right.apply(x)))
      return false;
  }
  return true;
}

}  // namespace abelian
