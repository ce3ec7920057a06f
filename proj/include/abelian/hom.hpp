#pragma once

#include <string>
#include <vector>

#include "abelian/subgroup.hpp"

namespace abelian {

// A homomorphism between finite abelian groups, stored by the images of the
// domain's standard generators. Well-definedness (m_i * images[i] = 0 in the
// codomain) is checked at construction.
class Homomorphism {
public:
  Homomorphism(FinAbGroup domain, FinAbGroup codomain, std::vector<GroupElement> images)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
    if (images_.size() != domain_.rank())
      throw std::invalid_argument("expected one generator image per domain factor");
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (!codomain_.contains(images_[i]))
        throw std::invalid_argument("image of generator " + std::to_string(i) +
                                    " does not lie in the codomain");
      std::int64_t m = domain_.moduli()[i];
      if (!codomain_.scalar_mul(m, images_[i]).is_zero())
        throw std::invalid_argument(
            "not well-defined on generator " + std::to_string(i) + ": " + std::to_string(m) +
            " times its image is nonzero in the codomain");
    }
  }

  static Homomorphism identity(const FinAbGroup& g) {
    std::vector<GroupElement> images;
    for (std::size_t i = 0; i < g.rank(); ++i) images.push_back(g.generator(i));
    return Homomorphism(g, g, std::move(images));
  }

  static Homomorphism zero(const FinAbGroup& domain, const FinAbGroup& codomain) {
    return Homomorphism(domain, codomain,
                        std::vector<GroupElement>(domain.rank(), codomain.zero()));
  }

  const FinAbGroup& domain() const noexcept { return domain_; }
  const FinAbGroup& codomain() const noexcept { return codomain_; }
  const std::vector<GroupElement>& images() const noexcept { return images_; }

  // f(x) = sum_i x_i * images[i]
  GroupElement apply(const GroupElement& x) const {
    if (x.rank() != domain_.rank())
      throw std::invalid_argument("element rank does not match the homomorphism's domain");
    GroupElement out = codomain_.zero();
    for (std::size_t i = 0; i < images_.size(); ++i)
      out = codomain_.add(out, codomain_.scalar_mul(x.coords[i], images_[i]));
    return out;
  }

  bool operator==(const Homomorphism&) const = default;

private:
  FinAbGroup domain_;
  FinAbGroup codomain_;
  std::vector<GroupElement> images_;
};

// outer . inner: x |-> outer(inner(x))
inline Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner) {
  if (inner.codomain() != outer.domain())
    throw std::invalid_argument("composition rank mismatch: inner codomain != outer domain");
  std::vector<GroupElement> images;
  images.reserve(inner.images().size());
  for (const auto& im : inner.images()) images.push_back(outer.apply(im));
  return Homomorphism(inner.domain(), outer.codomain(), std::move(images));
}

// {x : f(x) = 0} by brute force over the domain.
inline Subgroup kernel(const Homomorphism& f, std::int64_t bound = kDefaultEnumerationBound) {
  std::int64_t n = f.domain().order();
  if (n > bound)
    throw BoundExceeded("kernel computation over a domain of order " + std::to_string(n) +
                            " exceeds the enumeration bound " + std::to_string(bound),
                        bound);
  std::vector<GroupElement> elems;
  for (const auto& x : f.domain().elements())
    if (f.apply(x).is_zero()) elems.push_back(x);
  return Subgroup::from_elements(f.domain(), std::move(elems));
}

// {f(x) : x in domain} as a subgroup of the codomain.
inline Subgroup image(const Homomorphism& f, std::int64_t bound = kDefaultEnumerationBound) {
  std::int64_t n = f.domain().order();
  if (n > bound)
    throw BoundExceeded("image computation over a domain of order " + std::to_string(n) +
                            " exceeds the enumeration bound " + std::to_string(bound),
                        bound);
  std::vector<GroupElement> elems;
  for (const auto& x : f.domain().elements()) elems.push_back(f.apply(x));
  return Subgroup::from_elements(f.codomain(), std::move(elems));
}

// Image of a subgroup: {f(s) : s in S}.
inline Subgroup push_forward(const Homomorphism& f, const Subgroup& s) {
  if (s.parent() != f.domain())
    throw std::invalid_argument("subgroup parent does not match the homomorphism's domain");
  std::vector<GroupElement> elems;
  elems.reserve(s.elements().size());
  for (const auto& x : s.elements()) elems.push_back(f.apply(x));
  return Subgroup::from_elements(f.codomain(), std::move(elems));
}

// f is a homomorphism of pointed groups iff it sends point to point.
inline bool is_pointed_hom(const Homomorphism& f, const PointedGroup& src,
                           const PointedGroup& dst) {
  if (f.domain() != src.group || f.codomain() != dst.group)
    throw std::invalid_argument("homomorphism does not connect the given pointed groups");
  return f.apply(src.point) == dst.point;
}

// Two pointed homomorphisms out of a common pointed source:
//   (K, k)  <--f--  (G, g)  --h-->  (L, l)
struct Span {
  PointedGroup source;
  PointedGroup left_target;
  PointedGroup right_target;
  Homomorphism left;
  Homomorphism right;

  Span(PointedGroup src, Homomorphism f, PointedGroup f_target, Homomorphism h,
       PointedGroup h_target)
      : source(std::move(src)),
        left_target(std::move(f_target)),
        right_target(std::move(h_target)),
        left(std::move(f)),
        right(std::move(h)) {
    if (!is_pointed_hom(left, source, left_target))
      throw std::invalid_argument("left leg is not a pointed homomorphism (f(g) != k)");
    if (!is_pointed_hom(right, source, right_target))
      throw std::invalid_argument("right leg is not a pointed homomorphism (h(g) != l)");
  }

  // Same diagram with the two legs exchanged.
  Span swapped() const { return Span(source, right, right_target, left, left_target); }
};

}  // namespace abelian
