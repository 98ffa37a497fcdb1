#pragma once

#include "pmvw/perfection.hpp"

namespace pmvw {

/// The group of differences of M_0, realized inside the ambient carrier as
/// {g1 - g2 : g1, g2 in M_0}; M_0 is its positive cone and join/meet are
/// inherited. Elements are ambient elements.
struct DifferenceGroup {
  LGroupPtr group;  // Subgroup-kind carrier delegating to the ambient group
  PmvAlgebraPtr source;
  HDecomposition decomposition;
};

/// Requires the radical to be additively closed (sampled elsewhere); the
/// returned group's membership test decomposes x = x^+ - x^- and asks both
/// parts to lie in the zero slice.
DifferenceGroup build_group_of_differences(const HDecomposition& d);

/// Closure of the realized group under +, -, join, meet on samples; the
/// positive cone is exactly M_0; for lex ambient carriers the projection on
/// the tail coordinate is checked to be a group isomorphism on samples.
CheckReport verify_difference_group(const DifferenceGroup& dg, long samples, std::uint64_t seed);

/// The representation target Gamma(H |x G, (1,b)) with b = u - c_1 taken in
/// the ambient group (b = 0 exactly in the strong case).
struct LexImage {
  PmvAlgebraPtr algebra;
  GroupElement b;  // ambient element of the difference group
  bool b_is_zero;
};

LexImage build_lex_image(const HDecomposition& d, const DifferenceGroup& dg);

/// phi(x) = (t, x - c_t) for x in slice t; the difference is verified to lie
/// in the difference group (StructureDefect otherwise).
PmvElement phi(const HDecomposition& d, const LexImage& image, const PmvElement& x);

/// Sampled isomorphism suite: preservation of all interval operations and of
/// the partial sum (definedness both ways), order embedding, injectivity on
/// distinct pairs, and constructive surjectivity through the preimage recipe
/// g + c_t.
CheckReport verify_isomorphism(const HDecomposition& d, const LexImage& image, long samples,
                               std::uint64_t seed);

/// Unique extraction of roots of 1 on strong lex algebras: the canonical
/// candidate (1/n, 0) satisfies n*c = 1 and every sampled solution equals it.
CheckReport check_unique_roots(const HDecomposition& d, long n_max, long samples,
                               std::uint64_t seed);

/// The object maps of the two functors.
PmvAlgebraPtr functor_m_h(const HSpec& h, const LGroupPtr& g);
PmvAlgebraPtr functor_f_h(const HSpec& h, const LGroupPtr& g, const GroupElement& b);

/// Shipped homomorphism catalog handle.
struct GroupHom {
  std::string name;
  LGroupPtr src;
  LGroupPtr dst;
  std::function<GroupElement(const GroupElement&)> apply;
};

GroupHom hom_identity(const LGroupPtr& g);
GroupHom hom_zero(const LGroupPtr& g);
GroupHom hom_scale_z(const Int& k);
GroupHom hom_projection(const LGroupPtr& product_group, size_t index);
GroupHom hom_compose(const GroupHom& outer, const GroupHom& inner);

struct AlgebraHom {
  std::string name;
  PmvAlgebraPtr src;
  PmvAlgebraPtr dst;
  std::function<PmvElement(const PmvElement&)> map;
};

/// (t,g) -> (t, h(g)) between Gamma(H |x -, (1,0)) algebras. Rejects h when a
/// sampled pair violates order preservation or additivity.
AlgebraHom lift_morphism(const HSpec& h, const GroupHom& hom, long presamples = 64,
                         std::uint64_t seed = 1);

CheckReport verify_algebra_hom(const AlgebraHom& f, long samples, std::uint64_t seed);

/// Functor laws on the shipped catalog: identity lifts to the identity, the
/// lift of a composite is the composite of the lifts, and distinct
/// homomorphisms lift to maps separated at some (0,g).
CheckReport verify_functor_laws(const HSpec& h, long samples, std::uint64_t seed);

}  // namespace pmvw
