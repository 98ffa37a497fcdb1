#include "doctest.h"

#include "pmvw/catalog.hpp"
#include "pmvw/error.hpp"
#include "pmvw/representation.hpp"

using namespace pmvw;

namespace {

PmvElement lx(const PmvAlgebraPtr& a, long h, long t) {
  return a->element(GroupElement::lex(a->carrier()->hspec().cyclic_value(h),
                                      GroupElement::integer(t)));
}

std::vector<PmvAlgebraPtr> representable_algebras() {
  return {
      catalog::m_n_z(1),
      catalog::m_n_z(3),
      catalog::lex_z(catalog::sqrt2_minus_1()),
      catalog::lex_z_with_b(HSpec::cyclic(1), 2),
      catalog::lex_pl(catalog::noncentral_pl()),
      catalog::gamma_z(2),
      catalog::m_alpha(catalog::sqrt2_minus_1()),
  };
}

}  // namespace

TEST_CASE("the difference group of M_0 in Z |x Z is Z in the tail coordinate") {
  auto a = catalog::m_n_z(1);
  HDecomposition d = analytic_decomposition(a);
  DifferenceGroup dg = build_group_of_differences(d);
  // generated by (0,1): contains every (0,k) and nothing with a head
  CHECK(dg.group->contains(GroupElement::lex(d.hspec.zero(), GroupElement::integer(42))));
  CHECK(dg.group->contains(GroupElement::lex(d.hspec.zero(), GroupElement::integer(-42))));
  CHECK(!dg.group->contains(GroupElement::lex(d.hspec.one(), GroupElement::integer(0))));
  auto report = verify_difference_group(dg, 200, 3);
  INFO(report.render());
  CHECK(report.all_passed());
}

TEST_CASE("the trivial radical gives the zero group") {
  auto a = catalog::gamma_z(1);
  HDecomposition d = analytic_decomposition(a);
  DifferenceGroup dg = build_group_of_differences(d);
  Rng rng(5);
  for (int i = 0; i < 50; ++i) CHECK(dg.group->sample(rng, 6) == a->carrier()->zero());
  CHECK(dg.group->contains(GroupElement::integer(0)));
  CHECK(!dg.group->contains(GroupElement::integer(1)));
}

TEST_CASE("difference group closure holds on every representable algebra") {
  for (const auto& a : representable_algebras()) {
    CAPTURE(a->describe());
    HDecomposition d = analytic_decomposition(a);
    auto report = verify_difference_group(build_group_of_differences(d), 150, 7);
    INFO(report.render());
    CHECK(report.all_passed());
  }
}

TEST_CASE("phi on canonical points") {
  auto a = catalog::m_n_z(2);
  HDecomposition d = analytic_decomposition(a);
  DifferenceGroup dg = build_group_of_differences(d);
  LexImage image = build_lex_image(d, dg);
  CHECK(image.b_is_zero);

  // x = (1/2, 3) with c_(1/2) = (1/2, 0) maps to (1/2, (0,3)): the canonical
  // fixed point once the difference group is read through its tail.
  PmvElement x = lx(a, 1, 3);
  PmvElement y = phi(d, image, x);
  CHECK(d.hspec.format(y.raw().lex_head()) == "1/2");
  CHECK(y.raw().lex_tail() == GroupElement::lex(d.hspec.zero(), GroupElement::integer(3)));
  CHECK(y.raw().lex_tail().lex_tail() == GroupElement::integer(3));

  CHECK(phi(d, image, a->zero()) == image.algebra->zero());
  CHECK(phi(d, image, a->one()) == image.algebra->one());
}

TEST_CASE("phi in the weak case subtracts c_1 and lands on (1,b)") {
  auto a = catalog::lex_z_with_b(HSpec::cyclic(1), 2);
  HDecomposition d = analytic_decomposition(a);
  DifferenceGroup dg = build_group_of_differences(d);
  LexImage image = build_lex_image(d, dg);
  CHECK(!image.b_is_zero);
  CHECK(image.b == GroupElement::lex(d.hspec.zero(), GroupElement::integer(2)));

  // phi((1,-1)) = (1, (1,-1) - (1,0)) = (1, (0,-1))
  PmvElement y = phi(d, image, lx(a, 1, -1));
  CHECK(y.raw().lex_tail().lex_tail() == GroupElement::integer(-1));
  // phi(1) = (1, b)
  CHECK(phi(d, image, a->one()) == image.algebra->one());
}

TEST_CASE("representation round trip passes on every representable algebra") {
  for (const auto& a : representable_algebras()) {
    CAPTURE(a->describe());
    ClassifyResult cls = classify(a, 150, 11);
    REQUIRE((cls.cls == PerfectionClass::Strong || cls.cls == PerfectionClass::Weak));
    REQUIRE(cls.decomposition.has_value());
    DifferenceGroup dg = build_group_of_differences(*cls.decomposition);
    LexImage image = build_lex_image(*cls.decomposition, dg);
    CHECK(image.b_is_zero == (cls.cls == PerfectionClass::Strong));
    auto report = verify_isomorphism(*cls.decomposition, image, 150, 13);
    INFO(report.render());
    CHECK(report.all_passed());
  }
}

TEST_CASE("unique extraction of roots of 1 on strong lex algebras") {
  auto a = catalog::m_n_z(6);
  HDecomposition d = analytic_decomposition(a);
  auto report = check_unique_roots(d, 6, 150, 17);
  INFO(report.render());
  CHECK(report.all_passed());
  CHECK(report.rows.size() >= 8);  // n in {1,2,3,6}, two rows each

  // weak algebras skip with a note
  auto w = catalog::lex_z_with_b(HSpec::cyclic(1), 2);
  auto skipped = check_unique_roots(analytic_decomposition(w), 4, 50, 17);
  CHECK(skipped.rows.empty());
  CHECK(!skipped.notes.empty());
}

TEST_CASE("functor object maps") {
  // M_H(O) over cyclic:1 is the two-element Boolean chain
  auto boolean = functor_m_h(HSpec::cyclic(1), LGroup::trivial());
  CHECK(boolean->describe() == "Gamma(lex(cyclic:1,O),(1,()))");
  Rng rng(3);
  for (int i = 0; i < 40; ++i) {
    PmvElement x = boolean->sample(rng);
    CHECK((x == boolean->zero() || x == boolean->one()));
  }
  // its operation table is Boolean
  CHECK(boolean->oplus(boolean->one(), boolean->one()) == boolean->one());
  CHECK(boolean->odot(boolean->one(), boolean->zero()) == boolean->zero());
  auto cls = classify(boolean, 100, 3);
  CHECK(cls.cls == PerfectionClass::Strong);

  // F_H(Z, 0) = M_H(Z)
  auto f0 = functor_f_h(HSpec::cyclic(2), LGroup::integers(), GroupElement::integer(0));
  auto m = functor_m_h(HSpec::cyclic(2), LGroup::integers());
  CHECK(f0->same_as(*m));

  // F_H(Z, 2) classifies weak, not strong
  auto f2 = functor_f_h(HSpec::cyclic(2), LGroup::integers(), GroupElement::integer(2));
  CHECK(classify(f2, 150, 3).cls == PerfectionClass::Weak);

  CHECK_THROWS_AS(functor_f_h(HSpec::cyclic(2), LGroup::integers(), GroupElement::integer(-1)),
                  PreconditionError);
}

TEST_CASE("lifted morphisms are homomorphisms; bad maps are rejected") {
  HSpec h = HSpec::cyclic(2);
  // identity lifts to the identity
  AlgebraHom id = lift_morphism(h, hom_identity(LGroup::integers()));
  Rng rng(19);
  for (int i = 0; i < 60; ++i) {
    PmvElement x = id.src->sample(rng);
    CHECK(id.map(x) == x);
  }
  // scale:2 preserves oplus on samples
  AlgebraHom dbl = lift_morphism(h, hom_scale_z(2));
  auto report = verify_algebra_hom(dbl, 300, 23);
  INFO(report.render());
  CHECK(report.all_passed());
  CHECK(dbl.map(id.src->element(GroupElement::lex(h.zero(), GroupElement::integer(3)))) ==
        id.src->element(GroupElement::lex(h.zero(), GroupElement::integer(6))));

  // projections lift
  auto z2 = LGroup::product({LGroup::integers(), LGroup::integers()});
  auto proj = lift_morphism(h, hom_projection(z2, 1));
  CHECK(verify_algebra_hom(proj, 200, 23).all_passed());

  // multiplication by a negative constant reverses the order: rejected
  CHECK_THROWS_AS(lift_morphism(h, hom_scale_z(-1)), PreconditionError);
}

TEST_CASE("functor laws hold on the shipped catalog") {
  for (const HSpec& h : {HSpec::cyclic(1), HSpec::cyclic(4), catalog::sqrt2_minus_1()}) {
    CAPTURE(h.describe());
    auto report = verify_functor_laws(h, 150, 29);
    INFO(report.render());
    CHECK(report.all_passed());
  }
}
