#include "pmvw/representation.hpp"

#include "pmvw/error.hpp"

namespace pmvw {

namespace {

void run_check(CheckReport& report, const std::string& name, long samples, Method method,
               const std::function<std::optional<std::string>(Rng&)>& one, Rng& rng) {
  CheckRow row{name, samples, 0, std::nullopt, method};
  for (long i = 0; i < samples; ++i) {
    std::optional<std::string> cex;
    try {
      cex = one(rng);
    } catch (const Error& e) {
      cex = std::string("exception: ") + e.what();
    }
    if (cex) {
      row.counterexample = *cex;
      break;
    }
    ++row.passes;
  }
  report.add(std::move(row));
}

void single_check(CheckReport& report, const std::string& name, bool ok, const std::string& cex,
                  Method method = Method::Analytic) {
  CheckRow row{name, 1, ok ? 1 : 0, std::nullopt, method};
  if (!ok) row.counterexample = cex;
  report.add(std::move(row));
}

PmvElement sample_radical(const HDecomposition& d, Rng& rng) {
  for (int tries = 0; tries < 64; ++tries) {
    PmvElement x = d.algebra->sample(rng);
    if (d.hspec.sign(d.slice(x)) == 0) return x;
  }
  return d.algebra->zero();
}

}  // namespace

DifferenceGroup build_group_of_differences(const HDecomposition& d) {
  PmvAlgebraPtr a = d.algebra;
  LGroupPtr ambient = a->carrier();
  HDecomposition dec = d;
  GroupElement unit = a->unit();
  auto member = [dec, a, ambient, unit](const GroupElement& x) {
    if (!ambient->contains(x)) return false;
    GroupElement plus = ambient->pos_part(x);
    GroupElement minus = ambient->neg_part(x);
    // Both lattice parts must be interval elements of the zero slice.
    for (const GroupElement* part : {&plus, &minus}) {
      if (!ambient->leq(*part, unit)) return false;
      if (dec.hspec.sign(dec.slice(a->element(*part))) != 0) return false;
    }
    return true;
  };
  auto sampler = [dec](Rng& rng, long /*size*/) {
    const LGroup& g = *dec.algebra->carrier();
    GroupElement g1 = sample_radical(dec, rng).raw();
    GroupElement g2 = sample_radical(dec, rng).raw();
    return g.sub(g1, g2);
  };
  DifferenceGroup dg;
  dg.group = LGroup::subgroup(ambient, member, sampler, "diff(M_0 of " + a->describe() + ")");
  dg.source = a;
  dg.decomposition = d;
  return dg;
}

CheckReport verify_difference_group(const DifferenceGroup& dg, long samples, std::uint64_t seed) {
  const LGroup& g = *dg.group;
  const LGroup& amb = *dg.source->carrier();
  CheckReport report;
  report.title = "group of differences " + g.describe();
  Rng rng(seed);

  run_check(report, "closure under +, -, join, meet", samples, Method::Sampled,
            [&](Rng& r) -> std::optional<std::string> {
              GroupElement x = g.sample(r, 6);
              GroupElement y = g.sample(r, 6);
              if (g.contains(g.add(x, y)) && g.contains(g.neg(x)) && g.contains(g.join(x, y)) &&
                  g.contains(g.meet(x, y)))
                return std::nullopt;
              return "x=" + amb.format(x) + " y=" + amb.format(y);
            },
            rng);
  run_check(report, "positive cone is exactly M_0", samples, Method::Sampled,
            [&](Rng& r) -> std::optional<std::string> {
              // every radical element is a nonnegative group member ...
              PmvElement m0 = sample_radical(dg.decomposition, r);
              if (!g.contains(m0.raw()) || !g.leq(g.zero(), m0.raw()))
                return "radical element escapes: " + amb.format(m0.raw());
              // ... and every nonnegative group member lies in the zero slice
              GroupElement x = g.sample(r, 6);
              if (!g.leq(g.zero(), x)) return std::nullopt;
              if (!amb.leq(x, dg.source->unit())) return "positive member above u";
              if (!radical_membership(dg.decomposition, dg.source->element(x)))
                return "positive member outside M_0: " + amb.format(x);
              return std::nullopt;
            },
            rng);
  run_check(report, "lattice split x = x^+ - x^- with both parts in M_0", samples,
            Method::Sampled,
            [&](Rng& r) -> std::optional<std::string> {
              GroupElement x = g.sample(r, 6);
              GroupElement plus = g.pos_part(x);
              GroupElement minus = g.neg_part(x);
              if (!(g.sub(plus, minus) == x)) return "split broke: " + amb.format(x);
              PmvAlgebraPtr a = dg.source;
              if (!radical_membership(dg.decomposition, a->element(plus)) ||
                  !radical_membership(dg.decomposition, a->element(minus)))
                return "parts leave M_0: " + amb.format(x);
              return std::nullopt;
            },
            rng);
  if (amb.kind() == LGroup::Kind::Lex) {
    const LGroup& tail = *amb.lex_tail_group();
    run_check(report, "projection on the tail is a group isomorphism on samples", samples,
              Method::Sampled,
              [&](Rng& r) -> std::optional<std::string> {
                GroupElement x = g.sample(r, 6);
                GroupElement y = g.sample(r, 6);
                GroupElement px = x.lex_tail();
                GroupElement py = y.lex_tail();
                if (!(g.add(x, y).lex_tail() == tail.add(px, py))) return "not additive";
                if (!(g.join(x, y).lex_tail() == tail.join(px, py))) return "not a lattice map";
                if (g.leq(x, y) != tail.leq(px, py)) return "order not reflected";
                if ((x == y) != (px == py)) return "not injective";
                // every tail element is hit: (0, t) is a difference
                GroupElement t = tail.sample(r, 6);
                if (!g.contains(GroupElement::lex(amb.hspec().zero(), t)))
                  return "tail element missed: " + tail.format(t);
                return std::nullopt;
              },
              rng);
  }
  return report;
}

LexImage build_lex_image(const HDecomposition& d, const DifferenceGroup& dg) {
  if (!d.has_cyclic())
    throw PreconditionError("lex image needs a cyclic system on " + d.algebra->describe());
  const LGroup& amb = *d.algebra->carrier();
  GroupElement b = amb.sub(d.algebra->unit(), d.cyclic(d.hspec.one()).raw());
  if (!dg.group->contains(b))
    throw StructureDefect("b = u - c_1 escapes the difference group: " + amb.format(b));
  PmvAlgebraPtr algebra = PmvAlgebra::make(LGroup::lex(d.hspec, dg.group),
                                           GroupElement::lex(d.hspec.one(), b),
                                           d.algebra->sample_size());
  return LexImage{std::move(algebra), b, amb.is_zero(b)};
}

PmvElement phi(const HDecomposition& d, const LexImage& image, const PmvElement& x) {
  const LGroup& amb = *d.algebra->carrier();
  HValue t = d.slice(x);
  GroupElement diff = amb.sub(x.raw(), d.cyclic(t).raw());
  const LGroup& target = *image.algebra->carrier();
  if (!target.lex_tail_group()->contains(diff))
    throw StructureDefect("x - c_t escapes the difference group at x = " + d.algebra->format(x));
  return image.algebra->element(GroupElement::lex(t, diff));
}

CheckReport verify_isomorphism(const HDecomposition& d, const LexImage& image, long samples,
                               std::uint64_t seed) {
  const PmvAlgebra& a = *d.algebra;
  const PmvAlgebra& m = *image.algebra;
  auto f = [&](const PmvElement& x) { return phi(d, image, x); };
  CheckReport report;
  report.title = "representation of " + a.describe() + " onto " + m.describe();
  Rng rng(seed);

  single_check(report, "phi(0) = (0,0) and phi(1) = (1,b)",
               f(a.zero()) == m.zero() && f(a.one()) == m.one(), "endpoints move");
  run_check(report, "phi preserves oplus", samples, Method::Sampled,
            [&](Rng& r) -> std::optional<std::string> {
              PmvElement x = a.sample(r), y = a.sample(r);
              if (f(a.oplus(x, y)) == m.oplus(f(x), f(y))) return std::nullopt;
              return "x=" + a.format(x) + " y=" + a.format(y);
            },
            rng);
  run_check(report, "phi preserves odot", samples, Method::Sampled,
            [&](Rng& r) -> std::optional<std::string> {
              PmvElement x = a.sample(r), y = a.sample(r);
              if (f(a.odot(x, y)) == m.odot(f(x), f(y))) return std::nullopt;
              return "x=" + a.format(x) + " y=" + a.format(y);
            },
            rng);
  run_check(report, "phi preserves both negations", samples, Method::Sampled,
            [&](Rng& r) -> std::optional<std::string> {
              PmvElement x = a.sample(r);
              if (f(a.neg_left(x)) == m.neg_left(f(x)) && f(a.neg_right(x)) == m.neg_right(f(x)))
                return std::nullopt;
              return "x=" + a.format(x);
            },
            rng);
  run_check(report, "phi preserves join and meet", samples, Method::Sampled,
            [&](Rng& r) -> std::optional<std::string> {
              PmvElement x = a.sample(r), y = a.sample(r);
              if (f(a.lat_join(x, y)) == m.lat_join(f(x), f(y)) &&
                  f(a.lat_meet(x, y)) == m.lat_meet(f(x), f(y)))
                return std::nullopt;
              return "x=" + a.format(x) + " y=" + a.format(y);
            },
            rng);
  run_check(report, "phi preserves the partial sum and its definedness", samples, Method::Sampled,
            [&](Rng& r) -> std::optional<std::string> {
              PmvElement x = a.sample(r), y = a.sample(r);
              auto src = a.partial_plus(x, y);
              auto dst = m.partial_plus(f(x), f(y));
              if (src.has_value() != dst.has_value()) return "definedness differs";
              if (src && !(f(*src) == *dst))
                return "x=" + a.format(x) + " y=" + a.format(y);
              return std::nullopt;
            },
            rng);
  run_check(report, "phi preserves both differences", samples, Method::Sampled,
            [&](Rng& r) -> std::optional<std::string> {
              PmvElement x = a.sample(r), y = a.sample(r);
              PmvElement lo = a.lat_meet(x, y), hi = a.lat_join(x, y);
              if (f(a.minus_left(hi, lo)) == m.minus_left(f(hi), f(lo)) &&
                  f(a.minus_right(lo, hi)) == m.minus_right(f(lo), f(hi)))
                return std::nullopt;
              return "lo=" + a.format(lo) + " hi=" + a.format(hi);
            },
            rng);
  run_check(report, "phi embeds the order and is injective", samples, Method::Sampled,
            [&](Rng& r) -> std::optional<std::string> {
              PmvElement x = a.sample(r), y = a.sample(r);
              if (a.leq(x, y) != m.leq(f(x), f(y))) return "order broken";
              if ((x == y) != (f(x) == f(y)))
                return "injectivity broken at x=" + a.format(x) + " y=" + a.format(y);
              return std::nullopt;
            },
            rng);
  run_check(report, "constructive preimages hit sampled image points", samples, Method::Sampled,
            [&](Rng& r) -> std::optional<std::string> {
              PmvElement target = m.sample(r);
              HValue t = target.raw().lex_head();
              GroupElement g = target.raw().lex_tail();
              const LGroup& amb = *a.carrier();
              // proof recipe: slice-0 points map straight, otherwise g + c_t
              GroupElement praw =
                  d.hspec.sign(t) == 0 ? g : amb.add(g, d.cyclic(t).raw());
              PmvElement pre = a.element(praw);
              if (f(pre) == target) return std::nullopt;
              return "target=" + m.format(target);
            },
            rng);
  single_check(report, "b = 0 exactly in the strong case",
               image.b_is_zero == (d.cyclic(d.hspec.one()) == a.one()),
               "b and c_1 disagree about strength");
  return report;
}

CheckReport check_unique_roots(const HDecomposition& d, long n_max, long samples,
                               std::uint64_t seed) {
  const PmvAlgebra& a = *d.algebra;
  const HSpec& h = d.hspec;
  CheckReport report;
  report.title = "unique extraction of roots of 1 in " + a.describe();
  if (!d.has_cyclic() || !(d.cyclic(h.one()) == a.one())) {
    report.note("skipped: algebra is not strong (c_1 != 1)");
    return report;
  }
  Rng rng(seed);
  for (long n = 1; n <= n_max; ++n) {
    HValue t = h.zero();
    if (h.is_cyclic()) {
      const Int& mod = h.modulus();
      if (mod % n != 0) continue;  // 1/n lies in (1/m)Z iff n divides m
      t = h.cyclic_value(mod / n);
    } else {
      if (n > 1) continue;  // a dense quadratic H contains 1/n only for n = 1
      t = h.one();
    }
    PmvElement c = d.cyclic(t);
    auto nc = a.n_times(n, c);
    single_check(report, "n*(1/n,0) = 1 for n=" + std::to_string(n),
                 nc.has_value() && *nc == a.one(), "candidate is not a root");
    CheckRow row{"all sampled solutions of " + std::to_string(n) + "*x = 1 equal the candidate",
                 samples, 0, std::nullopt, Method::Sampled};
    for (long i = 0; i < samples; ++i) {
      PmvElement x = a.sample(rng);
      auto nx = a.n_times(n, x);
      if (nx && *nx == a.one() && !(x == c)) {
        row.counterexample = "x=" + a.format(x);
        break;
      }
      ++row.passes;
    }
    report.add(std::move(row));
  }
  return report;
}

PmvAlgebraPtr functor_m_h(const HSpec& h, const LGroupPtr& g) {
  return PmvAlgebra::make(LGroup::lex(h, g), GroupElement::lex(h.one(), g->zero()));
}

PmvAlgebraPtr functor_f_h(const HSpec& h, const LGroupPtr& g, const GroupElement& b) {
  if (!g->leq(g->zero(), b))
    throw PreconditionError("F_H requires b >= 0, got " + g->format(b));
  return PmvAlgebra::make(LGroup::lex(h, g), GroupElement::lex(h.one(), b));
}

GroupHom hom_identity(const LGroupPtr& g) {
  return {"id", g, g, [](const GroupElement& x) { return x; }};
}

GroupHom hom_zero(const LGroupPtr& g) {
  GroupElement z = g->zero();
  return {"zero", g, g, [z](const GroupElement&) { return z; }};
}

GroupHom hom_scale_z(const Int& k) {
  auto z = LGroup::integers();
  Int kk = k;
  return {"scale:" + k.str(), z, z,
          [kk](const GroupElement& x) { return GroupElement::integer(kk * x.as_integer()); }};
}

GroupHom hom_projection(const LGroupPtr& product_group, size_t index) {
  if (product_group->kind() != LGroup::Kind::Product ||
      index >= product_group->factors().size())
    throw PreconditionError("hom_projection needs a product carrier and a valid index");
  return {"proj:" + std::to_string(index), product_group, product_group->factors()[index],
          [index](const GroupElement& x) { return x.as_tuple()[index]; }};
}

GroupHom hom_compose(const GroupHom& outer, const GroupHom& inner) {
  if (!outer.src->structurally_equal(*inner.dst))
    throw PreconditionError("hom_compose: codomain of " + inner.name + " is not the domain of " +
                            outer.name);
  auto fo = outer.apply;
  auto fi = inner.apply;
  return {outer.name + "." + inner.name, inner.src, outer.dst,
          [fo, fi](const GroupElement& x) { return fo(fi(x)); }};
}

AlgebraHom lift_morphism(const HSpec& h, const GroupHom& hom, long presamples,
                         std::uint64_t seed) {
  // Order preservation and additivity precheck on the group level.
  Rng rng(seed);
  for (long i = 0; i < presamples; ++i) {
    GroupElement x = hom.src->sample(rng, 6);
    GroupElement y = hom.src->sample(rng, 6);
    if (!(hom.apply(hom.src->add(x, y)) == hom.dst->add(hom.apply(x), hom.apply(y))))
      throw PreconditionError("lift_morphism: " + hom.name + " is not additive at x=" +
                              hom.src->format(x) + " y=" + hom.src->format(y));
    if (hom.src->leq(x, y) && !hom.dst->leq(hom.apply(x), hom.apply(y)))
      throw PreconditionError("lift_morphism: " + hom.name + " is not order-preserving at x=" +
                              hom.src->format(x) + " y=" + hom.src->format(y));
    if (!(hom.apply(hom.src->join(x, y)) == hom.dst->join(hom.apply(x), hom.apply(y))))
      throw PreconditionError("lift_morphism: " + hom.name + " does not preserve joins");
  }
  AlgebraHom f;
  f.name = "M_H(" + hom.name + ")";
  f.src = functor_m_h(h, hom.src);
  f.dst = functor_m_h(h, hom.dst);
  auto apply = hom.apply;
  PmvAlgebraPtr dst = f.dst;
  f.map = [apply, dst](const PmvElement& x) {
    return dst->element(GroupElement::lex(x.raw().lex_head(), apply(x.raw().lex_tail())));
  };
  return f;
}

CheckReport verify_algebra_hom(const AlgebraHom& f, long samples, std::uint64_t seed) {
  const PmvAlgebra& a = *f.src;
  const PmvAlgebra& b = *f.dst;
  CheckReport report;
  report.title = f.name + ": " + a.describe() + " -> " + b.describe();
  Rng rng(seed);
  single_check(report, "0 -> 0 and 1 -> 1",
               f.map(a.zero()) == b.zero() && f.map(a.one()) == b.one(), "endpoints move");
  run_check(report, "preserves oplus", samples, Method::Sampled,
            [&](Rng& r) -> std::optional<std::string> {
              PmvElement x = a.sample(r), y = a.sample(r);
              if (f.map(a.oplus(x, y)) == b.oplus(f.map(x), f.map(y))) return std::nullopt;
              return "x=" + a.format(x) + " y=" + a.format(y);
            },
            rng);
  run_check(report, "preserves both negations", samples, Method::Sampled,
            [&](Rng& r) -> std::optional<std::string> {
              PmvElement x = a.sample(r);
              if (f.map(a.neg_left(x)) == b.neg_left(f.map(x)) &&
                  f.map(a.neg_right(x)) == b.neg_right(f.map(x)))
                return std::nullopt;
              return "x=" + a.format(x);
            },
            rng);
  run_check(report, "preserves join and meet", samples, Method::Sampled,
            [&](Rng& r) -> std::optional<std::string> {
              PmvElement x = a.sample(r), y = a.sample(r);
              if (f.map(a.lat_join(x, y)) == b.lat_join(f.map(x), f.map(y)) &&
                  f.map(a.lat_meet(x, y)) == b.lat_meet(f.map(x), f.map(y)))
                return std::nullopt;
              return "x=" + a.format(x) + " y=" + a.format(y);
            },
            rng);
  return report;
}

CheckReport verify_functor_laws(const HSpec& h, long samples, std::uint64_t seed) {
  CheckReport report;
  report.title = "functor laws over H = " + h.describe();
  Rng rng(seed);
  auto z = LGroup::integers();
  auto z2 = LGroup::product({LGroup::integers(), LGroup::integers()});

  // identity law
  AlgebraHom lifted_id = lift_morphism(h, hom_identity(z));
  run_check(report, "M_H(id) = id", samples, Method::Sampled,
            [&](Rng& r) -> std::optional<std::string> {
              PmvElement x = lifted_id.src->sample(r);
              if (lifted_id.map(x) == x) return std::nullopt;
              return "x=" + lifted_id.src->format(x);
            },
            rng);
  // composition law on two catalog pairs
  {
    GroupHom s2 = hom_scale_z(2);
    GroupHom s3 = hom_scale_z(3);
    AlgebraHom both = lift_morphism(h, hom_compose(s3, s2));
    AlgebraHom f2 = lift_morphism(h, s2);
    AlgebraHom f3 = lift_morphism(h, s3);
    run_check(report, "M_H(scale:3 . scale:2) = M_H(scale:3) . M_H(scale:2)", samples,
              Method::Sampled,
              [&](Rng& r) -> std::optional<std::string> {
                PmvElement x = both.src->sample(r);
                if (both.map(x) == f3.map(f2.map(x))) return std::nullopt;
                return "x=" + both.src->format(x);
              },
              rng);
  }
  {
    GroupHom p0 = hom_projection(z2, 0);
    GroupHom s2 = hom_scale_z(2);
    AlgebraHom both = lift_morphism(h, hom_compose(s2, p0));
    AlgebraHom fp = lift_morphism(h, p0);
    AlgebraHom fs = lift_morphism(h, s2);
    run_check(report, "M_H(scale:2 . proj:0) = M_H(scale:2) . M_H(proj:0)", samples,
              Method::Sampled,
              [&](Rng& r) -> std::optional<std::string> {
                PmvElement x = both.src->sample(r);
                if (both.map(x) == fs.map(fp.map(x))) return std::nullopt;
                return "x=" + both.src->format(x);
              },
              rng);
  }
  // zero map lifts to a homomorphism
  report.merge(verify_algebra_hom(lift_morphism(h, hom_zero(z)), samples, seed ^ 0x5));
  // faithfulness witness: scale:2 != scale:3 separate at (0,1)
  {
    AlgebraHom f2 = lift_morphism(h, hom_scale_z(2));
    AlgebraHom f3 = lift_morphism(h, hom_scale_z(3));
    PmvElement probe = f2.src->element(GroupElement::lex(h.zero(), GroupElement::integer(1)));
    single_check(report, "distinct homomorphisms separate at (0,g)",
                 !(f2.map(probe) == f3.map(probe)), "lifts collide at (0,1)");
  }
  return report;
}

}  // namespace pmvw
