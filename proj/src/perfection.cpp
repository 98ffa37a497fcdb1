#include "pmvw/perfection.hpp"

#include <algorithm>

#include "pmvw/error.hpp"

namespace pmvw {

namespace {

void run_check(CheckReport& report, const std::string& name, long samples, Method method,
               const std::function<std::optional<std::string>(Rng&)>& one, Rng& rng) {
  CheckRow row{name, samples, 0, std::nullopt, method};
  for (long i = 0; i < samples; ++i) {
    auto cex = one(rng);
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

/// Samples an element of the zero slice; falls back to 0 when rejection
/// sampling runs dry (it never does for the shipped carriers).
PmvElement sample_radical(const HDecomposition& d, Rng& rng) {
  for (int tries = 0; tries < 64; ++tries) {
    PmvElement x = d.algebra->sample(rng);
    if (d.hspec.sign(d.slice(x)) == 0) return x;
  }
  return d.algebra->zero();
}

}  // namespace

HDecomposition analytic_decomposition(const PmvAlgebraPtr& a) {
  const LGroupPtr& g = a->carrier();
  HDecomposition d;
  d.algebra = a;
  d.provenance = "analytic-projection";
  switch (g->kind()) {
    case LGroup::Kind::Lex: {
      d.hspec = g->hspec();
      d.slice = [](const PmvElement& x) { return x.raw().lex_head(); };
      LGroupPtr tail = g->lex_tail_group();
      PmvAlgebraPtr alg = a;
      d.cyclic = [alg, tail](const HValue& t) {
        return alg->element(GroupElement::lex(t, tail->zero()));
      };
      return d;
    }
    case LGroup::Kind::Integers: {
      const Int& n = a->unit().as_integer();
      if (n < 1) throw UnsupportedError("Gamma(Z," + n.str() + ") has no decomposition");
      HSpec h = HSpec::cyclic(n);
      d.hspec = h;
      d.slice = [h](const PmvElement& x) { return h.cyclic_value(x.raw().as_integer()); };
      PmvAlgebraPtr alg = a;
      d.cyclic = [alg](const HValue& t) { return alg->element(GroupElement::integer(t.index())); };
      return d;
    }
    case LGroup::Kind::Scalars: {
      const HSpec& spec = g->hspec();
      if (spec.is_cyclic()) {
        // Gamma((1/n)Z, i0/n) slices like the chain Gamma(Z, i0).
        const Int& i0 = a->unit().as_scalar().index();
        if (i0 < 1) throw UnsupportedError(a->describe() + " has no decomposition");
        HSpec h = HSpec::cyclic(i0);
        d.hspec = h;
        d.slice = [h](const PmvElement& x) { return h.cyclic_value(x.raw().as_scalar().index()); };
        PmvAlgebraPtr alg = a;
        HSpec carrier_spec = spec;
        d.cyclic = [alg, carrier_spec](const HValue& t) {
          return alg->element(GroupElement::scalar(carrier_spec.cyclic_value(t.index())));
        };
        return d;
      }
      if (!(a->unit().as_scalar() == spec.one()))
        throw UnsupportedError(a->describe() + ": dense scalar interval needs unit 1");
      d.hspec = spec;
      d.slice = [](const PmvElement& x) { return x.raw().as_scalar(); };
      PmvAlgebraPtr alg = a;
      d.cyclic = [alg](const HValue& t) { return alg->element(GroupElement::scalar(t)); };
      return d;
    }
    default:
      throw UnsupportedError("no analytic decomposition for carrier " + g->describe());
  }
}

CheckReport verify_decomposition(const HDecomposition& d, long samples, std::uint64_t seed) {
  const PmvAlgebra& a = *d.algebra;
  const HSpec& h = d.hspec;
  CheckReport report;
  report.title = "H-decomposition of " + a.describe() + " over " + h.describe();
  Rng rng(seed);

  single_check(report, "slice(0) = 0 and slice(1) = 1",
               h.sign(d.slice(a.zero())) == 0 && h.equal(d.slice(a.one()), h.one()),
               "endpoint slices wrong");
  run_check(report, "slice values lie in [0,1]_H", samples, Method::Sampled,
            [&](Rng& r) -> std::optional<std::string> {
              PmvElement x = a.sample(r);
              if (h.in_unit_interval(d.slice(x))) return std::nullopt;
              return "x=" + a.format(x);
            },
            rng);
  run_check(report, "(a) smaller slice means smaller element", samples, Method::Sampled,
            [&](Rng& r) -> std::optional<std::string> {
              PmvElement x = a.sample(r);
              PmvElement y = a.sample(r);
              if (!h.less(d.slice(x), d.slice(y))) return std::nullopt;
              if (a.leq(x, y) && !(x == y)) return std::nullopt;
              return "x=" + a.format(x) + " y=" + a.format(y);
            },
            rng);
  run_check(report, "(b) both negations send M_t to M_(1-t)", samples, Method::Sampled,
            [&](Rng& r) -> std::optional<std::string> {
              PmvElement x = a.sample(r);
              HValue want = h.sub(h.one(), d.slice(x));
              if (h.equal(d.slice(a.neg_left(x)), want) &&
                  h.equal(d.slice(a.neg_right(x)), want))
                return std::nullopt;
              return "x=" + a.format(x);
            },
            rng);
  run_check(report, "(c) oplus adds slice indices truncated at 1", samples, Method::Sampled,
            [&](Rng& r) -> std::optional<std::string> {
              PmvElement x = a.sample(r);
              PmvElement y = a.sample(r);
              HValue want = h.min(h.add(d.slice(x), d.slice(y)), h.one());
              if (h.equal(d.slice(a.oplus(x, y)), want)) return std::nullopt;
              return "x=" + a.format(x) + " y=" + a.format(y);
            },
            rng);
  return report;
}

StateMap state_from_decomposition(const HDecomposition& d) {
  StateMap s;
  s.hspec = d.hspec;
  s.algebra = d.algebra;
  s.value = d.slice;
  s.provenance = d.provenance == "analytic-projection" ? "analytic-projection"
                                                       : "derived-from-decomposition";
  return s;
}

CheckReport verify_state(const StateMap& s, const HDecomposition& d, long samples,
                         std::uint64_t seed) {
  const PmvAlgebra& a = *s.algebra;
  const HSpec& h = s.hspec;
  CheckReport report;
  report.title = "state on " + a.describe() + " (" + s.provenance + ")";
  Rng rng(seed);

  single_check(report, "s(1) = 1", h.equal(s.value(a.one()), h.one()), "s(1) != 1");
  run_check(report, "additivity on defined sums", samples, Method::Sampled,
            [&](Rng& r) -> std::optional<std::string> {
              PmvElement x = a.sample(r);
              PmvElement y = a.sample(r);
              auto sum = a.partial_plus(x, y);
              if (!sum) return std::nullopt;
              if (h.equal(s.value(*sum), h.add(s.value(x), s.value(y)))) return std::nullopt;
              return "x=" + a.format(x) + " y=" + a.format(y);
            },
            rng);
  run_check(report, "range inside [0,1]_H", samples, Method::Sampled,
            [&](Rng& r) -> std::optional<std::string> {
              PmvElement x = a.sample(r);
              if (h.in_unit_interval(s.value(x))) return std::nullopt;
              return "x=" + a.format(x);
            },
            rng);
  run_check(report, "extremal meet law s(x^y) = min(s(x),s(y))", samples, Method::Sampled,
            [&](Rng& r) -> std::optional<std::string> {
              PmvElement x = a.sample(r);
              PmvElement y = a.sample(r);
              if (h.equal(s.value(a.lat_meet(x, y)), h.min(s.value(x), s.value(y))))
                return std::nullopt;
              return "x=" + a.format(x) + " y=" + a.format(y);
            },
            rng);
  if (d.has_cyclic()) {
    // The slice of x is pinned by order comparisons against the cyclic
    // system; this is the sampled content of state uniqueness.
    run_check(report, "uniqueness bracketing against the cyclic system", samples, Method::Sampled,
              [&](Rng& r) -> std::optional<std::string> {
                PmvElement x = a.sample(r);
                HValue t = h.sample_unit_value(r, 8);
                PmvElement ct = d.cyclic(t);
                Cmp c = h.cmp(t, s.value(x));
                if (c == Cmp::LT && !a.leq(ct, x))
                  return "x=" + a.format(x) + " t=" + h.format(t);
                if (c == Cmp::GT && !a.leq(x, ct))
                  return "x=" + a.format(x) + " t=" + h.format(t);
                return std::nullopt;
              },
              rng);
  }
  return report;
}

bool radical_membership(const HDecomposition& d, const PmvElement& x) {
  return d.hspec.sign(d.slice(x)) == 0;
}

bool ideal_reaches_one(const PmvAlgebraPtr& a, const PmvElement& x, const Int& depth) {
  // Walks n odot x for n <= depth; the chain is increasing, so hitting a
  // fixed point below the unit settles the question exactly.
  PmvElement acc = x;
  for (Int i = 0; i <= depth; ++i) {
    if (acc == a->one()) return true;
    PmvElement next = a->oplus(acc, x);
    if (next == acc) return false;
    acc = next;
  }
  return false;
}

CheckReport verify_radical_structure(const HDecomposition& d, long samples, const Int& budget,
                                     const Int& ideal_depth, std::uint64_t seed) {
  const PmvAlgebra& a = *d.algebra;
  const HSpec& h = d.hspec;
  PmvAlgebraPtr alg = d.algebra;
  CheckReport report;
  report.title = "radical structure of " + a.describe();
  Rng rng(seed);

  run_check(report, "radical agrees with the budgeted infinitesimal test", samples,
            Method::Budgeted,
            [&](Rng& r) -> std::optional<std::string> {
              PmvElement x = a.sample(r);
              bool analytic = radical_membership(d, x);
              bool budgeted = a.is_infinitesimal_budgeted(x, budget).as_bool();
              if (analytic == budgeted) return std::nullopt;
              return "x=" + a.format(x);
            },
            rng);
  run_check(report, "M_0 + M_0 = M_0", samples, Method::Sampled,
            [&](Rng& r) -> std::optional<std::string> {
              PmvElement x = sample_radical(d, r);
              PmvElement y = sample_radical(d, r);
              auto sum = a.partial_plus(x, y);
              if (sum && radical_membership(d, *sum)) return std::nullopt;
              return "x=" + a.format(x) + " y=" + a.format(y);
            },
            rng);
  run_check(report, "(i) v+t < 1 forces a defined sum in slice v+t", samples, Method::Sampled,
            [&](Rng& r) -> std::optional<std::string> {
              PmvElement x = a.sample(r);
              PmvElement y = a.sample(r);
              HValue v = d.slice(x);
              HValue t = d.slice(y);
              if (h.cmp(h.add(v, t), h.one()) != Cmp::LT) return std::nullopt;
              auto sum = a.partial_plus(x, y);
              if (sum && h.equal(d.slice(*sum), h.add(v, t))) return std::nullopt;
              return "x=" + a.format(x) + " y=" + a.format(y);
            },
            rng);
  run_check(report, "(iii) v+t > 1 forces an undefined sum", samples, Method::Sampled,
            [&](Rng& r) -> std::optional<std::string> {
              PmvElement x = a.sample(r);
              PmvElement y = a.sample(r);
              if (h.cmp(h.add(d.slice(x), d.slice(y)), h.one()) != Cmp::GT) return std::nullopt;
              if (!a.partial_plus(x, y).has_value()) return std::nullopt;
              return "x=" + a.format(x) + " y=" + a.format(y);
            },
            rng);
  run_check(report, "every non-radical sample generates the unit", samples, Method::Budgeted,
            [&](Rng& r) -> std::optional<std::string> {
              PmvElement x = a.sample(r);
              if (radical_membership(d, x)) return std::nullopt;
              if (ideal_reaches_one(alg, x, ideal_depth)) return std::nullopt;
              return "x=" + a.format(x);
            },
            rng);
  return report;
}

QuotientHom quotient_to_gamma_h(const HDecomposition& d) {
  QuotientHom q;
  q.source = d.algebra;
  q.target = PmvAlgebra::make(LGroup::scalars(d.hspec), GroupElement::scalar(d.hspec.one()));
  auto slice = d.slice;
  PmvAlgebraPtr target = q.target;
  q.map = [slice, target](const PmvElement& x) {
    return target->element(GroupElement::scalar(slice(x)));
  };
  return q;
}

CheckReport verify_quotient_hom(const QuotientHom& q, const HDecomposition& d, long samples,
                                std::uint64_t seed) {
  const PmvAlgebra& a = *q.source;
  const PmvAlgebra& t = *q.target;
  CheckReport report;
  report.title = "quotient of " + a.describe() + " onto " + t.describe();
  Rng rng(seed);

  single_check(report, "0 -> 0 and 1 -> 1",
               q.map(a.zero()) == t.zero() && q.map(a.one()) == t.one(), "endpoints move");
  run_check(report, "oplus maps to truncated addition", samples, Method::Sampled,
            [&](Rng& r) -> std::optional<std::string> {
              PmvElement x = a.sample(r);
              PmvElement y = a.sample(r);
              if (q.map(a.oplus(x, y)) == t.oplus(q.map(x), q.map(y))) return std::nullopt;
              return "x=" + a.format(x) + " y=" + a.format(y);
            },
            rng);
  run_check(report, "both negations map to 1 - t", samples, Method::Sampled,
            [&](Rng& r) -> std::optional<std::string> {
              PmvElement x = a.sample(r);
              if (q.map(a.neg_left(x)) == t.neg_left(q.map(x)) &&
                  q.map(a.neg_right(x)) == t.neg_right(q.map(x)))
                return std::nullopt;
              return "x=" + a.format(x);
            },
            rng);
  run_check(report, "join and meet map to max and min", samples, Method::Sampled,
            [&](Rng& r) -> std::optional<std::string> {
              PmvElement x = a.sample(r);
              PmvElement y = a.sample(r);
              if (q.map(a.lat_join(x, y)) == t.lat_join(q.map(x), q.map(y)) &&
                  q.map(a.lat_meet(x, y)) == t.lat_meet(q.map(x), q.map(y)))
                return std::nullopt;
              return "x=" + a.format(x) + " y=" + a.format(y);
            },
            rng);
  // Surjectivity onto samples: cyclic targets must be covered completely.
  if (d.hspec.is_cyclic() && d.hspec.modulus() <= 64) {
    long n = d.hspec.modulus().convert_to<long>();
    std::vector<bool> hit(static_cast<size_t>(n) + 1, false);
    Rng r2(seed ^ 0xabcdef);
    for (long i = 0; i < samples; ++i) {
      HValue v = d.slice(a.sample(r2));
      hit[v.index().convert_to<size_t>()] = true;
    }
    bool all = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    single_check(report, "samples hit every slice of [0,1]_H", all, "some slice never sampled",
                 Method::Sampled);
  } else {
    Rng r2(seed ^ 0xabcdef);
    bool zero_hit = false;
    bool one_hit = false;
    long distinct_tracking = 0;
    std::vector<HValue> seen;
    for (long i = 0; i < samples; ++i) {
      HValue v = d.slice(a.sample(r2));
      if (d.hspec.sign(v) == 0) zero_hit = true;
      if (d.hspec.equal(v, d.hspec.one())) one_hit = true;
      if (std::find(seen.begin(), seen.end(), v) == seen.end()) {
        seen.push_back(v);
        ++distinct_tracking;
      }
    }
    single_check(report, "samples hit 0, 1 and interior slices",
                 zero_hit && one_hit && distinct_tracking >= 3, "slice coverage too thin",
                 Method::Sampled);
    report.note("distinct slice values sampled: " + std::to_string(distinct_tracking));
  }
  return report;
}

CheckReport check_cyclic_system(const HDecomposition& d, CyclicKind kind, long samples,
                                std::uint64_t seed) {
  if (!d.has_cyclic())
    throw PreconditionError("decomposition of " + d.algebra->describe() +
                            " carries no cyclic system");
  const PmvAlgebra& a = *d.algebra;
  const HSpec& h = d.hspec;
  CheckReport report;
  report.title = std::string(kind == CyclicKind::Strong ? "strong" : "weak") +
                 " cyclic system on " + a.describe();
  Rng rng(seed);

  single_check(report, "c_0 = 0", d.cyclic(h.zero()) == a.zero(), "c_0 != 0");
  PmvElement c1 = d.cyclic(h.one());
  if (kind == CyclicKind::Strong) {
    single_check(report, "c_1 = 1", c1 == a.one(), "c_1 = " + a.format(c1));
  } else {
    report.note("c_1 = " + a.format(c1) + (c1 == a.one() ? " (equals the unit)"
                                                         : " (below the unit)"));
  }
  run_check(report, "c_t lies in slice t", samples, Method::Sampled,
            [&](Rng& r) -> std::optional<std::string> {
              HValue t = h.sample_unit_value(r, 8);
              if (h.equal(d.slice(d.cyclic(t)), t)) return std::nullopt;
              return "t=" + h.format(t);
            },
            rng);
  {
    bool abelian = a.carrier()->is_abelian();
    CheckRow row{"c_t lies in the commutative center", samples, 0, std::nullopt,
                 abelian ? Method::Analytic : Method::Sampled};
    for (long i = 0; i < samples; ++i) {
      HValue t = h.sample_unit_value(rng, 8);
      CenterVerdict v = in_commutative_center(*a.carrier(), d.cyclic(t).raw(), 8,
                                              seed ^ (0x51ed00d + i));
      if (v.refuted()) {
        row.counterexample = "t=" + h.format(t) + " witness=" +
                             a.carrier()->format(*v.witness);
        break;
      }
      ++row.passes;
    }
    report.add(std::move(row));
  }
  run_check(report, "c_v + c_t = c_(v+t) whenever v+t <= 1", samples, Method::Sampled,
            [&](Rng& r) -> std::optional<std::string> {
              HValue v = h.sample_unit_value(r, 8);
              HValue t = h.sample_unit_value(r, 8);
              HValue s = h.add(v, t);
              if (!h.in_unit_interval(s)) return std::nullopt;
              auto sum = a.partial_plus(d.cyclic(v), d.cyclic(t));
              if (sum && *sum == d.cyclic(s)) return std::nullopt;
              return "v=" + h.format(v) + " t=" + h.format(t);
            },
            rng);
  if (h.is_cyclic()) {
    const Int& n = h.modulus();
    PmvElement root = d.cyclic(h.cyclic_value(1));
    auto nx = a.n_times(n, root);
    if (kind == CyclicKind::Strong) {
      single_check(report, "c_(1/n) is cyclic of order n", nx.has_value() && *nx == a.one(),
                   "n*c_(1/n) != 1 for n=" + n.str());
      if (nx && *nx == a.one()) {
        // A cyclic element has coinciding negations: a^- = (n-1)a = a^~.
        auto pred = a.n_times(n - 1, root);
        single_check(report, "negations of c_(1/n) coincide at (n-1)*c",
                     pred.has_value() && *pred == a.neg_left(root) &&
                         *pred == a.neg_right(root),
                     "(n-1)*c differs from a negation");
      }
    } else {
      single_check(report, "n*c_(1/n) = c_1", nx.has_value() && *nx == c1,
                   "n*c_(1/n) != c_1 for n=" + n.str());
    }
  }
  return report;
}

std::string perfection_class_name(PerfectionClass c) {
  switch (c) {
    case PerfectionClass::Strong: return "strong-H-perfect";
    case PerfectionClass::Weak: return "weak-H-perfect";
    case PerfectionClass::HPerfectOnly: return "H-perfect-only";
    case PerfectionClass::NotHPerfect: return "not-H-perfect";
  }
  return "?";
}

ClassifyResult classify(const PmvAlgebraPtr& a, long samples, std::uint64_t seed,
                        const Int& infinitesimal_budget, const Int& ideal_depth) {
  ClassifyResult result;
  result.evidence.title = "classification of " + a->describe();
  std::optional<HDecomposition> d;
  try {
    d = analytic_decomposition(a);
  } catch (const UnsupportedError& e) {
    result.evidence.note(std::string("no analytic decomposition: ") + e.what());
    // Budgeted refutation: in an H-perfect algebra Infinit(M) = M_0 is the
    // unique maximal ideal, so every element outside it generates 1.
    Rng rng(seed);
    for (long i = 0; i < samples; ++i) {
      PmvElement x = a->sample(rng);
      if (a->is_infinitesimal_budgeted(x, infinitesimal_budget).as_bool()) continue;
      if (!ideal_reaches_one(a, x, ideal_depth)) {
        result.cls = PerfectionClass::NotHPerfect;
        result.summary = "not-H-perfect: " + a->format(x) +
                         " is not infinitesimal yet generates a proper ideal";
        result.evidence.note(result.summary + " [budgeted]");
        return result;
      }
    }
    result.cls = PerfectionClass::NotHPerfect;
    result.summary = "not-H-perfect (no decomposition constructed; no refutation witness found)";
    result.evidence.note(result.summary);
    return result;
  }

  CheckReport dec = verify_decomposition(*d, samples, seed);
  result.evidence.merge(dec);
  result.decomposition = d;
  if (!dec.all_passed()) {
    result.cls = PerfectionClass::NotHPerfect;
    result.summary = "decomposition invariants failed";
    return result;
  }
  CheckReport weak = check_cyclic_system(*d, CyclicKind::Weak, samples, seed ^ 0x77);
  result.evidence.merge(weak);
  if (!weak.all_passed()) {
    result.cls = PerfectionClass::HPerfectOnly;
    result.summary = "H-perfect, but the cyclic system fails the weak laws";
    return result;
  }
  PmvElement c1 = d->cyclic(d->hspec.one());
  if (c1 == a->one()) {
    CheckReport strong = check_cyclic_system(*d, CyclicKind::Strong, samples, seed ^ 0x99);
    result.evidence.merge(strong);
    if (strong.all_passed()) {
      result.cls = PerfectionClass::Strong;
      result.summary = "strong-H-perfect over " + d->hspec.describe();
      return result;
    }
    result.cls = PerfectionClass::HPerfectOnly;
    result.summary = "cyclic system with c_1 = 1 failed the strong laws";
    return result;
  }
  result.cls = PerfectionClass::Weak;
  GroupElement b = a->carrier()->sub(a->unit(), c1.raw());
  result.summary = "weak-H-perfect: c_1 = " + a->format(c1) +
                   " < u, b = u - c_1 = " + a->carrier()->format(b);
  return result;
}

IdealHandle radical_ideal(const HDecomposition& d) {
  IdealHandle ideal;
  ideal.name = "M_0";
  ideal.algebra = d.algebra;
  HDecomposition copy = d;
  ideal.member = [copy](const PmvElement& x) { return radical_membership(copy, x); };
  ideal.sample = [copy](Rng& rng) { return sample_radical(copy, rng); };
  ideal.analytic_normal = true;  // kernel of the state
  return ideal;
}

IdealHandle trivial_ideal(const PmvAlgebraPtr& a) {
  IdealHandle ideal;
  ideal.name = "{0}";
  ideal.algebra = a;
  PmvAlgebraPtr alg = a;
  ideal.member = [alg](const PmvElement& x) { return x == alg->zero(); };
  ideal.sample = [alg](Rng&) { return alg->zero(); };
  ideal.analytic_normal = true;
  return ideal;
}

IdealHandle principal_ideal(const PmvAlgebraPtr& a, const PmvElement& gen, const Int& depth) {
  // Depth-bounded oplus-closure of {gen}: doubling reaches (2^depth) odot gen,
  // which bounds every shallower combination.
  PmvElement bound = gen;
  for (Int i = 0; i < depth; ++i) bound = a->oplus(bound, bound);
  IdealHandle ideal;
  ideal.name = "<" + a->format(gen) + ">@" + depth.str();
  ideal.algebra = a;
  PmvAlgebraPtr alg = a;
  PmvElement cap = bound;
  ideal.member = [alg, cap](const PmvElement& x) { return alg->leq(x, cap); };
  PmvElement g = gen;
  ideal.sample = [alg, cap, g](Rng& rng) {
    PmvElement i = alg->n_odot(Int(rng.uniform(0, 4)), g);
    return alg->lat_meet(alg->lat_meet(i, alg->sample(rng)), cap);
  };
  ideal.analytic_normal = false;
  return ideal;
}

NormalVerdict normal_ideal_check(const IdealHandle& ideal, long samples, std::uint64_t seed,
                                 bool force_sampled) {
  if (ideal.analytic_normal && !force_sampled)
    return {NormalVerdict::Status::Normal, Method::Analytic, std::nullopt};
  const PmvAlgebra& a = *ideal.algebra;
  const LGroup& g = *a.carrier();
  Rng rng(seed);
  for (long s = 0; s < samples; ++s) {
    PmvElement x = a.sample(rng);
    PmvElement i = ideal.sample(rng);
    // Minimal j with j + x covering x + i; ideals are downward closed, so
    // membership of the minimal solution decides solvability inside I.
    PmvElement left = a.oplus(x, i);
    PmvElement j1 = a.element(g.pos_part(g.sub(left.raw(), x.raw())));
    PmvElement right = a.oplus(i, x);
    PmvElement j2 = a.element(g.pos_part(g.add(g.neg(x.raw()), right.raw())));
    if (!(a.oplus(j1, x) == left) || !(a.oplus(x, j2) == right))
      throw StructureDefect("normality candidates failed to reproduce the sums");
    if (!ideal.member(j1) || !ideal.member(j2)) {
      return {NormalVerdict::Status::Refuted, Method::Sampled,
              "x=" + a.format(x) + " i=" + a.format(i)};
    }
  }
  return {NormalVerdict::Status::HoldsOnSamples, Method::Sampled, std::nullopt};
}

}  // namespace pmvw
