#include "pmvw/suites.hpp"

#include <chrono>

#include "pmvw/error.hpp"
#include "pmvw/identities.hpp"
#include "pmvw/representation.hpp"

namespace pmvw {

namespace {

std::uint64_t suite_salt(const std::string& name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : name) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
  return h;
}

CheckRow verdict_row(const IdentityVerdict& v, Method method = Method::Sampled) {
  CheckRow row{v.name, v.samples, v.passes, v.counterexample, method};
  return row;
}

CheckReport suite_unit(const WorkbenchConfig& c) {
  const PmvAlgebra& a = *c.algebra;
  CheckReport report;
  report.title = "strong unit of " + a.describe();
  const UnitVerdict& v = a.unit_verdict();
  CheckRow row{"u is a strong unit", 1, v.is_unit_evidence() ? 1L : 0L, std::nullopt, v.method};
  if (!v.is_unit_evidence())
    row.counterexample = "witness " +
                         (v.witness ? a.carrier()->format(*v.witness) : std::string("-")) + "; " +
                         v.detail;
  report.add(std::move(row));
  report.note("verdict detail: " + v.detail);
  return report;
}

CheckReport suite_rdp(const WorkbenchConfig& c, std::uint64_t seed) {
  const PmvAlgebra& a = *c.algebra;
  const LGroup& g = *a.carrier();
  CheckReport report;
  report.title = "RDP2 refinement over the carrier of " + a.describe();
  Rng rng(seed);
  CheckRow row{"random valid quadruples refine with c12 ^ c21 = 0", c.samples, 0, std::nullopt,
               Method::Sampled};
  for (long i = 0; i < c.samples; ++i) {
    GroupElement a1 = a.sample(rng).raw();
    GroupElement a2 = a.sample(rng).raw();
    GroupElement v = g.add(a1, a2);
    GroupElement b1 = g.meet(g.pos_part(a.sample(rng).raw()), v);
    GroupElement b2 = g.add(g.neg(b1), v);
    try {
      RefinementMatrix m = rdp2_refine(g, a1, a2, b1, b2);
      bool ok = g.add(m.c11, m.c12) == a1 && g.add(m.c21, m.c22) == a2 &&
                g.add(m.c11, m.c21) == b1 && g.add(m.c12, m.c22) == b2 &&
                g.is_zero(g.meet(m.c12, m.c21));
      if (!ok) throw StructureDefect("verification failed");
      ++row.passes;
    } catch (const Error& e) {
      row.counterexample = "a1=" + g.format(a1) + " a2=" + g.format(a2) + " b1=" + g.format(b1) +
                           " b2=" + g.format(b2) + ": " + e.what();
      break;
    }
  }
  report.add(std::move(row));
  return report;
}

CheckReport suite_decomposition(const WorkbenchConfig& c, std::uint64_t seed) {
  CheckReport report;
  report.title = "decomposition structure of " + c.algebra->describe();
  HDecomposition d;
  try {
    d = analytic_decomposition(c.algebra);
  } catch (const UnsupportedError& e) {
    report.note(std::string("skipped: ") + e.what());
    return report;
  }
  report.merge(verify_decomposition(d, c.samples, seed));
  report.merge(verify_radical_structure(d, c.samples, c.infinitesimal_budget,
                                        std::max<Int>(c.ideal_depth, 40), seed ^ 0x2));
  report.merge(verify_quotient_hom(quotient_to_gamma_h(d), d, c.samples, seed ^ 0x3));
  NormalVerdict nv = normal_ideal_check(radical_ideal(d), std::min<long>(c.samples, 200),
                                        seed ^ 0x4, /*force_sampled=*/true);
  CheckRow row{"M_0 is a normal ideal", std::min<long>(c.samples, 200),
               nv.status == NormalVerdict::Status::Refuted ? 0 : std::min<long>(c.samples, 200),
               nv.witness, Method::Sampled};
  report.add(std::move(row));
  report.note("M_0 normality is analytic (state kernel); the sampled pass is a cross-check");
  return report;
}

CheckReport suite_state(const WorkbenchConfig& c, std::uint64_t seed) {
  CheckReport report;
  report.title = "state structure of " + c.algebra->describe();
  HDecomposition d;
  try {
    d = analytic_decomposition(c.algebra);
  } catch (const UnsupportedError& e) {
    report.note(std::string("skipped: ") + e.what());
    return report;
  }
  report.merge(verify_state(state_from_decomposition(d), d, c.samples, seed));
  return report;
}

CheckReport suite_classify(const WorkbenchConfig& c, std::uint64_t seed) {
  ClassifyResult r = classify(c.algebra, c.samples, seed, c.infinitesimal_budget,
                              std::max<Int>(c.ideal_depth, 40));
  CheckReport report = r.evidence;
  report.title = "classification of " + c.algebra->describe();
  report.note("class: " + perfection_class_name(r.cls));
  report.note(r.summary);
  return report;
}

CheckReport suite_represent(const WorkbenchConfig& c, std::uint64_t seed) {
  CheckReport report;
  report.title = "representation of " + c.algebra->describe();
  ClassifyResult r = classify(c.algebra, c.samples, seed, c.infinitesimal_budget,
                              std::max<Int>(c.ideal_depth, 40));
  if (!r.decomposition || !r.decomposition->has_cyclic() ||
      (r.cls != PerfectionClass::Strong && r.cls != PerfectionClass::Weak)) {
    report.note("skipped: algebra is " + perfection_class_name(r.cls) +
                "; no lex representation to verify");
    return report;
  }
  const HDecomposition& d = *r.decomposition;
  DifferenceGroup dg = build_group_of_differences(d);
  report.merge(verify_difference_group(dg, c.samples, seed));
  LexImage image = build_lex_image(d, dg);
  report.note("image: " + image.algebra->describe() + ", b = " +
              c.algebra->carrier()->format(image.b));
  CheckRow dichotomy{"b = 0 exactly in the strong case", 1,
                     image.b_is_zero == (r.cls == PerfectionClass::Strong) ? 1L : 0L,
                     std::nullopt, Method::Analytic};
  if (dichotomy.passes == 0) dichotomy.counterexample = "classification disagrees with b";
  report.add(std::move(dichotomy));
  report.merge(verify_isomorphism(d, image, c.samples, seed ^ 0x5));
  report.merge(check_unique_roots(d, c.root_bound.convert_to<long>(),
                                  std::min<long>(c.samples, 200), seed ^ 0x6));
  report.merge(verify_functor_laws(d.hspec, std::min<long>(c.samples, 200), seed ^ 0x7));
  return report;
}

CheckReport suite_identities(const WorkbenchConfig& c, std::uint64_t seed) {
  const PmvAlgebra& a = *c.algebra;
  CheckReport report;
  report.title = "identity checks on " + a.describe();
  report.add(verdict_row(check_identity(
      Identity{"x0 oplus 0 = x0", Term::oplus(Term::var(0), Term::zero()), Term::var(0)}, a,
      c.samples, seed)));

  // The (3.5)/(3.6) family is tied to a cyclic slice structure.
  std::optional<HDecomposition> d;
  try {
    d = analytic_decomposition(c.algebra);
  } catch (const UnsupportedError&) {
  }
  if (d && d->hspec.is_cyclic() && d->hspec.modulus() <= 64) {
    long n = d->hspec.modulus().convert_to<long>();
    report.add(verdict_row(check_identity(identity_3_5(n), a, c.samples, seed ^ 0x15)));
    for (long p = 2; p < n; ++p) {
      if (n % p == 0) continue;
      report.add(verdict_row(check_identity(identity_3_6(n, p), a, c.samples,
                                            seed ^ (0x16 + static_cast<std::uint64_t>(p)))));
    }
  } else {
    report.note("3.5/3.6 skipped: no cyclic slice structure on this carrier");
  }
  IdentityVerdict comm = check_identity(identity_commutativity(), a, c.samples, seed ^ 0x17);
  report.note(comm.passed()
                  ? "commutativity holds on samples (MV on the sampled fragment)"
                  : "commutativity counterexample: " + *comm.counterexample);
  return report;
}

CheckReport suite_symmetric(const WorkbenchConfig& c, std::uint64_t seed) {
  const PmvAlgebra& a = *c.algebra;
  CheckReport report;
  report.title = "symmetry of " + a.describe();
  IdentityVerdict v = symmetric_check(a, c.samples, seed);
  report.note(v.passed() ? "symmetric on samples"
                         : "asymmetry witness: " + *v.counterexample);
  // The theorem under test: strong algebras are symmetric.
  ClassifyResult r = classify(c.algebra, std::min<long>(c.samples, 150), seed ^ 0x9,
                              c.infinitesimal_budget, std::max<Int>(c.ideal_depth, 40));
  if (r.cls == PerfectionClass::Strong) {
    report.add(verdict_row(v));
    report.rows.back().name = "strong implies symmetric";
  } else {
    report.note("algebra is " + perfection_class_name(r.cls) +
                "; symmetry is informational only");
  }
  return report;
}

}  // namespace

long RunReport::total_checks() const {
  long n = 0;
  for (const auto& s : suites) n += s.checks();
  return n;
}

long RunReport::total_failures() const {
  long n = 0;
  for (const auto& s : suites) n += s.failures();
  return n;
}

std::string RunReport::render_document() const {
  std::string out;
  out += "pmv-workbench report\n";
  out += "algebra: " + algebra + "\n";
  out += "carrier: " + carrier + "\n";
  out += "unit: " + unit + "\n";
  out += "seed: " + std::to_string(seed) + "\n";
  out += "samples: " + std::to_string(samples) + "\n";
  out += "budgets: " + budgets + "\n";
  out += "suites:";
  for (const auto& s : suites) out += " " + s.name;
  out += "\n";
  for (const auto& s : suites) {
    out += "\n[" + s.name + "]\n";
    out += s.report.render();
    out += "result: " + std::string(s.failures() == 0 ? "pass" : "FAIL") + " (" +
           std::to_string(s.checks()) + " checks, " + std::to_string(s.failures()) +
           " failures)\n";
  }
  out += "\n== totals: " + std::to_string(suites.size()) + " suites, " +
         std::to_string(total_checks()) + " checks, " + std::to_string(total_failures()) +
         " failures ==\n";
  return out;
}

std::string RunReport::render_timing() const {
  std::string out;
  double total = 0;
  for (const auto& s : suites) {
    out += s.name + ": " + std::to_string(s.wall_ms) + " ms\n";
    total += s.wall_ms;
  }
  out += "total: " + std::to_string(total) + " ms\n";
  return out;
}

RunReport run(const WorkbenchConfig& config) {
  RunReport report;
  report.algebra = config.algebra->describe();
  report.carrier = config.algebra->carrier()->describe();
  report.unit = config.algebra->carrier()->format(config.algebra->unit());
  report.seed = config.seed;
  report.samples = config.samples;
  report.budgets = "infinitesimal=" + config.infinitesimal_budget.str() +
                   " ideal-depth=" + config.ideal_depth.str() +
                   " root-bound=" + config.root_bound.str();

  for (const std::string& name : config.suites) {  // already sorted by name
    std::uint64_t seed = Rng(config.seed).fork(suite_salt(name)).next();
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult result;
    result.name = name;
    if (name == "unit") result.report = suite_unit(config);
    else if (name == "axioms") result.report = check_pmv_axioms(*config.algebra, config.samples, seed);
    else if (name == "pea-axioms") result.report = check_pea_axioms(*config.algebra, config.samples, seed);
    else if (name == "rdp") result.report = suite_rdp(config, seed);
    else if (name == "decomposition") result.report = suite_decomposition(config, seed);
    else if (name == "state") result.report = suite_state(config, seed);
    else if (name == "classify") result.report = suite_classify(config, seed);
    else if (name == "represent") result.report = suite_represent(config, seed);
    else if (name == "identities") result.report = suite_identities(config, seed);
    else if (name == "symmetric") result.report = suite_symmetric(config, seed);
    else throw PreconditionError("unknown suite '" + name + "'");
    auto t1 = std::chrono::steady_clock::now();
    result.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    report.suites.push_back(std::move(result));
  }
  return report;
}

}  // namespace pmvw
