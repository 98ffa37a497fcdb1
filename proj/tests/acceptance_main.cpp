// Acceptance suite: one line per criterion, exit 0 only if all pass.
// Everything runs in exact arithmetic with fixed seeds and 500 samples per
// check (200 where a criterion asks for 200).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "pmvw/catalog.hpp"
#include "pmvw/error.hpp"
#include "pmvw/identities.hpp"
#include "pmvw/representation.hpp"
#include "pmvw/suites.hpp"

using namespace pmvw;

namespace {

constexpr long kSamples = 500;
constexpr std::uint64_t kSeed = 20240915;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  void absorb(const CheckReport& report, const std::string& context) {
    if (!report.all_passed() && ok) {
      ok = false;
      for (const auto& row : report.rows)
        if (!row.passed()) {
          detail = context + ": " + row.name +
                   (row.counterexample ? " [" + *row.counterexample + "]" : "");
          break;
        }
    }
  }
};

std::vector<PmvAlgebraPtr> criterion_algebras() {
  std::vector<PmvAlgebraPtr> all;
  for (long n = 1; n <= 5; ++n) all.push_back(catalog::gamma_z(n));
  for (long n = 1; n <= 6; ++n) all.push_back(catalog::m_n_z(n));
  all.push_back(catalog::lex_z(catalog::sqrt2_minus_1()));
  all.push_back(catalog::lex_pl(GroupElement::pl(PlMap())));
  all.push_back(catalog::lex_pl(catalog::noncentral_pl()));
  return all;
}

std::vector<PmvAlgebraPtr> lex_algebras() {
  std::vector<PmvAlgebraPtr> lex;
  for (long n = 1; n <= 6; ++n) lex.push_back(catalog::m_n_z(n));
  lex.push_back(catalog::lex_z(catalog::sqrt2_minus_1()));
  lex.push_back(catalog::lex_pl(GroupElement::pl(PlMap())));
  lex.push_back(catalog::lex_pl(catalog::noncentral_pl()));
  return lex;
}

Outcome criterion_axioms() {
  Outcome out;
  for (const auto& a : criterion_algebras()) {
    out.absorb(check_pmv_axioms(*a, kSamples, kSeed), a->describe());
    out.absorb(check_pea_axioms(*a, kSamples, kSeed ^ 0x1), a->describe());
  }
  return out;
}

Outcome criterion_bridge() {
  Outcome out;
  for (const auto& a : criterion_algebras()) {
    Rng rng(kSeed ^ 0x2);
    for (long i = 0; i < kSamples && out.ok; ++i) {
      PmvElement x = a->sample(rng);
      PmvElement y = a->sample(rng);
      try {
        out.require(a->oplus_from_pea(x, y) == a->oplus(x, y),
                    a->describe() + ": bridge mismatch at x=" + a->format(x) +
                        " y=" + a->format(y));
      } catch (const Error& e) {
        out.require(false, a->describe() + ": " + e.what());
      }
    }
  }
  return out;
}

bool z_refinement_feasible(long a1, long a2, long b1, long b2) {
  for (long c11 = 0; c11 <= std::min(a1, b1); ++c11) {
    long c12 = a1 - c11;
    long c21 = b1 - c11;
    long c22 = a2 - c21;
    if (c12 < 0 || c21 < 0 || c22 < 0 || c12 + c22 != b2) continue;
    if (std::min(c12, c21) != 0) continue;
    return true;
  }
  return false;
}

Outcome criterion_rdp() {
  Outcome out;
  for (const auto& a : criterion_algebras()) {
    const LGroup& g = *a->carrier();
    Rng rng(kSeed ^ 0x3);
    for (long i = 0; i < 200 && out.ok; ++i) {
      GroupElement a1 = a->sample(rng).raw();
      GroupElement a2 = a->sample(rng).raw();
      GroupElement v = g.add(a1, a2);
      GroupElement b1 = g.meet(g.pos_part(a->sample(rng).raw()), v);
      GroupElement b2 = g.add(g.neg(b1), v);
      try {
        RefinementMatrix m = rdp2_refine(g, a1, a2, b1, b2);
        bool sums = g.add(m.c11, m.c12) == a1 && g.add(m.c21, m.c22) == a2 &&
                    g.add(m.c11, m.c21) == b1 && g.add(m.c12, m.c22) == b2;
        out.require(sums && g.is_zero(g.meet(m.c12, m.c21)),
                    a->describe() + ": refinement invalid");
      } catch (const Error& e) {
        out.require(false, a->describe() + ": " + e.what());
      }
    }
  }
  // cross-check against the exhaustive search on Z
  auto z = LGroup::integers();
  Rng rng(kSeed ^ 0x4);
  for (int i = 0; i < 50 && out.ok; ++i) {
    long a1 = rng.uniform(0, 12), a2 = rng.uniform(0, 12);
    long b1 = rng.uniform(0, a1 + a2), b2 = a1 + a2 - b1;
    bool feasible = z_refinement_feasible(a1, a2, b1, b2);
    bool refined = true;
    try {
      rdp2_refine(*z, GroupElement::integer(a1), GroupElement::integer(a2),
                  GroupElement::integer(b1), GroupElement::integer(b2));
    } catch (const Error&) {
      refined = false;
    }
    out.require(feasible == refined, "Z feasibility disagreement");
  }
  return out;
}

Outcome criterion_thm_structure() {
  Outcome out;
  for (const auto& a : lex_algebras()) {
    HDecomposition d = analytic_decomposition(a);
    out.absorb(verify_decomposition(d, kSamples, kSeed ^ 0x5), a->describe());
    out.absorb(verify_state(state_from_decomposition(d), d, kSamples, kSeed ^ 0x6),
               a->describe());
    out.absorb(verify_radical_structure(d, 200, 100, 64, kSeed ^ 0x7), a->describe());
    out.absorb(verify_quotient_hom(quotient_to_gamma_h(d), d, kSamples, kSeed ^ 0x8),
               a->describe());
  }
  return out;
}

Outcome criterion_representation() {
  Outcome out;
  for (const auto& a : lex_algebras()) {
    ClassifyResult cls = classify(a, 200, kSeed ^ 0x9);
    out.require(cls.cls == PerfectionClass::Strong || cls.cls == PerfectionClass::Weak,
                a->describe() + ": classified " + perfection_class_name(cls.cls));
    if (!out.ok) break;
    DifferenceGroup dg = build_group_of_differences(*cls.decomposition);
    out.absorb(verify_difference_group(dg, 200, kSeed ^ 0xa), a->describe());
    LexImage image = build_lex_image(*cls.decomposition, dg);
    out.require(image.b_is_zero == (cls.cls == PerfectionClass::Strong),
                a->describe() + ": b = 0 must match the strong classification");
    out.absorb(verify_isomorphism(*cls.decomposition, image, kSamples, kSeed ^ 0xb),
               a->describe());
  }
  return out;
}

Outcome criterion_identities() {
  Outcome out;
  for (long n = 1; n <= 6 && out.ok; ++n) {
    auto a = catalog::m_n_z(n);
    IdentityVerdict v35 = check_identity(identity_3_5(n), *a, kSamples, kSeed ^ 0xc);
    out.require(v35.passed(), a->describe() + ": 3.5 failed [" +
                                  v35.counterexample.value_or("") + "]");
    for (long p = 2; p < n; ++p) {
      if (n % p == 0) continue;
      IdentityVerdict v36 =
          check_identity(identity_3_6(n, p), *a, kSamples, kSeed ^ (0xd + p));
      out.require(v36.passed(), a->describe() + ": 3.6(" + std::to_string(n) + "," +
                                    std::to_string(p) + ") failed [" +
                                    v36.counterexample.value_or("") + "]");
    }
  }
  IdentityVerdict comm =
      check_identity(identity_commutativity(), *catalog::pl_interval(), kSamples, kSeed ^ 0xe);
  out.require(!comm.passed() && comm.counterexample.has_value(),
              "commutativity did not fail on the PL interval within 500 samples");
  return out;
}

Outcome criterion_symmetry() {
  Outcome out;
  std::vector<PmvAlgebraPtr> strong = {
      catalog::m_n_z(1),  catalog::m_n_z(4),
      catalog::lex_z(catalog::sqrt2_minus_1()),
      catalog::lex_pl(GroupElement::pl(PlMap())),
  };
  for (const auto& a : strong) {
    IdentityVerdict v = symmetric_check(*a, kSamples, kSeed ^ 0xf);
    out.require(v.passed(), a->describe() + ": symmetric_check failed [" +
                                v.counterexample.value_or("") + "]");
  }
  IdentityVerdict v =
      symmetric_check(*catalog::lex_pl(catalog::noncentral_pl()), kSamples, kSeed ^ 0x10);
  out.require(!v.passed() && v.counterexample.has_value(),
              "no asymmetry witness found on the noncentral-b lex algebra");
  return out;
}

Outcome criterion_functors() {
  Outcome out;
  for (const HSpec& h : {HSpec::cyclic(1), HSpec::cyclic(4), catalog::sqrt2_minus_1()}) {
    out.absorb(verify_functor_laws(h, 200, kSeed ^ 0x11), "H = " + h.describe());
  }
  return out;
}

Outcome criterion_determinism() {
  Outcome out;
  const char* config_text =
      "[algebra]\ncarrier = lex(cyclic:2, Z)\nunit = (1, 0)\n"
      "[suites]\nrun = all\n"
      "[sampling]\nsamples = 100\nseed = 9\n";
  RunReport first = pmvw::run(parse_config(config_text));
  RunReport second = pmvw::run(parse_config(config_text));
  out.require(first.render_document() == second.render_document(),
              "library documents differ between identical runs");
  out.require(first.ok(), "the determinism config run must itself pass");
#ifdef PMVW_CLI_PATH
  // End-to-end through the binary: identical bytes on disk as well.
  std::string dir = "/tmp/pmvw-acceptance";
  std::system(("mkdir -p " + dir).c_str());
  std::string cfg = dir + "/det.cfg";
  {
    std::ofstream out_cfg(cfg);
    out_cfg << config_text;
  }
  std::string r1 = dir + "/r1.txt";
  std::string r2 = dir + "/r2.txt";
  std::string base = std::string(PMVW_CLI_PATH) + " run --config " + cfg + " --report-out ";
  int s1 = std::system((base + r1 + " > /dev/null 2>&1").c_str());
  int s2 = std::system((base + r2 + " > /dev/null 2>&1").c_str());
  out.require(s1 == 0 && s2 == 0, "CLI run exited nonzero");
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  std::string d1 = slurp(r1);
  out.require(!d1.empty() && d1 == slurp(r2), "CLI reports are not byte-identical");
  out.require(d1 == first.render_document(), "CLI report differs from the library document");
#endif
  return out;
}

int report(int number, const char* label, Outcome (*fn)()) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = fn();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
  std::printf("%s criterion %d: %s (%.0f ms)%s%s\n", out.ok ? "PASS" : "FAIL", number, label,
              ms, out.ok ? "" : " -- ", out.ok ? "" : out.detail.c_str());
  std::fflush(stdout);
  return out.ok ? 0 : 1;
}

}  // namespace

int main() {
  int failures = 0;
  failures += report(1, "PMV and PEA axioms pass on all shipped algebras", criterion_axioms);
  failures += report(2, "effect-algebra oplus bridge agrees on 500 pairs per algebra",
                     criterion_bridge);
  failures += report(3, "RDP2 refinement succeeds and matches the exhaustive Z oracle",
                     criterion_rdp);
  failures += report(4, "decomposition, state, radical and quotient structure",
                     criterion_thm_structure);
  failures += report(5, "representation round trip with b = 0 iff strong",
                     criterion_representation);
  failures += report(6, "identities 3.5/3.6 pass on M_n(Z); commutativity fails on PL",
                     criterion_identities);
  failures += report(7, "symmetry on strong algebras; asymmetry witness on noncentral b",
                     criterion_symmetry);
  failures += report(8, "functor identity and composition laws on the catalog",
                     criterion_functors);
  failures += report(9, "identical config and seed give byte-identical reports",
                     criterion_determinism);
  if (failures == 0) {
    std::printf("all 9 acceptance criteria passed\n");
  } else {
    std::printf("%d acceptance criteria FAILED\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
