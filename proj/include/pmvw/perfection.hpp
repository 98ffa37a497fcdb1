#pragma once

#include <functional>
#include <optional>
#include <string>

#include "pmvw/pmv.hpp"

namespace pmvw {

/// A slice assignment t -> M_t over [0,1]_H together with an optional cyclic
/// element system (c_t). The slice map is total; slices are the fibers.
struct HDecomposition {
  HSpec hspec = HSpec::cyclic(1);
  PmvAlgebraPtr algebra;
  std::function<HValue(const PmvElement&)> slice;
  std::function<PmvElement(const HValue&)> cyclic;  // null when absent
  std::string provenance;  // "analytic-projection" | "derived-from-state"

  bool has_cyclic() const { return static_cast<bool>(cyclic); }
};

/// Builds the canonical decomposition where one exists analytically:
/// lex carriers project on the head coordinate (c_t = (t,0)); Gamma(Z,n) and
/// the scalar intervals slice by value. Throws UnsupportedError otherwise.
HDecomposition analytic_decomposition(const PmvAlgebraPtr& a);

/// Samples the decomposition laws: slices stack with the order, negations
/// send M_t to M_(1-t), and oplus adds slice indices truncated at 1.
CheckReport verify_decomposition(const HDecomposition& d, long samples, std::uint64_t seed);

/// The unique state read off a decomposition: s(x) = slice(x).
struct StateMap {
  HSpec hspec = HSpec::cyclic(1);
  PmvAlgebraPtr algebra;
  std::function<HValue(const PmvElement&)> value;
  std::string provenance;
};

StateMap state_from_decomposition(const HDecomposition& d);

/// s(1) = 1, additivity on sampled defined sums, range inside [0,1]_H, the
/// extremal meet law, and order bracketing of s(x) against the cyclic system
/// (the sampled face of the uniqueness statement).
CheckReport verify_state(const StateMap& s, const HDecomposition& d, long samples,
                         std::uint64_t seed);

/// M_0 = Rad(M) = Infinit(M): membership is slice(x) = 0.
bool radical_membership(const HDecomposition& d, const PmvElement& x);

/// Sampled agreement of the radical with the budgeted infinitesimal
/// recursion, M_0 + M_0 = M_0, the definedness thresholds of the partial sum
/// against v + t, and unit generation by every non-radical sample.
CheckReport verify_radical_structure(const HDecomposition& d, long samples, const Int& budget,
                                     const Int& ideal_depth, std::uint64_t seed);

/// The quotient map onto Gamma(H,1) induced by the slice assignment.
struct QuotientHom {
  PmvAlgebraPtr source;
  PmvAlgebraPtr target;  // Gamma(H,1)
  std::function<PmvElement(const PmvElement&)> map;
};

QuotientHom quotient_to_gamma_h(const HDecomposition& d);
CheckReport verify_quotient_hom(const QuotientHom& q, const HDecomposition& d, long samples,
                                std::uint64_t seed);

enum class CyclicKind { Strong, Weak };

/// Verifies the cyclic-system laws on samples: c_t sits in slice t and in the
/// commutative center, c_v + c_t = c_(v+t), c_0 = 0; in strong mode also
/// c_1 = 1 and that c_(1/n) is cyclic of order n. Throws PreconditionError
/// when the decomposition carries no system.
CheckReport check_cyclic_system(const HDecomposition& d, CyclicKind kind, long samples,
                                std::uint64_t seed);

enum class PerfectionClass { Strong, Weak, HPerfectOnly, NotHPerfect };

std::string perfection_class_name(PerfectionClass c);

struct ClassifyResult {
  PerfectionClass cls;
  CheckReport evidence;
  std::string summary;
  std::optional<HDecomposition> decomposition;
};

/// Runs decomposition + cyclic-system checks and classifies the algebra. For
/// carriers without an analytic decomposition it attempts a budgeted
/// refutation: a sampled non-infinitesimal element whose depth-bounded ideal
/// misses 1 witnesses that Infinit(M) is not a unique maximal ideal.
ClassifyResult classify(const PmvAlgebraPtr& a, long samples, std::uint64_t seed,
                        const Int& infinitesimal_budget = 100, const Int& ideal_depth = 40);

/// Intensional ideal: a membership predicate plus a member sampler. Analytic
/// ideals (the radical as a state kernel, the trivial ideal) carry a proof of
/// normality; principal ideals are depth-bounded oplus-closures.
struct IdealHandle {
  std::string name;
  PmvAlgebraPtr algebra;
  std::function<bool(const PmvElement&)> member;
  std::function<PmvElement(Rng&)> sample;
  bool analytic_normal = false;
};

IdealHandle radical_ideal(const HDecomposition& d);
IdealHandle trivial_ideal(const PmvAlgebraPtr& a);
IdealHandle principal_ideal(const PmvAlgebraPtr& a, const PmvElement& gen, const Int& depth);

struct NormalVerdict {
  enum class Status { Normal, HoldsOnSamples, Refuted };
  Status status;
  Method method;
  std::optional<std::string> witness;
};

/// Sampled two-sided comparison x + I = I + x through the minimal-solution
/// candidates; analytic ideals short-circuit unless force_sampled.
NormalVerdict normal_ideal_check(const IdealHandle& ideal, long samples, std::uint64_t seed,
                                 bool force_sampled = false);

/// True when the depth-bounded oplus-closure of {x} reaches the unit.
bool ideal_reaches_one(const PmvAlgebraPtr& a, const PmvElement& x, const Int& depth);

}  // namespace pmvw
