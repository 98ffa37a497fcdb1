#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pmvw/hgroup.hpp"
#include "pmvw/numeric.hpp"
#include "pmvw/plmap.hpp"
#include "pmvw/rng.hpp"
#include "pmvw/verdict.hpp"

namespace pmvw {

class GroupElement;
using GroupElementPtr = std::shared_ptr<const GroupElement>;

/// Head/tail pair of a lexicographic product element; the head is always an
/// HValue (the left factor of a lex product is a totally ordered H spec).
struct LexPair {
  HValue head;
  GroupElementPtr tail;

  bool operator==(const LexPair& other) const;
};

/// Exact element of one of the concrete carriers. Payloads are canonical, so
/// structural equality is carrier equality.
class GroupElement {
 public:
  using Tuple = std::vector<GroupElement>;
  using Payload = std::variant<Int, Rat, HValue, Tuple, LexPair, PlMap>;

  static GroupElement integer(Int v) { return GroupElement(Payload(std::move(v))); }
  static GroupElement rational(Rat v) { return GroupElement(Payload(std::move(v))); }
  static GroupElement scalar(HValue v) { return GroupElement(Payload(std::move(v))); }
  static GroupElement tuple(Tuple v) { return GroupElement(Payload(std::move(v))); }
  static GroupElement lex(HValue head, GroupElement tail);
  static GroupElement pl(PlMap v) { return GroupElement(Payload(std::move(v))); }

  bool is_integer() const { return std::holds_alternative<Int>(payload_); }
  bool is_rational() const { return std::holds_alternative<Rat>(payload_); }
  bool is_scalar() const { return std::holds_alternative<HValue>(payload_); }
  bool is_tuple() const { return std::holds_alternative<Tuple>(payload_); }
  bool is_lex() const { return std::holds_alternative<LexPair>(payload_); }
  bool is_pl() const { return std::holds_alternative<PlMap>(payload_); }

  const Int& as_integer() const;
  const Rat& as_rational() const;
  const HValue& as_scalar() const;
  const Tuple& as_tuple() const;
  const HValue& lex_head() const;
  const GroupElement& lex_tail() const;
  const PlMap& as_pl() const;

  bool operator==(const GroupElement& other) const;
  bool operator!=(const GroupElement& other) const { return !(*this == other); }

 private:
  explicit GroupElement(Payload p) : payload_(std::move(p)) {}
  Payload payload_;
};

/// Verdict of a strong-unit check.
struct UnitVerdict {
  enum class Status { Proven, HoldsOnSamples, Refuted };
  Status status;
  Method method;
  std::optional<GroupElement> witness;  // element with no n*u bound (Refuted)
  std::string detail;

  bool is_unit_evidence() const { return status != Status::Refuted; }
};

/// Verdict of a commutative-center membership check.
struct CenterVerdict {
  enum class Status { Central, HoldsOnSamples, Refuted };
  Status status;
  Method method;
  std::optional<GroupElement> witness;  // h with g+h != h+g (Refuted)

  bool refuted() const { return status == Status::Refuted; }
};

class LGroup;
using LGroupPtr = std::shared_ptr<const LGroup>;

/// Immutable descriptor of a concrete lattice-ordered group. All element
/// operations are methods here; they validate membership structurally and
/// throw CarrierMismatchError on foreign operands.
class LGroup : public std::enable_shared_from_this<LGroup> {
 public:
  enum class Kind { Integers, Rationals, Scalars, Product, Lex, PlAut, Subgroup };

  static LGroupPtr integers();
  static LGroupPtr rationals();
  static LGroupPtr scalars(HSpec spec);
  static LGroupPtr product(std::vector<LGroupPtr> factors);
  static LGroupPtr trivial() { return product({}); }
  /// Lex product H |x G; constructible exactly because the left factor is a
  /// totally ordered H spec.
  static LGroupPtr lex(HSpec head, LGroupPtr tail);
  static LGroupPtr pl_aut();
  /// A subgroup of `ambient` cut out by a membership predicate, with its own
  /// sampler. Operations delegate to the ambient carrier.
  static LGroupPtr subgroup(LGroupPtr ambient,
                            std::function<bool(const GroupElement&)> member,
                            std::function<GroupElement(Rng&, long)> sampler,
                            std::string name);

  Kind kind() const { return kind_; }
  const HSpec& hspec() const;
  const LGroupPtr& lex_tail_group() const;
  const std::vector<LGroupPtr>& factors() const;
  const LGroupPtr& ambient() const;

  GroupElement zero() const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;
  GroupElement join(const GroupElement& a, const GroupElement& b) const;
  GroupElement meet(const GroupElement& a, const GroupElement& b) const;
  bool leq(const GroupElement& a, const GroupElement& b) const;
  bool less(const GroupElement& a, const GroupElement& b) const;
  bool equal(const GroupElement& a, const GroupElement& b) const;
  bool is_zero(const GroupElement& a) const { return equal(a, zero()); }
  GroupElement abs(const GroupElement& a) const { return join(a, neg(a)); }
  GroupElement pos_part(const GroupElement& a) const { return join(a, zero()); }
  GroupElement neg_part(const GroupElement& a) const { return neg(meet(a, zero())); }
  /// n*a (composition power for the PL carrier); n may be negative.
  GroupElement scale(const Int& n, const GroupElement& a) const;

  bool contains(const GroupElement& a) const;
  void require_member(const GroupElement& a, const char* who) const;

  bool is_abelian() const;
  bool is_totally_ordered() const;
  bool structurally_equal(const LGroup& other) const;

  GroupElement sample(Rng& rng, long size) const;

  std::string describe() const;
  std::string format(const GroupElement& a) const;
  GroupElement parse_element(std::string_view text) const;

 private:
  explicit LGroup(Kind k) : kind_(k) {}

  Kind kind_;
  HSpec hspec_ = HSpec::cyclic(1);  // Scalars/Lex
  LGroupPtr tail_;                  // Lex
  std::vector<LGroupPtr> factors_;  // Product
  LGroupPtr ambient_;               // Subgroup
  std::function<bool(const GroupElement&)> member_;          // Subgroup
  std::function<GroupElement(Rng&, long)> sampler_override_;  // Subgroup
  std::string subgroup_name_;       // Subgroup
};

/// Strong-unit test: analytic for every shipped carrier; the budgeted sampled
/// search remains for carriers without an analytic rule. Requires u >= 0.
UnitVerdict is_strong_unit(const LGroup& g, const GroupElement& u, long budget,
                           long samples = 64, std::uint64_t seed = 1);

/// Budgeted sampled search only (no analytic shortcuts); for cross-checking.
UnitVerdict is_strong_unit_sampled(const LGroup& g, const GroupElement& u, long budget,
                                   long samples, std::uint64_t seed);

/// Membership in C(G) = {x : x+y = y+x for all y}: analytic for abelian
/// carriers and for 0, sample-refutable otherwise (a holds-on-samples verdict
/// is evidence, not proof).
CenterVerdict in_commutative_center(const LGroup& g, const GroupElement& elem, long samples,
                                    std::uint64_t seed = 1);

}  // namespace pmvw
