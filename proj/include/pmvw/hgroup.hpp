#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pmvw/numeric.hpp"
#include "pmvw/rng.hpp"

namespace pmvw {

class HSpec;

/// An element of the scalar group H. For a cyclic spec (1/n)Z the payload is
/// the integer i and the value is i/n; for a quadratic spec the payload is the
/// pair (m, k) and the value is m + k*alpha. Both representations are unique
/// per value, so structural equality is value equality.
class HValue {
 public:
  bool is_quadratic() const { return quadratic_; }
  const Int& index() const { return m_; }  // cyclic payload i
  const Int& m() const { return m_; }
  const Int& k() const { return k_; }

  bool operator==(const HValue& other) const {
    return quadratic_ == other.quadratic_ && m_ == other.m_ && k_ == other.k_;
  }
  bool operator!=(const HValue& other) const { return !(*this == other); }

 private:
  friend class HSpec;
  HValue(bool quadratic, Int m, Int k)
      : quadratic_(quadratic), m_(std::move(m)), k_(std::move(k)) {}

  bool quadratic_;
  Int m_;
  Int k_;  // always 0 for cyclic values
};

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

/// Returns the exact sign of a + b*sqrt(d), d a positive non-square integer.
/// Opposite-sign cases reduce to comparing a^2 with b^2*d; no floating point.
int quad_sign(const Rat& a, const Rat& b, const Int& d);

/// floor(a + b*sqrt(d)), computed exactly (double only seeds the search).
Int quad_floor(const Rat& a, const Rat& b, const Int& d);

/// The scalar group H, a subgroup of the reals containing 1. Either cyclic,
/// H = (1/n)Z, or the dense rank-2 group H(alpha) generated by 1 and a
/// quadratic irrational alpha in (0,1).
class HSpec {
 public:
  static HSpec cyclic(Int n);
  /// alpha = p + q*sqrt(d); normalized into (0,1) by subtracting floor(alpha).
  static HSpec quadratic(Rat p, Rat q, Int d);
  /// "cyclic:n" or "quadratic:p,q,d" (rationals as "num/den").
  static HSpec parse(std::string_view text);

  bool is_cyclic() const { return !dense_; }
  bool is_dense() const { return dense_; }
  const Int& modulus() const;  // n, cyclic only
  const Rat& alpha_p() const { return p_; }
  const Rat& alpha_q() const { return q_; }
  const Int& alpha_d() const { return d_; }

  HValue zero() const;
  HValue one() const;
  HValue from_integer(const Int& m) const;
  HValue cyclic_value(Int i) const;
  HValue quadratic_value(Int m, Int k) const;

  HValue add(const HValue& a, const HValue& b) const;
  HValue neg(const HValue& a) const;
  HValue sub(const HValue& a, const HValue& b) const;
  HValue scale(const Int& n, const HValue& a) const;
  Cmp cmp(const HValue& a, const HValue& b) const;
  int sign(const HValue& a) const;
  bool leq(const HValue& a, const HValue& b) const { return cmp(a, b) != Cmp::GT; }
  bool less(const HValue& a, const HValue& b) const { return cmp(a, b) == Cmp::LT; }
  bool equal(const HValue& a, const HValue& b) const { return cmp(a, b) == Cmp::EQ; }
  HValue max(const HValue& a, const HValue& b) const { return less(a, b) ? b : a; }
  HValue min(const HValue& a, const HValue& b) const { return less(a, b) ? a : b; }

  bool in_unit_interval(const HValue& a) const;

  /// Deterministic sample of [0,1]_H: always contains 0 and 1, every value a
  /// verified member, exhaustive for cyclic n < count. Same seed, same list.
  std::vector<HValue> sample_unit_interval(long count, std::uint64_t seed) const;

  /// One random member of [0,1]_H; `boost_boundary` forces 0/1 with odds 1/4
  /// so truncation boundaries get exercised.
  HValue sample_unit_value(Rng& rng, long size, bool boost_boundary = true) const;

  std::string format(const HValue& a) const;
  HValue parse_value(std::string_view text) const;
  std::string describe() const;

  bool operator==(const HSpec& other) const;
  bool operator!=(const HSpec& other) const { return !(*this == other); }

 private:
  HSpec() = default;
  void require_same_kind(const HValue& a, const char* who) const;

  bool dense_ = false;
  Int n_ = 1;  // cyclic modulus
  Rat p_, q_;  // alpha = p + q*sqrt(d), quadratic only
  Int d_ = 0;
};

}  // namespace pmvw
