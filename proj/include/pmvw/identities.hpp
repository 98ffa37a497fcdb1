#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "pmvw/pmv.hpp"

namespace pmvw {

class Term;
using TermPtr = std::shared_ptr<const Term>;

/// Term AST over the PMV signature. Scalar nodes carry n >= 0; variable
/// indices are dense from 0.
class Term {
 public:
  enum class Kind { Var, Zero, One, Oplus, Odot, NegL, NegR, NOdot, Pow };

  static TermPtr var(int index);
  static TermPtr zero();
  static TermPtr one();
  static TermPtr oplus(TermPtr lhs, TermPtr rhs);
  static TermPtr odot(TermPtr lhs, TermPtr rhs);
  static TermPtr neg_l(TermPtr t);
  static TermPtr neg_r(TermPtr t);
  static TermPtr n_odot(Int n, TermPtr t);
  static TermPtr pow(TermPtr t, Int n);

  Kind kind() const { return kind_; }
  int var_index() const { return var_index_; }
  const Int& scalar() const { return scalar_; }
  const TermPtr& left() const { return left_; }
  const TermPtr& right() const { return right_; }

  /// Number of variables (max index + 1).
  int arity() const;

  /// Prefix form, e.g. "(oplus (negL x0) x1)"; scalars as "(nodot 3 x0)".
  std::string format() const;
  static TermPtr parse(std::string_view text);

 private:
  Term(Kind k, int var_index, Int scalar, TermPtr left, TermPtr right)
      : kind_(k), var_index_(var_index), scalar_(std::move(scalar)),
        left_(std::move(left)), right_(std::move(right)) {}

  Kind kind_;
  int var_index_;
  Int scalar_;
  TermPtr left_;
  TermPtr right_;
};

/// Structural evaluation over the interval operations; env must cover every
/// variable of the term (PreconditionError otherwise).
PmvElement eval(const Term& term, const PmvAlgebra& algebra, std::span<const PmvElement> env);

struct Identity {
  std::string name;
  TermPtr lhs;
  TermPtr rhs;

  int arity() const;
};

/// ((n+1).x^n)^2 = 2.x^(n+1), n >= 1.
Identity identity_3_5(const Int& n);
/// (p.x^(p-1))^(n+1) = (n+1).x^p for 1 < p < n with p not dividing n.
Identity identity_3_6(const Int& n, const Int& p);
/// x0 + x1 = x1 + x0 (oplus); fails on properly pseudo algebras.
Identity identity_commutativity();

struct IdentityVerdict {
  std::string name;
  long samples = 0;
  long passes = 0;
  std::optional<std::string> counterexample;  // environment dump

  bool passed() const { return !counterexample; }
};

/// Evaluates both sides on seeded, slice-stratified environments.
IdentityVerdict check_identity(const Identity& id, const PmvAlgebra& a, long samples,
                               std::uint64_t seed);

/// Sampled check of a^- = a^~.
IdentityVerdict symmetric_check(const PmvAlgebra& a, long samples, std::uint64_t seed);

}  // namespace pmvw
