#pragma once

#include <string>
#include <vector>

#include "pmvw/pmv.hpp"

namespace pmvw {

/// Shipped algebra families; tests and the CLI build concrete instances here.
namespace catalog {

/// M_n(Z) = Gamma((1/n)Z |x Z, (1,0)).
PmvAlgebraPtr m_n_z(long n);

/// Gamma(Z, n).
PmvAlgebraPtr gamma_z(long n);

/// Gamma(Q, 1).
PmvAlgebraPtr gamma_q();

/// M(alpha) = Gamma(H(alpha), 1) for a quadratic alpha.
PmvAlgebraPtr m_alpha(const HSpec& quadratic_spec);

/// Gamma(H |x Z, (1,0)).
PmvAlgebraPtr lex_z(const HSpec& h);

/// Gamma(H |x Z, (1,b)); weak for b > 0.
PmvAlgebraPtr lex_z_with_b(const HSpec& h, long b);

/// Gamma(Z |x PL, (1,b)).
PmvAlgebraPtr lex_pl(const GroupElement& b);

/// Gamma(PL, translate(1)) - the interval of the bounded automorphism model.
PmvAlgebraPtr pl_interval();

/// Gamma(ZxZ, (1,1)) - coordinatewise order; not perfect for any H.
PmvAlgebraPtr product_z2();

/// A fixed positive PL map outside the commutative center (slope 2 on [0,1]).
GroupElement noncentral_pl();

/// alpha = sqrt(2) - 1.
HSpec sqrt2_minus_1();

/// Human-readable catalog for `list-builtins`.
std::string render_builtins();

}  // namespace catalog

}  // namespace pmvw
