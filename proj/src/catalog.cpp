#include "pmvw/catalog.hpp"

namespace pmvw::catalog {

PmvAlgebraPtr m_n_z(long n) { return lex_z(HSpec::cyclic(n)); }

PmvAlgebraPtr gamma_z(long n) {
  return PmvAlgebra::make(LGroup::integers(), GroupElement::integer(n));
}

PmvAlgebraPtr gamma_q() {
  return PmvAlgebra::make(LGroup::rationals(), GroupElement::rational(Rat(1)));
}

PmvAlgebraPtr m_alpha(const HSpec& spec) {
  auto g = LGroup::scalars(spec);
  return PmvAlgebra::make(g, GroupElement::scalar(spec.one()));
}

PmvAlgebraPtr lex_z(const HSpec& h) { return lex_z_with_b(h, 0); }

PmvAlgebraPtr lex_z_with_b(const HSpec& h, long b) {
  auto g = LGroup::lex(h, LGroup::integers());
  return PmvAlgebra::make(g, GroupElement::lex(h.one(), GroupElement::integer(b)));
}

PmvAlgebraPtr lex_pl(const GroupElement& b) {
  HSpec h = HSpec::cyclic(1);
  auto g = LGroup::lex(h, LGroup::pl_aut());
  return PmvAlgebra::make(g, GroupElement::lex(h.one(), b), 3);
}

PmvAlgebraPtr pl_interval() {
  return PmvAlgebra::make(LGroup::pl_aut(), GroupElement::pl(PlMap::translation(Rat(1))), 3);
}

PmvAlgebraPtr product_z2() {
  auto g = LGroup::product({LGroup::integers(), LGroup::integers()});
  return PmvAlgebra::make(g, GroupElement::tuple({GroupElement::integer(1),
                                                  GroupElement::integer(1)}));
}

GroupElement noncentral_pl() {
  return GroupElement::pl(PlMap::from_points({{Rat(0), Rat(0)}, {Rat(1), Rat(2)}}));
}

HSpec sqrt2_minus_1() { return HSpec::quadratic(Rat(-1), Rat(1), Int(2)); }

std::string render_builtins() {
  std::string out;
  out += "carriers:\n";
  out += "  Z                        integers\n";
  out += "  Q                        rationals\n";
  out += "  H(cyclic:n)              (1/n)Z as a chain\n";
  out += "  H(quadratic:p,q,d)       group generated by 1 and alpha = p+q*sqrt(d)\n";
  out += "  product(G1,...,Gk)       coordinatewise order; product() is the zero group O\n";
  out += "  lex(hspec,G)             lexicographic product H |x G\n";
  out += "  plaut                    PL increasing bijections of the line, slope-1 tails\n";
  out += "algebra families:\n";
  out += "  Gamma(Z,n)               finite chain, n >= 1\n";
  out += "  M_n(Z)                   Gamma(lex(cyclic:n,Z),(1,0))\n";
  out += "  M(alpha)                 Gamma(H(quadratic:p,q,d),1)\n";
  out += "  Gamma(lex(h,G),(1,b))    strong for b = 0, weak for b > 0\n";
  out += "  Gamma(plaut,translate(1))  pseudo, not MV\n";
  out += "homomorphisms:\n";
  out += "  id                       identity on any carrier\n";
  out += "  zero                     constant zero map\n";
  out += "  scale:k                  multiplication by k >= 0 on Z\n";
  out += "  proj:i                   coordinate projection of a product\n";
  out += "identities:\n";
  out += "  3.5:n                    ((n+1).x^n)^2 = 2.x^(n+1)\n";
  out += "  3.6:n,p                  (p.x^(p-1))^(n+1) = (n+1).x^p, 1<p<n, p not | n\n";
  out += "  commutativity            x0+x1 = x1+x0 (oplus)\n";
  return out;
}

}  // namespace pmvw::catalog
