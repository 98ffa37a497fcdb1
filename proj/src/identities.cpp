#include "pmvw/identities.hpp"

#include <algorithm>
#include <vector>

#include "pmvw/error.hpp"

namespace pmvw {

TermPtr Term::var(int index) {
  if (index < 0) throw PreconditionError("variable index must be >= 0");
  return TermPtr(new Term(Kind::Var, index, 0, nullptr, nullptr));
}
TermPtr Term::zero() { return TermPtr(new Term(Kind::Zero, -1, 0, nullptr, nullptr)); }
TermPtr Term::one() { return TermPtr(new Term(Kind::One, -1, 0, nullptr, nullptr)); }
TermPtr Term::oplus(TermPtr l, TermPtr r) {
  return TermPtr(new Term(Kind::Oplus, -1, 0, std::move(l), std::move(r)));
}
TermPtr Term::odot(TermPtr l, TermPtr r) {
  return TermPtr(new Term(Kind::Odot, -1, 0, std::move(l), std::move(r)));
}
TermPtr Term::neg_l(TermPtr t) {
  return TermPtr(new Term(Kind::NegL, -1, 0, std::move(t), nullptr));
}
TermPtr Term::neg_r(TermPtr t) {
  return TermPtr(new Term(Kind::NegR, -1, 0, std::move(t), nullptr));
}
TermPtr Term::n_odot(Int n, TermPtr t) {
  if (n < 0) throw PreconditionError("scalar of n_odot must be >= 0");
  return TermPtr(new Term(Kind::NOdot, -1, std::move(n), std::move(t), nullptr));
}
TermPtr Term::pow(TermPtr t, Int n) {
  if (n < 0) throw PreconditionError("exponent of pow must be >= 0");
  return TermPtr(new Term(Kind::Pow, -1, std::move(n), std::move(t), nullptr));
}

int Term::arity() const {
  int a = kind_ == Kind::Var ? var_index_ + 1 : 0;
  if (left_) a = std::max(a, left_->arity());
  if (right_) a = std::max(a, right_->arity());
  return a;
}

std::string Term::format() const {
  switch (kind_) {
    case Kind::Var: return "x" + std::to_string(var_index_);
    case Kind::Zero: return "0";
    case Kind::One: return "1";
    case Kind::Oplus: return "(oplus " + left_->format() + " " + right_->format() + ")";
    case Kind::Odot: return "(odot " + left_->format() + " " + right_->format() + ")";
    case Kind::NegL: return "(negL " + left_->format() + ")";
    case Kind::NegR: return "(negR " + left_->format() + ")";
    case Kind::NOdot: return "(nodot " + scalar_.str() + " " + left_->format() + ")";
    case Kind::Pow: return "(pow " + left_->format() + " " + scalar_.str() + ")";
  }
  return "?";
}

namespace {

struct TermParser {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  std::string token() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' && text[pos] != '(' &&
           text[pos] != ')')
      ++pos;
    if (start == pos) throw ParseError("term: expected a token at position " +
                                       std::to_string(start));
    return std::string(text.substr(start, pos - start));
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(std::string("term: expected '") + c + "' at position " +
                       std::to_string(pos));
    ++pos;
  }

  TermPtr parse_term() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("term: unexpected end of input");
    if (text[pos] != '(') {
      std::string t = token();
      if (t == "0") return Term::zero();
      if (t == "1") return Term::one();
      if (t.size() >= 2 && t[0] == 'x') return Term::var(static_cast<int>(parse_int(t.substr(1)).convert_to<long>()));
      throw ParseError("term: unknown atom '" + t + "'");
    }
    expect('(');
    std::string head = token();
    TermPtr result;
    if (head == "oplus" || head == "odot") {
      TermPtr l = parse_term();
      TermPtr r = parse_term();
      result = head == "oplus" ? Term::oplus(l, r) : Term::odot(l, r);
    } else if (head == "negL" || head == "negR") {
      TermPtr t = parse_term();
      result = head == "negL" ? Term::neg_l(t) : Term::neg_r(t);
    } else if (head == "nodot") {
      Int n = parse_int(token());
      result = Term::n_odot(n, parse_term());
    } else if (head == "pow") {
      TermPtr t = parse_term();
      Int n = parse_int(token());
      result = Term::pow(t, n);
    } else {
      throw ParseError("term: unknown operator '" + head + "'");
    }
    expect(')');
    return result;
  }
};

}  // namespace

TermPtr Term::parse(std::string_view text) {
  TermParser p{text};
  TermPtr t = p.parse_term();
  p.skip_ws();
  if (p.pos != text.size())
    throw ParseError("term: trailing input at position " + std::to_string(p.pos));
  return t;
}

PmvElement eval(const Term& term, const PmvAlgebra& a, std::span<const PmvElement> env) {
  switch (term.kind()) {
    case Term::Kind::Var:
      if (static_cast<size_t>(term.var_index()) >= env.size())
        throw PreconditionError("environment covers " + std::to_string(env.size()) +
                                " variables, term needs x" + std::to_string(term.var_index()));
      return env[static_cast<size_t>(term.var_index())];
    case Term::Kind::Zero: return a.zero();
    case Term::Kind::One: return a.one();
    case Term::Kind::Oplus: return a.oplus(eval(*term.left(), a, env), eval(*term.right(), a, env));
    case Term::Kind::Odot: return a.odot(eval(*term.left(), a, env), eval(*term.right(), a, env));
    case Term::Kind::NegL: return a.neg_left(eval(*term.left(), a, env));
    case Term::Kind::NegR: return a.neg_right(eval(*term.left(), a, env));
    case Term::Kind::NOdot: return a.n_odot(term.scalar(), eval(*term.left(), a, env));
    case Term::Kind::Pow: return a.pow(eval(*term.left(), a, env), term.scalar());
  }
  throw Error("unreachable");
}

int Identity::arity() const { return std::max(lhs->arity(), rhs->arity()); }

Identity identity_3_5(const Int& n) {
  if (n < 1) throw PreconditionError("identity 3.5 needs n >= 1");
  TermPtr x = Term::var(0);
  return {"3.5:" + n.str(),
          Term::pow(Term::n_odot(n + 1, Term::pow(x, n)), 2),
          Term::n_odot(2, Term::pow(x, n + 1))};
}

Identity identity_3_6(const Int& n, const Int& p) {
  if (!(p > 1 && p < n)) throw PreconditionError("identity 3.6 needs 1 < p < n");
  if (n % p == 0) throw PreconditionError("identity 3.6 needs p not dividing n, got p=" +
                                          p.str() + " n=" + n.str());
  TermPtr x = Term::var(0);
  return {"3.6:" + n.str() + "," + p.str(),
          Term::pow(Term::n_odot(p, Term::pow(x, p - 1)), n + 1),
          Term::n_odot(n + 1, Term::pow(x, p))};
}

Identity identity_commutativity() {
  return {"commutativity", Term::oplus(Term::var(0), Term::var(1)),
          Term::oplus(Term::var(1), Term::var(0))};
}

IdentityVerdict check_identity(const Identity& id, const PmvAlgebra& a, long samples,
                               std::uint64_t seed) {
  IdentityVerdict verdict;
  verdict.name = id.name;
  verdict.samples = samples;
  Rng rng(seed);
  int arity = id.arity();
  for (long i = 0; i < samples; ++i) {
    std::vector<PmvElement> env;
    env.reserve(static_cast<size_t>(arity));
    for (int v = 0; v < arity; ++v) env.push_back(a.sample(rng));
    if (eval(*id.lhs, a, env) == eval(*id.rhs, a, env)) {
      ++verdict.passes;
      continue;
    }
    std::string dump;
    for (int v = 0; v < arity; ++v)
      dump += (v ? " " : "") + ("x" + std::to_string(v)) + "=" + a.format(env[static_cast<size_t>(v)]);
    verdict.counterexample = dump;
    break;
  }
  return verdict;
}

IdentityVerdict symmetric_check(const PmvAlgebra& a, long samples, std::uint64_t seed) {
  IdentityVerdict verdict;
  verdict.name = "symmetric";
  verdict.samples = samples;
  Rng rng(seed);
  for (long i = 0; i < samples; ++i) {
    PmvElement x = a.sample(rng);
    if (a.neg_left(x) == a.neg_right(x)) {
      ++verdict.passes;
      continue;
    }
    verdict.counterexample = "x=" + a.format(x) + " x^-=" + a.format(a.neg_left(x)) +
                             " x^~=" + a.format(a.neg_right(x));
    break;
  }
  return verdict;
}

}  // namespace pmvw
