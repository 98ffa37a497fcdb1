#include "pmvw/group.hpp"

#include <algorithm>

#include "pmvw/error.hpp"

namespace pmvw {

bool LexPair::operator==(const LexPair& other) const {
  return head == other.head && *tail == *other.tail;
}

GroupElement GroupElement::lex(HValue head, GroupElement tail) {
  LexPair p{std::move(head), std::make_shared<const GroupElement>(std::move(tail))};
  return GroupElement(Payload(std::move(p)));
}

namespace {

[[noreturn]] void wrong_payload(const char* want) {
  throw CarrierMismatchError(std::string("element payload is not ") + want);
}

}  // namespace

const Int& GroupElement::as_integer() const {
  if (!is_integer()) wrong_payload("an integer");
  return std::get<Int>(payload_);
}
const Rat& GroupElement::as_rational() const {
  if (!is_rational()) wrong_payload("a rational");
  return std::get<Rat>(payload_);
}
const HValue& GroupElement::as_scalar() const {
  if (!is_scalar()) wrong_payload("an H value");
  return std::get<HValue>(payload_);
}
const GroupElement::Tuple& GroupElement::as_tuple() const {
  if (!is_tuple()) wrong_payload("a tuple");
  return std::get<Tuple>(payload_);
}
const HValue& GroupElement::lex_head() const {
  if (!is_lex()) wrong_payload("a lex pair");
  return std::get<LexPair>(payload_).head;
}
const GroupElement& GroupElement::lex_tail() const {
  if (!is_lex()) wrong_payload("a lex pair");
  return *std::get<LexPair>(payload_).tail;
}
const PlMap& GroupElement::as_pl() const {
  if (!is_pl()) wrong_payload("a PL map");
  return std::get<PlMap>(payload_);
}

bool GroupElement::operator==(const GroupElement& other) const {
  if (payload_.index() != other.payload_.index()) return false;
  if (is_lex()) {
    return lex_head() == other.lex_head() && lex_tail() == other.lex_tail();
  }
  if (is_tuple()) {
    const Tuple& a = as_tuple();
    const Tuple& b = other.as_tuple();
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
  }
  return payload_ == other.payload_;
}

LGroupPtr LGroup::integers() { return LGroupPtr(new LGroup(Kind::Integers)); }
LGroupPtr LGroup::rationals() { return LGroupPtr(new LGroup(Kind::Rationals)); }

LGroupPtr LGroup::scalars(HSpec spec) {
  auto g = new LGroup(Kind::Scalars);
  g->hspec_ = std::move(spec);
  return LGroupPtr(g);
}

LGroupPtr LGroup::product(std::vector<LGroupPtr> factors) {
  auto g = new LGroup(Kind::Product);
  g->factors_ = std::move(factors);
  return LGroupPtr(g);
}

LGroupPtr LGroup::lex(HSpec head, LGroupPtr tail) {
  if (!tail) throw PreconditionError("lex product requires a tail group");
  auto g = new LGroup(Kind::Lex);
  g->hspec_ = std::move(head);
  g->tail_ = std::move(tail);
  return LGroupPtr(g);
}

LGroupPtr LGroup::pl_aut() { return LGroupPtr(new LGroup(Kind::PlAut)); }

LGroupPtr LGroup::subgroup(LGroupPtr ambient, std::function<bool(const GroupElement&)> member,
                           std::function<GroupElement(Rng&, long)> sampler, std::string name) {
  if (!ambient) throw PreconditionError("subgroup requires an ambient group");
  auto g = new LGroup(Kind::Subgroup);
  g->ambient_ = std::move(ambient);
  g->member_ = std::move(member);
  g->sampler_override_ = std::move(sampler);
  g->subgroup_name_ = std::move(name);
  return LGroupPtr(g);
}

const HSpec& LGroup::hspec() const {
  if (kind_ != Kind::Scalars && kind_ != Kind::Lex)
    throw CarrierMismatchError("hspec() on carrier " + describe());
  return hspec_;
}

const LGroupPtr& LGroup::lex_tail_group() const {
  if (kind_ != Kind::Lex) throw CarrierMismatchError("lex_tail_group() on carrier " + describe());
  return tail_;
}

const std::vector<LGroupPtr>& LGroup::factors() const {
  if (kind_ != Kind::Product) throw CarrierMismatchError("factors() on carrier " + describe());
  return factors_;
}

const LGroupPtr& LGroup::ambient() const {
  if (kind_ != Kind::Subgroup) throw CarrierMismatchError("ambient() on carrier " + describe());
  return ambient_;
}

GroupElement LGroup::zero() const {
  switch (kind_) {
    case Kind::Integers: return GroupElement::integer(0);
    case Kind::Rationals: return GroupElement::rational(Rat(0));
    case Kind::Scalars: return GroupElement::scalar(hspec_.zero());
    case Kind::Product: {
      GroupElement::Tuple t;
      t.reserve(factors_.size());
      for (const auto& f : factors_) t.push_back(f->zero());
      return GroupElement::tuple(std::move(t));
    }
    case Kind::Lex: return GroupElement::lex(hspec_.zero(), tail_->zero());
    case Kind::PlAut: return GroupElement::pl(PlMap());
    case Kind::Subgroup: return ambient_->zero();
  }
  throw Error("unreachable");
}

bool LGroup::contains(const GroupElement& a) const {
  switch (kind_) {
    case Kind::Integers: return a.is_integer();
    case Kind::Rationals: return a.is_rational();
    case Kind::Scalars: return a.is_scalar() && a.as_scalar().is_quadratic() == hspec_.is_dense();
    case Kind::Product: {
      if (!a.is_tuple()) return false;
      const auto& t = a.as_tuple();
      if (t.size() != factors_.size()) return false;
      for (size_t i = 0; i < t.size(); ++i)
        if (!factors_[i]->contains(t[i])) return false;
      return true;
    }
    case Kind::Lex:
      return a.is_lex() && a.lex_head().is_quadratic() == hspec_.is_dense() &&
             tail_->contains(a.lex_tail());
    case Kind::PlAut: return a.is_pl();
    case Kind::Subgroup: return ambient_->contains(a) && member_(a);
  }
  return false;
}

void LGroup::require_member(const GroupElement& a, const char* who) const {
  if (!contains(a))
    throw CarrierMismatchError(std::string(who) + ": operand does not belong to " + describe());
}

GroupElement LGroup::add(const GroupElement& a, const GroupElement& b) const {
  require_member(a, "add");
  require_member(b, "add");
  switch (kind_) {
    case Kind::Integers: return GroupElement::integer(a.as_integer() + b.as_integer());
    case Kind::Rationals: return GroupElement::rational(a.as_rational() + b.as_rational());
    case Kind::Scalars: return GroupElement::scalar(hspec_.add(a.as_scalar(), b.as_scalar()));
    case Kind::Product: {
      GroupElement::Tuple t;
      t.reserve(factors_.size());
      for (size_t i = 0; i < factors_.size(); ++i)
        t.push_back(factors_[i]->add(a.as_tuple()[i], b.as_tuple()[i]));
      return GroupElement::tuple(std::move(t));
    }
    case Kind::Lex:
      return GroupElement::lex(hspec_.add(a.lex_head(), b.lex_head()),
                               tail_->add(a.lex_tail(), b.lex_tail()));
    case Kind::PlAut:
      // Additive notation for the PL carrier: a + b applies b after a.
      return GroupElement::pl(PlMap::compose(a.as_pl(), b.as_pl()));
    case Kind::Subgroup: return ambient_->add(a, b);
  }
  throw Error("unreachable");
}

GroupElement LGroup::neg(const GroupElement& a) const {
  require_member(a, "neg");
  switch (kind_) {
    case Kind::Integers: return GroupElement::integer(-a.as_integer());
    case Kind::Rationals: return GroupElement::rational(-a.as_rational());
    case Kind::Scalars: return GroupElement::scalar(hspec_.neg(a.as_scalar()));
    case Kind::Product: {
      GroupElement::Tuple t;
      t.reserve(factors_.size());
      for (size_t i = 0; i < factors_.size(); ++i) t.push_back(factors_[i]->neg(a.as_tuple()[i]));
      return GroupElement::tuple(std::move(t));
    }
    case Kind::Lex:
      return GroupElement::lex(hspec_.neg(a.lex_head()), tail_->neg(a.lex_tail()));
    case Kind::PlAut: return GroupElement::pl(a.as_pl().inverse());
    case Kind::Subgroup: return ambient_->neg(a);
  }
  throw Error("unreachable");
}

GroupElement LGroup::sub(const GroupElement& a, const GroupElement& b) const {
  return add(a, neg(b));
}

GroupElement LGroup::join(const GroupElement& a, const GroupElement& b) const {
  require_member(a, "join");
  require_member(b, "join");
  switch (kind_) {
    case Kind::Integers: return GroupElement::integer(std::max(a.as_integer(), b.as_integer()));
    case Kind::Rationals:
      return GroupElement::rational(std::max(a.as_rational(), b.as_rational()));
    case Kind::Scalars: return GroupElement::scalar(hspec_.max(a.as_scalar(), b.as_scalar()));
    case Kind::Product: {
      GroupElement::Tuple t;
      t.reserve(factors_.size());
      for (size_t i = 0; i < factors_.size(); ++i)
        t.push_back(factors_[i]->join(a.as_tuple()[i], b.as_tuple()[i]));
      return GroupElement::tuple(std::move(t));
    }
    case Kind::Lex: {
      Cmp c = hspec_.cmp(a.lex_head(), b.lex_head());
      if (c == Cmp::LT) return b;
      if (c == Cmp::GT) return a;
      return GroupElement::lex(a.lex_head(), tail_->join(a.lex_tail(), b.lex_tail()));
    }
    case Kind::PlAut: return GroupElement::pl(PlMap::pointwise_max(a.as_pl(), b.as_pl()));
    case Kind::Subgroup: return ambient_->join(a, b);
  }
  throw Error("unreachable");
}

GroupElement LGroup::meet(const GroupElement& a, const GroupElement& b) const {
  require_member(a, "meet");
  require_member(b, "meet");
  switch (kind_) {
    case Kind::Integers: return GroupElement::integer(std::min(a.as_integer(), b.as_integer()));
    case Kind::Rationals:
      return GroupElement::rational(std::min(a.as_rational(), b.as_rational()));
    case Kind::Scalars: return GroupElement::scalar(hspec_.min(a.as_scalar(), b.as_scalar()));
    case Kind::Product: {
      GroupElement::Tuple t;
      t.reserve(factors_.size());
      for (size_t i = 0; i < factors_.size(); ++i)
        t.push_back(factors_[i]->meet(a.as_tuple()[i], b.as_tuple()[i]));
      return GroupElement::tuple(std::move(t));
    }
    case Kind::Lex: {
      Cmp c = hspec_.cmp(a.lex_head(), b.lex_head());
      if (c == Cmp::LT) return a;
      if (c == Cmp::GT) return b;
      return GroupElement::lex(a.lex_head(), tail_->meet(a.lex_tail(), b.lex_tail()));
    }
    case Kind::PlAut: return GroupElement::pl(PlMap::pointwise_min(a.as_pl(), b.as_pl()));
    case Kind::Subgroup: return ambient_->meet(a, b);
  }
  throw Error("unreachable");
}

bool LGroup::leq(const GroupElement& a, const GroupElement& b) const {
  require_member(a, "leq");
  require_member(b, "leq");
  switch (kind_) {
    case Kind::Integers: return a.as_integer() <= b.as_integer();
    case Kind::Rationals: return a.as_rational() <= b.as_rational();
    case Kind::Scalars: return hspec_.leq(a.as_scalar(), b.as_scalar());
    case Kind::Product: {
      for (size_t i = 0; i < factors_.size(); ++i)
        if (!factors_[i]->leq(a.as_tuple()[i], b.as_tuple()[i])) return false;
      return true;
    }
    case Kind::Lex: {
      Cmp c = hspec_.cmp(a.lex_head(), b.lex_head());
      if (c != Cmp::EQ) return c == Cmp::LT;
      return tail_->leq(a.lex_tail(), b.lex_tail());
    }
    case Kind::PlAut: return PlMap::leq(a.as_pl(), b.as_pl());
    case Kind::Subgroup: return ambient_->leq(a, b);
  }
  throw Error("unreachable");
}

bool LGroup::less(const GroupElement& a, const GroupElement& b) const {
  return leq(a, b) && !equal(a, b);
}

bool LGroup::equal(const GroupElement& a, const GroupElement& b) const {
  require_member(a, "equal");
  require_member(b, "equal");
  return a == b;
}

GroupElement LGroup::scale(const Int& n, const GroupElement& a) const {
  require_member(a, "scale");
  switch (kind_) {
    case Kind::Integers: return GroupElement::integer(n * a.as_integer());
    case Kind::Rationals: return GroupElement::rational(Rat(n) * a.as_rational());
    case Kind::Scalars: return GroupElement::scalar(hspec_.scale(n, a.as_scalar()));
    case Kind::Product: {
      GroupElement::Tuple t;
      t.reserve(factors_.size());
      for (size_t i = 0; i < factors_.size(); ++i)
        t.push_back(factors_[i]->scale(n, a.as_tuple()[i]));
      return GroupElement::tuple(std::move(t));
    }
    case Kind::Lex:
      return GroupElement::lex(hspec_.scale(n, a.lex_head()), tail_->scale(n, a.lex_tail()));
    case Kind::PlAut: {
      GroupElement base = n < 0 ? neg(a) : a;
      GroupElement acc = zero();
      for (Int i = 0; i < boost::multiprecision::abs(n); ++i) acc = add(acc, base);
      return acc;
    }
    case Kind::Subgroup: return ambient_->scale(n, a);
  }
  throw Error("unreachable");
}

bool LGroup::is_abelian() const {
  switch (kind_) {
    case Kind::Integers:
    case Kind::Rationals:
    case Kind::Scalars: return true;
    case Kind::Product:
      return std::all_of(factors_.begin(), factors_.end(),
                         [](const LGroupPtr& f) { return f->is_abelian(); });
    case Kind::Lex: return tail_->is_abelian();
    case Kind::PlAut: return false;
    case Kind::Subgroup: return ambient_->is_abelian();
  }
  return false;
}

bool LGroup::is_totally_ordered() const {
  switch (kind_) {
    case Kind::Integers:
    case Kind::Rationals:
    case Kind::Scalars: return true;
    case Kind::Product:
      return factors_.empty() || (factors_.size() == 1 && factors_[0]->is_totally_ordered());
    case Kind::Lex: return tail_->is_totally_ordered();
    case Kind::PlAut: return false;
    case Kind::Subgroup: return ambient_->is_totally_ordered();
  }
  return false;
}

bool LGroup::structurally_equal(const LGroup& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::Integers:
    case Kind::Rationals:
    case Kind::PlAut: return true;
    case Kind::Scalars: return hspec_ == other.hspec_;
    case Kind::Product: {
      if (factors_.size() != other.factors_.size()) return false;
      for (size_t i = 0; i < factors_.size(); ++i)
        if (!factors_[i]->structurally_equal(*other.factors_[i])) return false;
      return true;
    }
    case Kind::Lex:
      return hspec_ == other.hspec_ && tail_->structurally_equal(*other.tail_);
    case Kind::Subgroup:
      return subgroup_name_ == other.subgroup_name_ &&
             ambient_->structurally_equal(*other.ambient_);
  }
  return false;
}

GroupElement LGroup::sample(Rng& rng, long size) const {
  long bound = std::max<long>(1, size);
  switch (kind_) {
    case Kind::Integers: return GroupElement::integer(Int(rng.uniform(-bound, bound)));
    case Kind::Rationals: {
      long den = rng.uniform(1, 4);
      return GroupElement::rational(Rat(rng.uniform(-bound * den, bound * den), den));
    }
    case Kind::Scalars: {
      if (hspec_.is_cyclic())
        return GroupElement::scalar(hspec_.cyclic_value(Int(rng.uniform(-bound, bound))));
      return GroupElement::scalar(
          hspec_.quadratic_value(Int(rng.uniform(-bound, bound)), Int(rng.uniform(-bound, bound))));
    }
    case Kind::Product: {
      GroupElement::Tuple t;
      t.reserve(factors_.size());
      for (const auto& f : factors_) t.push_back(f->sample(rng, size));
      return GroupElement::tuple(std::move(t));
    }
    case Kind::Lex:
      return GroupElement::lex(
          hspec_.is_cyclic()
              ? hspec_.cyclic_value(Int(rng.uniform(-bound, bound)))
              : hspec_.quadratic_value(Int(rng.uniform(-bound, bound)),
                                       Int(rng.uniform(-bound, bound))),
          tail_->sample(rng, size));
    case Kind::PlAut: {
      long k = rng.uniform(0, 3);
      if (k == 0) {
        long den = rng.uniform(1, 2);
        return GroupElement::pl(PlMap::translation(Rat(rng.uniform(-bound * den, bound * den), den)));
      }
      std::vector<PlMap::Point> pts;
      Rat x(rng.uniform(-bound, 0));
      Rat y(rng.uniform(-bound, 0));
      for (long i = 0; i < k + 1; ++i) {
        pts.emplace_back(x, y);
        long den = rng.uniform(1, 2);
        x += Rat(rng.uniform(1, 2 * den), den);
        y += Rat(rng.uniform(1, 2 * den), den);
      }
      return GroupElement::pl(PlMap::from_points(std::move(pts)));
    }
    case Kind::Subgroup: return sampler_override_(rng, size);
  }
  throw Error("unreachable");
}

std::string LGroup::describe() const {
  switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::Scalars: return "H(" + hspec_.describe() + ")";
    case Kind::Product: {
      if (factors_.empty()) return "O";
      std::string out = "product(";
      for (size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += ",";
        out += factors_[i]->describe();
      }
      return out + ")";
    }
    case Kind::Lex: return "lex(" + hspec_.describe() + "," + tail_->describe() + ")";
    case Kind::PlAut: return "plaut";
    case Kind::Subgroup: return subgroup_name_;
  }
  return "?";
}

std::string LGroup::format(const GroupElement& a) const {
  require_member(a, "format");
  switch (kind_) {
    case Kind::Integers: return a.as_integer().str();
    case Kind::Rationals: return format_rat(a.as_rational());
    case Kind::Scalars: return hspec_.format(a.as_scalar());
    case Kind::Product: {
      std::string out = "(";
      for (size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += ",";
        out += factors_[i]->format(a.as_tuple()[i]);
      }
      return out + ")";
    }
    case Kind::Lex:
      return "(" + hspec_.format(a.lex_head()) + "," + tail_->format(a.lex_tail()) + ")";
    case Kind::PlAut: return a.as_pl().format();
    case Kind::Subgroup: return ambient_->format(a);
  }
  return "?";
}

namespace {

// Splits "a,b,c" at top-level commas (ignores commas inside parentheses).
std::vector<std::string_view> split_top_level(std::string_view s) {
  std::vector<std::string_view> parts;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == ',' && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

std::string_view trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

GroupElement LGroup::parse_element(std::string_view text) const {
  std::string_view body = trim(text);
  if (body.empty()) throw ParseError("empty element literal for carrier " + describe());
  switch (kind_) {
    case Kind::Integers: return GroupElement::integer(parse_int(body));
    case Kind::Rationals: return GroupElement::rational(parse_rat(body));
    case Kind::Scalars: return GroupElement::scalar(hspec_.parse_value(body));
    case Kind::Product:
    case Kind::Lex: {
      if (body.front() != '(' || body.back() != ')')
        throw ParseError("tuple literal must be parenthesized: '" + std::string(body) + "'");
      auto parts = split_top_level(body.substr(1, body.size() - 2));
      if (kind_ == Kind::Lex) {
        if (parts.size() != 2)
          throw ParseError("lex element needs exactly (h,g): '" + std::string(body) + "'");
        return GroupElement::lex(hspec_.parse_value(trim(parts[0])),
                                 tail_->parse_element(parts[1]));
      }
      if (parts.size() != factors_.size() && !(factors_.empty() && parts.size() == 1 &&
                                               trim(parts[0]).empty()))
        throw ParseError("tuple arity mismatch for " + describe());
      GroupElement::Tuple t;
      for (size_t i = 0; i < factors_.size(); ++i)
        t.push_back(factors_[i]->parse_element(parts[i]));
      return GroupElement::tuple(std::move(t));
    }
    case Kind::PlAut: return GroupElement::pl(PlMap::parse(body));
    case Kind::Subgroup: return ambient_->parse_element(body);
  }
  throw Error("unreachable");
}

UnitVerdict is_strong_unit_sampled(const LGroup& g, const GroupElement& u, long budget,
                                   long samples, std::uint64_t seed) {
  Rng rng(seed);
  for (long s = 0; s < samples; ++s) {
    GroupElement x = g.sample(rng, 8);
    bool bounded = false;
    GroupElement nu = g.zero();
    for (long n = 1; n <= budget; ++n) {
      nu = g.add(nu, u);
      if (g.leq(x, nu)) {
        bounded = true;
        break;
      }
    }
    if (!bounded)
      return {UnitVerdict::Status::Refuted, Method::Budgeted, x,
              "no n <= " + std::to_string(budget) + " bounds sampled element"};
  }
  return {UnitVerdict::Status::HoldsOnSamples, Method::Budgeted, std::nullopt,
          "every sampled element bounded within budget " + std::to_string(budget)};
}

UnitVerdict is_strong_unit(const LGroup& g, const GroupElement& u, long budget, long samples,
                           std::uint64_t seed) {
  g.require_member(u, "is_strong_unit");
  if (!g.leq(g.zero(), u)) throw PreconditionError("is_strong_unit requires u >= 0");
  switch (g.kind()) {
    case LGroup::Kind::Integers:
    case LGroup::Kind::Rationals:
    case LGroup::Kind::Scalars: {
      // Archimedean subgroups of R: any u > 0 is a strong unit.
      if (!g.is_zero(u))
        return {UnitVerdict::Status::Proven, Method::Analytic, std::nullopt,
                "positive element of an archimedean chain"};
      GroupElement one = g.kind() == LGroup::Kind::Integers
                             ? GroupElement::integer(1)
                             : (g.kind() == LGroup::Kind::Rationals
                                    ? GroupElement::rational(Rat(1))
                                    : GroupElement::scalar(g.hspec().one()));
      return {UnitVerdict::Status::Refuted, Method::Analytic, one, "u = 0 bounds nothing"};
    }
    case LGroup::Kind::Product: {
      const auto& fs = g.factors();
      const auto& t = u.as_tuple();
      for (size_t i = 0; i < fs.size(); ++i) {
        UnitVerdict v = is_strong_unit(*fs[i], t[i], budget, samples, seed);
        if (v.status == UnitVerdict::Status::Refuted) {
          // Embed the component witness at coordinate i.
          GroupElement::Tuple w;
          for (size_t j = 0; j < fs.size(); ++j)
            w.push_back(j == i ? *v.witness : fs[j]->zero());
          return {UnitVerdict::Status::Refuted, v.method, GroupElement::tuple(std::move(w)),
                  "factor " + std::to_string(i) + ": " + v.detail};
        }
        if (v.status != UnitVerdict::Status::Proven)
          return is_strong_unit_sampled(g, u, budget, samples, seed);
      }
      return {UnitVerdict::Status::Proven, Method::Analytic, std::nullopt,
              "strong unit in every factor; take n = max of the factor bounds"};
    }
    case LGroup::Kind::Lex: {
      if (g.hspec().sign(u.lex_head()) > 0)
        return {UnitVerdict::Status::Proven, Method::Analytic, std::nullopt,
                "positive head coordinate dominates lexicographically"};
      GroupElement w = GroupElement::lex(g.hspec().one(), g.lex_tail_group()->zero());
      return {UnitVerdict::Status::Refuted, Method::Analytic, w,
              "head coordinate 0: (1,0) exceeds every n*u"};
    }
    case LGroup::Kind::PlAut: {
      // u >= id; u is a strong unit iff it has no fixed point: then
      // u^n displaces every t by at least n * min_displacement.
      const PlMap& m = u.as_pl();
      Rat delta = m.min_displacement();
      if (delta > 0)
        return {UnitVerdict::Status::Proven, Method::Analytic, std::nullopt,
                "fixed-point free: displacement >= " + format_rat(delta)};
      return {UnitVerdict::Status::Refuted, Method::Analytic,
              GroupElement::pl(PlMap::translation(Rat(1))),
              "u has a fixed point; no power dominates translate(1)"};
    }
    case LGroup::Kind::Subgroup: return is_strong_unit_sampled(g, u, budget, samples, seed);
  }
  return is_strong_unit_sampled(g, u, budget, samples, seed);
}

CenterVerdict in_commutative_center(const LGroup& g, const GroupElement& elem, long samples,
                                    std::uint64_t seed) {
  g.require_member(elem, "in_commutative_center");
  if (g.is_abelian())
    return {CenterVerdict::Status::Central, Method::Analytic, std::nullopt};
  if (g.is_zero(elem))
    return {CenterVerdict::Status::Central, Method::Analytic, std::nullopt};
  Rng rng(seed);
  for (long s = 0; s < samples; ++s) {
    GroupElement h = g.sample(rng, 8);
    if (!g.equal(g.add(elem, h), g.add(h, elem)))
      return {CenterVerdict::Status::Refuted, Method::Sampled, h};
  }
  return {CenterVerdict::Status::HoldsOnSamples, Method::Sampled, std::nullopt};
}

}  // namespace pmvw
