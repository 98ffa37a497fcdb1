#include "pmvw/hgroup.hpp"

#include <algorithm>
#include <cmath>

#include "pmvw/error.hpp"

namespace pmvw {

int quad_sign(const Rat& a, const Rat& b, const Int& d) {
  if (b == 0) return sign_of(a);
  if (a == 0) return sign_of(b);
  int sa = sign_of(a);
  int sb = sign_of(b);
  if (sa == sb) return sa;
  // Opposite signs: |a| against |b|*sqrt(d), squared. Equality would force
  // sqrt(d) rational, which construction rules out, but report 0 honestly.
  Rat lhs = a * a;
  Rat rhs = b * b * Rat(d);
  if (lhs == rhs) return 0;
  bool abs_a_wins = lhs > rhs;
  return abs_a_wins ? sa : sb;
}

Int quad_floor(const Rat& a, const Rat& b, const Int& d) {
  double guess = a.convert_to<double>() +
                 b.convert_to<double>() * std::sqrt(d.convert_to<double>());
  Int n(static_cast<long long>(std::floor(guess)));
  // Exact fix-up: want n <= a + b*sqrt(d) < n + 1.
  while (quad_sign(a - Rat(n + 1), b, d) >= 0) ++n;
  while (quad_sign(a - Rat(n), b, d) < 0) --n;
  return n;
}

HSpec HSpec::cyclic(Int n) {
  if (n < 1) throw PreconditionError("cyclic H requires n >= 1, got " + n.str());
  HSpec s;
  s.dense_ = false;
  s.n_ = std::move(n);
  return s;
}

namespace {

bool is_perfect_square(const Int& d) {
  if (d < 0) return false;
  Int r = boost::multiprecision::sqrt(d);
  return r * r == d;
}

}  // namespace

HSpec HSpec::quadratic(Rat p, Rat q, Int d) {
  if (q == 0) throw PreconditionError("quadratic H requires q != 0");
  if (d < 1 || is_perfect_square(d))
    throw PreconditionError("quadratic H requires a positive non-square d, got " + d.str());
  // Normalize alpha into (0,1); the group generated by {1, alpha} is unchanged.
  Int shift = quad_floor(p, q, d);
  p -= Rat(shift);
  HSpec s;
  s.dense_ = true;
  s.p_ = std::move(p);
  s.q_ = std::move(q);
  s.d_ = std::move(d);
  if (quad_sign(s.p_, s.q_, s.d_) <= 0)
    throw PreconditionError("quadratic alpha normalized to 0; q*sqrt(d) must be irrational");
  return s;
}

HSpec HSpec::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("H spec must look like 'cyclic:n' or 'quadratic:p,q,d': '" +
                     std::string(text) + "'");
  std::string_view kind = text.substr(0, colon);
  std::string_view body = text.substr(colon + 1);
  if (kind == "cyclic") return cyclic(parse_int(body));
  if (kind == "quadratic") {
    auto c1 = body.find(',');
    auto c2 = c1 == std::string_view::npos ? std::string_view::npos : body.find(',', c1 + 1);
    if (c2 == std::string_view::npos)
      throw ParseError("quadratic H spec needs p,q,d: '" + std::string(text) + "'");
    return quadratic(parse_rat(body.substr(0, c1)),
                     parse_rat(body.substr(c1 + 1, c2 - c1 - 1)),
                     parse_int(body.substr(c2 + 1)));
  }
  throw ParseError("unknown H spec kind '" + std::string(kind) + "'");
}

const Int& HSpec::modulus() const {
  if (dense_) throw SpecMismatchError("modulus() on a dense H spec");
  return n_;
}

HValue HSpec::zero() const { return HValue(dense_, 0, 0); }

HValue HSpec::one() const { return from_integer(1); }

HValue HSpec::from_integer(const Int& m) const {
  return dense_ ? HValue(true, m, 0) : HValue(false, m * n_, 0);
}

HValue HSpec::cyclic_value(Int i) const {
  if (dense_) throw SpecMismatchError("cyclic_value on a dense H spec");
  return HValue(false, std::move(i), 0);
}

HValue HSpec::quadratic_value(Int m, Int k) const {
  if (!dense_) throw SpecMismatchError("quadratic_value on a cyclic H spec");
  return HValue(true, std::move(m), std::move(k));
}

void HSpec::require_same_kind(const HValue& a, const char* who) const {
  if (a.is_quadratic() != dense_)
    throw SpecMismatchError(std::string(who) + ": value does not belong to " + describe());
}

HValue HSpec::add(const HValue& a, const HValue& b) const {
  require_same_kind(a, "h_add");
  require_same_kind(b, "h_add");
  return HValue(dense_, a.m_ + b.m_, a.k_ + b.k_);
}

HValue HSpec::neg(const HValue& a) const {
  require_same_kind(a, "h_neg");
  return HValue(dense_, -a.m_, -a.k_);
}

HValue HSpec::sub(const HValue& a, const HValue& b) const { return add(a, neg(b)); }

HValue HSpec::scale(const Int& n, const HValue& a) const {
  require_same_kind(a, "h_scale");
  return HValue(dense_, n * a.m_, n * a.k_);
}

int HSpec::sign(const HValue& a) const {
  require_same_kind(a, "h_sign");
  if (!dense_) return sign_of(a.m_);
  // sign(m + k*(p + q*sqrt(d))) = sign((m + k*p) + (k*q)*sqrt(d))
  return quad_sign(Rat(a.m_) + Rat(a.k_) * p_, Rat(a.k_) * q_, d_);
}

Cmp HSpec::cmp(const HValue& a, const HValue& b) const {
  int s = sign(sub(a, b));
  return s < 0 ? Cmp::LT : (s > 0 ? Cmp::GT : Cmp::EQ);
}

bool HSpec::in_unit_interval(const HValue& a) const {
  return sign(a) >= 0 && cmp(a, one()) != Cmp::GT;
}

std::vector<HValue> HSpec::sample_unit_interval(long count, std::uint64_t seed) const {
  if (count < 1) throw PreconditionError("sample_unit_interval requires count >= 1");
  std::vector<HValue> out;
  Rng rng(seed);
  if (!dense_) {
    if (n_ <= count) {  // exhaustive
      for (Int i = 0; i <= n_; ++i) out.push_back(cyclic_value(i));
    } else {
      out.push_back(zero());
      out.push_back(one());
      long n64 = n_.convert_to<long>();
      while (static_cast<long>(out.size()) < count) {
        HValue v = cyclic_value(Int(rng.uniform(1, n64 - 1)));
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
      }
    }
  } else {
    out.push_back(zero());
    out.push_back(one());
    long k = 0;
    while (static_cast<long>(out.size()) < count) {
      ++k;
      for (long s : {k, -k}) {
        if (static_cast<long>(out.size()) >= count) break;
        // Unique integer m with m + s*alpha in (0,1): m = floor(-s*alpha) + 1.
        Int m = quad_floor(Rat(-s) * p_, Rat(-s) * q_, d_) + 1;
        out.push_back(quadratic_value(m, Int(s)));
      }
    }
  }
  for (const HValue& v : out) {
    if (!in_unit_interval(v)) throw StructureDefect("sample_unit_interval produced " + format(v));
  }
  return out;
}

HValue HSpec::sample_unit_value(Rng& rng, long size, bool boost_boundary) const {
  if (boost_boundary) {
    switch (rng.uniform(0, 7)) {
      case 0: return zero();
      case 1: return one();
      default: break;
    }
  }
  if (!dense_) {
    long n64 = n_.convert_to<long>();
    (void)size;
    return cyclic_value(Int(rng.uniform(0, n64)));
  }
  long bound = std::max<long>(1, size);
  long k = rng.uniform(-bound, bound);
  if (k == 0) return rng.coin() ? one() : zero();
  Int m = quad_floor(Rat(-k) * p_, Rat(-k) * q_, d_) + 1;
  return quadratic_value(m, Int(k));
}

std::string HSpec::format(const HValue& a) const {
  require_same_kind(a, "format");
  if (!dense_) return format_rat(Rat(a.m_, n_));
  if (a.k_ == 0) return a.m_.str();
  std::string ka = (a.k_ == 1) ? "a" : (a.k_ == -1 ? "-a" : a.k_.str() + "a");
  if (a.m_ == 0) return ka;
  if (a.k_ > 0) return a.m_.str() + "+" + ka;
  return a.m_.str() + ka;  // negative k carries its own sign
}

HValue HSpec::parse_value(std::string_view text) const {
  size_t begin = text.find_first_not_of(" \t");
  size_t end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos) throw ParseError("empty H value literal");
  std::string body(text.substr(begin, end - begin + 1));
  if (!dense_) {
    Rat r = parse_rat(body);
    Rat scaled = r * Rat(n_);
    if (rat_den(scaled) != 1)
      throw ParseError("'" + body + "' is not a multiple of 1/" + n_.str());
    return cyclic_value(rat_num(scaled));
  }
  // quadratic literals: "m", "ka", "m+ka", "m-ka" with k optionally implicit 1
  auto parse_k = [](std::string_view t) -> Int {
    if (t.empty() || t == "+") return 1;
    if (t == "-") return -1;
    return parse_int(t);
  };
  auto apos = body.find('a');
  if (apos == std::string::npos) return quadratic_value(parse_int(body), 0);
  if (apos + 1 != body.size()) throw ParseError("malformed H(alpha) literal: '" + body + "'");
  std::string head = body.substr(0, apos);
  // Split off the k part: scan from the back past digits to a sign.
  size_t split = head.size();
  while (split > 0 && head[split - 1] >= '0' && head[split - 1] <= '9') --split;
  if (split > 0 && (head[split - 1] == '+' || head[split - 1] == '-')) --split;
  std::string m_part = head.substr(0, split);
  std::string k_part = head.substr(split);
  Int m = m_part.empty() ? Int(0) : parse_int(m_part);
  return quadratic_value(m, parse_k(k_part));
}

std::string HSpec::describe() const {
  if (!dense_) return "cyclic:" + n_.str();
  return "quadratic:" + format_rat(p_) + "," + format_rat(q_) + "," + d_.str();
}

bool HSpec::operator==(const HSpec& other) const {
  if (dense_ != other.dense_) return false;
  if (!dense_) return n_ == other.n_;
  return p_ == other.p_ && q_ == other.q_ && d_ == other.d_;
}

}  // namespace pmvw
