#include "pmvw/numeric.hpp"

#include "pmvw/error.hpp"

namespace pmvw {

std::string format_rat(const Rat& r) {
  Int num = rat_num(r);
  Int den = rat_den(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string format_int(const Int& n) { return n.str(); }

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rat(parse_int(text));
    }
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw ParseError("rational with zero denominator: '" + std::string(text) + "'");
    return Rat(num, den);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  }
}

Int parse_int(std::string_view text) {
  size_t begin = text.find_first_not_of(" \t");
  size_t end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos) throw ParseError("empty integer literal");
  std::string trimmed(text.substr(begin, end - begin + 1));
  if (trimmed == "+" || trimmed == "-") throw ParseError("malformed integer: '" + trimmed + "'");
  for (size_t i = 0; i < trimmed.size(); ++i) {
    char c = trimmed[i];
    if (i == 0 && (c == '+' || c == '-')) continue;
    if (c < '0' || c > '9') throw ParseError("malformed integer: '" + trimmed + "'");
  }
  if (trimmed[0] == '+') trimmed.erase(0, 1);  // cpp_int rejects a leading '+'
  return Int(trimmed);
}

}  // namespace pmvw
