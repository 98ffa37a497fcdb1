#include "pmvw/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "pmvw/error.hpp"

namespace pmvw {

const std::vector<std::string>& all_suite_names() {
  static const std::vector<std::string> names = {
      "axioms",     "classify", "decomposition", "identities", "pea-axioms",
      "rdp",        "represent", "state",        "symmetric",  "unit",
  };
  return names;
}

namespace {

std::string_view trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

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

std::string_view wrapped_body(std::string_view text, std::string_view head) {
  // text is known to start with head; expect "head( ... )"
  std::string_view rest = text.substr(head.size());
  if (rest.empty() || rest.front() != '(' || rest.back() != ')')
    throw ParseError("carrier: expected '" + std::string(head) + "(...)', got '" +
                     std::string(text) + "'");
  return rest.substr(1, rest.size() - 2);
}

}  // namespace

LGroupPtr parse_carrier(std::string_view text) {
  std::string_view body = trim(text);
  if (body.empty()) throw ParseError("empty carrier expression");
  if (body == "Z") return LGroup::integers();
  if (body == "Q") return LGroup::rationals();
  if (body == "O") return LGroup::trivial();
  if (body == "plaut") return LGroup::pl_aut();
  if (body.rfind("H", 0) == 0 && body.size() > 1 && body[1] == '(')
    return LGroup::scalars(HSpec::parse(trim(wrapped_body(body, "H"))));
  if (body.rfind("lex", 0) == 0) {
    auto parts = split_top_level(wrapped_body(body, "lex"));
    if (parts.size() < 2)
      throw ParseError("carrier: lex needs (hspec, carrier): '" + std::string(body) + "'");
    // A quadratic hspec carries commas of its own; the carrier is the last
    // top-level part, everything before it is the hspec.
    std::string hspec;
    for (size_t i = 0; i + 1 < parts.size(); ++i) {
      if (i) hspec += ",";
      hspec += std::string(trim(parts[i]));
    }
    return LGroup::lex(HSpec::parse(hspec), parse_carrier(parts.back()));
  }
  if (body.rfind("product", 0) == 0) {
    std::string_view inner = wrapped_body(body, "product");
    std::vector<LGroupPtr> factors;
    if (!trim(inner).empty())
      for (auto part : split_top_level(inner)) factors.push_back(parse_carrier(part));
    return LGroup::product(std::move(factors));
  }
  throw ParseError("unknown carrier '" + std::string(body) + "'");
}

namespace {

GroupElement default_unit(const LGroupPtr& g) {
  switch (g->kind()) {
    case LGroup::Kind::Rationals: return GroupElement::rational(Rat(1));
    case LGroup::Kind::Scalars: return GroupElement::scalar(g->hspec().one());
    case LGroup::Kind::Lex:
      return GroupElement::lex(g->hspec().one(), g->lex_tail_group()->zero());
    case LGroup::Kind::PlAut: return GroupElement::pl(PlMap::translation(Rat(1)));
    default:
      throw ParseError("carrier " + g->describe() + " needs an explicit 'unit ='");
  }
}

[[noreturn]] void fail_at(long line, const std::string& message) {
  throw ParseError("config line " + std::to_string(line) + ": " + message);
}

}  // namespace

WorkbenchConfig parse_config(const std::string& text) {
  WorkbenchConfig config;
  std::string section;
  std::string carrier_text;
  std::string unit_text;
  std::string b_text;
  std::vector<std::string> suites;

  std::istringstream in(text);
  std::string raw;
  long line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail_at(line_no, "unterminated section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (section != "algebra" && section != "suites" && section != "sampling" &&
          section != "budgets")
        fail_at(line_no, "unknown section [" + section + "]");
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string_view::npos) fail_at(line_no, "expected 'key = value'");
    std::string key(trim(line.substr(0, eq)));
    std::string value(trim(line.substr(eq + 1)));
    try {
      if (section == "algebra") {
        if (key == "carrier") carrier_text = value;
        else if (key == "unit") unit_text = value;
        else if (key == "b") b_text = value;
        else fail_at(line_no, "unknown key '" + key + "' in [algebra]");
      } else if (section == "suites") {
        if (key != "run") fail_at(line_no, "unknown key '" + key + "' in [suites]");
        for (auto part : split_top_level(value)) {
          std::string name(trim(part));
          if (name.empty()) continue;
          if (name == "all") {
            suites = all_suite_names();
            continue;
          }
          const auto& known = all_suite_names();
          if (std::find(known.begin(), known.end(), name) == known.end())
            fail_at(line_no, "unknown suite '" + name + "'");
          suites.push_back(name);
        }
      } else if (section == "sampling") {
        if (key == "samples") config.samples = parse_int(value).convert_to<long>();
        else if (key == "seed") config.seed = parse_int(value).convert_to<std::uint64_t>();
        else if (key == "size") config.sample_size = parse_int(value).convert_to<long>();
        else fail_at(line_no, "unknown key '" + key + "' in [sampling]");
      } else if (section == "budgets") {
        if (key == "infinitesimal") config.infinitesimal_budget = parse_int(value);
        else if (key == "ideal-depth") config.ideal_depth = parse_int(value);
        else if (key == "root-bound") config.root_bound = parse_int(value);
        else fail_at(line_no, "unknown key '" + key + "' in [budgets]");
      } else {
        fail_at(line_no, "key '" + key + "' outside any section");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail_at(line_no, e.what());
    }
  }

  if (carrier_text.empty()) throw ParseError("config: [algebra] carrier is required");
  LGroupPtr carrier;
  GroupElement unit = GroupElement::integer(0);
  try {
    carrier = parse_carrier(carrier_text);
    if (!unit_text.empty()) {
      unit = carrier->parse_element(unit_text);
    } else if (!b_text.empty() && carrier->kind() == LGroup::Kind::Lex) {
      unit = GroupElement::lex(carrier->hspec().one(),
                               carrier->lex_tail_group()->parse_element(b_text));
    } else {
      unit = default_unit(carrier);
    }
  } catch (const Error& e) {
    throw ParseError(std::string("config [algebra]: ") + e.what());
  }
  config.carrier_text = carrier_text;
  config.algebra = PmvAlgebra::make(carrier, unit, config.sample_size);
  config.unit_text = carrier->format(unit);
  if (config.samples < 1) throw ParseError("config: samples must be >= 1");

  if (suites.empty()) suites = all_suite_names();
  std::sort(suites.begin(), suites.end());
  suites.erase(std::unique(suites.begin(), suites.end()), suites.end());
  config.suites = std::move(suites);
  return config;
}

WorkbenchConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace pmvw
