#include "dkbv/sfeel.hpp"

#include <cctype>

namespace dkbv {

bool SfeelCondition::operator==(const SfeelCondition& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Any: return true;
    case Eq:
    case NotEq: return value == o.value;
    case Cmp: return cmp == o.cmp && value == o.value;
    case Interval:
      return lower_open == o.lower_open && upper_open == o.upper_open && lo == o.lo && hi == o.hi;
    case Or: return disjuncts == o.disjuncts;
  }
  return false;
}

namespace {
struct Parser {
  const std::string& text;
  Dt dt;
  const Rat& today;
  std::size_t pos = 0;

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) { throw SfeelError(msg, pos); }

  Value literal() {
    skip();
    if (pos >= text.size()) fail("expected literal");
    if (text[pos] == '"') {
      std::size_t end = text.find('"', pos + 1);
      if (end == std::string::npos) fail("unterminated string literal");
      std::string s = text.substr(pos + 1, end - pos - 1);
      pos = end + 1;
      if (dt != Dt::String) fail("string literal for numeric datatype");
      return Value::string(s);
    }
    if (text.compare(pos, 5, "today") == 0) {
      pos += 5;
      if (dt == Dt::String) fail("today is a numeric constant");
      return Value::number(dt, today);
    }
    std::size_t start = pos;
    if (text[pos] == '-' || text[pos] == '+') ++pos;
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.' ||
            text[pos] == '/')) {
      if (text[pos] == '.' && text.compare(pos, 2, "..") == 0) break;  // interval separator
      ++pos;
    }
    if (pos == start) fail("expected literal");
    if (dt == Dt::String) fail("numeric literal for string datatype");
    try {
      return Value::number(dt, parse_rational(text.substr(start, pos - start)));
    } catch (const ValueError& e) {
      throw SfeelError(e.what(), start);
    }
  }

  SfeelCondition atom() {
    skip();
    if (pos >= text.size()) fail("expected condition atom");
    SfeelCondition c;
    if (text.compare(pos, 4, "not(") == 0) {
      pos += 4;
      c.kind = SfeelCondition::NotEq;
      c.value = literal();
      if (!eat(')')) fail("expected ')'");
      return c;
    }
    char ch = text[pos];
    if (ch == '<' || ch == '>') {
      ++pos;
      bool eq = pos < text.size() && text[pos] == '=';
      if (eq) ++pos;
      if (dt == Dt::String) fail("comparison on string datatype");
      c.kind = SfeelCondition::Cmp;
      c.cmp = ch == '<' ? (eq ? Facet::Leq : Facet::Lt) : (eq ? Facet::Geq : Facet::Gt);
      c.value = literal();
      return c;
    }
    if (ch == '[' || ch == '(') {
      ++pos;
      if (dt == Dt::String) fail("interval on string datatype");
      c.kind = SfeelCondition::Interval;
      c.lower_open = ch == '(';
      c.lo = literal();
      skip();
      if (text.compare(pos, 2, "..") != 0) fail("expected '..' in interval");
      pos += 2;
      c.hi = literal();
      skip();
      if (pos >= text.size() || (text[pos] != ']' && text[pos] != ')'))
        fail("expected interval close bracket");
      c.upper_open = text[pos] == ')';
      ++pos;
      if (c.lo.num > c.hi.num) fail("malformed interval: lower bound above upper bound");
      return c;
    }
    c.kind = SfeelCondition::Eq;
    c.value = literal();
    return c;
  }

  SfeelCondition parse() {
    skip();
    if (pos < text.size() && text[pos] == '-' &&
        (pos + 1 == text.size() ||
         [&] {
           std::size_t p = pos + 1;
           while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
           return p == text.size();
         }())) {
      pos = text.size();
      SfeelCondition c;
      c.kind = SfeelCondition::Any;
      return c;
    }
    std::vector<SfeelCondition> parts;
    parts.push_back(atom());
    skip();
    while (eat(',')) {
      parts.push_back(atom());
      skip();
    }
    skip();
    if (pos != text.size()) fail("trailing input after condition");
    if (parts.size() == 1) return parts.front();
    SfeelCondition c;
    c.kind = SfeelCondition::Or;
    c.disjuncts = std::move(parts);
    return c;
  }
};
}  // namespace

SfeelCondition sfeel_parse(const std::string& text, Dt datatype, const Rat& today) {
  Parser p{text, datatype, today};
  return p.parse();
}

std::string sfeel_print(const SfeelCondition& c) {
  switch (c.kind) {
    case SfeelCondition::Any: return "-";
    case SfeelCondition::Eq: return c.value.to_text();
    case SfeelCondition::NotEq: return "not(" + c.value.to_text() + ")";
    case SfeelCondition::Cmp: return std::string(facet_op_text(c.cmp)) + c.value.to_text();
    case SfeelCondition::Interval:
      return std::string(c.lower_open ? "(" : "[") + c.lo.to_text() + ".." + c.hi.to_text() +
             (c.upper_open ? ")" : "]");
    case SfeelCondition::Or: {
      std::string s;
      for (std::size_t i = 0; i < c.disjuncts.size(); ++i) {
        if (i) s += ", ";
        s += sfeel_print(c.disjuncts[i]);
      }
      return s;
    }
  }
  return "?";
}

DerivedPtr sfeel_to_derived(const SfeelCondition& c, Dt d) {
  switch (c.kind) {
    case SfeelCondition::Any:
      return dt_primitive(d);
    case SfeelCondition::Eq:
      return dt_facet(d, Facet::Eq, c.value);
    case SfeelCondition::NotEq:
      return dt_difference(dt_primitive(d), dt_enumeration(d, {c.value}));
    case SfeelCondition::Cmp:
      return dt_facet(d, c.cmp, c.value);
    case SfeelCondition::Interval:
      return dt_restriction(
          d, FacetFormula::conj(
                 FacetFormula::atom({c.lower_open ? Facet::Gt : Facet::Geq, c.lo}),
                 FacetFormula::atom({c.upper_open ? Facet::Lt : Facet::Leq, c.hi})));
    case SfeelCondition::Or: {
      DerivedPtr acc = sfeel_to_derived(c.disjuncts.front(), d);
      for (std::size_t i = 1; i < c.disjuncts.size(); ++i)
        acc = dt_union(acc, sfeel_to_derived(c.disjuncts[i], d));
      return acc;
    }
  }
  return dt_primitive(d);
}

bool sfeel_matches(const SfeelCondition& c, const Value& v) {
  switch (c.kind) {
    case SfeelCondition::Any: return true;
    case SfeelCondition::Eq: return v == c.value;
    case SfeelCondition::NotEq: return v != c.value;
    case SfeelCondition::Cmp: {
      Facet f;
      f.op = c.cmp;
      f.bound = c.value;
      return !v.is_string && [&] {
        switch (f.op) {
          case Facet::Lt: return v.num < f.bound.num;
          case Facet::Leq: return v.num <= f.bound.num;
          case Facet::Gt: return v.num > f.bound.num;
          case Facet::Geq: return v.num >= f.bound.num;
          default: return v.num == f.bound.num;
        }
      }();
    }
    case SfeelCondition::Interval: {
      if (v.is_string) return false;
      bool lo_ok = c.lower_open ? v.num > c.lo.num : v.num >= c.lo.num;
      bool hi_ok = c.upper_open ? v.num < c.hi.num : v.num <= c.hi.num;
      return lo_ok && hi_ok;
    }
    case SfeelCondition::Or:
      for (const auto& d : c.disjuncts)
        if (sfeel_matches(d, v)) return true;
      return false;
  }
  return false;
}

bool sfeel_is_any(const SfeelCondition& c) { return c.kind == SfeelCondition::Any; }

}  // namespace dkbv
