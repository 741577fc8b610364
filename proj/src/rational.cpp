#include "dkbv/rational.hpp"

#include <cctype>

namespace dkbv {

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw ValueError("empty numeric literal");
  std::size_t i = 0;
  bool neg = false;
  if (text[i] == '+' || text[i] == '-') {
    neg = text[i] == '-';
    ++i;
  }
  auto digits = [&](std::size_t& pos) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return text.substr(start, pos - start);
  };
  std::string whole = digits(i);
  if (i < text.size() && text[i] == '/') {
    ++i;
    std::string den = digits(i);
    if (whole.empty() || den.empty() || i != text.size())
      throw ValueError("malformed rational literal: " + text);
    Int d(den);
    if (d == 0) throw ValueError("zero denominator: " + text);
    Rat r(Int(whole), d);
    return neg ? Rat(-r) : r;
  }
  std::string frac;
  if (i < text.size() && text[i] == '.') {
    ++i;
    frac = digits(i);
  }
  if (i != text.size() || (whole.empty() && frac.empty()))
    throw ValueError("malformed numeric literal: " + text);
  Int num(whole.empty() ? "0" : whole);
  Int den = 1;
  for (char c : frac) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  Rat r(num, den);
  return neg ? Rat(-r) : r;
}

std::string print_rational(const Rat& r) {
  Int num = numerator(r);
  Int den = denominator(r);
  if (den == 1) return num.str();
  // Decimal expansion terminates iff den = 2^a * 5^b.
  Int d = den;
  int twos = 0, fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  if (d != 1) return num.str() + "/" + den.str();
  int shift = twos > fives ? twos : fives;
  Int scale = 1;
  for (int i = 0; i < shift; ++i) scale *= 10;
  Int scaled = num * (scale / den);
  bool neg = scaled < 0;
  std::string s = (neg ? Int(-scaled) : scaled).str();
  if (static_cast<int>(s.size()) <= shift) s.insert(0, shift + 1 - s.size(), '0');
  s.insert(s.size() - shift, ".");
  return (neg ? "-" : "") + s;
}

bool rat_is_integer(const Rat& r) { return denominator(r) == 1; }

Int rat_floor(const Rat& r) {
  Int q = numerator(r) / denominator(r);
  if (r < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

Int rat_ceil(const Rat& r) {
  Int q = numerator(r) / denominator(r);
  if (r > 0 && q * denominator(r) != numerator(r)) ++q;
  return q;
}

}  // namespace dkbv
