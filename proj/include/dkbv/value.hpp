#ifndef DKBV_VALUE_HPP
#define DKBV_VALUE_HPP

#include <string>

#include "dkbv/rational.hpp"

namespace dkbv {

enum class Dt { String, Natural, Integer, Rational, Real };

const char* dt_name(Dt d);
bool dt_numeric(Dt d);
bool dt_discrete(Dt d);  // Natural, Integer
bool dt_dense(Dt d);     // Rational, Real

// A typed constant: either a string or an exact rational. Natural/Integer
// values must have denominator 1; Natural values must be >= 0.
struct Value {
  Dt dt = Dt::Real;
  bool is_string = false;
  std::string str;
  Rat num;

  static Value string(std::string s);
  static Value number(Dt dt, Rat r);  // throws ValueError on a type mismatch

  bool operator==(const Value& o) const;
  bool operator!=(const Value& o) const { return !(*this == o); }
  // Total order used for deterministic containers; numeric < string per kind.
  bool operator<(const Value& o) const;

  std::string to_text() const;  // strings quoted, numbers exact
};

}  // namespace dkbv

#endif
