#include "dkbv/value.hpp"

namespace dkbv {

const char* dt_name(Dt d) {
  switch (d) {
    case Dt::String: return "string";
    case Dt::Natural: return "natural";
    case Dt::Integer: return "integer";
    case Dt::Rational: return "rational";
    case Dt::Real: return "real";
  }
  return "?";
}

bool dt_numeric(Dt d) { return d != Dt::String; }
bool dt_discrete(Dt d) { return d == Dt::Natural || d == Dt::Integer; }
bool dt_dense(Dt d) { return d == Dt::Rational || d == Dt::Real; }

Value Value::string(std::string s) {
  Value v;
  v.dt = Dt::String;
  v.is_string = true;
  v.str = std::move(s);
  return v;
}

Value Value::number(Dt dt, Rat r) {
  if (!dt_numeric(dt)) throw ValueError("numeric value declared with string datatype");
  if (dt_discrete(dt) && !rat_is_integer(r))
    throw ValueError("non-integral value for " + std::string(dt_name(dt)) + ": " + print_rational(r));
  if (dt == Dt::Natural && r < 0)
    throw ValueError("negative value for natural: " + print_rational(r));
  Value v;
  v.dt = dt;
  v.is_string = false;
  v.num = std::move(r);
  return v;
}

bool Value::operator==(const Value& o) const {
  if (is_string != o.is_string) return false;
  return is_string ? str == o.str : num == o.num;
}

bool Value::operator<(const Value& o) const {
  if (is_string != o.is_string) return !is_string;
  return is_string ? str < o.str : num < o.num;
}

std::string Value::to_text() const {
  if (is_string) return "\"" + str + "\"";
  return print_rational(num);
}

}  // namespace dkbv
