#ifndef DKBV_RATIONAL_HPP
#define DKBV_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace dkbv {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

struct ValueError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses "-12", "3.25", "7/2" into an exact rational. Throws ValueError on
// malformed input. Never goes through floating point.
Rat parse_rational(const std::string& text);

// Exact decimal if the denominator is of the form 2^a*5^b, else "p/q".
std::string print_rational(const Rat& r);

bool rat_is_integer(const Rat& r);
Int rat_floor(const Rat& r);
Int rat_ceil(const Rat& r);

}  // namespace dkbv

#endif
