#ifndef DKBV_SFEEL_HPP
#define DKBV_SFEEL_HPP

#include <memory>
#include <string>
#include <vector>

#include "dkbv/datatypes.hpp"

namespace dkbv {

struct SfeelError : std::runtime_error {
  std::size_t offset;
  SfeelError(std::string msg, std::size_t off)
      : std::runtime_error(std::move(msg)), offset(off) {}
};

// S-FEEL condition AST: "-", v, not(v), <v <=v >v >=v, intervals, and
// comma-separated disjunction (flat, never nested).
struct SfeelCondition {
  enum Kind { Any, Eq, NotEq, Cmp, Interval, Or };
  Kind kind = Any;
  Value value;                  // Eq/NotEq/Cmp
  Facet::Op cmp = Facet::Lt;    // Cmp (never Eq)
  bool lower_open = false, upper_open = false;  // Interval
  Value lo, hi;                 // Interval
  std::vector<SfeelCondition> disjuncts;  // Or, length >= 2

  bool operator==(const SfeelCondition& o) const;
};

// today is substituted during parsing wherever the `today` literal occurs.
SfeelCondition sfeel_parse(const std::string& text, Dt datatype, const Rat& today = Rat(0));
std::string sfeel_print(const SfeelCondition& c);
DerivedPtr sfeel_to_derived(const SfeelCondition& c, Dt datatype);
bool sfeel_matches(const SfeelCondition& c, const Value& v);
bool sfeel_is_any(const SfeelCondition& c);

}  // namespace dkbv

#endif
