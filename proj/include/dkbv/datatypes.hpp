#ifndef DKBV_DATATYPES_HPP
#define DKBV_DATATYPES_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dkbv/value.hpp"

namespace dkbv {

// Unary comparison predicate against a constant. String facets are Eq only.
struct Facet {
  enum Op { Eq, Lt, Leq, Gt, Geq };
  Op op = Eq;
  Value bound;
};

const char* facet_op_text(Facet::Op op);

// Boolean combination of facets (the D[S] restriction language).
struct FacetFormula;
using FacetFormulaPtr = std::shared_ptr<const FacetFormula>;
struct FacetFormula {
  enum Kind { Atom, And, Or, Not };
  Kind kind = Atom;
  Facet facet;             // Atom
  FacetFormulaPtr a, b;    // And/Or both, Not uses a

  static FacetFormulaPtr atom(Facet f);
  static FacetFormulaPtr conj(FacetFormulaPtr l, FacetFormulaPtr r);
  static FacetFormulaPtr disj(FacetFormulaPtr l, FacetFormulaPtr r);
  static FacetFormulaPtr neg(FacetFormulaPtr c);
};

// A derived datatype: a set-algebra tree over one primitive datatype.
struct Derived;
using DerivedPtr = std::shared_ptr<const Derived>;
struct Derived {
  enum Kind { Primitive, Union, Intersection, Difference, Enumeration, Restriction };
  Kind kind = Primitive;
  Dt dt = Dt::Real;
  DerivedPtr a, b;            // Union/Intersection/Difference
  std::vector<Value> values;  // Enumeration
  FacetFormulaPtr facet;      // Restriction
};

DerivedPtr dt_primitive(Dt d);
DerivedPtr dt_union(DerivedPtr a, DerivedPtr b);
DerivedPtr dt_intersection(DerivedPtr a, DerivedPtr b);
DerivedPtr dt_difference(DerivedPtr a, DerivedPtr b);
DerivedPtr dt_enumeration(Dt d, std::vector<Value> vs);
DerivedPtr dt_restriction(Dt d, FacetFormulaPtr f);
// Convenience: D[op_v] with a single facet.
DerivedPtr dt_facet(Dt d, Facet::Op op, Value bound);

// Structural equality and canonical text (used by printers and round-trips).
bool derived_equal(const DerivedPtr& a, const DerivedPtr& b);
std::string print_derived(const DerivedPtr& e);

// Membership under the standard set semantics. Throws ValueError if the value's
// datatype differs from the expression's primitive datatype.
bool value_in(const DerivedPtr& e, const Value& v);

// D minus E over E's primitive datatype.
DerivedPtr complement(const DerivedPtr& e);

// Normal form for the numeric solver: an interval with excluded points.
struct ShapeBound {
  Rat at;
  bool strict = false;
};
struct NumericShape {
  std::optional<ShapeBound> lower, upper;
  std::vector<Rat> excluded;  // sorted, inside the interval
  bool integral = false;      // Natural/Integer
  bool natural = false;       // additionally >= 0
};

bool shape_empty(const NumericShape& s);
std::optional<Rat> shape_witness(const NumericShape& s);

// DNF of the intersection of numeric conjuncts; the union of the returned
// shapes denotes exactly the intersection of the inputs' value sets.
std::vector<NumericShape> normalize_numeric(const std::vector<DerivedPtr>& conj);

struct SatResult {
  bool sat = false;
  std::optional<Value> witness;
};

// D-satisfiability of a conjunction of derived datatypes (all over one
// primitive datatype; mixed conjunctions throw ValueError).
SatResult dsat(const std::vector<DerivedPtr>& conj);

// Deterministic inhabitant of E, absent iff E is empty.
std::optional<Value> witness(const DerivedPtr& e);

}  // namespace dkbv

#endif
