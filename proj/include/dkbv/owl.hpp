#ifndef DKBV_OWL_HPP
#define DKBV_OWL_HPP

#include "dkbv/encoding.hpp"

namespace dkbv {

// OWL 2 functional-style serialization of an encoded knowledge base.
// Concepts become classes, roles object properties, features data properties
// (each with a FunctionalDataProperty axiom). Derived datatypes map to
// DatatypeRestriction / DataOneOf / DataUnionOf etc. with the fixed xsd
// mapping string/nonNegativeInteger/integer/decimal; non-terminating
// rationals are rounded to 12 fractional digits (xsd:decimal cannot carry
// them exactly).
std::string export_owl_kb(const Kb& k);

// Convenience: encode the DKB, then serialize.
std::string export_owl(const Dkb& d, bool with_ontology = true);

// Structural checker for the functional syntax we emit: balanced document
// shape, known construct names with plausible argument shapes, well-formed
// literals and prefixed names. Empty result means the document passed.
std::vector<std::string> owl_check(const std::string& text);

}  // namespace dkbv

#endif
