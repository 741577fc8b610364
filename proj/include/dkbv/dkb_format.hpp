#ifndef DKBV_DKB_FORMAT_HPP
#define DKBV_DKB_FORMAT_HPP

#include "dkbv/encoding.hpp"

namespace dkbv {

// Parse failures carry "line N: ..." in the message.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Concept and derived-datatype expressions in the exact syntax print_concept
// and print_derived emit (also used for --template on the command line).
ConceptPtr parse_concept_text(const std::string& text);
DerivedPtr parse_derived_text(const std::string& text);

// The DKB text format: UTF-8, '#' line comments, S-FEEL entries between
// backticks. parse_dkb validates the result and throws FormatError on any
// syntax, typing, or structural violation.
Dkb parse_dkb(const std::string& text);
std::string emit_dkb(const Dkb& d);

}  // namespace dkbv

#endif
