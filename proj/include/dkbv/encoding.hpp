#ifndef DKBV_ENCODING_HPP
#define DKBV_ENCODING_HPP

#include "dkbv/dl.hpp"
#include "dkbv/dmn.hpp"

namespace dkbv {

// A decision knowledge base: background ontology + DRG glued by a bridge
// concept. S-FEEL conditions are stored with `today` already resolved; the
// constant is kept for reporting. Named concept templates feed the
// determinability task.
struct Dkb {
  DlSignature sig;  // background signature
  std::vector<TBoxAxiom> background;
  Drg drg;
  std::string bridge;
  std::vector<AboxFact> abox;
  Rat today = 0;
  std::map<std::string, ConceptPtr> templates;
};

std::vector<std::string> validate_dkb(const Dkb& d);

// "Table.attr"; unambiguous because user names may not contain '.'.
std::string mangled(const std::string& table, const std::string& attr);

// Guard concept ρ(If_r): conjunction of feature restrictions over the rule's
// non-"-" input entries.
ConceptPtr rule_guard(const DecisionTable& m, std::size_t r);

std::vector<TBoxAxiom> encode_attribute(const DecisionTable& m, const std::string& a,
                                        const std::string& bridge);
// Facet axiom for an input attribute; nothing when the facet is "-".
std::vector<TBoxAxiom> encode_facet(const DecisionTable& m, const std::string& a);
// Output range as a value-enumeration facet on the output feature.
TBoxAxiom encode_orange(const DecisionTable& m, const std::string& b);
// Rule axiom with prioritization conjuncts (emitted for every hit policy).
TBoxAxiom encode_rule(const DecisionTable& m, std::size_t r, const RuleOrder& order);
// Default-generation axiom; empty when no output has a default.
std::vector<TBoxAxiom> encode_defaults(const DecisionTable& m);
// Feature inclusions for one flow: source into target and its converse, so a
// fed attribute carries exactly the source value (and definedness).
std::vector<TBoxAxiom> encode_flow(const Flow& f);
// A defined non-defaulted output must stem from some rule firing.
std::vector<TBoxAxiom> encode_provenance(const DecisionTable& m);

// Full compilation. with_ontology=false drops the background TBox (the
// signature and ABox stay).
Kb encode_dkb(const Dkb& d, bool with_ontology = true);

}  // namespace dkbv

#endif
