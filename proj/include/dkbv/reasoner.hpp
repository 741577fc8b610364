#ifndef DKBV_REASONER_HPP
#define DKBV_REASONER_HPP

#include "dkbv/dl.hpp"

namespace dkbv {

// Raised when a query exceeds configured resource bounds.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ReasonerOptions {
  std::size_t closure_limit = 4096;  // max closure concepts per query
};

// Witness data for one named element of a satisfying model: which concept
// names hold and the chosen value of every defined feature.
struct ObjectModel {
  std::map<std::string, bool> concepts;
  std::map<std::string, Value> features;
};

struct KbResult {
  bool sat = false;
  std::map<std::string, ObjectModel> objects;
};

KbResult kb_satisfiable(const Kb& k, const ReasonerOptions& opt = {});

// Satisfiability of c w.r.t. k (some model of k with a c-instance). The
// witness element is reported under the name "query".
KbResult concept_satisfiable(const Kb& k, const ConceptPtr& c, const ReasonerOptions& opt = {});

// Entailment of a single ABox fact, by reduction to unsatisfiability with a
// fresh complemented predicate.
bool instance_check(const Kb& k, const AboxFact& fact, const ReasonerOptions& opt = {});

// Independent model verifier used by tests and the witness path: checks that
// the reported object models violate no ABox fact and no feature constraint
// they claim to satisfy.
std::vector<std::string> verify_objects(const Kb& k, const KbResult& r);

}  // namespace dkbv

#endif
