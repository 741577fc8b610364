#ifndef DKBV_DL_HPP
#define DKBV_DL_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "dkbv/datatypes.hpp"

namespace dkbv {

struct DlError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Concept;
using ConceptPtr = std::shared_ptr<const Concept>;

// ALCH(D) concept AST. ExistsF carries the feature name and a derived
// datatype over that feature's primitive datatype ("exists F" with an
// unconstrained range is ExistsF(F, D_F)).
struct Concept {
  enum Kind { Top, Bot, Name, Not, And, Or, Exists, Forall, ExistsF, Undef };
  Kind kind = Top;
  std::string name;   // Name: concept name; Exists/Forall: role; ExistsF/Undef: feature
  ConceptPtr a, b;    // Not uses a; And/Or both; Exists/Forall use a
  DerivedPtr dtexpr;  // ExistsF
};

ConceptPtr c_top();
ConceptPtr c_bot();
ConceptPtr c_name(std::string n);
ConceptPtr c_not(ConceptPtr c);
ConceptPtr c_and(ConceptPtr a, ConceptPtr b);
ConceptPtr c_or(ConceptPtr a, ConceptPtr b);
ConceptPtr c_exists(std::string role, ConceptPtr c);
ConceptPtr c_forall(std::string role, ConceptPtr c);
ConceptPtr c_existsf(std::string feature, DerivedPtr e);
ConceptPtr c_undef(std::string feature);
// Right-fold of a non-empty list (n-ary surface syntax).
ConceptPtr c_and_all(std::vector<ConceptPtr> cs);
ConceptPtr c_or_all(std::vector<ConceptPtr> cs);

std::string print_concept(const ConceptPtr& c);
bool concept_equal(const ConceptPtr& a, const ConceptPtr& b);

struct DlSignature {
  std::set<std::string> concepts;
  std::set<std::string> roles;
  std::map<std::string, Dt> features;
};

struct TBoxAxiom {
  enum Kind { ConceptIncl, RoleIncl, FeatureIncl, RoleDisj, FeatureDisj };
  Kind kind = ConceptIncl;
  ConceptPtr lhs, rhs;  // ConceptIncl
  std::string p1, p2;   // role/feature kinds
};

struct AboxFact {
  enum Kind { ConceptFact, RoleFact, FeatureFact };
  Kind kind = ConceptFact;
  std::string pred;  // concept, role, or feature name
  std::string o1, o2;
  Value v;  // FeatureFact
};

struct Kb {
  DlSignature sig;
  std::vector<TBoxAxiom> tbox;
  std::vector<AboxFact> abox;
};

std::vector<std::string> validate_kb(const Kb& k);

// Negation normal form; Not survives only on concept names. Needs feature
// datatypes to rewrite negated feature restrictions.
ConceptPtr nnf(const ConceptPtr& c, const DlSignature& sig);

// Surface "forall F.E" is sugar: Undef(F) or ExistsF(F, E).
ConceptPtr desugar_feature_forall(const std::string& feature, DerivedPtr e);

// cl(K): every TBox/ABox concept plus subconcepts. The reasoner assigns truth
// values over this set, so no syntactic negation closure is needed. Objects
// are reported separately.
struct ClosureResult {
  std::vector<ConceptPtr> concepts;
  std::vector<std::string> objects;
};
ClosureResult closure(const Kb& k);

// Gamma_D: derived datatypes of feature restrictions occurring in the TBox
// whose feature has primitive datatype D.
std::vector<DerivedPtr> gamma(const Kb& k, Dt d);

}  // namespace dkbv

#endif
