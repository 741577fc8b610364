#ifndef DKBV_TESTS_ORACLES_HPP
#define DKBV_TESTS_ORACLES_HPP

#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "dkbv/datatypes.hpp"
#include "dkbv/dl.hpp"
#include "dkbv/dmn.hpp"

namespace dkbv::testing {

// Representative-point enumeration for conjunctions of unary constraints:
// all constants occurring in the conjuncts, midpoints of consecutive
// constants, one point beyond each extreme (and integer neighbours for
// discrete datatypes). Complete for unary order constraints.
std::vector<Value> representative_points(const std::vector<DerivedPtr>& conj);

// Brute-force satisfiability over the representative set.
std::optional<Value> enumerate_sat(const std::vector<DerivedPtr>& conj);

// Random derived-datatype generator for property tests.
DerivedPtr random_derived(std::mt19937& rng, Dt d, int depth);
// Random conjunction of single-facet restrictions (solver stress input).
std::vector<DerivedPtr> random_facet_conjunction(std::mt19937& rng, Dt d, int n);

// Finite interpretation over domain {0..n-1}; features are partial.
struct FiniteInterp {
  int n = 1;
  std::map<std::string, std::vector<char>> concepts;
  std::map<std::string, std::vector<std::vector<char>>> roles;  // adjacency matrix
  std::map<std::string, std::vector<std::optional<Value>>> features;
  std::map<std::string, int> objects;
};

bool eval_concept(const FiniteInterp& in, const ConceptPtr& c, int x);
bool satisfies_kb(const FiniteInterp& in, const Kb& k);

// Value pools the brute-force search draws feature values from; the random
// concept generator uses the same constants so models stay findable.
const std::vector<Value>& int_pool();
const std::vector<Value>& str_pool();

// Random concepts/KBs over a fixed small signature: concepts A,B, role r,
// features f (integer) and g (string).
DlSignature small_signature();
ConceptPtr random_concept(std::mt19937& rng, int depth);
Kb random_kb(std::mt19937& rng);
FiniteInterp random_interp(std::mt19937& rng, const DlSignature& sig, int n,
                           const std::vector<std::string>& objects);

// Model search over domains of size 1..max_n with feature values from the
// pools, capped at `budget` candidate interpretations per domain size.
// Finding a model proves satisfiability; not finding one proves nothing.
std::optional<FiniteInterp> model_search(const Kb& k, int max_n, long budget = 50000);

// Random single decision table: up to 4 numeric inputs plus optionally a
// string one, up to 8 rules, one string output with optional default.
// Constants come from small pools so the representative grids stay small.
DecisionTable random_table(std::mt19937& rng);

// Facet-respecting representative values for one input attribute: every cell
// of the partition induced by the column's conditions has a representative.
std::vector<Value> attribute_grid(const DecisionTable& t, const std::string& a);

// Brute-force task verdicts over the representative grids (complete for
// single tables without background knowledge, where all constraints are
// unary per attribute).
bool grid_unique_hit(const DecisionTable& t);
bool grid_any_hit(const DecisionTable& t);
bool grid_priority_hit(const DecisionTable& t, std::set<std::size_t>* masked = nullptr);
bool grid_complete(const DecisionTable& t);

// Random facet-respecting total input assignment for the trivial DRG.
std::map<FreeInput, Value> random_assignment(std::mt19937& rng, const DecisionTable& t);

}  // namespace dkbv::testing

#endif
