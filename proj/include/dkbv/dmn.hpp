#ifndef DKBV_DMN_HPP
#define DKBV_DMN_HPP

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "dkbv/sfeel.hpp"

namespace dkbv {

struct Rule {
  std::map<std::string, SfeelCondition> if_entries;   // input attribute -> condition
  std::map<std::string, Value> then_entries;          // output attribute -> value
};

enum class HitPolicy { Unique, Any, Priority };
const char* hit_policy_text(HitPolicy h);

struct DecisionTable {
  std::string name;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::map<std::string, Dt> atype;                    // inputs and outputs
  std::map<std::string, SfeelCondition> infacet;      // per input
  std::map<std::string, std::vector<Value>> orange;   // per output, priority order
  std::map<std::string, Value> odef;                  // partial, per output
  std::vector<Rule> rules;
  HitPolicy hit = HitPolicy::Unique;
};

// Total order over rule indices respecting output priority (orange tuple
// order lexicographically over outputs in declared order, textual tie-break).
using RuleOrder = std::vector<std::size_t>;

struct InputDatum {
  std::string name;
  Dt dt = Dt::Real;
  SfeelCondition facet;  // Any when unconstrained
};

// Flow source: either an input datum or an output attribute of a table.
struct FlowSource {
  bool from_table = false;
  std::string input_datum;              // when !from_table
  std::string table, attribute;         // when from_table
  bool operator==(const FlowSource& o) const {
    return from_table == o.from_table && input_datum == o.input_datum && table == o.table &&
           attribute == o.attribute;
  }
};

struct Flow {
  FlowSource source;
  std::string target_table, target_attribute;
};

struct Drg {
  std::vector<InputDatum> inputs;
  std::vector<DecisionTable> tables;
  std::vector<std::string> out_tables;     // subset of table names
  std::vector<std::string> bkms;           // opaque names
  std::vector<Flow> flows;
};

std::vector<std::string> validate_table(const DecisionTable& t);
RuleOrder rule_order(const DecisionTable& t);
std::vector<std::string> validate_drg(const Drg& g);

// Free inputs: input data plus table input attributes with no incoming flow.
struct FreeInput {
  bool is_datum = false;
  std::string datum;
  std::string table, attribute;
  bool operator<(const FreeInput& o) const {
    return std::tie(is_datum, datum, table, attribute) <
           std::tie(o.is_datum, o.datum, o.table, o.attribute);
  }
};
std::set<FreeInput> free_inputs(const Drg& g);

struct BoundAttr {
  std::string table, attribute;
  bool is_output = false;
  bool operator<(const BoundAttr& o) const {
    return std::tie(table, attribute) < std::tie(o.table, o.attribute);
  }
};
std::set<BoundAttr> bound_attrs(const Drg& g);

// Topological order of tables under the derived requirement edges
// (deterministic: declaration order among independent tables).
std::vector<const DecisionTable*> topo_order(const Drg& g);

const DecisionTable* find_table(const Drg& g, const std::string& name);

// Complete-information execution oracle (test aid): evaluates tables in
// topological order, first matching rule under rule_order, defaults when no
// rule fires; flows copy values. Missing entries mean "undefined".
struct ExecResult {
  std::map<std::pair<std::string, std::string>, Value> outputs;  // (table, attr) -> value
};
struct DmnError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
ExecResult execute(const Drg& g, const std::map<FreeInput, Value>& assignment);

// Trivial single-table DRG: input data mirroring the table's input attributes,
// one flow per input, table marked as output.
Drg trivial_drg(const DecisionTable& t);

}  // namespace dkbv

#endif
