#ifndef DKBV_TASKS_HPP
#define DKBV_TASKS_HPP

#include "dkbv/encoding.hpp"
#include "dkbv/reasoner.hpp"

namespace dkbv {

enum class Task {
  UniqueHit,
  AnyHit,
  PriorityHit,
  IoRelationship,
  OutputCoverage,
  Completeness,
  OutputDeterminability,
};
const char* task_text(Task t);

// One reason a verdict fails (or, for coverage, the witness that it holds):
// an overlapping rule pair, a masked rule, an output attribute that can stay
// undefined, together with witness feature values when the reasoner found a
// model.
struct TaskWitness {
  std::string table;
  std::string attribute;
  std::size_t rule1 = 0, rule2 = 0;
  std::map<std::string, Value> values;
  std::string description;
};

struct TaskStats {
  int reasoner_calls = 0;
  double elapsed_ms = 0;
};

struct TaskVerdict {
  Task task = Task::UniqueHit;
  bool holds = false;
  std::vector<TaskWitness> witnesses;
  TaskStats stats;
};

struct TaskOptions {
  bool with_ontology = true;  // false: drop the background TBox
  ReasonerOptions reasoner;
};

// Rules never overlap (pairwise guard conjunction unsatisfiable).
TaskVerdict check_unique_hit(const Dkb& d, const std::string& table, const TaskOptions& o = {});
// Overlapping rules must agree on all outputs.
TaskVerdict check_any_hit(const Dkb& d, const std::string& table, const TaskOptions& o = {});
// No rule is masked by a single higher-priority rule.
TaskVerdict check_priority_hit(const Dkb& d, const std::string& table, const TaskOptions& o = {});
// Does the DKB entail output value v for attribute attr of table at object?
TaskVerdict check_io(const Dkb& d, const std::string& object, const std::string& table,
                     const std::string& attr, const Value& v, const TaskOptions& o = {});
// Can the DRG ever output value v for attribute attr of table?
TaskVerdict check_coverage(const Dkb& d, const std::string& table, const std::string& attr,
                           const Value& v, const TaskOptions& o = {});
// Every assignment of all free inputs yields every output of every out-table.
TaskVerdict check_completeness(const Dkb& d, const TaskOptions& o = {});
// Template instances always get all outputs of all out-tables.
TaskVerdict check_determinability(const Dkb& d, const ConceptPtr& tmpl, const TaskOptions& o = {});

// Conjunction of definedness of every free input; determinability with this
// template coincides with completeness.
ConceptPtr all_inputs_template(const Dkb& d);

// Wrap a bare table into a DKB over the trivial DRG (no background ontology).
Dkb table_dkb(const DecisionTable& t);

}  // namespace dkbv

#endif
