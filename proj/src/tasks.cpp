#include "dkbv/tasks.hpp"

#include <chrono>

namespace dkbv {

const char* task_text(Task t) {
  switch (t) {
    case Task::UniqueHit: return "unique-hit";
    case Task::AnyHit: return "any-hit";
    case Task::PriorityHit: return "priority-hit";
    case Task::IoRelationship: return "io";
    case Task::OutputCoverage: return "coverage";
    case Task::Completeness: return "completeness";
    case Task::OutputDeterminability: return "determinability";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

const DecisionTable& need_table(const Dkb& d, const std::string& name) {
  const DecisionTable* t = find_table(d.drg, name);
  if (!t) throw DmnError("unknown table " + name);
  return *t;
}

std::string describe_values(const std::map<std::string, Value>& vals) {
  std::string s;
  for (const auto& [f, v] : vals) {
    if (!s.empty()) s += ", ";
    s += f + "=" + v.to_text();
  }
  return s;
}

// Common skeleton for the pairwise rule tasks: visit pairs (r1 higher than
// r2 in the priority order), query the reasoner, collect witnesses.
template <class Query>
TaskVerdict pairwise_task(Task task, const Dkb& d, const std::string& table,
                          const TaskOptions& o, const Query& query) {
  auto t0 = Clock::now();
  const DecisionTable& t = need_table(d, table);
  Kb kb = encode_dkb(d, o.with_ontology);
  RuleOrder order = rule_order(t);
  TaskVerdict v;
  v.task = task;
  v.holds = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      query(kb, t, order[i], order[j], v);
  v.stats.elapsed_ms = ms_since(t0);
  return v;
}

}  // namespace

TaskVerdict check_unique_hit(const Dkb& d, const std::string& table, const TaskOptions& o) {
  return pairwise_task(
      Task::UniqueHit, d, table, o,
      [&](const Kb& kb, const DecisionTable& t, std::size_t r1, std::size_t r2,
          TaskVerdict& v) {
        auto r = concept_satisfiable(kb, c_and(rule_guard(t, r1), rule_guard(t, r2)),
                                     o.reasoner);
        ++v.stats.reasoner_calls;
        if (!r.sat) return;
        v.holds = false;
        TaskWitness w;
        w.table = t.name;
        w.rule1 = r1;
        w.rule2 = r2;
        w.values = r.objects.at("query").features;
        w.description = "rules " + std::to_string(r1 + 1) + " and " + std::to_string(r2 + 1) +
                        " overlap on " + describe_values(w.values);
        v.witnesses.push_back(std::move(w));
      });
}

TaskVerdict check_any_hit(const Dkb& d, const std::string& table, const TaskOptions& o) {
  return pairwise_task(
      Task::AnyHit, d, table, o,
      [&](const Kb& kb, const DecisionTable& t, std::size_t r1, std::size_t r2,
          TaskVerdict& v) {
        if (t.rules[r1].then_entries == t.rules[r2].then_entries) return;
        auto r = concept_satisfiable(kb, c_and(rule_guard(t, r1), rule_guard(t, r2)),
                                     o.reasoner);
        ++v.stats.reasoner_calls;
        if (!r.sat) return;
        v.holds = false;
        TaskWitness w;
        w.table = t.name;
        w.rule1 = r1;
        w.rule2 = r2;
        w.values = r.objects.at("query").features;
        w.description = "rules " + std::to_string(r1 + 1) + " and " + std::to_string(r2 + 1) +
                        " overlap with different outputs on " + describe_values(w.values);
        v.witnesses.push_back(std::move(w));
      });
}

TaskVerdict check_priority_hit(const Dkb& d, const std::string& table, const TaskOptions& o) {
  return pairwise_task(
      Task::PriorityHit, d, table, o,
      [&](const Kb& kb, const DecisionTable& t, std::size_t r1, std::size_t r2,
          TaskVerdict& v) {
        for (const auto& w : v.witnesses)
          if (w.rule2 == r2) return;  // already masked
        auto r = concept_satisfiable(kb, c_and(c_not(rule_guard(t, r1)), rule_guard(t, r2)),
                                     o.reasoner);
        ++v.stats.reasoner_calls;
        if (r.sat) return;  // r2 can fire below r1
        v.holds = false;
        TaskWitness w;
        w.table = t.name;
        w.rule1 = r1;
        w.rule2 = r2;
        w.description = "rule " + std::to_string(r2 + 1) + " is masked by rule " +
                        std::to_string(r1 + 1);
        v.witnesses.push_back(std::move(w));
      });
}

TaskVerdict check_io(const Dkb& d, const std::string& object, const std::string& table,
                     const std::string& attr, const Value& v, const TaskOptions& o) {
  auto t0 = Clock::now();
  need_table(d, table);
  Kb kb = encode_dkb(d, o.with_ontology);
  bool bridged = false;
  for (const auto& f : kb.abox)
    if (f.kind == AboxFact::ConceptFact && f.pred == d.bridge && f.o1 == object)
      bridged = true;
  if (!bridged) {
    AboxFact f;
    f.kind = AboxFact::ConceptFact;
    f.pred = d.bridge;
    f.o1 = object;
    kb.abox.push_back(f);
  }
  AboxFact q;
  q.kind = AboxFact::FeatureFact;
  q.pred = mangled(table, attr);
  q.o1 = object;
  q.v = v;
  TaskVerdict out;
  out.task = Task::IoRelationship;
  out.holds = instance_check(kb, q, o.reasoner);
  out.stats.reasoner_calls = 1;
  out.stats.elapsed_ms = ms_since(t0);
  return out;
}

TaskVerdict check_coverage(const Dkb& d, const std::string& table, const std::string& attr,
                           const Value& v, const TaskOptions& o) {
  auto t0 = Clock::now();
  const DecisionTable& t = need_table(d, table);
  Kb kb = encode_dkb(d, o.with_ontology);
  auto r = concept_satisfiable(
      kb, c_existsf(mangled(table, attr), dt_enumeration(t.atype.at(attr), {v})), o.reasoner);
  TaskVerdict out;
  out.task = Task::OutputCoverage;
  out.holds = r.sat;
  if (r.sat) {
    TaskWitness w;
    w.table = table;
    w.attribute = attr;
    w.values = r.objects.at("query").features;
    w.description = "covered by " + describe_values(w.values);
    out.witnesses.push_back(std::move(w));
  }
  out.stats.reasoner_calls = 1;
  out.stats.elapsed_ms = ms_since(t0);
  return out;
}

namespace {
TaskVerdict determinability_core(Task task, const Dkb& d, const ConceptPtr& tmpl,
                                 const TaskOptions& o) {
  auto t0 = Clock::now();
  Kb kb = encode_dkb(d, o.with_ontology);
  TaskVerdict v;
  v.task = task;
  v.holds = true;
  for (const auto& name : d.drg.out_tables) {
    const DecisionTable& t = need_table(d, name);
    for (const auto& b : t.outputs) {
      auto r = concept_satisfiable(kb, c_and(tmpl, c_undef(mangled(name, b))), o.reasoner);
      ++v.stats.reasoner_calls;
      if (!r.sat) continue;
      v.holds = false;
      TaskWitness w;
      w.table = name;
      w.attribute = b;
      w.values = r.objects.at("query").features;
      w.description = mangled(name, b) + " stays undefined for " + describe_values(w.values);
      v.witnesses.push_back(std::move(w));
    }
  }
  v.stats.elapsed_ms = ms_since(t0);
  return v;
}
}  // namespace

TaskVerdict check_completeness(const Dkb& d, const TaskOptions& o) {
  return determinability_core(Task::Completeness, d, all_inputs_template(d), o);
}

TaskVerdict check_determinability(const Dkb& d, const ConceptPtr& tmpl, const TaskOptions& o) {
  return determinability_core(Task::OutputDeterminability, d, tmpl, o);
}

ConceptPtr all_inputs_template(const Dkb& d) {
  std::vector<ConceptPtr> conj;
  for (const auto& f : free_inputs(d.drg)) {
    std::string name = f.is_datum ? f.datum : mangled(f.table, f.attribute);
    Dt dt = Dt::Real;
    if (f.is_datum) {
      for (const auto& i : d.drg.inputs)
        if (i.name == f.datum) dt = i.dt;
    } else {
      dt = find_table(d.drg, f.table)->atype.at(f.attribute);
    }
    conj.push_back(c_existsf(name, dt_primitive(dt)));
  }
  return c_and_all(std::move(conj));
}

Dkb table_dkb(const DecisionTable& t) {
  Dkb d;
  d.drg = trivial_drg(t);
  d.bridge = "Case";
  d.sig.concepts.insert("Case");
  return d;
}

}  // namespace dkbv
