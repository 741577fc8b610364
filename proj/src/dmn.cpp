#include "dkbv/dmn.hpp"

#include <algorithm>
#include <functional>

namespace dkbv {

const char* hit_policy_text(HitPolicy h) {
  switch (h) {
    case HitPolicy::Unique: return "u";
    case HitPolicy::Any: return "a";
    case HitPolicy::Priority: return "p";
  }
  return "?";
}

namespace {
bool value_typed(const Value& v, Dt d) {
  return d == Dt::String ? v.is_string : (!v.is_string && v.dt == d);
}

bool condition_typed(const SfeelCondition& c, Dt d) {
  switch (c.kind) {
    case SfeelCondition::Any: return true;
    case SfeelCondition::Eq:
    case SfeelCondition::NotEq: return value_typed(c.value, d);
    case SfeelCondition::Cmp: return d != Dt::String && value_typed(c.value, d);
    case SfeelCondition::Interval:
      return d != Dt::String && value_typed(c.lo, d) && value_typed(c.hi, d);
    case SfeelCondition::Or:
      return std::all_of(c.disjuncts.begin(), c.disjuncts.end(),
                         [&](const SfeelCondition& p) { return condition_typed(p, d); });
  }
  return false;
}
}  // namespace

std::vector<std::string> validate_table(const DecisionTable& t) {
  std::vector<std::string> errs;
  auto err = [&](std::string m) { errs.push_back(std::move(m)); };
  if (t.name.empty()) err("table has no name");
  if (t.name.find('.') != std::string::npos) err("table name contains '.'");
  std::set<std::string> in(t.inputs.begin(), t.inputs.end());
  std::set<std::string> out(t.outputs.begin(), t.outputs.end());
  if (in.size() != t.inputs.size()) err("duplicate input attribute in " + t.name);
  if (out.size() != t.outputs.size()) err("duplicate output attribute in " + t.name);
  for (const auto& a : t.inputs)
    if (out.count(a)) err("attribute " + a + " is both input and output");
  for (const auto& a : t.inputs) {
    if (a.find('.') != std::string::npos) err("attribute name contains '.': " + a);
    if (!t.atype.count(a)) err("missing type for input " + a);
    auto f = t.infacet.find(a);
    if (f == t.infacet.end())
      err("missing facet for input " + a);
    else if (t.atype.count(a) && !condition_typed(f->second, t.atype.at(a)))
      err("facet for " + a + " is ill-typed");
  }
  for (const auto& b : t.outputs) {
    if (b.find('.') != std::string::npos) err("attribute name contains '.': " + b);
    if (!t.atype.count(b)) err("missing type for output " + b);
    auto r = t.orange.find(b);
    if (r == t.orange.end() || r->second.empty()) {
      err("missing output range for " + b);
    } else if (t.atype.count(b)) {
      for (const auto& v : r->second)
        if (!value_typed(v, t.atype.at(b))) err("output range value ill-typed for " + b);
    }
    auto d = t.odef.find(b);
    if (d != t.odef.end()) {
      const auto& range = t.orange.count(b) ? t.orange.at(b) : std::vector<Value>{};
      if (std::find(range.begin(), range.end(), d->second) == range.end())
        err("default for " + b + " outside its output range");
    }
  }
  for (std::size_t i = 0; i < t.rules.size(); ++i) {
    const Rule& r = t.rules[i];
    std::string rn = "rule " + std::to_string(i + 1);
    for (const auto& a : t.inputs) {
      auto it = r.if_entries.find(a);
      if (it == r.if_entries.end())
        err(rn + " missing entry for " + a);
      else if (t.atype.count(a) && !condition_typed(it->second, t.atype.at(a)))
        err(rn + " entry for " + a + " is ill-typed");
    }
    for (const auto& [a, c] : r.if_entries)
      if (!in.count(a)) err(rn + " has entry for unknown input " + a);
    for (const auto& b : t.outputs) {
      auto it = r.then_entries.find(b);
      if (it == r.then_entries.end()) {
        err(rn + " missing output entry for " + b);
      } else if (t.orange.count(b)) {
        const auto& range = t.orange.at(b);
        if (std::find(range.begin(), range.end(), it->second) == range.end())
          err(rn + " output for " + b + " outside its output range");
      }
    }
    for (const auto& [b, v] : r.then_entries)
      if (!out.count(b)) err(rn + " has entry for unknown output " + b);
  }
  return errs;
}

RuleOrder rule_order(const DecisionTable& t) {
  RuleOrder order(t.rules.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto key = [&](std::size_t idx) {
    std::vector<std::size_t> k;
    for (const auto& b : t.outputs) {
      const auto& range = t.orange.at(b);
      const auto& v = t.rules[idx].then_entries.at(b);
      k.push_back(std::find(range.begin(), range.end(), v) - range.begin());
    }
    k.push_back(idx);
    return k;
  };
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  return order;
}

const DecisionTable* find_table(const Drg& g, const std::string& name) {
  for (const auto& t : g.tables)
    if (t.name == name) return &t;
  return nullptr;
}

namespace {
std::optional<Dt> source_dt(const Drg& g, const FlowSource& s) {
  if (!s.from_table) {
    for (const auto& d : g.inputs)
      if (d.name == s.input_datum) return d.dt;
    return std::nullopt;
  }
  const DecisionTable* t = find_table(g, s.table);
  if (!t) return std::nullopt;
  if (std::find(t->outputs.begin(), t->outputs.end(), s.attribute) == t->outputs.end())
    return std::nullopt;
  return t->atype.at(s.attribute);
}

std::string flow_source_text(const FlowSource& s) {
  return s.from_table ? s.table + "." + s.attribute : s.input_datum;
}

// Table-to-table requirement edges derived from flows.
std::map<std::string, std::set<std::string>> table_deps(const Drg& g) {
  std::map<std::string, std::set<std::string>> deps;  // table -> prerequisite tables
  for (const auto& t : g.tables) deps[t.name];
  for (const auto& f : g.flows)
    if (f.source.from_table) deps[f.target_table].insert(f.source.table);
  return deps;
}
}  // namespace

std::vector<std::string> validate_drg(const Drg& g) {
  std::vector<std::string> errs;
  auto err = [&](std::string m) { errs.push_back(std::move(m)); };
  std::set<std::string> dnames, tnames;
  for (const auto& d : g.inputs) {
    if (!dnames.insert(d.name).second) err("duplicate input datum " + d.name);
    if (d.name.find('.') != std::string::npos) err("input datum name contains '.': " + d.name);
    if (!condition_typed(d.facet, d.dt)) err("facet for input datum " + d.name + " is ill-typed");
  }
  for (const auto& t : g.tables) {
    if (!tnames.insert(t.name).second) err("duplicate table name " + t.name);
    for (auto& e : validate_table(t)) err(t.name + ": " + e);
  }
  for (const auto& n : g.out_tables)
    if (!tnames.count(n)) err("unknown output table " + n);
  std::set<std::pair<std::string, std::string>> fed;
  for (const auto& f : g.flows) {
    const DecisionTable* t = find_table(g, f.target_table);
    if (!t) {
      err("flow into unknown table " + f.target_table);
      continue;
    }
    if (std::find(t->inputs.begin(), t->inputs.end(), f.target_attribute) == t->inputs.end()) {
      err("flow into unknown input attribute " + f.target_table + "." + f.target_attribute);
      continue;
    }
    auto sdt = source_dt(g, f.source);
    if (!sdt) {
      err("flow from unknown source " + flow_source_text(f.source));
      continue;
    }
    if (*sdt != t->atype.at(f.target_attribute))
      err("flow " + flow_source_text(f.source) + " => " + f.target_table + "." +
          f.target_attribute + " connects different datatypes");
    if (!fed.insert({f.target_table, f.target_attribute}).second)
      err("input attribute " + f.target_table + "." + f.target_attribute +
          " fed by more than one flow");
  }
  // Acyclicity of the table requirement graph.
  auto deps = table_deps(g);
  std::map<std::string, int> state;  // 0 unseen, 1 active, 2 done
  std::vector<std::string> stack;
  std::function<bool(const std::string&)> dfs = [&](const std::string& n) -> bool {
    if (state[n] == 1) return false;
    if (state[n] == 2) return true;
    state[n] = 1;
    for (const auto& m : deps[n])
      if (!dfs(m)) return false;
    state[n] = 2;
    return true;
  };
  for (const auto& t : g.tables)
    if (!dfs(t.name)) {
      err("table requirement graph has a cycle through " + t.name);
      break;
    }
  return errs;
}

std::set<FreeInput> free_inputs(const Drg& g) {
  std::set<FreeInput> out;
  for (const auto& d : g.inputs) {
    FreeInput f;
    f.is_datum = true;
    f.datum = d.name;
    out.insert(f);
  }
  std::set<std::pair<std::string, std::string>> fed;
  for (const auto& f : g.flows) fed.insert({f.target_table, f.target_attribute});
  for (const auto& t : g.tables)
    for (const auto& a : t.inputs)
      if (!fed.count({t.name, a})) {
        FreeInput f;
        f.table = t.name;
        f.attribute = a;
        out.insert(f);
      }
  return out;
}

std::set<BoundAttr> bound_attrs(const Drg& g) {
  std::set<BoundAttr> out;
  std::set<std::pair<std::string, std::string>> fed;
  for (const auto& f : g.flows) fed.insert({f.target_table, f.target_attribute});
  for (const auto& t : g.tables) {
    for (const auto& a : t.inputs)
      if (fed.count({t.name, a})) out.insert({t.name, a, false});
    for (const auto& b : t.outputs) out.insert({t.name, b, true});
  }
  return out;
}

std::vector<const DecisionTable*> topo_order(const Drg& g) {
  auto deps = table_deps(g);
  std::vector<const DecisionTable*> out;
  std::set<std::string> done;
  bool progress = true;
  while (out.size() < g.tables.size() && progress) {
    progress = false;
    for (const auto& t : g.tables) {
      if (done.count(t.name)) continue;
      bool ready = std::all_of(deps[t.name].begin(), deps[t.name].end(),
                               [&](const std::string& m) { return done.count(m) > 0; });
      if (ready) {
        out.push_back(&t);
        done.insert(t.name);
        progress = true;
      }
    }
  }
  return out;
}

ExecResult execute(const Drg& g, const std::map<FreeInput, Value>& assignment) {
  auto free = free_inputs(g);
  for (const auto& f : free)
    if (!assignment.count(f))
      throw DmnError("execute: assignment misses free input " +
                     (f.is_datum ? f.datum : f.table + "." + f.attribute));
  std::map<std::string, Value> datum_values;
  for (const auto& d : g.inputs) {
    FreeInput f;
    f.is_datum = true;
    f.datum = d.name;
    const Value& v = assignment.at(f);
    if (!sfeel_matches(d.facet, v))
      throw DmnError("execute: value for " + d.name + " violates its facet");
    datum_values.emplace(d.name, v);
  }
  std::map<std::pair<std::string, std::string>, FlowSource> fed;
  for (const auto& f : g.flows) fed.emplace(std::make_pair(f.target_table, f.target_attribute), f.source);

  ExecResult res;
  for (const DecisionTable* t : topo_order(g)) {
    std::map<std::string, Value> in_values;  // defined inputs only
    for (const auto& a : t->inputs) {
      auto it = fed.find({t->name, a});
      std::optional<Value> v;
      if (it == fed.end()) {
        FreeInput f;
        f.table = t->name;
        f.attribute = a;
        v = assignment.at(f);
      } else if (!it->second.from_table) {
        v = datum_values.at(it->second.input_datum);
      } else {
        auto ov = res.outputs.find({it->second.table, it->second.attribute});
        if (ov != res.outputs.end()) v = ov->second;
      }
      if (v) {
        if (!sfeel_matches(t->infacet.at(a), *v))
          throw DmnError("execute: value for " + t->name + "." + a + " violates its facet");
        in_values.emplace(a, *v);
      }
    }
    auto order = rule_order(*t);
    const Rule* hit = nullptr;
    for (std::size_t idx : order) {
      const Rule& r = t->rules[idx];
      bool match = true;
      for (const auto& a : t->inputs) {
        auto v = in_values.find(a);
        bool ok = v == in_values.end() ? sfeel_is_any(r.if_entries.at(a))
                                       : sfeel_matches(r.if_entries.at(a), v->second);
        if (!ok) {
          match = false;
          break;
        }
      }
      if (match) {
        hit = &r;
        break;
      }
    }
    for (const auto& b : t->outputs) {
      if (hit) {
        res.outputs.emplace(std::make_pair(t->name, b), hit->then_entries.at(b));
      } else if (auto d = t->odef.find(b); d != t->odef.end()) {
        res.outputs.emplace(std::make_pair(t->name, b), d->second);
      }
    }
  }
  return res;
}

Drg trivial_drg(const DecisionTable& t) {
  Drg g;
  g.tables.push_back(t);
  g.out_tables.push_back(t.name);
  for (const auto& a : t.inputs) {
    InputDatum d;
    d.name = a;
    d.dt = t.atype.at(a);
    d.facet.kind = SfeelCondition::Any;
    g.inputs.push_back(d);
    Flow f;
    f.source.from_table = false;
    f.source.input_datum = a;
    f.target_table = t.name;
    f.target_attribute = a;
    g.flows.push_back(f);
  }
  return g;
}

}  // namespace dkbv
