#include "dkbv/encoding.hpp"

namespace dkbv {

std::string mangled(const std::string& table, const std::string& attr) {
  return table + "." + attr;
}

std::vector<std::string> validate_dkb(const Dkb& d) {
  std::vector<std::string> out;
  if (!d.sig.concepts.count(d.bridge)) out.push_back("bridge concept " + d.bridge + " not in signature");
  // Free input type compatibility: a signature feature sharing a free input's
  // name must carry the same datatype.
  for (const auto& f : free_inputs(d.drg)) {
    std::string name = f.is_datum ? f.datum : mangled(f.table, f.attribute);
    Dt dt;
    if (f.is_datum) {
      dt = Dt::Real;
      for (const auto& i : d.drg.inputs)
        if (i.name == f.datum) dt = i.dt;
    } else {
      dt = find_table(d.drg, f.table)->atype.at(f.attribute);
    }
    auto it = d.sig.features.find(name);
    if (it != d.sig.features.end() && it->second != dt)
      out.push_back("free input " + name + " clashes with signature feature of different datatype");
  }
  // Uniqueness of bound attributes: no signature predicate may name one.
  for (const auto& b : bound_attrs(d.drg)) {
    std::string name = mangled(b.table, b.attribute);
    if (d.sig.features.count(name) || d.sig.concepts.count(name) || d.sig.roles.count(name))
      out.push_back("signature predicate collides with bound attribute " + name);
  }
  return out;
}

ConceptPtr rule_guard(const DecisionTable& m, std::size_t r) {
  std::vector<ConceptPtr> conj;
  for (const auto& a : m.inputs) {
    const SfeelCondition& c = m.rules[r].if_entries.at(a);
    if (sfeel_is_any(c)) continue;
    conj.push_back(c_existsf(mangled(m.name, a), sfeel_to_derived(c, m.atype.at(a))));
  }
  return c_and_all(std::move(conj));
}

namespace {
TBoxAxiom ci(ConceptPtr l, ConceptPtr r) {
  TBoxAxiom ax;
  ax.kind = TBoxAxiom::ConceptIncl;
  ax.lhs = std::move(l);
  ax.rhs = std::move(r);
  return ax;
}

ConceptPtr then_concept(const DecisionTable& m, std::size_t r) {
  std::vector<ConceptPtr> conj;
  for (const auto& b : m.outputs) {
    const Value& v = m.rules[r].then_entries.at(b);
    conj.push_back(c_existsf(mangled(m.name, b), dt_enumeration(m.atype.at(b), {v})));
  }
  return c_and_all(std::move(conj));
}
}  // namespace

std::vector<TBoxAxiom> encode_attribute(const DecisionTable& m, const std::string& a,
                                        const std::string& bridge) {
  return {ci(c_existsf(mangled(m.name, a), dt_primitive(m.atype.at(a))), c_name(bridge))};
}

std::vector<TBoxAxiom> encode_facet(const DecisionTable& m, const std::string& a) {
  const SfeelCondition& c = m.infacet.at(a);
  if (sfeel_is_any(c)) return {};
  std::string f = mangled(m.name, a);
  Dt dt = m.atype.at(a);
  return {ci(c_existsf(f, dt_primitive(dt)), c_existsf(f, sfeel_to_derived(c, dt)))};
}

TBoxAxiom encode_orange(const DecisionTable& m, const std::string& b) {
  std::string f = mangled(m.name, b);
  Dt dt = m.atype.at(b);
  return ci(c_existsf(f, dt_primitive(dt)), c_existsf(f, dt_enumeration(dt, m.orange.at(b))));
}

TBoxAxiom encode_rule(const DecisionTable& m, std::size_t r, const RuleOrder& order) {
  std::vector<ConceptPtr> lhs;
  lhs.push_back(rule_guard(m, r));
  for (std::size_t idx : order) {
    if (idx == r) break;
    lhs.push_back(c_not(rule_guard(m, idx)));
  }
  return ci(c_and_all(std::move(lhs)), then_concept(m, r));
}

std::vector<TBoxAxiom> encode_defaults(const DecisionTable& m) {
  if (m.odef.empty()) return {};
  std::vector<ConceptPtr> lhs;
  for (std::size_t r = 0; r < m.rules.size(); ++r) lhs.push_back(c_not(rule_guard(m, r)));
  std::vector<ConceptPtr> rhs;
  for (const auto& b : m.outputs)
    if (auto it = m.odef.find(b); it != m.odef.end())
      rhs.push_back(c_existsf(mangled(m.name, b), dt_enumeration(m.atype.at(b), {it->second})));
  return {ci(c_and_all(std::move(lhs)), c_and_all(std::move(rhs)))};
}

std::vector<TBoxAxiom> encode_flow(const Flow& f) {
  std::string src = f.source.from_table ? mangled(f.source.table, f.source.attribute)
                                        : f.source.input_datum;
  std::string tgt = mangled(f.target_table, f.target_attribute);
  TBoxAxiom fwd;
  fwd.kind = TBoxAxiom::FeatureIncl;
  fwd.p1 = src;
  fwd.p2 = tgt;
  TBoxAxiom bwd;
  bwd.kind = TBoxAxiom::FeatureIncl;
  bwd.p1 = tgt;
  bwd.p2 = src;
  return {fwd, bwd};
}

std::vector<TBoxAxiom> encode_provenance(const DecisionTable& m) {
  std::vector<TBoxAxiom> out;
  for (const auto& b : m.outputs) {
    if (m.odef.count(b)) continue;
    std::vector<ConceptPtr> guards;
    for (std::size_t r = 0; r < m.rules.size(); ++r) guards.push_back(rule_guard(m, r));
    out.push_back(ci(c_existsf(mangled(m.name, b), dt_primitive(m.atype.at(b))),
                     c_or_all(std::move(guards))));
  }
  return out;
}

Kb encode_dkb(const Dkb& d, bool with_ontology) {
  Kb k;
  k.sig = d.sig;
  for (const auto& i : d.drg.inputs) k.sig.features.emplace(i.name, i.dt);
  for (const auto& t : d.drg.tables)
    for (const auto& [a, dt] : t.atype) k.sig.features.emplace(mangled(t.name, a), dt);
  if (!k.sig.concepts.count(d.bridge)) k.sig.concepts.insert(d.bridge);

  auto put = [&](std::vector<TBoxAxiom> axs) {
    for (auto& ax : axs) k.tbox.push_back(std::move(ax));
  };
  if (with_ontology)
    for (const auto& ax : d.background) k.tbox.push_back(ax);

  for (const auto& i : d.drg.inputs) {
    put({ci(c_existsf(i.name, dt_primitive(i.dt)), c_name(d.bridge))});
    if (!sfeel_is_any(i.facet))
      put({ci(c_existsf(i.name, dt_primitive(i.dt)),
              c_existsf(i.name, sfeel_to_derived(i.facet, i.dt)))});
  }
  for (const auto& t : d.drg.tables) {
    for (const auto& a : t.inputs) {
      put(encode_attribute(t, a, d.bridge));
      put(encode_facet(t, a));
    }
    for (const auto& b : t.outputs) {
      put(encode_attribute(t, b, d.bridge));
      put({encode_orange(t, b)});
    }
    auto order = rule_order(t);
    for (std::size_t r = 0; r < t.rules.size(); ++r) put({encode_rule(t, r, order)});
    put(encode_defaults(t));
    put(encode_provenance(t));
  }
  for (const auto& f : d.drg.flows) put(encode_flow(f));
  k.abox = d.abox;
  return k;
}

}  // namespace dkbv
