// Acceptance harness: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "support/oracles.hpp"
#include "dkbv/dkb_format.hpp"
#include "dkbv/fixtures.hpp"
#include "dkbv/owl.hpp"
#include "dkbv/tasks.hpp"

using namespace dkbv;
using namespace dkbv::testing;

namespace {

int failures = 0;

void report(int n, const char* what, bool ok) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", n, what);
  if (!ok) ++failures;
}

double seconds(auto f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Dkb clearance_only(Dkb d) {
  std::erase_if(d.drg.tables, [](const DecisionTable& t) { return t.name != "Clearance"; });
  std::erase_if(d.drg.flows, [](const Flow& f) { return f.target_table != "Clearance"; });
  d.drg.out_tables = {"Clearance"};
  return d;
}

TBoxAxiom ci(ConceptPtr l, ConceptPtr r) {
  TBoxAxiom ax;
  ax.kind = TBoxAxiom::ConceptIncl;
  ax.lhs = std::move(l);
  ax.rhs = std::move(r);
  return ax;
}

// 1. Case-study verdict matrix on the ship fixtures.
bool verdict_matrix() {
  Dkb full = ship_full();
  Dkb bare = ship_tables_only();
  TaskOptions noont;
  noont.with_ontology = false;
  bool ok = true;

  for (const char* table : {"Clearance", "Refuel"})
    for (bool with : {true, false}) {
      TaskVerdict v;
      double s = seconds([&] { v = check_unique_hit(full, table, with ? TaskOptions{} : noont); });
      ok = ok && v.holds && s < 10;
    }

  Dkb cb = clearance_only(bare);
  auto v = check_completeness(cb);
  ok = ok && !v.holds && !v.witnesses.empty();
  for (const auto& w : v.witnesses) {
    ok = ok && w.table == "Clearance" && w.attribute == "Enter";
    ok = ok && w.values.at("length").num >= Rat(320) && w.values.at("draft").num <= Rat(10);
  }
  ok = ok && check_completeness(clearance_only(full)).holds;

  Dkb rd = table_dkb(*find_table(bare.drg, "Refuel"));
  ok = ok && check_completeness(rd).holds && check_unique_hit(rd, "Refuel").holds;

  ok = ok && check_coverage(full, "Refuel", "RefuelArea", Value::string("none")).holds;
  ok = ok && check_coverage(full, "Refuel", "RefuelArea", Value::string("indoor")).holds;
  ok = ok && !check_coverage(full, "Refuel", "RefuelArea", Value::string("outdoor")).holds;
  ok = ok && !check_coverage(full, "Refuel", "RefuelArea", Value::string("outdoor"), noont).holds;

  ok = ok && check_determinability(full, full.templates.at("reachable")).holds;
  return ok;
}

// 2. Logical verdicts vs the representative-grid oracle; io vs execute.
bool oracle_equivalence() {
  std::mt19937 rng(101);
  bool ok = true;
  for (int i = 0; i < 100 && ok; ++i) {
    DecisionTable t = random_table(rng);
    Dkb d = table_dkb(t);
    ok = ok && check_unique_hit(d, "T").holds == grid_unique_hit(t);
    ok = ok && check_any_hit(d, "T").holds == grid_any_hit(t);
    ok = ok && check_priority_hit(d, "T").holds == grid_priority_hit(t);
    ok = ok && check_completeness(d).holds == grid_complete(t);

    for (int j = 0; j < 100 && ok; ++j) {
      auto asg = random_assignment(rng, t);
      if (asg.size() != t.inputs.size()) break;  // facet admits no values
      ExecResult ex = execute(d.drg, asg);
      auto out = ex.outputs.find({"T", "out"});
      Dkb d2 = d;
      for (const auto& [f, val] : asg) {
        AboxFact a;
        a.kind = AboxFact::FeatureFact;
        a.pred = f.datum;
        a.o1 = "o";
        a.v = val;
        d2.abox.push_back(a);
      }
      for (const auto& val : t.orange.at("out")) {
        bool expect = out != ex.outputs.end() && out->second == val;
        ok = ok && check_io(d2, "o", "T", "out", val).holds == expect;
      }
    }
  }
  return ok;
}

// 3. Reasoner soundness battery + hand-crafted UNSAT cases.
bool reasoner_battery() {
  std::mt19937 rng(103);
  bool ok = true;
  int found = 0;
  for (int i = 0; i < 200 && ok; ++i) {
    Kb k = random_kb(rng);
    auto r = kb_satisfiable(k);
    if (model_search(k, 2)) {
      ++found;
      ok = ok && r.sat;
    }
    if (r.sat) ok = ok && verify_objects(k, r).empty();
  }
  ok = ok && found > 50;

  Kb k;
  k.sig = small_signature();
  auto iv = [](int n) { return Value::number(Dt::Integer, Rat(n)); };
  // functionality clash
  AboxFact f1, f2;
  f1.kind = f2.kind = AboxFact::FeatureFact;
  f1.pred = f2.pred = "f";
  f1.o1 = f2.o1 = "o1";
  f1.v = iv(1);
  f2.v = iv(2);
  Kb k1 = k;
  k1.abox = {f1, f2};
  ok = ok && !kb_satisfiable(k1).sat;
  // concept inclusion clash
  Kb k2 = k;
  k2.tbox = {ci(c_name("A"), c_name("B")), ci(c_name("A"), c_not(c_name("B")))};
  AboxFact a;
  a.pred = "A";
  a.o1 = "o1";
  k2.abox = {a};
  ok = ok && !kb_satisfiable(k2).sat;
  // role disjointness clash
  Kb k3 = k;
  TBoxAxiom rd;
  rd.kind = TBoxAxiom::RoleDisj;
  rd.p1 = "r";
  rd.p2 = "s";
  k3.tbox = {rd};
  AboxFact r1, r2;
  r1.kind = r2.kind = AboxFact::RoleFact;
  r1.pred = "r";
  r2.pred = "s";
  r1.o1 = r2.o1 = "o1";
  r1.o2 = r2.o2 = "o2";
  k3.abox = {r1, r2};
  ok = ok && !kb_satisfiable(k3).sat;
  // integer gap
  ok = ok && !concept_satisfiable(k, c_and(c_existsf("f", dt_facet(Dt::Integer, Facet::Gt, iv(1))),
                                           c_existsf("f", dt_facet(Dt::Integer, Facet::Lt, iv(2)))))
                  .sat;
  return ok;
}

// 4. Datatype solver vs representative-point enumeration.
bool datatype_solver() {
  std::mt19937 rng(107);
  bool ok = true;
  for (Dt d : {Dt::String, Dt::Natural, Dt::Integer, Dt::Rational, Dt::Real})
    for (int i = 0; i < 1000 && ok; ++i) {
      auto conj = random_facet_conjunction(rng, d, 1 + (int)(rng() % 4));
      auto r = dsat(conj);
      if (r.sat) {
        for (const auto& e : conj) ok = ok && value_in(e, *r.witness);
      } else {
        ok = ok && !enumerate_sat(conj);
      }
    }
  return ok;
}

// 5. Determinability/completeness law + quadratic encoding growth.
bool structural_laws() {
  bool ok = true;
  for (const auto& name : fixture_names()) {
    Dkb d = fixture(name);
    ok = ok && check_determinability(d, all_inputs_template(d)).holds ==
                   check_completeness(d).holds;
  }
  std::mt19937 rng(109);
  for (int i = 0; i < 50 && ok; ++i) {
    Dkb d = table_dkb(random_table(rng));
    ok = ok && check_determinability(d, all_inputs_template(d)).holds ==
                   check_completeness(d).holds;
  }

  auto axiom_size = [](const Kb& k) {
    std::size_t n = 0;
    std::function<std::size_t(const ConceptPtr&)> sz = [&](const ConceptPtr& c) -> std::size_t {
      return 1 + (c->a ? sz(c->a) : 0) + (c->b ? sz(c->b) : 0);
    };
    for (const auto& ax : k.tbox)
      n += ax.kind == TBoxAxiom::ConceptIncl ? sz(ax.lhs) + sz(ax.rhs) : 2;
    return n;
  };
  auto chain = [](int rules) {
    DecisionTable t;
    t.name = "T";
    t.inputs = {"n1"};
    t.outputs = {"out"};
    t.atype["n1"] = Dt::Real;
    t.atype["out"] = Dt::String;
    t.infacet["n1"] = sfeel_parse("-", Dt::Real);
    t.orange["out"] = {Value::string("x")};
    for (int i = 1; i <= rules; ++i) {
      Rule r;
      r.if_entries["n1"] = sfeel_parse("<" + std::to_string(i), Dt::Real);
      r.then_entries["out"] = Value::string("x");
      t.rules.push_back(std::move(r));
    }
    return t;
  };
  std::vector<std::size_t> sizes;
  for (int n : {2, 4, 8, 16}) sizes.push_back(axiom_size(encode_dkb(table_dkb(chain(n)))));
  for (std::size_t i = 0; i + 1 < sizes.size(); ++i) ok = ok && sizes[i + 1] <= 4 * sizes[i];
  return ok;
}

// 6. Round-trips, OWL export, resource error path.
bool format_and_export() {
  bool ok = true;
  for (const auto& name : fixture_names()) {
    std::string text = emit_dkb(fixture(name));
    ok = ok && emit_dkb(parse_dkb(text)) == text;
  }
  std::mt19937 rng(113);
  for (int i = 0; i < 100 && ok; ++i) {
    Dkb d = table_dkb(random_table(rng));
    if (rng() % 2) d.templates["t"] = random_concept(rng, 2);
    std::string text = emit_dkb(d);
    ok = ok && emit_dkb(parse_dkb(text)) == text;
  }

  Dkb ship = ship_full();
  std::string owl = export_owl(ship);
  ok = ok && owl_check(owl).empty();
  std::size_t fdp = 0;
  for (std::size_t p = owl.find("FunctionalDataProperty("); p != std::string::npos;
       p = owl.find("FunctionalDataProperty(", p + 1))
    ++fdp;
  ok = ok && fdp == encode_dkb(ship).sig.features.size();

  // oversized synthetic KB trips the closure bound
  Kb big;
  big.sig = small_signature();
  ConceptPtr c = c_name("A");
  for (int i = 0; i < 5000; ++i)
    c = c_and(c, c_existsf("f", dt_facet(Dt::Integer, Facet::Gt, Value::number(Dt::Integer, Rat(i)))));
  big.tbox.push_back(ci(c_name("A"), c));
  bool tripped = false;
  try {
    kb_satisfiable(big);
  } catch (const ResourceError&) {
    tripped = true;
  }
  return ok && tripped;
}

}  // namespace

int main() {
  report(1, "case-study verdict matrix", verdict_matrix());
  report(2, "grid-oracle and execution equivalence", oracle_equivalence());
  report(3, "reasoner soundness battery", reasoner_battery());
  report(4, "datatype solver vs enumeration", datatype_solver());
  report(5, "structural laws", structural_laws());
  report(6, "format round-trips, OWL export, resource bound", format_and_export());
  return failures == 0 ? 0 : 1;
}
