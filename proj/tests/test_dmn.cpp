#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dkbv/dmn.hpp"
#include "dkbv/fixtures.hpp"

using namespace dkbv;

namespace {
Value rv(const char* t) { return Value::number(Dt::Real, parse_rational(t)); }

std::map<FreeInput, Value> ship_inputs(const char* ce, const char* le, const char* dr,
                                       const char* ca, const char* cg) {
  std::map<FreeInput, Value> m;
  const char* names[] = {"cerExp", "length", "draft", "capacity", "cargo"};
  const char* vals[] = {ce, le, dr, ca, cg};
  for (int i = 0; i < 5; ++i) {
    FreeInput f;
    f.is_datum = true;
    f.datum = names[i];
    m.emplace(f, rv(vals[i]));
  }
  return m;
}
}  // namespace

TEST_CASE("fixture tables and DRG validate cleanly") {
  Dkb d = ship_full();
  for (const auto& t : d.drg.tables) CHECK(validate_table(t).empty());
  CHECK(validate_drg(d.drg).empty());
}

TEST_CASE("validate_table flags broken tables") {
  Dkb d = ship_full();
  DecisionTable t = d.drg.tables[1];  // refuel

  SUBCASE("output value outside range") {
    t.rules[0].then_entries["RefuelArea"] = Value::string("dock");
    CHECK_FALSE(validate_table(t).empty());
  }
  SUBCASE("missing rule entry") {
    t.rules[2].if_entries.erase("cargo");
    auto errs = validate_table(t);
    REQUIRE_FALSE(errs.empty());
    CHECK(errs[0].find("rule 3") != std::string::npos);
  }
  SUBCASE("dot in attribute name") {
    t.inputs.push_back("a.b");
    t.atype["a.b"] = Dt::Real;
    t.infacet["a.b"] = sfeel_parse("-", Dt::Real);
    for (auto& r : t.rules) r.if_entries["a.b"] = sfeel_parse("-", Dt::Real);
    CHECK_FALSE(validate_table(t).empty());
  }
  SUBCASE("input/output name clash") {
    t.outputs.push_back("Enter");
    CHECK_FALSE(validate_table(t).empty());
  }
}

TEST_CASE("rule_order follows output ranges then textual order") {
  Dkb d = ship_full();
  // Refuel range none < indoor < outdoor; rule outputs none,indoor,indoor,outdoor.
  CHECK(rule_order(d.drg.tables[1]) == RuleOrder{0, 1, 2, 3});
  // Clearance range y < n: the four y-rules first, textual order inside.
  CHECK(rule_order(d.drg.tables[0]) == RuleOrder{1, 3, 5, 9, 0, 2, 4, 6, 7, 8, 10});
}

TEST_CASE("validate_drg flags broken graphs") {
  Dkb d = ship_full();

  SUBCASE("double-fed input attribute") {
    Flow f;
    f.source.from_table = false;
    f.source.input_datum = "draft";
    f.target_table = "Refuel";
    f.target_attribute = "cargo";
    d.drg.flows.push_back(f);
    CHECK_FALSE(validate_drg(d.drg).empty());
  }
  SUBCASE("flow with mismatched datatypes") {
    Flow f;
    f.source.from_table = true;
    f.source.table = "Refuel";
    f.source.attribute = "RefuelArea";
    f.target_table = "Clearance";
    f.target_attribute = "cargo";
    d.drg.flows.pop_back();  // drop the feed into Refuel.Enter to stay acyclic
    d.drg.flows.push_back(f);
    CHECK_FALSE(validate_drg(d.drg).empty());
  }
  SUBCASE("cyclic requirement graph") {
    Flow f;
    f.source.from_table = true;
    f.source.table = "Refuel";
    f.source.attribute = "RefuelArea";
    f.target_table = "Clearance";
    f.target_attribute = "Enter2";
    auto& cl = d.drg.tables[0];
    cl.inputs.push_back("Enter2");
    cl.atype["Enter2"] = Dt::String;
    cl.infacet["Enter2"] = sfeel_parse("-", Dt::String);
    for (auto& r : cl.rules) r.if_entries["Enter2"] = sfeel_parse("-", Dt::String);
    d.drg.flows.push_back(f);
    auto errs = validate_drg(d.drg);
    REQUIRE_FALSE(errs.empty());
    bool cyc = false;
    for (const auto& e : errs) cyc |= e.find("cycle") != std::string::npos;
    CHECK(cyc);
  }
  SUBCASE("out_tables must name tables") {
    d.drg.out_tables.push_back("Nowhere");
    CHECK_FALSE(validate_drg(d.drg).empty());
  }
}

TEST_CASE("free inputs, bound attributes, topological order") {
  Dkb d = ship_full();
  auto free = free_inputs(d.drg);
  CHECK(free.size() == 5);
  for (const auto& f : free) CHECK(f.is_datum);

  auto bound = bound_attrs(d.drg);
  CHECK(bound.size() == 10);  // 5 + 3 fed inputs, 2 outputs
  CHECK(bound.count({"Refuel", "Enter", false}));
  CHECK(bound.count({"Clearance", "Enter", true}));

  auto order = topo_order(d.drg);
  REQUIRE(order.size() == 2);
  CHECK(order[0]->name == "Clearance");
  CHECK(order[1]->name == "Refuel");
}

TEST_CASE("execute chains tables through flows") {
  Dkb d = ship_full();

  auto r = execute(d.drg, ship_inputs("30000", "100", "5", "500", "0.2"));
  CHECK(r.outputs.at({"Clearance", "Enter"}) == Value::string("y"));
  CHECK(r.outputs.at({"Refuel", "RefuelArea"}) == Value::string("indoor"));

  r = execute(d.drg, ship_inputs("10000", "100", "5", "500", "0.2"));
  CHECK(r.outputs.at({"Clearance", "Enter"}) == Value::string("n"));
  CHECK(r.outputs.at({"Refuel", "RefuelArea"}) == Value::string("none"));

  r = execute(d.drg, ship_inputs("30000", "397", "15.5", "12000", "0.8"));
  CHECK(r.outputs.at({"Clearance", "Enter"}) == Value::string("n"));

  // Uncovered region: valid certificate, long ship with shallow draft. No
  // clearance rule fires and Enter has no default, so it stays undefined;
  // the refuel default still produces a value.
  r = execute(d.drg, ship_inputs("30000", "330", "5", "500", "0.2"));
  CHECK(r.outputs.count({"Clearance", "Enter"}) == 0);
  CHECK(r.outputs.at({"Refuel", "RefuelArea"}) == Value::string("none"));
}

TEST_CASE("execute rejects facet violations") {
  Dkb d = ship_full();
  CHECK_THROWS_AS(execute(d.drg, ship_inputs("30000", "-5", "5", "500", "0.2")), DmnError);
}

TEST_CASE("trivial_drg wraps a single table") {
  Dkb d = ship_full();
  Drg g = trivial_drg(d.drg.tables[1]);
  CHECK(validate_drg(g).empty());
  CHECK(free_inputs(g).size() == 3);
  CHECK(g.out_tables == std::vector<std::string>{"Refuel"});

  std::map<FreeInput, Value> m;
  FreeInput f;
  f.is_datum = true;
  f.datum = "Enter";
  m.emplace(f, Value::string("y"));
  f.datum = "length";
  m.emplace(f, rv("400"));
  f.datum = "cargo";
  m.emplace(f, rv("0.1"));
  auto r = execute(g, m);
  CHECK(r.outputs.at({"Refuel", "RefuelArea"}) == Value::string("indoor"));
}
