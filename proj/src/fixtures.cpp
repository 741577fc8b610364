#include "dkbv/fixtures.hpp"

namespace dkbv {

namespace {
const Rat kToday = 20000;

Value str(const char* s) { return Value::string(s); }

DerivedPtr num_eq(const char* v) {
  return dt_facet(Dt::Real, Facet::Eq, Value::number(Dt::Real, parse_rational(v)));
}
DerivedPtr num_range(const char* lo, const char* hi) {
  return dt_restriction(
      Dt::Real,
      FacetFormula::conj(
          FacetFormula::atom({Facet::Geq, Value::number(Dt::Real, parse_rational(lo))}),
          FacetFormula::atom({Facet::Leq, Value::number(Dt::Real, parse_rational(hi))})));
}

DecisionTable clearance_table() {
  DecisionTable t;
  t.name = "Clearance";
  t.inputs = {"cerExp", "length", "draft", "capacity", "cargo"};
  t.outputs = {"Enter"};
  for (const auto& a : t.inputs) t.atype[a] = Dt::Real;
  t.atype["Enter"] = Dt::String;
  t.infacet["cerExp"] = sfeel_parse("-", Dt::Real);
  for (const char* a : {"length", "draft", "capacity", "cargo"})
    t.infacet[a] = sfeel_parse(">=0", Dt::Real);
  t.orange["Enter"] = {str("y"), str("n")};
  t.hit = HitPolicy::Unique;
  auto rule = [&](const char* ce, const char* le, const char* dr, const char* ca,
                  const char* cg, const char* enter) {
    Rule r;
    const char* conds[] = {ce, le, dr, ca, cg};
    for (std::size_t i = 0; i < 5; ++i)
      r.if_entries[t.inputs[i]] = sfeel_parse(conds[i], Dt::Real, kToday);
    r.then_entries["Enter"] = str(enter);
    t.rules.push_back(std::move(r));
  };
  rule("<=today", "-", "-", "-", "-", "n");
  rule(">today", "<260", "<10", "<1000", "-", "y");
  rule(">today", "<260", "<10", ">=1000", "-", "n");
  rule(">today", "<260", ">=10", "-", "<=0.75", "y");
  rule(">today", "<260", ">=10", "-", ">0.75", "n");
  rule(">today", "[260..320)", "<=13", "<6000", "<=0.5", "y");
  rule(">today", "[260..320)", "<=13", "<6000", ">0.5", "n");
  rule(">today", "[260..320)", "<=13", ">=6000", "-", "n");
  rule(">today", "[260..320)", ">13", "-", "-", "n");
  rule(">today", ">=320", ">10", "-", "<=0.25", "y");
  rule(">today", ">=320", ">10", "-", ">0.25", "n");
  return t;
}

DecisionTable refuel_table() {
  DecisionTable t;
  t.name = "Refuel";
  t.inputs = {"Enter", "length", "cargo"};
  t.outputs = {"RefuelArea"};
  t.atype["Enter"] = Dt::String;
  t.atype["length"] = t.atype["cargo"] = Dt::Real;
  t.atype["RefuelArea"] = Dt::String;
  t.infacet["Enter"] = sfeel_parse("\"y\", \"n\"", Dt::String);
  t.infacet["length"] = sfeel_parse(">=0", Dt::Real);
  t.infacet["cargo"] = sfeel_parse(">=0", Dt::Real);
  t.orange["RefuelArea"] = {str("none"), str("indoor"), str("outdoor")};
  t.odef["RefuelArea"] = str("none");
  t.hit = HitPolicy::Unique;
  auto rule = [&](const char* en, const char* le, const char* cg, const char* area) {
    Rule r;
    r.if_entries["Enter"] = sfeel_parse(en, Dt::String);
    r.if_entries["length"] = sfeel_parse(le, Dt::Real);
    r.if_entries["cargo"] = sfeel_parse(cg, Dt::Real);
    r.then_entries["RefuelArea"] = str(area);
    t.rules.push_back(std::move(r));
  };
  rule("\"n\"", "-", "-", "none");
  rule("\"y\"", "<=350", "-", "indoor");
  rule("\"y\"", ">350", "<=0.3", "indoor");
  rule("\"y\"", ">350", ">0.3", "outdoor");
  return t;
}

Drg ship_drg() {
  Drg g;
  for (const char* n : {"cerExp", "length", "draft", "capacity", "cargo"}) {
    InputDatum d;
    d.name = n;
    d.dt = Dt::Real;
    d.facet = sfeel_parse(std::string(n) == "cerExp" ? "-" : ">=0", Dt::Real);
    g.inputs.push_back(d);
  }
  g.tables = {clearance_table(), refuel_table()};
  g.out_tables = {"Clearance", "Refuel"};
  auto datum_flow = [&](const char* src, const char* table, const char* attr) {
    Flow f;
    f.source.from_table = false;
    f.source.input_datum = src;
    f.target_table = table;
    f.target_attribute = attr;
    g.flows.push_back(f);
  };
  for (const char* a : {"cerExp", "length", "draft", "capacity", "cargo"})
    datum_flow(a, "Clearance", a);
  datum_flow("length", "Refuel", "length");
  datum_flow("cargo", "Refuel", "cargo");
  Flow f;
  f.source.from_table = true;
  f.source.table = "Clearance";
  f.source.attribute = "Enter";
  f.target_table = "Refuel";
  f.target_attribute = "Enter";
  g.flows.push_back(f);
  return g;
}

std::vector<TBoxAxiom> ship_ontology() {
  std::vector<TBoxAxiom> t;
  auto ci = [&](ConceptPtr l, ConceptPtr r) {
    TBoxAxiom ax;
    ax.kind = TBoxAxiom::ConceptIncl;
    ax.lhs = std::move(l);
    ax.rhs = std::move(r);
    t.push_back(std::move(ax));
  };
  struct ShipType {
    const char* name;
    DerivedPtr length, draft, capacity;
  };
  std::vector<ShipType> types = {
      {"clipper", num_eq("135"), num_range("0", "9"), num_eq("500")},
      {"tallship", num_eq("200"), num_range("0", "9"), num_eq("800")},
      {"cargovessel", num_eq("215"), num_eq("10"), num_range("1000", "2500")},
      {"smallcruiser", num_eq("250"), num_range("11", "12"), num_eq("3000")},
      {"largecruiser", num_eq("290"), num_range("11", "12"), num_eq("4000")},
      {"ferry", num_range("275", "305"), num_range("11", "13"), num_range("4000", "5000")},
      {"megaferry", num_eq("335"), num_range("13", "14"), num_range("5000", "8000")},
      {"tanker", num_eq("397"), num_eq("15.5"), num_range("11000", "14500")},
  };
  std::vector<ConceptPtr> covering;
  for (const auto& ty : types) {
    auto stype = c_existsf("stype", dt_enumeration(Dt::String, {str(ty.name)}));
    ci(stype, c_and_all({c_name("Ship"), desugar_feature_forall("length", ty.length),
                         desugar_feature_forall("draft", ty.draft),
                         desugar_feature_forall("capacity", ty.capacity)}));
    covering.push_back(stype);
  }
  ci(c_name("Ship"), c_or_all(std::move(covering)));
  ci(c_name("Ship"),
     c_and_all({c_existsf("length", dt_primitive(Dt::Real)),
                c_existsf("draft", dt_primitive(Dt::Real)),
                c_existsf("capacity", dt_primitive(Dt::Real))}));
  return t;
}
}  // namespace

Dkb ship_full() {
  Dkb d;
  d.sig.concepts = {"Ship"};
  d.sig.features = {{"stype", Dt::String},
                    {"length", Dt::Real},
                    {"draft", Dt::Real},
                    {"capacity", Dt::Real}};
  d.background = ship_ontology();
  d.drg = ship_drg();
  d.bridge = "Ship";
  d.today = kToday;
  auto ef = [](const char* f, Dt dt) { return c_existsf(f, dt_primitive(dt)); };
  d.templates["reachable"] =
      c_and_all({ef("stype", Dt::String), ef("cerExp", Dt::Real), ef("cargo", Dt::Real)});
  d.templates["phi"] =
      c_and_all({ef("cerExp", Dt::Real), ef("capacity", Dt::Real), ef("stype", Dt::String)});
  return d;
}

Dkb ship_tables_only() {
  Dkb d;
  d.sig.concepts = {"Ship"};
  d.drg = ship_drg();
  d.bridge = "Ship";
  d.today = kToday;
  return d;
}

Dkb ship_literal_phi() {
  Dkb d = ship_full();
  auto phi = d.templates.at("phi");
  d.templates.clear();
  d.templates["phi"] = phi;
  return d;
}

std::vector<std::string> fixture_names() {
  return {"ship-full", "ship-tables-only", "ship-literal-phi"};
}

Dkb fixture(const std::string& name) {
  if (name == "ship-full") return ship_full();
  if (name == "ship-tables-only") return ship_tables_only();
  if (name == "ship-literal-phi") return ship_literal_phi();
  throw DlError("unknown fixture " + name);
}

}  // namespace dkbv
