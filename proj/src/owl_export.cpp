#include "dkbv/owl.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace dkbv {

namespace {

const char* xsd_of(Dt d) {
  switch (d) {
    case Dt::String: return "xsd:string";
    case Dt::Natural: return "xsd:nonNegativeInteger";
    case Dt::Integer: return "xsd:integer";
    default: return "xsd:decimal";  // rational/real approximation
  }
}

std::string iri(const std::string& name) { return ":" + name; }

std::string decimal_text(const Rat& r) {
  std::string s = print_rational(r);
  if (s.find('/') == std::string::npos) return s;
  // non-terminating: truncate to 12 fractional digits
  Int scaled = rat_floor(r * Rat(Int("1000000000000")));
  bool neg = scaled < 0;
  std::string digits = (neg ? Int(-scaled) : scaled).str();
  if (digits.size() < 13) digits.insert(0, 13 - digits.size(), '0');
  std::string out = digits.substr(0, digits.size() - 12) + "." + digits.substr(digits.size() - 12);
  return (neg ? "-" : "") + out;
}

std::string escaped(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string literal(const Value& v) {
  if (v.is_string) return "\"" + escaped(v.str) + "\"^^xsd:string";
  return "\"" + decimal_text(v.num) + "\"^^" + std::string(xsd_of(v.dt));
}

std::string facet_iri(Facet::Op op) {
  switch (op) {
    case Facet::Lt: return "xsd:maxExclusive";
    case Facet::Leq: return "xsd:maxInclusive";
    case Facet::Gt: return "xsd:minExclusive";
    default: return "xsd:minInclusive";  // Geq; Eq handled separately
  }
}

// Conjunctions of inequality facets collapse into one DatatypeRestriction.
bool inequality_conjunction(const FacetFormulaPtr& f, std::vector<Facet>* out) {
  if (f->kind == FacetFormula::Atom) {
    if (f->facet.op == Facet::Eq) return false;
    out->push_back(f->facet);
    return true;
  }
  if (f->kind == FacetFormula::And)
    return inequality_conjunction(f->a, out) && inequality_conjunction(f->b, out);
  return false;
}

std::string formula_range(Dt d, const FacetFormulaPtr& f) {
  std::vector<Facet> atoms;
  if (inequality_conjunction(f, &atoms)) {
    std::string out = "DatatypeRestriction(" + std::string(xsd_of(d));
    for (const auto& a : atoms) out += " " + facet_iri(a.op) + " " + literal(a.bound);
    return out + ")";
  }
  switch (f->kind) {
    case FacetFormula::Atom:
      return "DataOneOf(" + literal(f->facet.bound) + ")";  // Eq
    case FacetFormula::And:
      return "DataIntersectionOf(" + formula_range(d, f->a) + " " + formula_range(d, f->b) + ")";
    case FacetFormula::Or:
      return "DataUnionOf(" + formula_range(d, f->a) + " " + formula_range(d, f->b) + ")";
    default:
      return "DataComplementOf(" + formula_range(d, f->a) + ")";
  }
}

std::string data_range(const DerivedPtr& e) {
  switch (e->kind) {
    case Derived::Primitive: return xsd_of(e->dt);
    case Derived::Union: return "DataUnionOf(" + data_range(e->a) + " " + data_range(e->b) + ")";
    case Derived::Intersection:
      return "DataIntersectionOf(" + data_range(e->a) + " " + data_range(e->b) + ")";
    case Derived::Difference:
      return "DataIntersectionOf(" + data_range(e->a) + " DataComplementOf(" +
             data_range(e->b) + "))";
    case Derived::Enumeration: {
      std::string out = "DataOneOf(";
      for (std::size_t i = 0; i < e->values.size(); ++i)
        out += (i ? " " : "") + literal(e->values[i]);
      return out + ")";
    }
    default: return formula_range(e->dt, e->facet);
  }
}

std::string class_expr(const ConceptPtr& c) {
  switch (c->kind) {
    case Concept::Top: return "owl:Thing";
    case Concept::Bot: return "owl:Nothing";
    case Concept::Name: return iri(c->name);
    case Concept::Not: return "ObjectComplementOf(" + class_expr(c->a) + ")";
    case Concept::And:
      return "ObjectIntersectionOf(" + class_expr(c->a) + " " + class_expr(c->b) + ")";
    case Concept::Or:
      return "ObjectUnionOf(" + class_expr(c->a) + " " + class_expr(c->b) + ")";
    case Concept::Exists:
      return "ObjectSomeValuesFrom(" + iri(c->name) + " " + class_expr(c->a) + ")";
    case Concept::Forall:
      return "ObjectAllValuesFrom(" + iri(c->name) + " " + class_expr(c->a) + ")";
    case Concept::ExistsF:
      return "DataSomeValuesFrom(" + iri(c->name) + " " + data_range(c->dtexpr) + ")";
    default:
      return "ObjectComplementOf(DataSomeValuesFrom(" + iri(c->name) + " rdfs:Literal))";
  }
}

}  // namespace

std::string export_owl_kb(const Kb& k) {
  std::ostringstream o;
  o << "Prefix(:=<https://example.org/dkbv#>)\n"
       "Prefix(owl:=<http://www.w3.org/2002/07/owl#>)\n"
       "Prefix(rdfs:=<http://www.w3.org/2000/01/rdf-schema#>)\n"
       "Prefix(xsd:=<http://www.w3.org/2001/XMLSchema#>)\n"
       "Ontology(<https://example.org/dkbv>\n";

  for (const auto& c : k.sig.concepts) o << "Declaration(Class(" << iri(c) << "))\n";
  for (const auto& r : k.sig.roles) o << "Declaration(ObjectProperty(" << iri(r) << "))\n";
  for (const auto& [f, d] : k.sig.features) {
    o << "Declaration(DataProperty(" << iri(f) << "))\n";
    o << "FunctionalDataProperty(" << iri(f) << ")\n";
    o << "DataPropertyRange(" << iri(f) << " " << xsd_of(d) << ")\n";
  }
  std::set<std::string> objects;
  for (const auto& f : k.abox) {
    objects.insert(f.o1);
    if (f.kind == AboxFact::RoleFact) objects.insert(f.o2);
  }
  for (const auto& x : objects) o << "Declaration(NamedIndividual(" << iri(x) << "))\n";

  for (const auto& ax : k.tbox) switch (ax.kind) {
      case TBoxAxiom::ConceptIncl:
        o << "SubClassOf(" << class_expr(ax.lhs) << " " << class_expr(ax.rhs) << ")\n";
        break;
      case TBoxAxiom::RoleIncl:
        o << "SubObjectPropertyOf(" << iri(ax.p1) << " " << iri(ax.p2) << ")\n";
        break;
      case TBoxAxiom::FeatureIncl:
        o << "SubDataPropertyOf(" << iri(ax.p1) << " " << iri(ax.p2) << ")\n";
        break;
      case TBoxAxiom::RoleDisj:
        o << "DisjointObjectProperties(" << iri(ax.p1) << " " << iri(ax.p2) << ")\n";
        break;
      default:
        o << "DisjointDataProperties(" << iri(ax.p1) << " " << iri(ax.p2) << ")\n";
    }

  for (const auto& f : k.abox) switch (f.kind) {
      case AboxFact::ConceptFact:
        o << "ClassAssertion(" << iri(f.pred) << " " << iri(f.o1) << ")\n";
        break;
      case AboxFact::RoleFact:
        o << "ObjectPropertyAssertion(" << iri(f.pred) << " " << iri(f.o1) << " " << iri(f.o2)
          << ")\n";
        break;
      default:
        o << "DataPropertyAssertion(" << iri(f.pred) << " " << iri(f.o1) << " " << literal(f.v)
          << ")\n";
    }

  o << ")\n";
  return o.str();
}

std::string export_owl(const Dkb& d, bool with_ontology) {
  return export_owl_kb(encode_dkb(d, with_ontology));
}

namespace {

// The checker tokenizes the functional syntax and validates every construct
// against the vocabulary we can emit, including rough arity constraints.
struct OwlTok {
  enum Kind { Open, Close, NameTok, LiteralTok, IriTok, End };
  Kind kind = End;
  std::string text;
  int line = 0;
};

struct OwlLexer {
  const std::string& s;
  std::size_t i = 0;
  int line = 1;
  std::vector<std::string>& errs;

  OwlTok next() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) {
      if (s[i] == '\n') ++line;
      ++i;
    }
    if (i >= s.size()) return {OwlTok::End, "", line};
    char c = s[i];
    if (c == '(') return ++i, OwlTok{OwlTok::Open, "(", line};
    if (c == ')') return ++i, OwlTok{OwlTok::Close, ")", line};
    if (c == '<') {
      std::size_t j = s.find('>', i);
      if (j == std::string::npos) {
        errs.push_back("line " + std::to_string(line) + ": unterminated IRI");
        i = s.size();
        return {OwlTok::End, "", line};
      }
      OwlTok t{OwlTok::IriTok, s.substr(i, j - i + 1), line};
      i = j + 1;
      return t;
    }
    if (c == '"') {
      std::size_t j = i + 1;
      while (j < s.size() && s[j] != '"') j += s[j] == '\\' ? 2 : 1;
      if (j >= s.size()) {
        errs.push_back("line " + std::to_string(line) + ": unterminated literal");
        i = s.size();
        return {OwlTok::End, "", line};
      }
      std::size_t end = j + 1;
      if (end + 1 < s.size() && s[end] == '^' && s[end + 1] == '^') {
        end += 2;
        while (end < s.size() && !std::isspace((unsigned char)s[end]) && s[end] != '(' &&
               s[end] != ')')
          ++end;
      }
      OwlTok t{OwlTok::LiteralTok, s.substr(i, end - i), line};
      i = end;
      return t;
    }
    std::size_t j = i;
    while (j < s.size() && !std::isspace((unsigned char)s[j]) && s[j] != '(' && s[j] != ')' &&
           s[j] != '<')
      ++j;
    OwlTok t{OwlTok::NameTok, s.substr(i, j - i), line};
    i = j;
    return t;
  }
};

struct OwlChecker {
  std::vector<std::string> errs;
  OwlLexer lex;
  OwlTok tok;

  explicit OwlChecker(const std::string& text) : lex{text, 0, 1, errs} { tok = lex.next(); }

  void err(const std::string& m) {
    errs.push_back("line " + std::to_string(tok.line) + ": " + m);
  }
  void advance() { tok = lex.next(); }

  bool is_entity_ref(const OwlTok& t) {
    // prefixed name like :Ship, xsd:decimal, owl:Thing
    return t.kind == OwlTok::NameTok && t.text.find(':') != std::string::npos;
  }

  // A known construct and the shapes its arguments may take.
  enum Arg { AEntity, ALiteral, AClass, ARange, AAny };

  // Returns false if `name` is unknown.
  bool construct_ok(const std::string& name) {
    static const std::set<std::string> known = {
        "Declaration", "Class", "ObjectProperty", "DataProperty", "NamedIndividual",
        "Datatype", "FunctionalDataProperty", "DataPropertyRange", "SubClassOf",
        "SubObjectPropertyOf", "SubDataPropertyOf", "DisjointObjectProperties",
        "DisjointDataProperties", "ClassAssertion", "ObjectPropertyAssertion",
        "DataPropertyAssertion", "ObjectComplementOf", "ObjectIntersectionOf",
        "ObjectUnionOf", "ObjectSomeValuesFrom", "ObjectAllValuesFrom",
        "DataSomeValuesFrom", "DataOneOf", "DataUnionOf", "DataIntersectionOf",
        "DataComplementOf", "DatatypeRestriction"};
    return known.count(name) != 0;
  }

  // expression := entity-ref | literal | Construct(expression*)
  void expression() {
    if (tok.kind == OwlTok::LiteralTok) {
      std::string t = tok.text;
      std::size_t caret = t.find("^^");
      if (caret != std::string::npos && t.substr(caret + 2).find(':') == std::string::npos)
        err("literal datatype must be a prefixed name: " + t);
      advance();
      return;
    }
    if (tok.kind != OwlTok::NameTok) {
      err("expected an expression, got '" + tok.text + "'");
      advance();
      return;
    }
    std::string name = tok.text;
    advance();
    if (tok.kind != OwlTok::Open) {
      if (name.find(':') == std::string::npos) err("bare name '" + name + "'");
      return;  // entity reference
    }
    if (!construct_ok(name)) err("unknown construct '" + name + "'");
    advance();
    int args = 0;
    std::vector<OwlTok::Kind> kinds;
    while (tok.kind != OwlTok::Close && tok.kind != OwlTok::End) {
      kinds.push_back(tok.kind);
      expression();
      ++args;
    }
    if (tok.kind != OwlTok::Close) {
      err("unbalanced '(' in " + name);
      return;
    }
    advance();
    arity(name, args);
  }

  void arity(const std::string& name, int args) {
    auto want = [&](int lo, int hi) {
      if (args < lo || (hi >= 0 && args > hi))
        err(name + " has " + std::to_string(args) + " arguments");
    };
    if (name == "Declaration" || name == "Class" || name == "ObjectProperty" ||
        name == "DataProperty" || name == "NamedIndividual" || name == "Datatype" ||
        name == "FunctionalDataProperty" || name == "ObjectComplementOf" ||
        name == "DataComplementOf")
      want(1, 1);
    else if (name == "DataOneOf")
      want(1, -1);
    else if (name == "ObjectPropertyAssertion")
      want(3, 3);
    else if (name == "DataPropertyAssertion")
      want(3, 3);
    else if (name == "DatatypeRestriction") {
      want(3, -1);
      if (args % 2 == 0) err("DatatypeRestriction needs a datatype plus facet-value pairs");
    } else if (name == "ObjectIntersectionOf" || name == "ObjectUnionOf" ||
               name == "DataIntersectionOf" || name == "DataUnionOf")
      want(2, -1);
    else
      want(2, 2);
  }

  void run() {
    while (tok.kind == OwlTok::NameTok && tok.text.rfind("Prefix", 0) == 0) {
      // Prefix(pn:=<iri>) lexes as Prefix ( pn:= <iri> )
      advance();
      if (tok.kind != OwlTok::Open) return err("malformed Prefix");
      advance();
      if (tok.kind != OwlTok::NameTok || tok.text.find(":=") == std::string::npos)
        err("Prefix needs 'pn:='");
      else
        advance();
      if (tok.kind != OwlTok::IriTok)
        err("Prefix needs an IRI");
      else
        advance();
      if (tok.kind != OwlTok::Close) return err("malformed Prefix");
      advance();
    }
    if (tok.kind != OwlTok::NameTok || tok.text != "Ontology") return err("expected Ontology(...)");
    advance();
    if (tok.kind != OwlTok::Open) return err("expected '(' after Ontology");
    advance();
    while (tok.kind == OwlTok::IriTok) advance();  // ontology IRI, version IRI
    while (tok.kind != OwlTok::Close && tok.kind != OwlTok::End) expression();
    if (tok.kind != OwlTok::Close) return err("unterminated Ontology");
    advance();
    if (tok.kind != OwlTok::End) err("trailing content after Ontology");
  }
};

}  // namespace

std::vector<std::string> owl_check(const std::string& text) {
  OwlChecker c(text);
  c.run();
  return std::move(c.errs);
}

}  // namespace dkbv
