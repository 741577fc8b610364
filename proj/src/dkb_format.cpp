#include "dkbv/dkb_format.hpp"

#include <cctype>
#include <sstream>

namespace dkbv {

namespace {

// Token stream over one expression (concept, derived datatype, or value
// list). Identifiers may contain dots (mangled attribute names).
struct Tokens {
  std::vector<std::string> toks;
  std::size_t pos = 0;

  explicit Tokens(const std::string& s) {
    std::size_t i = 0;
    while (i < s.size()) {
      char c = s[i];
      if (std::isspace((unsigned char)c)) {
        ++i;
        continue;
      }
      if (c == '"') {
        std::size_t j = s.find('"', i + 1);
        if (j == std::string::npos) throw FormatError("unterminated string literal");
        toks.push_back(s.substr(i, j - i + 1));
        i = j + 1;
        continue;
      }
      if (std::string("(){}[],").find(c) != std::string::npos) {
        toks.push_back(std::string(1, c));
        ++i;
        continue;
      }
      if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
        toks.push_back("->");
        i += 2;
        continue;
      }
      if (c == '<' || c == '>') {
        if (i + 1 < s.size() && s[i + 1] == '=') {
          toks.push_back(s.substr(i, 2));
          i += 2;
        } else {
          toks.push_back(std::string(1, c));
          ++i;
        }
        continue;
      }
      if (c == '=') {
        toks.push_back("=");
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < s.size() && !std::isspace((unsigned char)s[j]) &&
             std::string("(){}[],<>=\"").find(s[j]) == std::string::npos)
        ++j;
      if (j == i) throw FormatError("unexpected character '" + std::string(1, c) + "'");
      toks.push_back(s.substr(i, j - i));
      i = j;
    }
  }

  bool done() const { return pos >= toks.size(); }
  const std::string& peek() const {
    static const std::string empty;
    return done() ? empty : toks[pos];
  }
  std::string next() {
    if (done()) throw FormatError("unexpected end of expression");
    return toks[pos++];
  }
  void expect(const std::string& t) {
    if (next() != t) throw FormatError("expected '" + t + "'");
  }
};

bool is_dt_name(const std::string& s, Dt* out = nullptr) {
  static const std::pair<const char*, Dt> names[] = {{"string", Dt::String},
                                                     {"natural", Dt::Natural},
                                                     {"integer", Dt::Integer},
                                                     {"rational", Dt::Rational},
                                                     {"real", Dt::Real}};
  for (const auto& [n, d] : names)
    if (s == n) {
      if (out) *out = d;
      return true;
    }
  return false;
}

Value parse_value(Tokens& t, Dt d) {
  std::string tok = t.next();
  if (tok.size() >= 2 && tok.front() == '"')
    return Value::string(tok.substr(1, tok.size() - 2));
  return Value::number(d, parse_rational(tok));
}

FacetFormulaPtr parse_formula(Tokens& t, Dt d) {
  if (t.peek() == "not") {
    t.next();
    return FacetFormula::neg(parse_formula(t, d));
  }
  if (t.peek() == "(") {
    t.next();
    auto a = parse_formula(t, d);
    std::string op = t.next();
    auto b = parse_formula(t, d);
    t.expect(")");
    if (op == "and") return FacetFormula::conj(a, b);
    if (op == "or") return FacetFormula::disj(a, b);
    throw FormatError("expected 'and' or 'or' in facet formula, got '" + op + "'");
  }
  std::string op = t.next();
  Facet f;
  if (op == "=") f.op = Facet::Eq;
  else if (op == "<") f.op = Facet::Lt;
  else if (op == "<=") f.op = Facet::Leq;
  else if (op == ">") f.op = Facet::Gt;
  else if (op == ">=") f.op = Facet::Geq;
  else throw FormatError("expected comparison operator, got '" + op + "'");
  f.bound = parse_value(t, d);
  return FacetFormula::atom(f);
}

DerivedPtr parse_derived(Tokens& t) {
  if (t.peek() == "(") {
    t.next();
    auto a = parse_derived(t);
    std::string op = t.next();
    auto b = parse_derived(t);
    t.expect(")");
    if (op == "union") return dt_union(a, b);
    if (op == "inter") return dt_intersection(a, b);
    if (op == "minus") return dt_difference(a, b);
    throw FormatError("expected set operator, got '" + op + "'");
  }
  Dt d;
  std::string name = t.next();
  if (!is_dt_name(name, &d)) throw FormatError("expected datatype name, got '" + name + "'");
  if (t.peek() == "{") {
    t.next();
    std::vector<Value> vs;
    if (t.peek() != "}") {
      vs.push_back(parse_value(t, d));
      while (t.peek() == ",") {
        t.next();
        vs.push_back(parse_value(t, d));
      }
    }
    t.expect("}");
    return dt_enumeration(d, std::move(vs));
  }
  if (t.peek() == "[") {
    t.next();
    auto f = parse_formula(t, d);
    t.expect("]");
    return dt_restriction(d, f);
  }
  return dt_primitive(d);
}

ConceptPtr parse_concept(Tokens& t) {
  std::string tok = t.next();
  if (tok == "top") return c_top();
  if (tok == "bot") return c_bot();
  if (tok == "not") return c_not(parse_concept(t));
  if (tok != "(") {
    if (is_dt_name(tok)) throw FormatError("datatype name '" + tok + "' used as concept");
    return c_name(tok);
  }
  std::string head = t.peek();
  if (head == "undef") {
    t.next();
    std::string f = t.next();
    t.expect(")");
    return c_undef(f);
  }
  if (head == "some" || head == "only") {
    t.next();
    std::string rf = t.next();
    if (head == "only") {
      auto c = parse_concept(t);
      t.expect(")");
      return c_forall(rf, std::move(c));
    }
    // "some" is a role or a feature restriction: try the datatype side first.
    std::size_t mark = t.pos;
    try {
      auto e = parse_derived(t);
      t.expect(")");
      return c_existsf(rf, std::move(e));
    } catch (const FormatError&) {
      t.pos = mark;
    }
    auto c = parse_concept(t);
    t.expect(")");
    return c_exists(rf, std::move(c));
  }
  auto a = parse_concept(t);
  std::string op = t.next();
  auto b = parse_concept(t);
  t.expect(")");
  if (op == "and") return c_and(a, b);
  if (op == "or") return c_or(a, b);
  throw FormatError("expected 'and' or 'or', got '" + op + "'");
}

Dt need_dt(const std::string& name) {
  Dt d;
  if (!is_dt_name(name, &d)) throw FormatError("unknown datatype '" + name + "'");
  return d;
}

// Line scanner: strips comments, yields (line number, content) pairs.
struct Lines {
  std::vector<std::pair<int, std::string>> ls;
  std::size_t pos = 0;

  explicit Lines(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
      ++n;
      // '#' starts a comment unless inside quotes or backticks
      bool q = false, bt = false;
      std::string out;
      for (char c : line) {
        if (c == '"' && !bt) q = !q;
        if (c == '`' && !q) bt = !bt;
        if (c == '#' && !q && !bt) break;
        out += c;
      }
      while (!out.empty() && std::isspace((unsigned char)out.back())) out.pop_back();
      std::size_t s = 0;
      while (s < out.size() && std::isspace((unsigned char)out[s])) ++s;
      out = out.substr(s);
      if (!out.empty()) ls.emplace_back(n, out);
    }
  }
  bool done() const { return pos >= ls.size(); }
  int lineno() const { return done() ? -1 : ls[pos].first; }
  const std::string& peek() const {
    static const std::string empty;
    return done() ? empty : ls[pos].second;
  }
  std::string next() { return ls[pos++].second; }
};

std::string first_word(const std::string& s) {
  std::size_t i = s.find(' ');
  return i == std::string::npos ? s : s.substr(0, i);
}

std::string rest_after(const std::string& s, const std::string& word) {
  std::size_t i = s.find(word) + word.size();
  while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  return s.substr(i);
}

// Backtick-delimited chunks, used for S-FEEL entries.
std::vector<std::string> backtick_chunks(const std::string& s, std::string* tail) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace((unsigned char)s[i])) {
      ++i;
      continue;
    }
    if (s[i] != '`') break;
    std::size_t j = s.find('`', i + 1);
    if (j == std::string::npos) throw FormatError("unterminated backtick entry");
    out.push_back(s.substr(i + 1, j - i - 1));
    i = j + 1;
  }
  if (tail) *tail = s.substr(i);
  return out;
}

struct Parser {
  Lines lines;
  Dkb d;

  explicit Parser(const std::string& text) : lines(text) {}

  [[noreturn]] void fail(const std::string& msg) {
    throw FormatError("line " + std::to_string(lines.lineno()) + ": " + msg);
  }

  template <class F>
  void guarded(const F& f) {
    try {
      f();
    } catch (const FormatError& e) {
      std::string w = e.what();
      if (w.rfind("line ", 0) == 0) throw;
      fail(w);
    } catch (const std::runtime_error& e) {
      fail(e.what());
    }
  }

  TBoxAxiom pred_axiom(TBoxAxiom::Kind kind, Tokens& t) {
    TBoxAxiom ax;
    ax.kind = kind;
    ax.p1 = t.next();
    ax.p2 = t.next();
    return ax;
  }

  void parse_signature() {
    while (!lines.done() && lines.peek() != "end") {
      std::string l = lines.next();
      guarded([&] {
        Tokens t(l);
        std::string kind = t.next();
        if (kind == "concept") d.sig.concepts.insert(t.next());
        else if (kind == "role") d.sig.roles.insert(t.next());
        else if (kind == "feature") {
          std::string n = t.next();
          d.sig.features[n] = need_dt(t.next());
        } else
          fail("unknown signature entry '" + kind + "'");
      });
    }
    if (lines.done()) fail("unterminated signature block");
    lines.next();
  }

  void parse_ontology() {
    while (!lines.done() && lines.peek() != "end") {
      std::string l = lines.next();
      guarded([&] {
        std::string kind = first_word(l);
        if (kind == "axiom") {
          std::string body = rest_after(l, "axiom");
          std::size_t sep = body.find("<=");
          if (sep == std::string::npos) fail("axiom needs '<='");
          TBoxAxiom ax;
          ax.kind = TBoxAxiom::ConceptIncl;
          ax.lhs = parse_concept_text(body.substr(0, sep));
          ax.rhs = parse_concept_text(body.substr(sep + 2));
          d.background.push_back(std::move(ax));
          return;
        }
        Tokens t(rest_after(l, kind));
        if (kind == "role-incl") d.background.push_back(pred_axiom(TBoxAxiom::RoleIncl, t));
        else if (kind == "role-disj") d.background.push_back(pred_axiom(TBoxAxiom::RoleDisj, t));
        else if (kind == "feature-incl")
          d.background.push_back(pred_axiom(TBoxAxiom::FeatureIncl, t));
        else if (kind == "feature-disj")
          d.background.push_back(pred_axiom(TBoxAxiom::FeatureDisj, t));
        else
          fail("unknown ontology entry '" + kind + "'");
      });
    }
    if (lines.done()) fail("unterminated ontology block");
    lines.next();
  }

  void parse_input(const std::string& l) {
    guarded([&] {
      std::string body = rest_after(l, "input");
      Tokens t(body);
      InputDatum in;
      in.name = t.next();
      in.dt = need_dt(t.next());
      std::string tail;
      auto chunks = backtick_chunks(body.substr(body.find('`') == std::string::npos
                                                    ? body.size()
                                                    : body.find('`')),
                                    &tail);
      in.facet = chunks.empty() ? SfeelCondition{}
                                : sfeel_parse(chunks.front(), in.dt, d.today);
      d.drg.inputs.push_back(std::move(in));
    });
  }

  void parse_table(const std::string& header) {
    DecisionTable t;
    guarded([&] {
      Tokens h(rest_after(header, "table"));
      t.name = h.next();
      std::string hit = h.next();
      if (hit == "unique") t.hit = HitPolicy::Unique;
      else if (hit == "any") t.hit = HitPolicy::Any;
      else if (hit == "priority") t.hit = HitPolicy::Priority;
      else fail("unknown hit policy '" + hit + "'");
    });
    while (!lines.done() && lines.peek() != "end") {
      std::string l = lines.next();
      guarded([&] {
        std::string kind = first_word(l);
        if (kind == "in") {
          std::string body = rest_after(l, "in");
          Tokens tk(body.substr(0, body.find('`')));
          std::string a = tk.next();
          Dt dt = need_dt(tk.next());
          auto chunks = backtick_chunks(
              body.find('`') == std::string::npos ? "" : body.substr(body.find('`')), nullptr);
          t.inputs.push_back(a);
          t.atype[a] = dt;
          t.infacet[a] =
              chunks.empty() ? SfeelCondition{} : sfeel_parse(chunks.front(), dt, d.today);
        } else if (kind == "out") {
          Tokens tk(rest_after(l, "out"));
          std::string b = tk.next();
          Dt dt = need_dt(tk.next());
          t.outputs.push_back(b);
          t.atype[b] = dt;
          tk.expect("{");
          auto& range = t.orange[b];
          if (tk.peek() != "}") {
            range.push_back(parse_value(tk, dt));
            while (tk.peek() == ",") {
              tk.next();
              range.push_back(parse_value(tk, dt));
            }
          }
          tk.expect("}");
          if (!tk.done()) {
            tk.expect("default");
            t.odef[b] = parse_value(tk, dt);
          }
        } else if (kind == "rule") {
          std::string tail;
          auto chunks = backtick_chunks(rest_after(l, "rule"), &tail);
          if (chunks.size() != t.inputs.size())
            fail("rule has " + std::to_string(chunks.size()) + " entries for " +
                 std::to_string(t.inputs.size()) + " inputs");
          Rule r;
          for (std::size_t i = 0; i < chunks.size(); ++i)
            r.if_entries[t.inputs[i]] = sfeel_parse(chunks[i], t.atype.at(t.inputs[i]), d.today);
          Tokens tk(tail);
          tk.expect("->");
          for (const auto& b : t.outputs) r.then_entries[b] = parse_value(tk, t.atype.at(b));
          t.rules.push_back(std::move(r));
        } else
          fail("unknown table entry '" + kind + "'");
      });
    }
    if (lines.done()) fail("unterminated table block");
    lines.next();
    for (const auto& other : d.drg.tables)
      if (other.name == t.name) fail("duplicate table name " + t.name);
    guarded([&] {
      auto errs = validate_table(t);
      if (!errs.empty()) fail("table " + t.name + ": " + errs.front());
    });
    d.drg.tables.push_back(std::move(t));
  }

  void parse_flow(const std::string& l) {
    guarded([&] {
      Tokens t(rest_after(l, "flow"));
      std::string src = t.next();
      t.expect("->");
      std::string tgt = t.next();
      Flow f;
      std::size_t dot = src.find('.');
      if (dot == std::string::npos) {
        f.source.input_datum = src;
      } else {
        f.source.from_table = true;
        f.source.table = src.substr(0, dot);
        f.source.attribute = src.substr(dot + 1);
      }
      dot = tgt.find('.');
      if (dot == std::string::npos) fail("flow target must be table.attribute");
      f.target_table = tgt.substr(0, dot);
      f.target_attribute = tgt.substr(dot + 1);
      d.drg.flows.push_back(std::move(f));
    });
  }

  std::optional<Dt> feature_dt(const std::string& name) {
    if (auto it = d.sig.features.find(name); it != d.sig.features.end()) return it->second;
    for (const auto& i : d.drg.inputs)
      if (i.name == name) return i.dt;
    std::size_t dot = name.find('.');
    if (dot != std::string::npos)
      if (const auto* t = find_table(d.drg, name.substr(0, dot))) {
        auto it = t->atype.find(name.substr(dot + 1));
        if (it != t->atype.end()) return it->second;
      }
    return std::nullopt;
  }

  void parse_abox() {
    while (!lines.done() && lines.peek() != "end") {
      std::string l = lines.next();
      guarded([&] {
        std::size_t open = l.find('(');
        std::size_t close = l.rfind(')');
        if (open == std::string::npos || close == std::string::npos || close < open)
          fail("malformed fact '" + l + "'");
        std::string pred = l.substr(0, open);
        std::string args = l.substr(open + 1, close - open - 1);
        AboxFact f;
        f.pred = pred;
        std::size_t comma = args.find(',');
        if (d.sig.concepts.count(pred)) {
          f.kind = AboxFact::ConceptFact;
          Tokens t(args);
          f.o1 = t.next();
        } else if (d.sig.roles.count(pred)) {
          if (comma == std::string::npos) fail("role fact needs two arguments");
          f.kind = AboxFact::RoleFact;
          f.o1 = Tokens(args.substr(0, comma)).next();
          f.o2 = Tokens(args.substr(comma + 1)).next();
        } else if (auto dt = feature_dt(pred)) {
          if (comma == std::string::npos) fail("feature fact needs a value");
          f.kind = AboxFact::FeatureFact;
          f.o1 = Tokens(args.substr(0, comma)).next();
          Tokens vt(args.substr(comma + 1));
          f.v = parse_value(vt, *dt);
        } else
          fail("unknown predicate '" + pred + "'");
        d.abox.push_back(std::move(f));
      });
    }
    if (lines.done()) fail("unterminated abox block");
    lines.next();
  }

  Dkb run() {
    while (!lines.done()) {
      std::string l = lines.peek();
      std::string kind = first_word(l);
      if (kind == "today") {
        lines.next();
        guarded([&] { d.today = parse_rational(rest_after(l, "today")); });
      } else if (kind == "bridge") {
        lines.next();
        d.bridge = rest_after(l, "bridge");
      } else if (kind == "signature") {
        lines.next();
        parse_signature();
      } else if (kind == "ontology") {
        lines.next();
        parse_ontology();
      } else if (kind == "input") {
        parse_input(lines.next());
      } else if (kind == "table") {
        parse_table(lines.next());
      } else if (kind == "flow") {
        parse_flow(lines.next());
      } else if (kind == "output-table") {
        lines.next();
        d.drg.out_tables.push_back(rest_after(l, "output-table"));
      } else if (kind == "template") {
        lines.next();
        guarded([&] {
          std::string body = rest_after(l, "template");
          std::string name = first_word(body);
          d.templates[name] = parse_concept_text(rest_after(body, name));
        });
      } else if (kind == "abox") {
        lines.next();
        parse_abox();
      } else {
        fail("unknown directive '" + kind + "'");
      }
    }
    auto errs = validate_drg(d.drg);
    for (const auto& e : validate_dkb(d)) errs.push_back(e);
    if (!errs.empty()) throw FormatError(errs.front());
    return std::move(d);
  }
};

}  // namespace

ConceptPtr parse_concept_text(const std::string& text) {
  Tokens t(text);
  auto c = parse_concept(t);
  if (!t.done()) throw FormatError("trailing tokens after concept: '" + t.peek() + "'");
  return c;
}

DerivedPtr parse_derived_text(const std::string& text) {
  Tokens t(text);
  auto e = parse_derived(t);
  if (!t.done()) throw FormatError("trailing tokens after datatype: '" + t.peek() + "'");
  return e;
}

Dkb parse_dkb(const std::string& text) { return Parser(text).run(); }

std::string emit_dkb(const Dkb& d) {
  std::ostringstream o;
  o << "today " << print_rational(d.today) << "\n";
  o << "bridge " << d.bridge << "\n\n";

  o << "signature\n";
  for (const auto& c : d.sig.concepts) o << "  concept " << c << "\n";
  for (const auto& r : d.sig.roles) o << "  role " << r << "\n";
  for (const auto& [f, dt] : d.sig.features) o << "  feature " << f << " " << dt_name(dt) << "\n";
  o << "end\n\n";

  if (!d.background.empty()) {
    o << "ontology\n";
    for (const auto& ax : d.background) switch (ax.kind) {
        case TBoxAxiom::ConceptIncl:
          o << "  axiom " << print_concept(ax.lhs) << " <= " << print_concept(ax.rhs) << "\n";
          break;
        case TBoxAxiom::RoleIncl: o << "  role-incl " << ax.p1 << " " << ax.p2 << "\n"; break;
        case TBoxAxiom::RoleDisj: o << "  role-disj " << ax.p1 << " " << ax.p2 << "\n"; break;
        case TBoxAxiom::FeatureIncl:
          o << "  feature-incl " << ax.p1 << " " << ax.p2 << "\n";
          break;
        case TBoxAxiom::FeatureDisj:
          o << "  feature-disj " << ax.p1 << " " << ax.p2 << "\n";
          break;
      }
    o << "end\n\n";
  }

  for (const auto& i : d.drg.inputs)
    o << "input " << i.name << " " << dt_name(i.dt) << " `" << sfeel_print(i.facet) << "`\n";
  if (!d.drg.inputs.empty()) o << "\n";

  for (const auto& t : d.drg.tables) {
    const char* hit = t.hit == HitPolicy::Unique   ? "unique"
                      : t.hit == HitPolicy::Any    ? "any"
                                                   : "priority";
    o << "table " << t.name << " " << hit << "\n";
    for (const auto& a : t.inputs)
      o << "  in " << a << " " << dt_name(t.atype.at(a)) << " `"
        << sfeel_print(t.infacet.at(a)) << "`\n";
    for (const auto& b : t.outputs) {
      o << "  out " << b << " " << dt_name(t.atype.at(b)) << " { ";
      const auto& range = t.orange.at(b);
      for (std::size_t i = 0; i < range.size(); ++i)
        o << (i ? ", " : "") << range[i].to_text();
      o << " }";
      if (auto it = t.odef.find(b); it != t.odef.end())
        o << " default " << it->second.to_text();
      o << "\n";
    }
    for (const auto& r : t.rules) {
      o << "  rule";
      for (const auto& a : t.inputs) o << " `" << sfeel_print(r.if_entries.at(a)) << "`";
      o << " ->";
      for (const auto& b : t.outputs) o << " " << r.then_entries.at(b).to_text();
      o << "\n";
    }
    o << "end\n\n";
  }

  for (const auto& f : d.drg.flows) {
    o << "flow "
      << (f.source.from_table ? mangled(f.source.table, f.source.attribute)
                              : f.source.input_datum)
      << " -> " << mangled(f.target_table, f.target_attribute) << "\n";
  }
  for (const auto& n : d.drg.out_tables) o << "output-table " << n << "\n";
  for (const auto& [n, c] : d.templates) o << "template " << n << " " << print_concept(c) << "\n";

  if (!d.abox.empty()) {
    o << "\nabox\n";
    for (const auto& f : d.abox) switch (f.kind) {
        case AboxFact::ConceptFact: o << "  " << f.pred << "(" << f.o1 << ")\n"; break;
        case AboxFact::RoleFact:
          o << "  " << f.pred << "(" << f.o1 << ", " << f.o2 << ")\n";
          break;
        case AboxFact::FeatureFact:
          o << "  " << f.pred << "(" << f.o1 << ", " << f.v.to_text() << ")\n";
          break;
      }
    o << "end\n";
  }
  return o.str();
}

}  // namespace dkbv
