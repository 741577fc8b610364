#include "dkbv/datatypes.hpp"

#include <algorithm>
#include <set>

namespace dkbv {

const char* facet_op_text(Facet::Op op) {
  switch (op) {
    case Facet::Eq: return "=";
    case Facet::Lt: return "<";
    case Facet::Leq: return "<=";
    case Facet::Gt: return ">";
    case Facet::Geq: return ">=";
  }
  return "?";
}

FacetFormulaPtr FacetFormula::atom(Facet f) {
  auto n = std::make_shared<FacetFormula>();
  n->kind = Atom;
  n->facet = std::move(f);
  return n;
}
FacetFormulaPtr FacetFormula::conj(FacetFormulaPtr l, FacetFormulaPtr r) {
  auto n = std::make_shared<FacetFormula>();
  n->kind = And;
  n->a = std::move(l);
  n->b = std::move(r);
  return n;
}
FacetFormulaPtr FacetFormula::disj(FacetFormulaPtr l, FacetFormulaPtr r) {
  auto n = std::make_shared<FacetFormula>();
  n->kind = Or;
  n->a = std::move(l);
  n->b = std::move(r);
  return n;
}
FacetFormulaPtr FacetFormula::neg(FacetFormulaPtr c) {
  auto n = std::make_shared<FacetFormula>();
  n->kind = Not;
  n->a = std::move(c);
  return n;
}

static void check_formula(Dt d, const FacetFormulaPtr& f) {
  if (!f) throw ValueError("null facet formula");
  switch (f->kind) {
    case FacetFormula::Atom: {
      const Facet& fc = f->facet;
      if (d == Dt::String) {
        if (fc.op != Facet::Eq) throw ValueError("string facets support = only");
        if (!fc.bound.is_string) throw ValueError("string facet with numeric bound");
      } else {
        if (fc.bound.is_string || fc.bound.dt != d)
          throw ValueError("facet bound datatype mismatch");
      }
      return;
    }
    case FacetFormula::And:
    case FacetFormula::Or:
      check_formula(d, f->a);
      check_formula(d, f->b);
      return;
    case FacetFormula::Not:
      check_formula(d, f->a);
      return;
  }
}

DerivedPtr dt_primitive(Dt d) {
  auto n = std::make_shared<Derived>();
  n->kind = Derived::Primitive;
  n->dt = d;
  return n;
}
static DerivedPtr binop(Derived::Kind k, DerivedPtr a, DerivedPtr b) {
  if (!a || !b) throw ValueError("null derived datatype operand");
  if (a->dt != b->dt) throw ValueError("derived datatype operands over different primitives");
  auto n = std::make_shared<Derived>();
  n->kind = k;
  n->dt = a->dt;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}
DerivedPtr dt_union(DerivedPtr a, DerivedPtr b) { return binop(Derived::Union, std::move(a), std::move(b)); }
DerivedPtr dt_intersection(DerivedPtr a, DerivedPtr b) { return binop(Derived::Intersection, std::move(a), std::move(b)); }
DerivedPtr dt_difference(DerivedPtr a, DerivedPtr b) { return binop(Derived::Difference, std::move(a), std::move(b)); }
DerivedPtr dt_enumeration(Dt d, std::vector<Value> vs) {
  for (const auto& v : vs) {
    if (v.is_string != (d == Dt::String) || (!v.is_string && v.dt != d))
      throw ValueError("enumeration value outside datatype domain");
  }
  auto n = std::make_shared<Derived>();
  n->kind = Derived::Enumeration;
  n->dt = d;
  n->values = std::move(vs);
  return n;
}
DerivedPtr dt_restriction(Dt d, FacetFormulaPtr f) {
  check_formula(d, f);
  auto n = std::make_shared<Derived>();
  n->kind = Derived::Restriction;
  n->dt = d;
  n->facet = std::move(f);
  return n;
}
DerivedPtr dt_facet(Dt d, Facet::Op op, Value bound) {
  Facet f;
  f.op = op;
  f.bound = std::move(bound);
  return dt_restriction(d, FacetFormula::atom(std::move(f)));
}

static bool formula_equal(const FacetFormulaPtr& a, const FacetFormulaPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case FacetFormula::Atom:
      return a->facet.op == b->facet.op && a->facet.bound == b->facet.bound;
    case FacetFormula::Not:
      return formula_equal(a->a, b->a);
    default:
      return formula_equal(a->a, b->a) && formula_equal(a->b, b->b);
  }
}

bool derived_equal(const DerivedPtr& a, const DerivedPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->dt != b->dt) return false;
  switch (a->kind) {
    case Derived::Primitive: return true;
    case Derived::Enumeration: return a->values == b->values;
    case Derived::Restriction: return formula_equal(a->facet, b->facet);
    default: return derived_equal(a->a, b->a) && derived_equal(a->b, b->b);
  }
}

static std::string print_formula(const FacetFormulaPtr& f) {
  switch (f->kind) {
    case FacetFormula::Atom:
      return std::string(facet_op_text(f->facet.op)) + f->facet.bound.to_text();
    case FacetFormula::And:
      return "(" + print_formula(f->a) + " and " + print_formula(f->b) + ")";
    case FacetFormula::Or:
      return "(" + print_formula(f->a) + " or " + print_formula(f->b) + ")";
    case FacetFormula::Not:
      return "not " + print_formula(f->a);
  }
  return "?";
}

std::string print_derived(const DerivedPtr& e) {
  switch (e->kind) {
    case Derived::Primitive:
      return dt_name(e->dt);
    case Derived::Union:
      return "(" + print_derived(e->a) + " union " + print_derived(e->b) + ")";
    case Derived::Intersection:
      return "(" + print_derived(e->a) + " inter " + print_derived(e->b) + ")";
    case Derived::Difference:
      return "(" + print_derived(e->a) + " minus " + print_derived(e->b) + ")";
    case Derived::Enumeration: {
      std::string s = std::string(dt_name(e->dt)) + "{";
      for (std::size_t i = 0; i < e->values.size(); ++i) {
        if (i) s += ", ";
        s += e->values[i].to_text();
      }
      return s + "}";
    }
    case Derived::Restriction:
      return std::string(dt_name(e->dt)) + "[" + print_formula(e->facet) + "]";
  }
  return "?";
}

static bool facet_holds(const Facet& f, const Value& v) {
  if (v.is_string) return f.op == Facet::Eq && v.str == f.bound.str;
  switch (f.op) {
    case Facet::Eq: return v.num == f.bound.num;
    case Facet::Lt: return v.num < f.bound.num;
    case Facet::Leq: return v.num <= f.bound.num;
    case Facet::Gt: return v.num > f.bound.num;
    case Facet::Geq: return v.num >= f.bound.num;
  }
  return false;
}

static bool formula_holds(const FacetFormulaPtr& f, const Value& v) {
  switch (f->kind) {
    case FacetFormula::Atom: return facet_holds(f->facet, v);
    case FacetFormula::And: return formula_holds(f->a, v) && formula_holds(f->b, v);
    case FacetFormula::Or: return formula_holds(f->a, v) || formula_holds(f->b, v);
    case FacetFormula::Not: return !formula_holds(f->a, v);
  }
  return false;
}

bool value_in(const DerivedPtr& e, const Value& v) {
  bool kind_ok = e->dt == Dt::String ? v.is_string : (!v.is_string && v.dt == e->dt);
  if (!kind_ok) throw ValueError("value_in: datatype mismatch");
  switch (e->kind) {
    case Derived::Primitive: return true;
    case Derived::Union: return value_in(e->a, v) || value_in(e->b, v);
    case Derived::Intersection: return value_in(e->a, v) && value_in(e->b, v);
    case Derived::Difference: return value_in(e->a, v) && !value_in(e->b, v);
    case Derived::Enumeration:
      return std::find(e->values.begin(), e->values.end(), v) != e->values.end();
    case Derived::Restriction: return formula_holds(e->facet, v);
  }
  return false;
}

DerivedPtr complement(const DerivedPtr& e) {
  // Involutive on its own output, so repeated negation cannot grow terms.
  if (e->kind == Derived::Difference && e->a->kind == Derived::Primitive) return e->b;
  return dt_difference(dt_primitive(e->dt), e);
}

// --- numeric shapes -------------------------------------------------------

static NumericShape full_shape(Dt d) {
  NumericShape s;
  s.integral = dt_discrete(d);
  s.natural = d == Dt::Natural;
  if (s.natural) s.lower = ShapeBound{Rat(0), false};
  return s;
}

static void canonicalize(NumericShape& s) {
  if (s.natural) {
    if (!s.lower || s.lower->at < 0 || (s.lower->at == 0 && !s.lower->strict))
      s.lower = ShapeBound{Rat(0), false};
  }
  if (s.integral) {
    if (s.lower) {
      Rat l = s.lower->at;
      Int li = rat_ceil(l);
      if (s.lower->strict && Rat(li) == l) ++li;
      s.lower = ShapeBound{Rat(li), false};
    }
    if (s.upper) {
      Rat u = s.upper->at;
      Int ui = rat_floor(u);
      if (s.upper->strict && Rat(ui) == u) --ui;
      s.upper = ShapeBound{Rat(ui), false};
    }
  }
  std::vector<Rat> kept;
  for (const auto& x : s.excluded) {
    if (s.integral && !rat_is_integer(x)) continue;
    if (s.lower && (x < s.lower->at || (x == s.lower->at && s.lower->strict))) continue;
    if (s.upper && (x > s.upper->at || (x == s.upper->at && s.upper->strict))) continue;
    kept.push_back(x);
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  s.excluded = std::move(kept);
}

static NumericShape intersect(const NumericShape& a, const NumericShape& b) {
  NumericShape s;
  s.integral = a.integral || b.integral;
  s.natural = a.natural || b.natural;
  s.lower = a.lower;
  if (b.lower) {
    if (!s.lower || b.lower->at > s.lower->at ||
        (b.lower->at == s.lower->at && b.lower->strict))
      s.lower = b.lower;
  }
  s.upper = a.upper;
  if (b.upper) {
    if (!s.upper || b.upper->at < s.upper->at ||
        (b.upper->at == s.upper->at && b.upper->strict))
      s.upper = b.upper;
  }
  s.excluded = a.excluded;
  s.excluded.insert(s.excluded.end(), b.excluded.begin(), b.excluded.end());
  canonicalize(s);
  return s;
}

bool shape_empty(const NumericShape& s) {
  if (s.lower && s.upper) {
    const Rat& l = s.lower->at;
    const Rat& u = s.upper->at;
    if (l > u) return true;
    if (l == u) {
      if (s.lower->strict || s.upper->strict) return true;
      return std::find(s.excluded.begin(), s.excluded.end(), l) != s.excluded.end();
    }
    if (s.integral) {
      // Canonical integral shapes have non-strict integer bounds.
      Int count = numerator(u) - numerator(l) + 1;
      return count <= Int(s.excluded.size());
    }
  }
  return false;  // a ray or dense non-degenerate interval minus finitely many points
}

std::optional<Rat> shape_witness(const NumericShape& s) {
  if (shape_empty(s)) return std::nullopt;
  auto excluded = [&](const Rat& x) {
    return std::find(s.excluded.begin(), s.excluded.end(), x) != s.excluded.end();
  };
  if (s.integral) {
    if (s.lower) {
      Rat x = s.lower->at;  // canonical: non-strict integer
      while (excluded(x)) x += 1;
      return x;  // non-emptiness guarantees x <= upper when bounded
    }
    if (s.upper) {
      Rat x = s.upper->at;
      while (excluded(x)) x -= 1;
      return x;
    }
    Rat x(0);
    while (excluded(x)) x += 1;
    return x;
  }
  if (s.lower && s.upper && s.lower->at == s.upper->at) return s.lower->at;
  // Scan regions delimited by bounds and excluded points; pick the first
  // non-degenerate one: midpoint inside, bound+/-1 on rays.
  std::vector<Rat> cuts = s.excluded;  // already sorted
  struct Pt { bool inf; Rat at; };
  std::vector<Pt> pts;
  pts.push_back(s.lower ? Pt{false, s.lower->at} : Pt{true, Rat(0)});
  for (const auto& c : cuts) pts.push_back(Pt{false, c});
  pts.push_back(s.upper ? Pt{false, s.upper->at} : Pt{true, Rat(0)});
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Pt& a = pts[i];
    const Pt& b = pts[i + 1];
    if (a.inf && b.inf) return Rat(0);
    if (a.inf) return b.at - 1;
    if (b.inf) return a.at + 1;
    if (a.at < b.at) return (a.at + b.at) / 2;
  }
  return std::nullopt;  // unreachable for non-empty shapes
}

// Union-of-shapes semantics for a facet formula, negation pushed to atoms.
static std::vector<NumericShape> intersect_all(const std::vector<NumericShape>& xs,
                                               const std::vector<NumericShape>& ys) {
  std::vector<NumericShape> out;
  for (const auto& x : xs)
    for (const auto& y : ys) {
      NumericShape s = intersect(x, y);
      if (!shape_empty(s)) out.push_back(s);
    }
  return out;
}

static NumericShape facet_shape(Dt d, Facet::Op op, const Rat& v) {
  NumericShape s = full_shape(d);
  switch (op) {
    case Facet::Eq: s.lower = ShapeBound{v, false}; s.upper = ShapeBound{v, false}; break;
    case Facet::Lt: s.upper = ShapeBound{v, true}; break;
    case Facet::Leq: s.upper = ShapeBound{v, false}; break;
    case Facet::Gt: s.lower = ShapeBound{v, true}; break;
    case Facet::Geq: s.lower = ShapeBound{v, false}; break;
  }
  canonicalize(s);
  return s;
}

static std::vector<NumericShape> formula_shapes(Dt d, const FacetFormulaPtr& f, bool positive) {
  switch (f->kind) {
    case FacetFormula::Atom: {
      const Rat& v = f->facet.bound.num;
      if (positive) return {facet_shape(d, f->facet.op, v)};
      switch (f->facet.op) {
        case Facet::Eq: {
          NumericShape s = full_shape(d);
          s.excluded.push_back(v);
          canonicalize(s);
          return {s};
        }
        case Facet::Lt: return {facet_shape(d, Facet::Geq, v)};
        case Facet::Leq: return {facet_shape(d, Facet::Gt, v)};
        case Facet::Gt: return {facet_shape(d, Facet::Leq, v)};
        case Facet::Geq: return {facet_shape(d, Facet::Lt, v)};
      }
      return {};
    }
    case FacetFormula::And:
    case FacetFormula::Or: {
      bool conj = (f->kind == FacetFormula::And) == positive;
      auto xs = formula_shapes(d, f->a, positive);
      auto ys = formula_shapes(d, f->b, positive);
      if (conj) return intersect_all(xs, ys);
      xs.insert(xs.end(), ys.begin(), ys.end());
      return xs;
    }
    case FacetFormula::Not:
      return formula_shapes(d, f->a, !positive);
  }
  return {};
}

static std::vector<NumericShape> complement_shapes(Dt d, const std::vector<NumericShape>& in);

static std::vector<NumericShape> shapes_of(const DerivedPtr& e) {
  switch (e->kind) {
    case Derived::Primitive:
      return {full_shape(e->dt)};
    case Derived::Union: {
      auto xs = shapes_of(e->a);
      auto ys = shapes_of(e->b);
      xs.insert(xs.end(), ys.begin(), ys.end());
      return xs;
    }
    case Derived::Intersection:
      return intersect_all(shapes_of(e->a), shapes_of(e->b));
    case Derived::Difference:
      return intersect_all(shapes_of(e->a), complement_shapes(e->dt, shapes_of(e->b)));
    case Derived::Enumeration: {
      std::vector<NumericShape> out;
      for (const auto& v : e->values) {
        NumericShape s = full_shape(e->dt);
        s.lower = ShapeBound{v.num, false};
        s.upper = ShapeBound{v.num, false};
        canonicalize(s);
        if (!shape_empty(s)) out.push_back(s);
      }
      return out;
    }
    case Derived::Restriction:
      return formula_shapes(e->dt, e->facet, true);
  }
  return {};
}

static std::vector<NumericShape> complement_shapes(Dt d, const std::vector<NumericShape>& in) {
  std::vector<NumericShape> acc = {full_shape(d)};
  for (const auto& s : in) {
    std::vector<NumericShape> parts;
    if (s.lower) {
      NumericShape p = full_shape(d);
      p.upper = ShapeBound{s.lower->at, !s.lower->strict};
      canonicalize(p);
      if (!shape_empty(p)) parts.push_back(p);
    }
    if (s.upper) {
      NumericShape p = full_shape(d);
      p.lower = ShapeBound{s.upper->at, !s.upper->strict};
      canonicalize(p);
      if (!shape_empty(p)) parts.push_back(p);
    }
    for (const auto& x : s.excluded) {
      NumericShape p = full_shape(d);
      p.lower = ShapeBound{x, false};
      p.upper = ShapeBound{x, false};
      canonicalize(p);
      if (!shape_empty(p)) parts.push_back(p);
    }
    acc = intersect_all(acc, parts);
  }
  return acc;
}

std::vector<NumericShape> normalize_numeric(const std::vector<DerivedPtr>& conj) {
  if (conj.empty()) throw ValueError("normalize_numeric: empty conjunction");
  Dt d = conj.front()->dt;
  if (!dt_numeric(d)) throw ValueError("normalize_numeric: non-numeric datatype");
  std::vector<NumericShape> acc = {full_shape(d)};
  bool any_empty = false;
  for (const auto& e : conj) {
    if (e->dt != d) throw ValueError("dsat: mixed-datatype conjunction");
    auto xs = shapes_of(e);
    std::vector<NumericShape> next;
    for (const auto& a : acc)
      for (const auto& x : xs) next.push_back(intersect(a, x));
    if (next.empty()) any_empty = true;
    acc = std::move(next);
    // Prune empties but keep one representative so the result stays non-vacuous
    // in shape (the spec's normal form may denote the empty set).
    std::vector<NumericShape> kept;
    for (auto& s : acc)
      if (!shape_empty(s)) kept.push_back(std::move(s));
    if (kept.empty() && !acc.empty()) kept.push_back(acc.front());
    if (kept.empty()) any_empty = true;
    acc = std::move(kept);
  }
  if (any_empty && acc.empty()) {
    NumericShape s = full_shape(d);
    s.lower = ShapeBound{Rat(1), false};
    s.upper = ShapeBound{Rat(0), false};
    acc.push_back(s);
  }
  return acc;
}

// --- strings --------------------------------------------------------------

namespace {
struct StringSet {
  bool cofinite = false;       // true: everything except elems
  std::set<std::string> elems;
};

StringSet ss_full() { return {true, {}}; }
StringSet ss_finite(std::set<std::string> e) { return {false, std::move(e)}; }

StringSet ss_complement(const StringSet& a) { return {!a.cofinite, a.elems}; }

StringSet ss_intersect(const StringSet& a, const StringSet& b) {
  if (!a.cofinite && !b.cofinite) {
    std::set<std::string> out;
    for (const auto& x : a.elems)
      if (b.elems.count(x)) out.insert(x);
    return ss_finite(out);
  }
  if (a.cofinite && b.cofinite) {
    std::set<std::string> out = a.elems;
    out.insert(b.elems.begin(), b.elems.end());
    return {true, out};
  }
  const StringSet& fin = a.cofinite ? b : a;
  const StringSet& cof = a.cofinite ? a : b;
  std::set<std::string> out;
  for (const auto& x : fin.elems)
    if (!cof.elems.count(x)) out.insert(x);
  return ss_finite(out);
}

StringSet ss_union(const StringSet& a, const StringSet& b) {
  return ss_complement(ss_intersect(ss_complement(a), ss_complement(b)));
}

StringSet eval_formula_str(const FacetFormulaPtr& f) {
  switch (f->kind) {
    case FacetFormula::Atom:
      return ss_finite({f->facet.bound.str});
    case FacetFormula::And:
      return ss_intersect(eval_formula_str(f->a), eval_formula_str(f->b));
    case FacetFormula::Or:
      return ss_union(eval_formula_str(f->a), eval_formula_str(f->b));
    case FacetFormula::Not:
      return ss_complement(eval_formula_str(f->a));
  }
  return ss_full();
}

StringSet eval_str(const DerivedPtr& e) {
  switch (e->kind) {
    case Derived::Primitive: return ss_full();
    case Derived::Union: return ss_union(eval_str(e->a), eval_str(e->b));
    case Derived::Intersection: return ss_intersect(eval_str(e->a), eval_str(e->b));
    case Derived::Difference:
      return ss_intersect(eval_str(e->a), ss_complement(eval_str(e->b)));
    case Derived::Enumeration: {
      std::set<std::string> out;
      for (const auto& v : e->values) out.insert(v.str);
      return ss_finite(out);
    }
    case Derived::Restriction: return eval_formula_str(e->facet);
  }
  return ss_full();
}
}  // namespace

SatResult dsat(const std::vector<DerivedPtr>& conj) {
  if (conj.empty()) throw ValueError("dsat: empty conjunction");
  Dt d = conj.front()->dt;
  for (const auto& e : conj)
    if (e->dt != d) throw ValueError("dsat: mixed-datatype conjunction");
  SatResult r;
  if (d == Dt::String) {
    StringSet acc = ss_full();
    for (const auto& e : conj) acc = ss_intersect(acc, eval_str(e));
    if (!acc.cofinite) {
      if (acc.elems.empty()) return r;
      r.sat = true;
      r.witness = Value::string(*acc.elems.begin());
      return r;
    }
    for (int i = 0;; ++i) {
      std::string cand = "w" + std::to_string(i);
      if (!acc.elems.count(cand)) {
        r.sat = true;
        r.witness = Value::string(cand);
        return r;
      }
    }
  }
  auto shapes = normalize_numeric(conj);
  for (const auto& s : shapes) {
    if (auto w = shape_witness(s)) {
      r.sat = true;
      r.witness = Value::number(d, *w);
      return r;
    }
  }
  return r;
}

std::optional<Value> witness(const DerivedPtr& e) {
  auto r = dsat({e});
  return r.witness;
}

}  // namespace dkbv
