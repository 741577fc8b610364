#include "support/oracles.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace dkbv::testing {

namespace {
void collect_constants(const FacetFormulaPtr& f, std::vector<Value>& out) {
  switch (f->kind) {
    case FacetFormula::Atom: out.push_back(f->facet.bound); return;
    case FacetFormula::Not: collect_constants(f->a, out); return;
    default:
      collect_constants(f->a, out);
      collect_constants(f->b, out);
  }
}

void collect_constants(const DerivedPtr& e, std::vector<Value>& out) {
  switch (e->kind) {
    case Derived::Primitive: return;
    case Derived::Enumeration:
      out.insert(out.end(), e->values.begin(), e->values.end());
      return;
    case Derived::Restriction: collect_constants(e->facet, out); return;
    default:
      collect_constants(e->a, out);
      collect_constants(e->b, out);
  }
}
}  // namespace

std::vector<Value> representative_points(const std::vector<DerivedPtr>& conj) {
  Dt d = conj.front()->dt;
  std::vector<Value> consts;
  for (const auto& e : conj) collect_constants(e, consts);
  if (d == Dt::String) {
    std::set<std::string> seen;
    std::vector<Value> out;
    for (const auto& v : consts)
      if (seen.insert(v.str).second) out.push_back(v);
    for (int i = 0;; ++i) {
      std::string fresh = "w" + std::to_string(i);
      if (!seen.count(fresh)) {
        out.push_back(Value::string(fresh));
        return out;
      }
    }
  }
  std::vector<Rat> cs;
  for (const auto& v : consts) cs.push_back(v.num);
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  std::set<Rat> points;
  if (cs.empty()) {
    points.insert(Rat(0));
  } else {
    for (const auto& c : cs) points.insert(c);
    for (std::size_t i = 0; i + 1 < cs.size(); ++i) points.insert((cs[i] + cs[i + 1]) / 2);
    points.insert(cs.front() - 1);
    points.insert(cs.back() + 1);
  }
  if (dt_discrete(d)) {
    std::set<Rat> extra;
    for (const auto& p : points) {
      extra.insert(Rat(rat_floor(p)));
      extra.insert(Rat(rat_ceil(p)));
      // Neighbours matter for strict integer bounds.
      extra.insert(Rat(rat_floor(p)) - 1);
      extra.insert(Rat(rat_ceil(p)) + 1);
    }
    points = std::move(extra);
  }
  std::vector<Value> out;
  for (const auto& p : points) {
    if (dt_discrete(d) && !rat_is_integer(p)) continue;
    if (d == Dt::Natural && p < 0) continue;
    out.push_back(Value::number(d, p));
  }
  return out;
}

std::optional<Value> enumerate_sat(const std::vector<DerivedPtr>& conj) {
  for (const auto& v : representative_points(conj)) {
    bool ok = true;
    for (const auto& e : conj)
      if (!value_in(e, v)) {
        ok = false;
        break;
      }
    if (ok) return v;
  }
  return std::nullopt;
}

namespace {
Value random_value(std::mt19937& rng, Dt d) {
  if (d == Dt::String) {
    static const char* pool[] = {"a", "b", "c", "d", "w0", "none"};
    return Value::string(pool[rng() % 6]);
  }
  std::uniform_int_distribution<int> num(-20, 20);
  int n = num(rng);
  if (d == Dt::Natural && n < 0) n = -n;
  if (dt_dense(d) && rng() % 3 == 0) return Value::number(d, Rat(n) + Rat(1, 2));
  return Value::number(d, Rat(n));
}

Facet random_facet(std::mt19937& rng, Dt d) {
  Facet f;
  if (d == Dt::String) {
    f.op = Facet::Eq;
  } else {
    static const Facet::Op ops[] = {Facet::Eq, Facet::Lt, Facet::Leq, Facet::Gt, Facet::Geq};
    f.op = ops[rng() % 5];
  }
  f.bound = random_value(rng, d);
  return f;
}

FacetFormulaPtr random_formula(std::mt19937& rng, Dt d, int depth) {
  if (depth <= 0 || rng() % 3 == 0) return FacetFormula::atom(random_facet(rng, d));
  switch (rng() % 3) {
    case 0:
      return FacetFormula::conj(random_formula(rng, d, depth - 1), random_formula(rng, d, depth - 1));
    case 1:
      return FacetFormula::disj(random_formula(rng, d, depth - 1), random_formula(rng, d, depth - 1));
    default:
      return FacetFormula::neg(random_formula(rng, d, depth - 1));
  }
}
}  // namespace

DerivedPtr random_derived(std::mt19937& rng, Dt d, int depth) {
  if (depth <= 0 || rng() % 4 == 0) {
    switch (rng() % 3) {
      case 0: return dt_primitive(d);
      case 1: {
        std::vector<Value> vs;
        int n = 1 + rng() % 3;
        for (int i = 0; i < n; ++i) vs.push_back(random_value(rng, d));
        return dt_enumeration(d, vs);
      }
      default: return dt_restriction(d, random_formula(rng, d, 2));
    }
  }
  switch (rng() % 3) {
    case 0: return dt_union(random_derived(rng, d, depth - 1), random_derived(rng, d, depth - 1));
    case 1:
      return dt_intersection(random_derived(rng, d, depth - 1), random_derived(rng, d, depth - 1));
    default:
      return dt_difference(random_derived(rng, d, depth - 1), random_derived(rng, d, depth - 1));
  }
}

std::vector<DerivedPtr> random_facet_conjunction(std::mt19937& rng, Dt d, int n) {
  std::vector<DerivedPtr> out;
  for (int i = 0; i < n; ++i) {
    if (d != Dt::String && rng() % 5 == 0) {
      out.push_back(random_derived(rng, d, 1));
    } else {
      Facet f = random_facet(rng, d);
      out.push_back(dt_restriction(d, rng() % 6 == 0
                                          ? FacetFormula::neg(FacetFormula::atom(f))
                                          : FacetFormula::atom(f)));
    }
  }
  return out;
}

bool eval_concept(const FiniteInterp& in, const ConceptPtr& c, int x) {
  switch (c->kind) {
    case Concept::Top: return true;
    case Concept::Bot: return false;
    case Concept::Name: {
      auto it = in.concepts.find(c->name);
      return it != in.concepts.end() && it->second[x];
    }
    case Concept::Not: return !eval_concept(in, c->a, x);
    case Concept::And: return eval_concept(in, c->a, x) && eval_concept(in, c->b, x);
    case Concept::Or: return eval_concept(in, c->a, x) || eval_concept(in, c->b, x);
    case Concept::Exists: {
      auto it = in.roles.find(c->name);
      if (it == in.roles.end()) return false;
      for (int y = 0; y < in.n; ++y)
        if (it->second[x][y] && eval_concept(in, c->a, y)) return true;
      return false;
    }
    case Concept::Forall: {
      auto it = in.roles.find(c->name);
      if (it == in.roles.end()) return true;
      for (int y = 0; y < in.n; ++y)
        if (it->second[x][y] && !eval_concept(in, c->a, y)) return false;
      return true;
    }
    case Concept::ExistsF: {
      auto it = in.features.find(c->name);
      if (it == in.features.end() || !it->second[x]) return false;
      return value_in(c->dtexpr, *it->second[x]);
    }
    case Concept::Undef: {
      auto it = in.features.find(c->name);
      return it == in.features.end() || !it->second[x];
    }
  }
  return false;
}

bool satisfies_kb(const FiniteInterp& in, const Kb& k) {
  auto feature_at = [&](const std::string& f, int x) -> const std::optional<Value>* {
    auto it = in.features.find(f);
    static const std::optional<Value> none;
    return it == in.features.end() ? &none : &it->second[x];
  };
  for (const auto& ax : k.tbox) {
    switch (ax.kind) {
      case TBoxAxiom::ConceptIncl:
        for (int x = 0; x < in.n; ++x)
          if (eval_concept(in, ax.lhs, x) && !eval_concept(in, ax.rhs, x)) return false;
        break;
      case TBoxAxiom::RoleIncl:
      case TBoxAxiom::RoleDisj: {
        auto a = in.roles.find(ax.p1), b = in.roles.find(ax.p2);
        for (int x = 0; x < in.n; ++x)
          for (int y = 0; y < in.n; ++y) {
            bool pa = a != in.roles.end() && a->second[x][y];
            bool pb = b != in.roles.end() && b->second[x][y];
            if (ax.kind == TBoxAxiom::RoleIncl ? (pa && !pb) : (pa && pb)) return false;
          }
        break;
      }
      case TBoxAxiom::FeatureIncl:
        for (int x = 0; x < in.n; ++x) {
          const auto* va = feature_at(ax.p1, x);
          const auto* vb = feature_at(ax.p2, x);
          if (*va && (!*vb || !(**va == **vb))) return false;
        }
        break;
      case TBoxAxiom::FeatureDisj:
        for (int x = 0; x < in.n; ++x) {
          const auto* va = feature_at(ax.p1, x);
          const auto* vb = feature_at(ax.p2, x);
          if (*va && *vb && **va == **vb) return false;
        }
        break;
    }
  }
  for (const auto& f : k.abox) {
    auto ox = in.objects.find(f.o1);
    if (ox == in.objects.end()) return false;
    switch (f.kind) {
      case AboxFact::ConceptFact:
        if (!eval_concept(in, c_name(f.pred), ox->second)) return false;
        break;
      case AboxFact::RoleFact: {
        auto oy = in.objects.find(f.o2);
        auto r = in.roles.find(f.pred);
        if (oy == in.objects.end() || r == in.roles.end() ||
            !r->second[ox->second][oy->second])
          return false;
        break;
      }
      case AboxFact::FeatureFact: {
        const auto* v = feature_at(f.pred, ox->second);
        if (!*v || !(**v == f.v)) return false;
        break;
      }
    }
  }
  return true;
}

const std::vector<Value>& int_pool() {
  static const std::vector<Value> p = {
      Value::number(Dt::Integer, Rat(-2)), Value::number(Dt::Integer, Rat(0)),
      Value::number(Dt::Integer, Rat(1)), Value::number(Dt::Integer, Rat(5))};
  return p;
}
const std::vector<Value>& str_pool() {
  static const std::vector<Value> p = {Value::string("a"), Value::string("b")};
  return p;
}

DlSignature small_signature() {
  DlSignature sig;
  sig.concepts = {"A", "B"};
  sig.roles = {"r", "s"};
  sig.features = {{"f", Dt::Integer}, {"g", Dt::String}};
  return sig;
}

namespace {
DerivedPtr pool_derived(std::mt19937& rng, Dt d) {
  const auto& pool = d == Dt::String ? str_pool() : int_pool();
  switch (d == Dt::String ? rng() % 2 : rng() % 3) {
    case 0: return dt_enumeration(d, {pool[rng() % pool.size()]});
    case 1: {
      if (d == Dt::String)
        return dt_difference(dt_primitive(d), dt_enumeration(d, {pool[rng() % pool.size()]}));
      return dt_enumeration(d, {pool[rng() % pool.size()], pool[rng() % pool.size()]});
    }
    default: {
      static const Facet::Op ops[] = {Facet::Lt, Facet::Leq, Facet::Gt, Facet::Geq};
      return dt_facet(d, ops[rng() % 4], pool[rng() % pool.size()]);
    }
  }
}
}  // namespace

ConceptPtr random_concept(std::mt19937& rng, int depth) {
  if (depth <= 0 || rng() % 3 == 0) {
    switch (rng() % 6) {
      case 0: return c_top();
      case 1: return c_name("A");
      case 2: return c_name("B");
      case 3: return c_existsf("f", pool_derived(rng, Dt::Integer));
      case 4: return c_existsf("g", pool_derived(rng, Dt::String));
      default: return c_undef(rng() % 2 ? "f" : "g");
    }
  }
  switch (rng() % 5) {
    case 0: return c_not(random_concept(rng, depth - 1));
    case 1: return c_and(random_concept(rng, depth - 1), random_concept(rng, depth - 1));
    case 2: return c_or(random_concept(rng, depth - 1), random_concept(rng, depth - 1));
    case 3: return c_exists(rng() % 2 ? "r" : "s", random_concept(rng, depth - 1));
    default: return c_forall(rng() % 2 ? "r" : "s", random_concept(rng, depth - 1));
  }
}

Kb random_kb(std::mt19937& rng) {
  Kb k;
  k.sig = small_signature();
  int nci = 1 + rng() % 3;
  for (int i = 0; i < nci; ++i) {
    TBoxAxiom ax;
    ax.kind = TBoxAxiom::ConceptIncl;
    ax.lhs = random_concept(rng, 2);
    ax.rhs = random_concept(rng, 2);
    k.tbox.push_back(ax);
  }
  if (rng() % 2) {
    TBoxAxiom ax;
    ax.kind = rng() % 2 ? TBoxAxiom::RoleIncl : TBoxAxiom::RoleDisj;
    ax.p1 = "r";
    ax.p2 = "s";
    k.tbox.push_back(ax);
  }
  int nfacts = rng() % 4;
  const char* objs[] = {"o1", "o2"};
  for (int i = 0; i < nfacts; ++i) {
    AboxFact f;
    f.o1 = objs[rng() % 2];
    switch (rng() % 3) {
      case 0:
        f.kind = AboxFact::ConceptFact;
        f.pred = rng() % 2 ? "A" : "B";
        break;
      case 1:
        f.kind = AboxFact::RoleFact;
        f.pred = rng() % 2 ? "r" : "s";
        f.o2 = objs[rng() % 2];
        break;
      default:
        f.kind = AboxFact::FeatureFact;
        if (rng() % 2) {
          f.pred = "f";
          f.v = int_pool()[rng() % int_pool().size()];
        } else {
          f.pred = "g";
          f.v = str_pool()[rng() % str_pool().size()];
        }
        break;
    }
    k.abox.push_back(f);
  }
  return k;
}

FiniteInterp random_interp(std::mt19937& rng, const DlSignature& sig, int n,
                           const std::vector<std::string>& objects) {
  FiniteInterp in;
  in.n = n;
  for (const auto& c : sig.concepts) {
    auto& v = in.concepts[c];
    v.resize(n);
    for (int x = 0; x < n; ++x) v[x] = rng() % 2;
  }
  for (const auto& r : sig.roles) {
    auto& m = in.roles[r];
    m.assign(n, std::vector<char>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) m[x][y] = rng() % 2;
  }
  for (const auto& [f, d] : sig.features) {
    auto& v = in.features[f];
    v.resize(n);
    const auto& pool = d == Dt::String ? str_pool() : int_pool();
    for (int x = 0; x < n; ++x)
      if (rng() % 3) v[x] = pool[rng() % pool.size()];
  }
  for (const auto& o : objects) in.objects[o] = rng() % n;
  return in;
}

std::optional<FiniteInterp> model_search(const Kb& k, int max_n, long budget) {
  std::vector<std::string> objects;
  for (const auto& f : k.abox) {
    objects.push_back(f.o1);
    if (f.kind == AboxFact::RoleFact) objects.push_back(f.o2);
  }
  std::sort(objects.begin(), objects.end());
  objects.erase(std::unique(objects.begin(), objects.end()), objects.end());

  for (int n = 1; n <= max_n; ++n) {
    // Odometer over every assignment slot.
    struct Slot {
      int radix;
      std::function<void(FiniteInterp&, int)> set;
    };
    std::vector<Slot> slots;
    for (const auto& c : k.sig.concepts)
      for (int x = 0; x < n; ++x)
        slots.push_back({2, [c, x](FiniteInterp& in, int v) { in.concepts[c][x] = (char)v; }});
    for (const auto& r : k.sig.roles)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          slots.push_back({2, [r, x, y](FiniteInterp& in, int v) { in.roles[r][x][y] = (char)v; }});
    for (const auto& [f, d] : k.sig.features) {
      const auto& pool = d == Dt::String ? str_pool() : int_pool();
      for (int x = 0; x < n; ++x)
        slots.push_back({(int)pool.size() + 1, [f, &pool, x](FiniteInterp& in, int v) {
                           in.features[f][x] = v ? std::optional<Value>(pool[v - 1]) : std::nullopt;
                         }});
    }
    for (const auto& o : objects)
      slots.push_back({n, [o](FiniteInterp& in, int v) { in.objects[o] = v; }});

    FiniteInterp in;
    in.n = n;
    for (const auto& c : k.sig.concepts) in.concepts[c].resize(n);
    for (const auto& r : k.sig.roles) in.roles[r].assign(n, std::vector<char>(n));
    for (const auto& [f, d] : k.sig.features) {
      (void)d;
      in.features[f].resize(n);
    }
    std::vector<int> digits(slots.size(), 0);
    for (std::size_t i = 0; i < slots.size(); ++i) slots[i].set(in, 0);
    long tried = 0;
    while (tried++ < budget) {
      if (satisfies_kb(in, k)) return in;
      std::size_t i = 0;
      while (i < slots.size()) {
        if (++digits[i] < slots[i].radix) {
          slots[i].set(in, digits[i]);
          break;
        }
        digits[i] = 0;
        slots[i].set(in, 0);
        ++i;
      }
      if (i == slots.size()) break;
    }
  }
  return std::nullopt;
}

namespace {

SfeelCondition rand_num_cond(std::mt19937& rng, Dt d) {
  static const int pool[] = {0, 5, 10, 20};
  auto val = [&] { return Value::number(d, Rat(pool[rng() % 4])); };
  auto simple = [&] {
    SfeelCondition c;
    if (rng() % 3 == 0) {
      c.kind = SfeelCondition::Eq;
      c.value = val();
    } else {
      static const Facet::Op ops[] = {Facet::Lt, Facet::Leq, Facet::Gt, Facet::Geq};
      c.kind = SfeelCondition::Cmp;
      c.cmp = ops[rng() % 4];
      c.value = val();
    }
    return c;
  };
  switch (rng() % 5) {
    case 0: {
      SfeelCondition c;
      c.kind = SfeelCondition::NotEq;
      c.value = val();
      return c;
    }
    case 1: {
      SfeelCondition c;
      c.kind = SfeelCondition::Interval;
      int i = rng() % 3, j = i + 1 + rng() % (3 - i);
      c.lo = Value::number(d, Rat(pool[i]));
      c.hi = Value::number(d, Rat(pool[j]));
      c.lower_open = rng() % 2;
      c.upper_open = rng() % 2;
      return c;
    }
    case 2: {
      SfeelCondition c;
      c.kind = SfeelCondition::Or;
      c.disjuncts = {simple(), simple()};
      return c;
    }
    default: return simple();
  }
}

SfeelCondition rand_str_cond(std::mt19937& rng) {
  static const char* pool[] = {"a", "b", "c"};
  auto val = [&] { return Value::string(pool[rng() % 3]); };
  SfeelCondition c;
  switch (rng() % 3) {
    case 0:
      c.kind = SfeelCondition::Eq;
      c.value = val();
      break;
    case 1:
      c.kind = SfeelCondition::NotEq;
      c.value = val();
      break;
    default: {
      c.kind = SfeelCondition::Or;
      SfeelCondition d1, d2;
      d1.kind = d2.kind = SfeelCondition::Eq;
      d1.value = Value::string("a");
      d2.value = Value::string(rng() % 2 ? "b" : "c");
      c.disjuncts = {d1, d2};
      break;
    }
  }
  return c;
}

bool matches_defined(const SfeelCondition& c, const Value& v) { return sfeel_matches(c, v); }

}  // namespace

DecisionTable random_table(std::mt19937& rng) {
  DecisionTable t;
  t.name = "T";
  int nn = 1 + rng() % 4;
  static const char* nnames[] = {"n1", "n2", "n3", "n4"};
  for (int i = 0; i < nn; ++i) {
    t.inputs.push_back(nnames[i]);
    t.atype[nnames[i]] = rng() % 2 ? Dt::Integer : Dt::Real;
  }
  if (rng() % 2) {
    t.inputs.push_back("s1");
    t.atype["s1"] = Dt::String;
  }
  for (const auto& a : t.inputs) {
    SfeelCondition any;
    if (rng() % 4 == 0)
      t.infacet[a] = t.atype[a] == Dt::String ? rand_str_cond(rng) : rand_num_cond(rng, t.atype[a]);
    else
      t.infacet[a] = any;
  }
  t.outputs = {"out"};
  t.atype["out"] = Dt::String;
  t.orange["out"] = {Value::string("x"), Value::string("y"), Value::string("z")};
  if (rng() % 2) t.odef["out"] = t.orange["out"][rng() % 3];
  static const HitPolicy hits[] = {HitPolicy::Unique, HitPolicy::Any, HitPolicy::Priority};
  t.hit = hits[rng() % 3];
  int nr = 1 + rng() % 8;
  for (int r = 0; r < nr; ++r) {
    Rule rule;
    for (const auto& a : t.inputs) {
      SfeelCondition c;
      if (rng() % 2)
        c = t.atype[a] == Dt::String ? rand_str_cond(rng) : rand_num_cond(rng, t.atype[a]);
      rule.if_entries[a] = c;
    }
    rule.then_entries["out"] = t.orange["out"][rng() % 3];
    t.rules.push_back(std::move(rule));
  }
  return t;
}

std::vector<Value> attribute_grid(const DecisionTable& t, const std::string& a) {
  Dt d = t.atype.at(a);
  std::vector<DerivedPtr> conj = {dt_primitive(d)};
  if (!sfeel_is_any(t.infacet.at(a))) conj.push_back(sfeel_to_derived(t.infacet.at(a), d));
  for (const auto& r : t.rules)
    if (!sfeel_is_any(r.if_entries.at(a))) conj.push_back(sfeel_to_derived(r.if_entries.at(a), d));
  std::vector<Value> out;
  for (const auto& v : representative_points(conj))
    if (matches_defined(t.infacet.at(a), v)) out.push_back(v);
  return out;
}

namespace {
// Can one defined value (or joint undefinedness) satisfy both entries?
bool entries_joint(const DecisionTable& t, const std::string& a, const SfeelCondition& e1,
                   const SfeelCondition& e2) {
  if (sfeel_is_any(e1) && sfeel_is_any(e2)) return true;
  for (const auto& v : attribute_grid(t, a))
    if (matches_defined(e1, v) && matches_defined(e2, v)) return true;
  return false;
}

bool rules_overlap(const DecisionTable& t, std::size_t r1, std::size_t r2) {
  for (const auto& a : t.inputs)
    if (!entries_joint(t, a, t.rules[r1].if_entries.at(a), t.rules[r2].if_entries.at(a)))
      return false;
  return true;
}
}  // namespace

bool grid_unique_hit(const DecisionTable& t) {
  for (std::size_t i = 0; i < t.rules.size(); ++i)
    for (std::size_t j = i + 1; j < t.rules.size(); ++j)
      if (rules_overlap(t, i, j)) return false;
  return true;
}

bool grid_any_hit(const DecisionTable& t) {
  for (std::size_t i = 0; i < t.rules.size(); ++i)
    for (std::size_t j = i + 1; j < t.rules.size(); ++j)
      if (t.rules[i].then_entries != t.rules[j].then_entries && rules_overlap(t, i, j))
        return false;
  return true;
}

bool grid_priority_hit(const DecisionTable& t, std::set<std::size_t>* masked) {
  RuleOrder order = rule_order(t);
  std::set<std::size_t> out;
  for (std::size_t j = 0; j < order.size(); ++j) {
    std::size_t r2 = order[j];
    // Guard of r2 satisfiable at all (per attribute; constraints are unary)?
    bool sat2 = true;
    for (const auto& a : t.inputs) {
      const SfeelCondition& e2 = t.rules[r2].if_entries.at(a);
      if (sfeel_is_any(e2)) continue;
      bool any = false;
      for (const auto& v : attribute_grid(t, a))
        if (matches_defined(e2, v)) any = true;
      if (!any) sat2 = false;
    }
    for (std::size_t i = 0; i < j; ++i) {
      std::size_t r1 = order[i];
      if (!sat2) {
        out.insert(r2);
        break;
      }
      // r2 escapes r1 iff some attribute can satisfy e2 while failing e1.
      bool breakable = false;
      for (const auto& a : t.inputs) {
        const SfeelCondition& e1 = t.rules[r1].if_entries.at(a);
        const SfeelCondition& e2 = t.rules[r2].if_entries.at(a);
        if (sfeel_is_any(e1)) continue;
        if (sfeel_is_any(e2)) {
          breakable = true;  // leave the attribute undefined
          break;
        }
        for (const auto& v : attribute_grid(t, a))
          if (matches_defined(e2, v) && !matches_defined(e1, v)) {
            breakable = true;
            break;
          }
        if (breakable) break;
      }
      if (!breakable) {
        out.insert(r2);
        break;
      }
    }
  }
  if (masked) *masked = out;
  return out.empty();
}

bool grid_complete(const DecisionTable& t) {
  bool all_defaulted = true;
  for (const auto& b : t.outputs)
    if (!t.odef.count(b)) all_defaulted = false;
  if (all_defaulted) return true;

  std::vector<std::vector<Value>> grids;
  for (const auto& a : t.inputs) grids.push_back(attribute_grid(t, a));
  for (const auto& g : grids)
    if (g.empty()) return true;  // facet empty: no admissible input at all
  std::vector<std::size_t> digits(grids.size(), 0);
  while (true) {
    bool fired = false;
    for (const auto& r : t.rules) {
      bool m = true;
      for (std::size_t i = 0; i < t.inputs.size(); ++i)
        if (!matches_defined(r.if_entries.at(t.inputs[i]), grids[i][digits[i]])) {
          m = false;
          break;
        }
      if (m) {
        fired = true;
        break;
      }
    }
    if (!fired) return false;
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == grids[i].size()) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return true;
}

std::map<FreeInput, Value> random_assignment(std::mt19937& rng, const DecisionTable& t) {
  std::map<FreeInput, Value> out;
  for (const auto& a : t.inputs) {
    auto g = attribute_grid(t, a);
    if (g.empty()) continue;
    FreeInput f;
    f.is_datum = true;
    f.datum = a;
    out.emplace(f, g[rng() % g.size()]);
  }
  return out;
}

}  // namespace dkbv::testing
