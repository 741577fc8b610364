#include "dkbv/dl.hpp"

#include <functional>

namespace dkbv {

namespace {
ConceptPtr mk(Concept c) { return std::make_shared<const Concept>(std::move(c)); }
}  // namespace

ConceptPtr c_top() {
  static ConceptPtr t = mk({Concept::Top});
  return t;
}
ConceptPtr c_bot() {
  static ConceptPtr b = mk({Concept::Bot});
  return b;
}
ConceptPtr c_name(std::string n) {
  Concept c;
  c.kind = Concept::Name;
  c.name = std::move(n);
  return mk(std::move(c));
}
ConceptPtr c_not(ConceptPtr x) {
  Concept c;
  c.kind = Concept::Not;
  c.a = std::move(x);
  return mk(std::move(c));
}
ConceptPtr c_and(ConceptPtr a, ConceptPtr b) {
  Concept c;
  c.kind = Concept::And;
  c.a = std::move(a);
  c.b = std::move(b);
  return mk(std::move(c));
}
ConceptPtr c_or(ConceptPtr a, ConceptPtr b) {
  Concept c;
  c.kind = Concept::Or;
  c.a = std::move(a);
  c.b = std::move(b);
  return mk(std::move(c));
}
ConceptPtr c_exists(std::string role, ConceptPtr x) {
  Concept c;
  c.kind = Concept::Exists;
  c.name = std::move(role);
  c.a = std::move(x);
  return mk(std::move(c));
}
ConceptPtr c_forall(std::string role, ConceptPtr x) {
  Concept c;
  c.kind = Concept::Forall;
  c.name = std::move(role);
  c.a = std::move(x);
  return mk(std::move(c));
}
ConceptPtr c_existsf(std::string feature, DerivedPtr e) {
  Concept c;
  c.kind = Concept::ExistsF;
  c.name = std::move(feature);
  c.dtexpr = std::move(e);
  return mk(std::move(c));
}
ConceptPtr c_undef(std::string feature) {
  Concept c;
  c.kind = Concept::Undef;
  c.name = std::move(feature);
  return mk(std::move(c));
}

ConceptPtr c_and_all(std::vector<ConceptPtr> cs) {
  if (cs.empty()) return c_top();
  ConceptPtr acc = cs.back();
  for (std::size_t i = cs.size() - 1; i-- > 0;) acc = c_and(cs[i], acc);
  return acc;
}
ConceptPtr c_or_all(std::vector<ConceptPtr> cs) {
  if (cs.empty()) return c_bot();
  ConceptPtr acc = cs.back();
  for (std::size_t i = cs.size() - 1; i-- > 0;) acc = c_or(cs[i], acc);
  return acc;
}

std::string print_concept(const ConceptPtr& c) {
  switch (c->kind) {
    case Concept::Top: return "top";
    case Concept::Bot: return "bot";
    case Concept::Name: return c->name;
    case Concept::Not: return "not " + print_concept(c->a);
    case Concept::And: return "(" + print_concept(c->a) + " and " + print_concept(c->b) + ")";
    case Concept::Or: return "(" + print_concept(c->a) + " or " + print_concept(c->b) + ")";
    case Concept::Exists: return "(some " + c->name + " " + print_concept(c->a) + ")";
    case Concept::Forall: return "(only " + c->name + " " + print_concept(c->a) + ")";
    case Concept::ExistsF: return "(some " + c->name + " " + print_derived(c->dtexpr) + ")";
    case Concept::Undef: return "(undef " + c->name + ")";
  }
  return "?";
}

bool concept_equal(const ConceptPtr& a, const ConceptPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind || a->name != b->name) return false;
  switch (a->kind) {
    case Concept::Top:
    case Concept::Bot:
    case Concept::Name:
    case Concept::Undef: return true;
    case Concept::Not:
    case Concept::Exists:
    case Concept::Forall: return concept_equal(a->a, b->a);
    case Concept::And:
    case Concept::Or: return concept_equal(a->a, b->a) && concept_equal(a->b, b->b);
    case Concept::ExistsF: return derived_equal(a->dtexpr, b->dtexpr);
  }
  return false;
}

namespace {
void check_concept(const ConceptPtr& c, const DlSignature& sig, std::vector<std::string>& out) {
  switch (c->kind) {
    case Concept::Top:
    case Concept::Bot: return;
    case Concept::Name:
      if (!sig.concepts.count(c->name)) out.push_back("unknown concept name " + c->name);
      return;
    case Concept::Not: check_concept(c->a, sig, out); return;
    case Concept::And:
    case Concept::Or:
      check_concept(c->a, sig, out);
      check_concept(c->b, sig, out);
      return;
    case Concept::Exists:
    case Concept::Forall:
      if (!sig.roles.count(c->name)) out.push_back("unknown role " + c->name);
      check_concept(c->a, sig, out);
      return;
    case Concept::ExistsF: {
      auto it = sig.features.find(c->name);
      if (it == sig.features.end())
        out.push_back("unknown feature " + c->name);
      else if (it->second != c->dtexpr->dt)
        out.push_back("feature " + c->name + " restricted by mismatched datatype");
      return;
    }
    case Concept::Undef:
      if (!sig.features.count(c->name)) out.push_back("unknown feature " + c->name);
      return;
  }
}
}  // namespace

std::vector<std::string> validate_kb(const Kb& k) {
  std::vector<std::string> out;
  for (const auto& n : k.sig.roles)
    if (k.sig.concepts.count(n)) out.push_back("name used as both concept and role: " + n);
  for (const auto& [n, d] : k.sig.features) {
    (void)d;
    if (k.sig.concepts.count(n)) out.push_back("name used as both concept and feature: " + n);
    if (k.sig.roles.count(n)) out.push_back("name used as both role and feature: " + n);
  }
  auto check_feature_pair = [&](const std::string& a, const std::string& b, const char* what) {
    auto ia = k.sig.features.find(a), ib = k.sig.features.find(b);
    if (ia == k.sig.features.end()) out.push_back(std::string("unknown feature ") + a);
    if (ib == k.sig.features.end()) out.push_back(std::string("unknown feature ") + b);
    if (ia != k.sig.features.end() && ib != k.sig.features.end() && ia->second != ib->second)
      out.push_back(std::string(what) + " between features of different datatypes: " + a + ", " + b);
  };
  for (const auto& ax : k.tbox) {
    switch (ax.kind) {
      case TBoxAxiom::ConceptIncl:
        check_concept(ax.lhs, k.sig, out);
        check_concept(ax.rhs, k.sig, out);
        break;
      case TBoxAxiom::RoleIncl:
      case TBoxAxiom::RoleDisj:
        if (!k.sig.roles.count(ax.p1)) out.push_back("unknown role " + ax.p1);
        if (!k.sig.roles.count(ax.p2)) out.push_back("unknown role " + ax.p2);
        break;
      case TBoxAxiom::FeatureIncl: check_feature_pair(ax.p1, ax.p2, "feature inclusion"); break;
      case TBoxAxiom::FeatureDisj: check_feature_pair(ax.p1, ax.p2, "feature disjointness"); break;
    }
  }
  for (const auto& f : k.abox) {
    switch (f.kind) {
      case AboxFact::ConceptFact:
        if (!k.sig.concepts.count(f.pred)) out.push_back("unknown concept name " + f.pred);
        break;
      case AboxFact::RoleFact:
        if (!k.sig.roles.count(f.pred)) out.push_back("unknown role " + f.pred);
        break;
      case AboxFact::FeatureFact: {
        auto it = k.sig.features.find(f.pred);
        if (it == k.sig.features.end())
          out.push_back("unknown feature " + f.pred);
        else if (it->second != f.v.dt)
          out.push_back("feature assertion " + f.pred + " with wrong value datatype");
        break;
      }
    }
  }
  return out;
}

namespace {
Dt feature_dt(const DlSignature& sig, const std::string& f) {
  auto it = sig.features.find(f);
  if (it == sig.features.end()) throw DlError("unknown feature " + f);
  return it->second;
}

ConceptPtr nnf_pos(const ConceptPtr& c, const DlSignature& sig);

ConceptPtr nnf_neg(const ConceptPtr& c, const DlSignature& sig) {
  switch (c->kind) {
    case Concept::Top: return c_bot();
    case Concept::Bot: return c_top();
    case Concept::Name: return c_not(c);
    case Concept::Not: return nnf_pos(c->a, sig);
    case Concept::And: return c_or(nnf_neg(c->a, sig), nnf_neg(c->b, sig));
    case Concept::Or: return c_and(nnf_neg(c->a, sig), nnf_neg(c->b, sig));
    case Concept::Exists: return c_forall(c->name, nnf_neg(c->a, sig));
    case Concept::Forall: return c_exists(c->name, nnf_neg(c->a, sig));
    case Concept::ExistsF:
      return c_or(c_undef(c->name), c_existsf(c->name, complement(c->dtexpr)));
    case Concept::Undef:
      return c_existsf(c->name, dt_primitive(feature_dt(sig, c->name)));
  }
  return c;
}

ConceptPtr nnf_pos(const ConceptPtr& c, const DlSignature& sig) {
  switch (c->kind) {
    case Concept::Top:
    case Concept::Bot:
    case Concept::Name:
    case Concept::ExistsF:
    case Concept::Undef: return c;
    case Concept::Not: return nnf_neg(c->a, sig);
    case Concept::And: return c_and(nnf_pos(c->a, sig), nnf_pos(c->b, sig));
    case Concept::Or: return c_or(nnf_pos(c->a, sig), nnf_pos(c->b, sig));
    case Concept::Exists: return c_exists(c->name, nnf_pos(c->a, sig));
    case Concept::Forall: return c_forall(c->name, nnf_pos(c->a, sig));
  }
  return c;
}
}  // namespace

ConceptPtr nnf(const ConceptPtr& c, const DlSignature& sig) { return nnf_pos(c, sig); }

ConceptPtr desugar_feature_forall(const std::string& feature, DerivedPtr e) {
  return c_or(c_undef(feature), c_existsf(feature, std::move(e)));
}

ClosureResult closure(const Kb& k) {
  std::map<std::string, ConceptPtr> seen;
  std::function<void(const ConceptPtr&)> add = [&](const ConceptPtr& c) {
    std::string key = print_concept(c);
    if (seen.count(key)) return;
    seen.emplace(std::move(key), c);
    switch (c->kind) {
      case Concept::Not:
      case Concept::Exists:
      case Concept::Forall: add(c->a); break;
      case Concept::And:
      case Concept::Or:
        add(c->a);
        add(c->b);
        break;
      default: break;
    }
  };
  for (const auto& ax : k.tbox)
    if (ax.kind == TBoxAxiom::ConceptIncl) {
      add(ax.lhs);
      add(ax.rhs);
    }
  std::set<std::string> objects;
  for (const auto& f : k.abox) {
    if (f.kind == AboxFact::ConceptFact) add(c_name(f.pred));
    objects.insert(f.o1);
    if (f.kind == AboxFact::RoleFact) objects.insert(f.o2);
  }
  ClosureResult r;
  for (auto& [key, c] : seen) {
    (void)key;
    r.concepts.push_back(c);
  }
  r.objects.assign(objects.begin(), objects.end());
  return r;
}

std::vector<DerivedPtr> gamma(const Kb& k, Dt d) {
  std::vector<DerivedPtr> out;
  std::set<std::string> seen;
  std::function<void(const ConceptPtr&)> walk = [&](const ConceptPtr& c) {
    switch (c->kind) {
      case Concept::ExistsF:
        if (c->dtexpr->dt == d && seen.insert(print_derived(c->dtexpr)).second)
          out.push_back(c->dtexpr);
        break;
      case Concept::Not:
      case Concept::Exists:
      case Concept::Forall: walk(c->a); break;
      case Concept::And:
      case Concept::Or:
        walk(c->a);
        walk(c->b);
        break;
      default: break;
    }
  };
  for (const auto& ax : k.tbox)
    if (ax.kind == TBoxAxiom::ConceptIncl) {
      walk(ax.lhs);
      walk(ax.rhs);
    }
  return out;
}

}  // namespace dkbv
