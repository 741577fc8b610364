#include "dkbv/reasoner.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <numeric>

namespace dkbv {

namespace {

using Lit = std::pair<int, bool>;  // closure concept id, required truth

struct UnionFind {
  std::map<std::string, std::string> up;
  const std::string& find(const std::string& x) {
    auto it = up.find(x);
    if (it == up.end()) {
      up[x] = x;
      return up.find(x)->first;
    }
    if (it->second == x) return it->second;
    it->second = find(it->second);
    return it->second;
  }
  void unite(const std::string& a, const std::string& b) { up[find(a)] = find(b); }
};

struct Engine {
  const Kb& kb;
  ReasonerOptions opt;

  std::vector<ConceptPtr> cs;
  std::map<std::string, int> idx;
  int N = 0;

  std::vector<int> childA, childB;
  std::vector<std::vector<int>> parents;
  std::vector<std::vector<int>> ci_fwd;  // lhs id -> rhs ids
  std::vector<std::vector<int>> ci_bwd;  // rhs id -> lhs ids
  std::vector<int> exists_ids, forall_ids;

  std::map<std::string, std::set<std::string>> rclo;  // reflexive-transitive role closure
  std::vector<std::pair<std::string, std::string>> rdisj;

  std::map<std::string, std::set<std::string>> fup, fdown;  // reflexive-transitive
  std::vector<std::pair<std::string, std::string>> fdisj;
  std::map<std::string, std::vector<int>> existsf_atoms, undef_atoms;

  std::vector<std::string> objects;
  std::map<std::pair<int, int>, std::set<std::string>> edges;
  std::map<int, std::multimap<std::string, Value>> facts;
  std::vector<Lit> init_common;                 // per-element (Top/Bot)
  std::map<int, std::vector<Lit>> init_object;  // ABox concept facts

  // successor-demand support memo; keys are serialized demands
  std::map<std::string, char> memo;  // 1 supported, 2 unsupported
  // Provisionally supported demands (their truth leans on an ancestor still
  // on the stack); value is the depth of that ancestor. Valid until it pops.
  std::map<std::string, int> tentative;
  std::map<std::string, int> stackpos;
  int stack_depth = 0;

  explicit Engine(const Kb& k, const ReasonerOptions& o) : kb(k), opt(o) { build(); }

  int intern(const ConceptPtr& c) {
    std::string key = print_concept(c);
    auto it = idx.find(key);
    if (it != idx.end()) return it->second;
    int id = (int)cs.size();
    idx.emplace(std::move(key), id);
    cs.push_back(c);
    childA.push_back(-1);
    childB.push_back(-1);
    switch (c->kind) {
      case Concept::Not:
      case Concept::Exists:
      case Concept::Forall: childA[id] = intern(c->a); break;
      case Concept::And:
      case Concept::Or:
        childA[id] = intern(c->a);
        childB[id] = intern(c->b);
        break;
      default: break;
    }
    return id;
  }

  void build() {
    for (const auto& ax : kb.tbox)
      if (ax.kind == TBoxAxiom::ConceptIncl) {
        intern(ax.lhs);
        intern(ax.rhs);
      }
    for (const auto& f : kb.abox)
      if (f.kind == AboxFact::ConceptFact) intern(c_name(f.pred));
    N = (int)cs.size();
    if ((std::size_t)N > opt.closure_limit)
      throw ResourceError("closure size " + std::to_string(N) + " exceeds limit " +
                          std::to_string(opt.closure_limit));

    parents.assign(N, {});
    ci_fwd.assign(N, {});
    ci_bwd.assign(N, {});
    for (int i = 0; i < N; ++i) {
      if (childA[i] >= 0) parents[childA[i]].push_back(i);
      if (childB[i] >= 0) parents[childB[i]].push_back(i);
      switch (cs[i]->kind) {
        case Concept::Exists: exists_ids.push_back(i); break;
        case Concept::Forall: forall_ids.push_back(i); break;
        case Concept::ExistsF: existsf_atoms[cs[i]->name].push_back(i); break;
        case Concept::Undef: undef_atoms[cs[i]->name].push_back(i); break;
        default: break;
      }
    }
    for (const auto& ax : kb.tbox)
      if (ax.kind == TBoxAxiom::ConceptIncl) {
        int l = idx.at(print_concept(ax.lhs)), r = idx.at(print_concept(ax.rhs));
        ci_fwd[l].push_back(r);
        ci_bwd[r].push_back(l);
      }

    // Role and feature hierarchies as reflexive-transitive closures.
    auto close = [](std::map<std::string, std::set<std::string>>& m,
                    const std::set<std::string>& names) {
      for (const auto& n : names) m[n].insert(n);
      bool changed = true;
      while (changed) {
        changed = false;
        for (auto& [n, ups] : m) {
          std::set<std::string> add;
          for (const auto& u : ups)
            if (m.count(u))
              for (const auto& uu : m.at(u))
                if (!ups.count(uu)) add.insert(uu);
          if (!add.empty()) {
            ups.insert(add.begin(), add.end());
            changed = true;
          }
        }
      }
    };
    std::set<std::string> fnames;
    for (const auto& [f, d] : kb.sig.features) {
      (void)d;
      fnames.insert(f);
    }
    for (const auto& ax : kb.tbox) {
      if (ax.kind == TBoxAxiom::RoleIncl) rclo[ax.p1].insert(ax.p2);
      if (ax.kind == TBoxAxiom::RoleDisj) rdisj.emplace_back(ax.p1, ax.p2);
      if (ax.kind == TBoxAxiom::FeatureIncl) fup[ax.p1].insert(ax.p2);
      if (ax.kind == TBoxAxiom::FeatureDisj) fdisj.emplace_back(ax.p1, ax.p2);
    }
    close(rclo, kb.sig.roles);
    close(fup, fnames);
    for (const auto& [f, ups] : fup)
      for (const auto& g : ups) fdown[g].insert(f);

    // Elements and ABox-derived constraints.
    std::map<std::string, int> oidx;
    auto obj = [&](const std::string& o) {
      auto it = oidx.find(o);
      if (it != oidx.end()) return it->second;
      int id = (int)objects.size();
      oidx.emplace(o, id);
      objects.push_back(o);
      return id;
    };
    for (const auto& f : kb.abox) {
      int o1 = obj(f.o1);
      switch (f.kind) {
        case AboxFact::ConceptFact:
          init_object[o1].push_back({idx.at(f.pred), true});
          break;
        case AboxFact::RoleFact: {
          int o2 = obj(f.o2);
          const auto& ups = rclo.at(f.pred);
          edges[{o1, o2}].insert(ups.begin(), ups.end());
          break;
        }
        case AboxFact::FeatureFact: facts[o1].insert({f.pred, f.v}); break;
      }
    }
    if (objects.empty()) objects.push_back("element");
    for (int i = 0; i < N; ++i) {
      if (cs[i]->kind == Concept::Top) init_common.push_back({i, true});
      if (cs[i]->kind == Concept::Bot) init_common.push_back({i, false});
    }
  }

  bool role_set_clashes(const std::set<std::string>& rho) const {
    for (const auto& [a, b] : rdisj)
      if (rho.count(a) && rho.count(b)) return true;
    return false;
  }

  Dt feature_dt(const std::string& f) const { return kb.sig.features.at(f); }
};

struct Search;
bool element_demands_ok(Engine& E, Search& s, int e, int depth, int& lowdep);

// One satisfiability search over a fixed set of elements (the ABox objects,
// or a single anonymous element for successor demands).
struct Search {
  Engine& E;
  int m;
  const std::map<std::pair<int, int>, std::set<std::string>>* edges;  // null: none
  const std::map<int, std::multimap<std::string, Value>>* facts;      // null: none

  std::vector<signed char> a;  // 0 unknown, 1 true, 2 false
  std::vector<int> trail;
  std::vector<int> queue;
  bool conflict = false;
  std::vector<int> decision_order;
  // Context for successor-demand checks fired from inside the search.
  int demand_depth = 0;
  int* demand_lowdep = nullptr;

  Search(Engine& e, int elems, const std::map<std::pair<int, int>, std::set<std::string>>* ed,
         const std::map<int, std::multimap<std::string, Value>>* fa)
      : E(e), m(elems), edges(ed), facts(fa) {
    a.assign((std::size_t)m * E.N, 0);
    // Only atoms are decision variables; composite nodes follow from their
    // children by propagation. Quantifier atoms come first so successor
    // demands can prune before the feature/name enumeration starts.
    auto rank = [&](int c) {
      switch (E.cs[c]->kind) {
        case Concept::Exists:
        case Concept::Forall: return 0;
        case Concept::ExistsF:
        case Concept::Undef: return 1;
        case Concept::Name: return 2;
        default: return 3;
      }
    };
    for (int c = 0; c < E.N; ++c)
      if (rank(c) < 3) decision_order.push_back(c);
    std::stable_sort(decision_order.begin(), decision_order.end(),
                     [&](int x, int y) { return rank(x) < rank(y); });
  }

  int vid(int e, int c) const { return e * E.N + c; }
  signed char val(int e, int c) const { return a[vid(e, c)]; }

  bool assign(int e, int c, bool v) {
    signed char& slot = a[vid(e, c)];
    signed char want = v ? 1 : 2;
    if (slot == want) return true;
    if (slot != 0) {
      conflict = true;
      return false;
    }
    slot = want;
    trail.push_back(vid(e, c));
    queue.push_back(vid(e, c));
    return true;
  }

  // Re-derives whatever follows for node c of element e from the current
  // partial assignment.
  void eval_node(int e, int c) {
    if (conflict) return;
    int ca = E.childA[c], cb = E.childB[c];
    signed char sv = val(e, c);
    switch (E.cs[c]->kind) {
      case Concept::Not: {
        signed char av = val(e, ca);
        if (sv == 1) assign(e, ca, false);
        else if (sv == 2) assign(e, ca, true);
        if (av == 1) assign(e, c, false);
        else if (av == 2) assign(e, c, true);
        break;
      }
      case Concept::And: {
        signed char av = val(e, ca), bv = val(e, cb);
        if (sv == 1) {
          assign(e, ca, true);
          assign(e, cb, true);
        } else if (sv == 2) {
          if (av == 1) assign(e, cb, false);
          if (bv == 1) assign(e, ca, false);
        }
        if (av == 2 || bv == 2) assign(e, c, false);
        else if (av == 1 && bv == 1) assign(e, c, true);
        break;
      }
      case Concept::Or: {
        signed char av = val(e, ca), bv = val(e, cb);
        if (sv == 2) {
          assign(e, ca, false);
          assign(e, cb, false);
        } else if (sv == 1) {
          if (av == 2) assign(e, cb, true);
          if (bv == 2) assign(e, ca, true);
        }
        if (av == 1 || bv == 1) assign(e, c, true);
        else if (av == 2 && bv == 2) assign(e, c, false);
        break;
      }
      default: break;
    }
  }

  void on_assigned(int v) {
    int e = v / E.N, c = v % E.N;
    signed char sv = a[v];
    eval_node(e, c);
    for (int p : E.parents[c]) eval_node(e, p);
    if (sv == 1)
      for (int r : E.ci_fwd[c]) assign(e, r, true);
    if (sv == 2)
      for (int l : E.ci_bwd[c]) assign(e, l, false);
    if (conflict) return;

    const ConceptPtr& cc = E.cs[c];
    if (edges && (cc->kind == Concept::Forall || cc->kind == Concept::Exists)) {
      bool forward = cc->kind == Concept::Forall ? sv == 1 : sv == 2;
      if (forward) {
        for (const auto& [pair, rho] : *edges)
          if (pair.first == e && rho.count(cc->name))
            assign(pair.second, E.childA[c], cc->kind == Concept::Forall);
      }
    }
    if (cc->kind == Concept::ExistsF || cc->kind == Concept::Undef) {
      const std::string& f = cc->name;
      if (cc->kind == Concept::ExistsF && sv == 1) {
        for (const auto& g : E.fup.at(f))
          if (auto it = E.undef_atoms.find(g); it != E.undef_atoms.end())
            for (int u : it->second) assign(e, u, false);
      }
      if (cc->kind == Concept::Undef && sv == 1) {
        for (const auto& h : E.fdown.at(f)) {
          if (auto it = E.existsf_atoms.find(h); it != E.existsf_atoms.end())
            for (int x : it->second) assign(e, x, false);
          if (auto it = E.undef_atoms.find(h); it != E.undef_atoms.end())
            for (int u : it->second) assign(e, u, true);
        }
      }
      if (cc->kind == Concept::Undef && sv == 2) {
        for (const auto& g : E.fup.at(f))
          if (auto it = E.undef_atoms.find(g); it != E.undef_atoms.end())
            for (int u : it->second) assign(e, u, false);
      }
      if (!conflict && !feature_check(e, false, nullptr)) conflict = true;
    }
  }

  bool propagate() {
    while (!queue.empty() && !conflict) {
      int v = queue.back();
      queue.pop_back();
      on_assigned(v);
    }
    if (conflict) queue.clear();
    return !conflict;
  }

  // Feature theory for element e. In complete mode also resolves feature
  // disjointness and reports chosen values.
  bool feature_check(int e, bool complete, std::map<std::string, Value>* out) {
    const std::multimap<std::string, Value>* ef = nullptr;
    if (facts) {
      auto it = facts->find(e);
      if (it != facts->end()) ef = &it->second;
    }
    std::set<std::string> forced;
    auto force = [&](const std::string& f) {
      for (const auto& g : E.fup.at(f)) forced.insert(g);
    };
    for (const auto& [f, atoms] : E.existsf_atoms)
      for (int x : atoms)
        if (val(e, x) == 1) force(f);
    for (const auto& [f, atoms] : E.undef_atoms)
      for (int u : atoms)
        if (val(e, u) == 2) force(f);
    if (ef)
      for (const auto& [f, v] : *ef) {
        (void)v;
        force(f);
      }
    for (const auto& f : forced)
      if (auto it = E.undef_atoms.find(f); it != E.undef_atoms.end())
        for (int u : it->second)
          if (val(e, u) == 1) return false;

    UnionFind uf;
    for (const auto& f : forced)
      for (const auto& g : E.fup.at(f))
        if (forced.count(g)) uf.unite(f, g);

    std::map<std::string, std::vector<DerivedPtr>> conj;
    for (const auto& f : forced) {
      const std::string& cls = uf.find(f);
      auto& c = conj[cls];
      if (c.empty()) c.push_back(dt_primitive(E.feature_dt(f)));
      if (auto it = E.existsf_atoms.find(f); it != E.existsf_atoms.end())
        for (int x : it->second) {
          if (val(e, x) == 1) c.push_back(E.cs[x]->dtexpr);
          if (val(e, x) == 2) c.push_back(complement(E.cs[x]->dtexpr));
        }
      if (ef)
        for (auto [it, end] = ef->equal_range(f); it != end; ++it)
          c.push_back(dt_enumeration(it->second.dt, {it->second}));
    }
    std::map<std::string, Value> witness;
    for (auto& [cls, c] : conj) {
      auto r = dsat(c);
      if (!r.sat) return false;
      if (complete) witness.emplace(cls, *r.witness);
    }
    if (!complete) return true;

    // Feature disjointness needs distinct values for distinct classes.
    for (int round = 0; round < 8; ++round) {
      bool collision = false;
      for (const auto& [f1, f2] : E.fdisj) {
        if (!forced.count(f1) || !forced.count(f2)) continue;
        const std::string& c1 = uf.find(f1);
        const std::string& c2 = uf.find(f2);
        if (c1 == c2) return false;  // forced equal but must differ
        Value& w1 = witness.at(c1);
        Value& w2 = witness.at(c2);
        if (!(w1 == w2)) continue;
        collision = true;
        auto moved = [&](const std::string& cls, const Value& avoid) {
          auto c = conj.at(cls);
          c.push_back(complement(dt_enumeration(avoid.dt, {avoid})));
          auto r = dsat(c);
          if (!r.sat) return false;
          witness.at(cls) = *r.witness;
          conj.at(cls) = c;  // keep the exclusion for later rounds
          return true;
        };
        if (!moved(c2, w2) && !moved(c1, w1)) return false;
      }
      if (!collision) break;
      if (round == 7) return false;
    }
    if (out)
      for (const auto& f : forced) (*out)[f] = witness.at(uf.find(f));
    return true;
  }

  // Literal set an anonymous successor must satisfy, or nullopt when the
  // required role set is internally disjointness-violating or the literals
  // contradict.
  std::optional<std::vector<Lit>> successor_demand(int e, const std::string& r, int child,
                                                   bool child_val) {
    const auto& rho = E.rclo.at(r);
    if (E.role_set_clashes(rho)) return std::nullopt;
    std::map<int, bool> lits;
    auto add = [&](int c, bool v) {
      auto it = lits.find(c);
      if (it == lits.end()) {
        lits.emplace(c, v);
        return true;
      }
      return it->second == v;
    };
    if (!add(child, child_val)) return std::nullopt;
    for (int i : E.forall_ids)
      if (val(e, i) == 1 && rho.count(E.cs[i]->name))
        if (!add(E.childA[i], true)) return std::nullopt;
    for (int i : E.exists_ids)
      if (val(e, i) == 2 && rho.count(E.cs[i]->name))
        if (!add(E.childA[i], false)) return std::nullopt;
    std::vector<Lit> out(lits.begin(), lits.end());
    return out;
  }

  // Demands only grow as more quantifier atoms turn true, so a partial
  // assignment whose demands already fail can be pruned outright.
  bool early_demands_ok() {
    int dummy = INT_MAX;
    int& low = demand_lowdep ? *demand_lowdep : dummy;
    for (int e = 0; e < m; ++e)
      if (!element_demands_ok(E, *this, e, demand_depth + 1, low)) return false;
    return true;
  }

  template <class Leaf>
  bool dfs(const Leaf& leaf) {
    if (!early_demands_ok()) return false;
    for (int c : decision_order)
      for (int e = 0; e < m; ++e) {
        if (val(e, c) != 0) continue;
        for (int v = 1; v >= 0; --v) {
          std::size_t mark = trail.size();
          assign(e, c, v == 1);
          if (propagate() && dfs(leaf)) return true;
          while (trail.size() > mark) {
            a[trail.back()] = 0;
            trail.pop_back();
          }
          conflict = false;
          queue.clear();
        }
        return false;
      }
    return leaf();
  }

  template <class Leaf>
  bool run(const std::vector<std::pair<int, Lit>>& init, const Leaf& leaf) {
    for (int e = 0; e < m; ++e)
      for (const auto& [c, v] : E.init_common) assign(e, c, v);
    for (const auto& [e, lit] : init) assign(e, lit.first, lit.second);
    if (!propagate()) return false;
    return dfs(leaf);
  }
};

bool demand_supported(Engine& E, const std::vector<Lit>& demand, int depth, int& lowdep);

// All successor demands of element e in search s satisfiable?
bool element_demands_ok(Engine& E, Search& s, int e, int depth, int& lowdep) {
  for (int i : E.exists_ids) {
    if (s.val(e, i) != 1) continue;
    const auto& rho = E.rclo.at(E.cs[i]->name);
    bool satisfied = false;
    if (s.edges)
      for (const auto& [pair, erho] : *s.edges)
        if (pair.first == e && erho.count(E.cs[i]->name) &&
            s.val(pair.second, E.childA[i]) == 1)
          satisfied = true;
    (void)rho;
    if (satisfied) continue;
    auto d = s.successor_demand(e, E.cs[i]->name, E.childA[i], true);
    if (!d || !demand_supported(E, *d, depth, lowdep)) return false;
  }
  for (int i : E.forall_ids) {
    if (s.val(e, i) != 2) continue;
    bool satisfied = false;
    if (s.edges)
      for (const auto& [pair, erho] : *s.edges)
        if (pair.first == e && erho.count(E.cs[i]->name) &&
            s.val(pair.second, E.childA[i]) == 2)
          satisfied = true;
    if (satisfied) continue;
    auto d = s.successor_demand(e, E.cs[i]->name, E.childA[i], false);
    if (!d || !demand_supported(E, *d, depth, lowdep)) return false;
  }
  return true;
}

std::string demand_key(const std::vector<Lit>& demand) {
  std::string k;
  for (const auto& [c, v] : demand) {
    k += v ? '+' : '-';
    k += std::to_string(c);
    k += ';';
  }
  return k;
}

bool demand_supported(Engine& E, const std::vector<Lit>& demand, int depth, int& lowdep) {
  std::string key = demand_key(demand);
  if (auto it = E.memo.find(key); it != E.memo.end()) return it->second == 1;
  if (auto it = E.tentative.find(key); it != E.tentative.end()) {
    lowdep = std::min(lowdep, it->second);
    return true;
  }
  if (auto it = E.stackpos.find(key); it != E.stackpos.end()) {
    lowdep = std::min(lowdep, it->second);
    return true;  // provisional: cycle through an ancestor demand
  }
  if (depth > 512) throw ResourceError("successor recursion exceeds depth limit");
  E.stackpos.emplace(key, depth);
  int mylow = INT_MAX;
  Search s(E, 1, nullptr, nullptr);
  s.demand_depth = depth;
  s.demand_lowdep = &mylow;
  std::vector<std::pair<int, Lit>> init;
  for (const auto& l : demand) init.push_back({0, l});
  bool ok = s.run(init, [&] {
    if (!s.feature_check(0, true, nullptr)) return false;
    return element_demands_ok(E, s, 0, depth + 1, mylow);
  });
  E.stackpos.erase(key);
  // Anything whose truth leaned on this frame is no longer backed.
  for (auto it = E.tentative.begin(); it != E.tentative.end();)
    it = it->second >= depth ? E.tentative.erase(it) : std::next(it);
  if (!ok)
    E.memo.emplace(key, 2);
  else if (mylow >= depth)
    E.memo.emplace(key, 1);
  else {
    E.tentative.emplace(key, mylow);
    lowdep = std::min(lowdep, mylow);
  }
  return ok;
}

}  // namespace

KbResult kb_satisfiable(const Kb& k, const ReasonerOptions& opt) {
  Engine E(k, opt);
  for (const auto& [pair, rho] : E.edges) {
    (void)pair;
    if (E.role_set_clashes(rho)) return {};
  }
  Search s(E, (int)E.objects.size(), &E.edges, &E.facts);
  std::vector<std::pair<int, Lit>> init;
  for (const auto& [e, lits] : E.init_object)
    for (const auto& l : lits) init.push_back({e, l});

  KbResult res;
  bool ok = s.run(init, [&] {
    std::vector<std::map<std::string, Value>> vals(E.objects.size());
    for (int e = 0; e < (int)E.objects.size(); ++e)
      if (!s.feature_check(e, true, &vals[e])) return false;
    for (int e = 0; e < (int)E.objects.size(); ++e) {
      int lowdep = INT_MAX;
      if (!element_demands_ok(E, s, e, 0, lowdep)) return false;
    }
    for (int e = 0; e < (int)E.objects.size(); ++e) {
      ObjectModel om;
      for (int c = 0; c < E.N; ++c)
        if (E.cs[c]->kind == Concept::Name) om.concepts[E.cs[c]->name] = s.val(e, c) == 1;
      om.features = vals[e];
      res.objects.emplace(E.objects[e], std::move(om));
    }
    return true;
  });
  res.sat = ok;
  if (!ok) res.objects.clear();
  return res;
}

KbResult concept_satisfiable(const Kb& k, const ConceptPtr& c, const ReasonerOptions& opt) {
  Kb k2 = k;
  std::string q = "Query'";
  while (k2.sig.concepts.count(q)) q += "'";
  k2.sig.concepts.insert(q);
  TBoxAxiom ax;
  ax.kind = TBoxAxiom::ConceptIncl;
  ax.lhs = c_name(q);
  ax.rhs = c;
  k2.tbox.push_back(ax);
  std::set<std::string> onames;
  for (const auto& fx : k.abox) {
    onames.insert(fx.o1);
    if (fx.kind == AboxFact::RoleFact) onames.insert(fx.o2);
  }
  std::string oname = "query";
  while (onames.count(oname)) oname += "'";
  AboxFact f;
  f.kind = AboxFact::ConceptFact;
  f.pred = q;
  f.o1 = oname;
  k2.abox.push_back(f);
  KbResult r = kb_satisfiable(k2, opt);
  if (r.sat && oname != "query") {
    auto node = r.objects.extract(oname);
    node.key() = "query";
    r.objects.insert(std::move(node));
  }
  return r;
}

bool instance_check(const Kb& k, const AboxFact& fact, const ReasonerOptions& opt) {
  Kb k2 = k;
  if (fact.kind == AboxFact::RoleFact) {
    std::string r = "query'";
    while (k2.sig.roles.count(r)) r += "'";
    k2.sig.roles.insert(r);
    TBoxAxiom ax;
    ax.kind = TBoxAxiom::RoleDisj;
    ax.p1 = r;
    ax.p2 = fact.pred;
    k2.tbox.push_back(ax);
    AboxFact f;
    f.kind = AboxFact::RoleFact;
    f.pred = r;
    f.o1 = fact.o1;
    f.o2 = fact.o2;
    k2.abox.push_back(f);
    return !kb_satisfiable(k2, opt).sat;
  }
  std::string q = "Query'";
  while (k2.sig.concepts.count(q)) q += "'";
  k2.sig.concepts.insert(q);
  TBoxAxiom ax;
  ax.kind = TBoxAxiom::ConceptIncl;
  ax.lhs = c_name(q);
  ax.rhs = fact.kind == AboxFact::ConceptFact
               ? c_not(c_name(fact.pred))
               : c_not(c_existsf(fact.pred, dt_enumeration(fact.v.dt, {fact.v})));
  k2.tbox.push_back(ax);
  AboxFact f;
  f.kind = AboxFact::ConceptFact;
  f.pred = q;
  f.o1 = fact.o1;
  k2.abox.push_back(f);
  return !kb_satisfiable(k2, opt).sat;
}

namespace {
// Evaluate a role-free concept over one object model; nullopt when the
// concept mentions a role.
std::optional<bool> eval_role_free(const ObjectModel& om, const ConceptPtr& c) {
  switch (c->kind) {
    case Concept::Top: return true;
    case Concept::Bot: return false;
    case Concept::Name: {
      auto it = om.concepts.find(c->name);
      return it != om.concepts.end() && it->second;
    }
    case Concept::Not: {
      auto v = eval_role_free(om, c->a);
      if (!v) return std::nullopt;
      return !*v;
    }
    case Concept::And: {
      auto x = eval_role_free(om, c->a), y = eval_role_free(om, c->b);
      if (!x || !y) return std::nullopt;
      return *x && *y;
    }
    case Concept::Or: {
      auto x = eval_role_free(om, c->a), y = eval_role_free(om, c->b);
      if (!x || !y) return std::nullopt;
      return *x || *y;
    }
    case Concept::Exists:
    case Concept::Forall: return std::nullopt;
    case Concept::ExistsF: {
      auto it = om.features.find(c->name);
      return it != om.features.end() && value_in(c->dtexpr, it->second);
    }
    case Concept::Undef: return om.features.count(c->name) == 0;
  }
  return std::nullopt;
}
}  // namespace

std::vector<std::string> verify_objects(const Kb& k, const KbResult& r) {
  std::vector<std::string> errs;
  if (!r.sat) return errs;
  for (const auto& [name, om] : r.objects) {
    for (const auto& ax : k.tbox) {
      switch (ax.kind) {
        case TBoxAxiom::ConceptIncl: {
          auto l = eval_role_free(om, ax.lhs);
          auto rr = eval_role_free(om, ax.rhs);
          if (l && rr && *l && !*rr)
            errs.push_back(name + " violates axiom " + print_concept(ax.lhs) + " <= " +
                           print_concept(ax.rhs));
          break;
        }
        case TBoxAxiom::FeatureIncl: {
          auto i1 = om.features.find(ax.p1), i2 = om.features.find(ax.p2);
          if (i1 != om.features.end() &&
              (i2 == om.features.end() || !(i1->second == i2->second)))
            errs.push_back(name + " violates feature inclusion " + ax.p1 + " <= " + ax.p2);
          break;
        }
        case TBoxAxiom::FeatureDisj: {
          auto i1 = om.features.find(ax.p1), i2 = om.features.find(ax.p2);
          if (i1 != om.features.end() && i2 != om.features.end() && i1->second == i2->second)
            errs.push_back(name + " violates feature disjointness " + ax.p1 + ", " + ax.p2);
          break;
        }
        default: break;
      }
    }
  }
  for (const auto& f : k.abox) {
    auto it = r.objects.find(f.o1);
    if (it == r.objects.end()) {
      errs.push_back("missing object " + f.o1);
      continue;
    }
    if (f.kind == AboxFact::ConceptFact) {
      auto v = it->second.concepts.find(f.pred);
      if (v == it->second.concepts.end() || !v->second)
        errs.push_back(f.o1 + " misses asserted concept " + f.pred);
    }
    if (f.kind == AboxFact::FeatureFact) {
      auto v = it->second.features.find(f.pred);
      if (v == it->second.features.end() || !(v->second == f.v))
        errs.push_back(f.o1 + " misses asserted feature value " + f.pred);
    }
  }
  return errs;
}

}  // namespace dkbv
