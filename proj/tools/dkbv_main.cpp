#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dkbv/dkb_format.hpp"
#include "dkbv/fixtures.hpp"
#include "dkbv/owl.hpp"
#include "dkbv/report.hpp"
#include "dkbv/tasks.hpp"

namespace {

using namespace dkbv;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// <file> is a path or a packaged fixture name (dkbv fixtures lists them).
std::string load_source(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    std::ifstream f(arg);
    std::stringstream buf;
    buf << f.rdbuf();
    return buf.str();
  }
  for (const auto& n : fixture_names())
    if (n == arg) return emit_dkb(fixture(n));
  throw UsageError("no such file or fixture: " + arg);
}

std::string override_today(const std::string& text, const std::string& today) {
  std::istringstream in(text);
  std::ostringstream out;
  out << "today " << today << "\n";
  std::string line;
  while (std::getline(in, line)) {
    std::string t = line;
    t.erase(0, t.find_first_not_of(" \t"));
    if (t.rfind("today ", 0) != 0) out << line << "\n";
  }
  return out.str();
}

const DecisionTable& need_table(const Dkb& d, const std::string& name) {
  const DecisionTable* t = find_table(d.drg, name);
  if (!t) throw UsageError("no table named " + name);
  return *t;
}

Value parse_cli_value(const DecisionTable& t, const std::string& attr, const std::string& raw) {
  auto it = t.atype.find(attr);
  if (it == t.atype.end()) throw UsageError("table " + t.name + " has no attribute " + attr);
  if (it->second == Dt::String) {
    std::string s = raw;
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
    return Value::string(s);
  }
  return Value::number(it->second, parse_rational(raw));
}

ConceptPtr resolve_template(const Dkb& d, const std::string& spec) {
  if (auto it = d.templates.find(spec); it != d.templates.end()) return it->second;
  return parse_concept_text(spec);
}

struct CheckArgs {
  std::string file;
  std::vector<std::string> tasks;
  std::string table, attr, value, object, tmpl, today;
  bool no_ontology = false;
  std::string format = "text";
  std::size_t closure_limit = 4096;
};

int run_check(const CheckArgs& a) {
  std::string text = load_source(a.file);
  if (!a.today.empty()) text = override_today(text, a.today);
  Dkb d = parse_dkb(text);

  TaskOptions opt;
  opt.with_ontology = !a.no_ontology;
  opt.reasoner.closure_limit = a.closure_limit;

  ReportDocument r;
  r.input = a.file;
  r.digest = input_digest(text);

  auto tables_in_scope = [&]() {
    std::vector<std::string> names;
    if (!a.table.empty())
      names.push_back(need_table(d, a.table).name);
    else
      for (const auto& t : d.drg.tables) names.push_back(t.name);
    return names;
  };
  auto hit_task = [&](HitPolicy h) {
    return h == HitPolicy::Unique ? Task::UniqueHit
           : h == HitPolicy::Any  ? Task::AnyHit
                                  : Task::PriorityHit;
  };
  auto run_hit = [&](Task task, const std::string& table) {
    switch (task) {
      case Task::UniqueHit: return check_unique_hit(d, table, opt);
      case Task::AnyHit: return check_any_hit(d, table, opt);
      default: return check_priority_hit(d, table, opt);
    }
  };

  for (std::string task : a.tasks.empty() ? std::vector<std::string>{"all"} : a.tasks) {
    if (task == "all") {
      // the hit-policy check matching each table, plus the global tasks
      for (const auto& n : tables_in_scope())
        r.verdicts.push_back(run_hit(hit_task(need_table(d, n).hit), n));
      r.verdicts.push_back(check_completeness(d, opt));
      for (const auto& [name, c] : d.templates)
        r.verdicts.push_back(check_determinability(d, c, opt));
    } else if (task == "unique-hit" || task == "any-hit" || task == "priority-hit") {
      Task t = task == "unique-hit"  ? Task::UniqueHit
               : task == "any-hit"   ? Task::AnyHit
                                     : Task::PriorityHit;
      for (const auto& n : tables_in_scope()) r.verdicts.push_back(run_hit(t, n));
    } else if (task == "completeness") {
      r.verdicts.push_back(check_completeness(d, opt));
    } else if (task == "coverage") {
      if (a.table.empty() || a.attr.empty() || a.value.empty())
        throw UsageError("coverage needs --table, --attr and --value");
      const DecisionTable& t = need_table(d, a.table);
      r.verdicts.push_back(check_coverage(d, t.name, a.attr, parse_cli_value(t, a.attr, a.value), opt));
    } else if (task == "io") {
      if (a.object.empty() || a.table.empty() || a.attr.empty() || a.value.empty())
        throw UsageError("io needs --object, --table, --attr and --value");
      const DecisionTable& t = need_table(d, a.table);
      r.verdicts.push_back(
          check_io(d, a.object, t.name, a.attr, parse_cli_value(t, a.attr, a.value), opt));
    } else if (task == "determinability") {
      if (a.tmpl.empty()) throw UsageError("determinability needs --template");
      r.verdicts.push_back(check_determinability(d, resolve_template(d, a.tmpl), opt));
    } else {
      throw UsageError("unknown task " + task);
    }
  }

  std::cout << (a.format == "json" ? report_json(r) : report_text(r));
  return report_all_hold(r) ? 0 : 1;
}

int run_encode(const std::string& file, bool owl) {
  Dkb d = parse_dkb(load_source(file));
  if (owl) {
    std::cout << export_owl(d);
    return 0;
  }
  Kb k = encode_dkb(d);
  for (const auto& ax : k.tbox) switch (ax.kind) {
      case TBoxAxiom::ConceptIncl:
        std::cout << "axiom " << print_concept(ax.lhs) << " <= " << print_concept(ax.rhs) << "\n";
        break;
      case TBoxAxiom::RoleIncl: std::cout << "role-incl " << ax.p1 << " " << ax.p2 << "\n"; break;
      case TBoxAxiom::FeatureIncl:
        std::cout << "feature-incl " << ax.p1 << " " << ax.p2 << "\n";
        break;
      case TBoxAxiom::RoleDisj: std::cout << "role-disj " << ax.p1 << " " << ax.p2 << "\n"; break;
      default: std::cout << "feature-disj " << ax.p1 << " " << ax.p2 << "\n";
    }
  for (const auto& f : k.abox) switch (f.kind) {
      case AboxFact::ConceptFact: std::cout << f.pred << "(" << f.o1 << ")\n"; break;
      case AboxFact::RoleFact: std::cout << f.pred << "(" << f.o1 << ", " << f.o2 << ")\n"; break;
      default: std::cout << f.pred << "(" << f.o1 << ", " << f.v.to_text() << ")\n";
    }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for DMN decision tables with ontology background knowledge"};
  app.require_subcommand(1);

  CheckArgs ca;
  CLI::App* check = app.add_subcommand("check", "run verification tasks");
  check->add_option("file", ca.file, "DKB file or fixture name")->required();
  check->add_option("--task", ca.tasks,
                    "unique-hit|any-hit|priority-hit|io|coverage|completeness|"
                    "determinability|all (repeatable)");
  check->add_option("--table", ca.table, "restrict to one decision table");
  check->add_option("--attr", ca.attr, "output attribute (io, coverage)");
  check->add_option("--value", ca.value, "output value (io, coverage)");
  check->add_option("--object", ca.object, "ABox object (io)");
  check->add_option("--template", ca.tmpl, "template name or concept (determinability)");
  check->add_flag("--no-ontology", ca.no_ontology, "drop the background TBox");
  check->add_option("--today", ca.today, "override the document's today constant");
  check->add_option("--format", ca.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  check->add_option("--closure-limit", ca.closure_limit, "reasoner closure size bound");

  std::string parse_file;
  CLI::App* parse = app.add_subcommand("parse", "parse, validate and pretty-print");
  parse->add_option("file", parse_file, "DKB file or fixture name")->required();

  std::string encode_file;
  bool owl = false;
  CLI::App* encode = app.add_subcommand("encode", "print the compiled knowledge base");
  encode->add_option("file", encode_file, "DKB file or fixture name")->required();
  encode->add_flag("--owl", owl, "OWL 2 functional syntax");

  std::string fixture_name;
  CLI::App* fixtures = app.add_subcommand("fixtures", "list or print packaged fixtures");
  fixtures->add_option("name", fixture_name, "print this fixture as a DKB document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return run_check(ca);
    if (parse->parsed()) {
      std::cout << emit_dkb(parse_dkb(load_source(parse_file)));
      return 0;
    }
    if (encode->parsed()) return run_encode(encode_file, owl);
    if (fixture_name.empty())
      for (const auto& n : fixture_names()) std::cout << n << "\n";
    else
      std::cout << emit_dkb(fixture(fixture_name));
    return 0;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
