#include "fuzzysoft/cli.hpp"

#include <filesystem>
#include <ostream>

#include "CLI11.hpp"
#include "fuzzysoft/axioms.hpp"
#include "fuzzysoft/errors.hpp"
#include "fuzzysoft/instance.hpp"
#include "fuzzysoft/search.hpp"

namespace fuzzysoft {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string file;
  std::string axiom;
  bool all = false;
  bool unit_height = false;
  std::string set;
  std::string mapping;
  std::string config;
  std::string out_dir;
};

int cmd_check(const Options& o, std::ostream& out) {
  const auto space = build_space(load_instance(o.file));
  const CheckOptions options{o.unit_height};
  std::vector<Axiom> axioms;
  if (o.all) {
    axioms.assign(kAllAxioms.begin(), kAllAxioms.end());
  } else {
    auto axiom = parse_axiom_name(o.axiom);
    if (!axiom) throw ParseError("--axiom", "unknown axiom name \"" + o.axiom + "\"");
    axioms.push_back(*axiom);
  }
  bool all_hold = true;
  for (auto a : axioms) {
    auto verdict = check(space, a, options);
    out << axiom_name(a) << (verdict.holds ? " holds" : " fails");
    if (!verdict.holds) out << " witness: " << verdict.witness->describe();
    out << '\n';
    all_hold = all_hold && verdict.holds;
  }
  return all_hold ? kExitHolds : kExitFails;
}

int cmd_closure(const Options& o, std::ostream& out) {
  const auto inst = load_instance(o.file);
  const auto space = build_space(inst);
  if (o.set != "null" && o.set != "universal" && !inst.sets.count(o.set)) {
    throw ParseError("--set", "no set named \"" + o.set + "\"");
  }
  const auto f = resolve_set(inst, o.set);
  out << "closure(" << o.set << ") = " << closure(space, f).str() << '\n';
  return kExitHolds;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto inst = load_instance(o.file, ParseOptions{false});
  if (inst.topology.kind == TopologySpec::Kind::kGenerateFrom) {
    const auto space = build_space(inst);
    out << "topology ok: generated " << space.opens().size() << " opens\n";
    return kExitHolds;
  }
  const auto members = resolve_members(inst);
  const auto verdict = verify_topology(members, inst.grid);
  if (verdict.ok()) {
    out << "topology ok: " << members.size() << " opens\n";
    return kExitHolds;
  }
  out << "topology violation: " << verdict.violation->axiom() << ": " << verdict.violation->message << '\n';
  return kExitFails;
}

int cmd_continuous(const Options& o, std::ostream& out) {
  const auto inst = load_instance(o.file);
  const auto source = build_space(inst);
  const auto resolved = resolve_mapping(inst, o.mapping, fs::path(o.file).parent_path());
  const auto verdict = is_continuous(resolved.mapping, source, resolved.target);
  if (verdict.holds) {
    out << o.mapping << " continuous\n";
    return kExitHolds;
  }
  out << o.mapping << " not continuous: preimage of " << verdict.witness->str() << " = "
      << preimage(resolved.mapping, *verdict.witness).str() << " is not open\n";
  return kExitFails;
}

void emit(const std::vector<Counterexample>& cex, const std::string& dir) {
  if (!dir.empty()) write_counterexamples(cex, dir);
}

int cmd_mine(const Options& o, std::ostream& out) {
  const auto report = mine_implications(load_config(o.config));
  emit(report.counterexamples, o.out_dir);
  out << report.text();
  return report.highlighted_hold() ? kExitHolds : kExitFails;
}

int cmd_theorems(const Options& o, std::ostream& out) {
  const auto report = verify_theorems(load_config(o.config));
  emit(report.counterexamples, o.out_dir);
  out << report.text();
  return report.all_pass() ? kExitHolds : kExitFails;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Separation axioms of finite fuzzy soft topological spaces", "fsq"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "Decide separation axioms of an instance");
  check->add_option("file", o.file, "Instance file")->required();
  auto* axiom_opt = check->add_option("--axiom", o.axiom, "Axiom name, e.g. Q_T0 or MD_T2");
  auto* all_opt = check->add_flag("--all", o.all, "Decide all twelve axioms");
  axiom_opt->excludes(all_opt);
  check->add_flag("--unit-height-nbds", o.unit_height, "Use height-1 points for N(p) in q-T0/q-T1");

  auto* clos = app.add_subcommand("closure", "Print the closure of a named set");
  clos->add_option("file", o.file, "Instance file")->required();
  clos->add_option("--set", o.set, "Set name")->required();

  auto* verify = app.add_subcommand("verify", "Check the topology axioms of an instance");
  verify->add_option("file", o.file, "Instance file")->required();

  auto* cont = app.add_subcommand("continuous", "Decide continuity of a declared mapping");
  cont->add_option("file", o.file, "Instance file")->required();
  cont->add_option("--mapping", o.mapping, "Mapping name")->required();

  auto* mine = app.add_subcommand("mine", "Mine implications between axioms over a suite");
  mine->add_option("--config", o.config, "Suite config file")->required();
  mine->add_option("--out", o.out_dir, "Directory for counterexample instances");

  auto* theorems = app.add_subcommand("theorems", "Run the theorem verification harness");
  theorems->add_option("--config", o.config, "Suite config file")->required();
  theorems->add_option("--out", o.out_dir, "Directory for counterexample instances");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitHolds;
  } catch (const CLI::ParseError& e) {
    err << "fsq: " << e.what() << '\n';
    return kExitInputError;
  }
  if (check->parsed() && !o.all && o.axiom.empty()) {
    err << "fsq: check needs --axiom NAME or --all\n";
    return kExitInputError;
  }

  try {
    if (check->parsed()) return cmd_check(o, out);
    if (clos->parsed()) return cmd_closure(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (cont->parsed()) return cmd_continuous(o, out);
    if (mine->parsed()) return cmd_mine(o, out);
    if (theorems->parsed()) return cmd_theorems(o, out);
  } catch (const std::exception& e) {
    err << "fsq: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace fuzzysoft
