// Command-line front end.
//
// Exit status: 0 success, Proved or valid; 1 Refuted, invalid or false
// entailment; 2 Unknown; 3 usage, input or I/O error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "hxproof/cut_elim.hpp"
#include "hxproof/derived.hpp"
#include "hxproof/hylo.hpp"
#include "hxproof/json_io.hpp"
#include "hxproof/parser.hpp"
#include "hxproof/printer.hpp"
#include "hxproof/search.hpp"

namespace fs = std::filesystem;
using namespace hxp;

namespace {

constexpr int kOk = 0, kNo = 1, kUnknown = 2, kError = 3;

struct Flags {
  std::string emit = "text";
  bool unicode = false;
  int max_depth = 64;
  int fresh_budget = 8;
  std::size_t countermodel_nodes = 3;
  std::string fragment = "full";
  bool trace = false;
  bool strict = false;
};

Notation notation(const Flags& f) { return f.unicode ? Notation::Unicode : Notation::Ascii; }

bool json_out(const Flags& f) { return f.emit == "json"; }

void render(std::ostream& os, const Derivation& d, Notation n, int depth = 0) {
  os << std::string(static_cast<std::size_t>(depth) * 2, ' ');
  os << (d->inst.rule == RuleId::Derived ? d->inst.macro : rule_name(d->inst.rule));
  if (!d->inst.principal.empty()) {
    os << " [";
    for (std::size_t k = 0; k < d->inst.principal.size(); ++k)
      os << (k ? ", " : "") << print_node(d->inst.principal[k], n);
    os << "]";
  }
  for (const auto& [key, v] : d->inst.params) os << " " << key << "=" << v;
  os << "  " << print_sequent(d->conclusion, n) << "\n";
  for (const auto& c : d->children) render(os, c, n, depth + 1);
}

void print_model(const HybridDataModel& m, const Flags& f) {
  if (json_out(f)) {
    std::cout << model_to_json(m).dump(2) << "\n";
    return;
  }
  std::cout << "countermodel with " << m.size() << " node(s):\n" << model_to_json(m).dump() << "\n";
}

SearchConfig search_config(const Flags& f) {
  SearchConfig cfg;
  cfg.max_depth = f.max_depth;
  cfg.max_fresh_nominals = f.fresh_budget;
  cfg.countermodel_nodes = f.countermodel_nodes;
  return cfg;
}

bool hylo(const Flags& f) {
  if (f.fragment == "hylo") return true;
  if (f.fragment != "full") throw std::invalid_argument("unknown fragment " + f.fragment);
  return false;
}

Derivation load_derivation(const std::string& path) { return derivation_from_json(read_json_file(path)); }

int cmd_parse(const Flags& f, const std::string& text) {
  if (text.find("|-") != std::string::npos || text.find("⊢") != std::string::npos) {
    Sequent s = parse_sequent(text);
    if (json_out(f))
      std::cout << sequent_to_json(s).dump(2) << "\n";
    else
      std::cout << print_sequent(s, notation(f)) << "\n";
    return kOk;
  }
  Node e = parse_node(text);
  if (json_out(f))
    std::cout << node_to_json(e).dump(2) << "\n";
  else
    std::cout << print_node(e, notation(f)) << "\n";
  return kOk;
}

// Nominals the model leaves unassigned go to its first node, with a note
// on stderr; --strict refuses them instead.
void assign_nominals(const Flags& f, HybridDataModel& m, const std::set<std::string>& noms) {
  auto filled = m.complete_assignment(noms, 0, f.strict);
  for (const auto& i : filled) std::cerr << "note: nominal " << i << " defaulted to node " << m.names.at(0) << "\n";
}

int cmd_eval(const Flags& f, const std::string& model_path, const std::string& node, const std::string& text) {
  HybridDataModel m = load_model_json(read_json_file(model_path));
  SymbolTable table;
  for (const auto& [i, n] : m.g) table.declare(i, SymbolSpace::Nominal);
  for (const auto& [p, v] : m.val) table.declare(p, SymbolSpace::Prop);
  Node e = parse_node(text, table);
  assign_nominals(f, m, nominals_of(e));
  std::vector<int> at;
  if (node.empty())
    for (std::size_t k = 0; k < m.size(); ++k) at.push_back(static_cast<int>(k));
  else
    at.push_back(m.node_index(node));
  json out = json::object();
  for (int n : at) out[m.names[static_cast<std::size_t>(n)]] = eval_node(m, n, e);
  if (json_out(f)) {
    std::cout << out.dump(2) << "\n";
  } else if (!node.empty()) {
    std::cout << (out.begin().value().get<bool>() ? "true" : "false") << "\n";
  } else {
    for (const auto& [k, v] : out.items()) std::cout << k << ": " << (v.get<bool>() ? "true" : "false") << "\n";
  }
  return kOk;
}

int cmd_entail(const Flags& f, const std::string& model_path, const std::string& text) {
  Sequent s = parse_sequent(text);
  if (!model_path.empty()) {
    HybridDataModel m = load_model_json(read_json_file(model_path));
    assign_nominals(f, m, s.nominals());
    bool ok = check_sequent_validity(m, s);
    if (json_out(f))
      std::cout << json{{"valid", ok}}.dump(2) << "\n";
    else
      std::cout << (ok ? "valid" : "not valid") << " in the given model\n";
    return ok ? kOk : kNo;
  }
  auto m = find_countermodel(s, f.countermodel_nodes);
  if (m) {
    print_model(*m, f);
    return kNo;
  }
  if (json_out(f))
    std::cout << json{{"countermodel", nullptr}, {"max_nodes", f.countermodel_nodes}}.dump(2) << "\n";
  else
    std::cout << "no countermodel with at most " << f.countermodel_nodes << " node(s)\n";
  return kOk;
}

int cmd_prove(const Flags& f, const std::string& text) {
  Sequent s = parse_sequent(text);
  SearchConfig cfg = search_config(f);
  SearchResult r = hylo(f) ? prove_hylo(s, cfg) : prove(s, cfg);
  if (json_out(f)) {
    json out{{"status", to_string(r.status)}, {"steps", r.steps}};
    if (r.proof) out["derivation"] = derivation_to_json(r.proof);
    if (r.model) out["countermodel"] = model_to_json(*r.model);
    if (!r.report.empty()) out["report"] = r.report;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << to_string(r.status) << "\n";
    if (r.proof) render(std::cout, r.proof, notation(f));
    if (r.model) std::cout << model_to_json(*r.model).dump() << "\n";
    if (!r.report.empty()) std::cout << r.report << "\n";
  }
  switch (r.status) {
    case SearchResult::Status::Proved: return kOk;
    case SearchResult::Status::Refuted: return kNo;
    case SearchResult::Status::Unknown: return kUnknown;
  }
  return kUnknown;
}

std::uint64_t seed_from_env() {
  const char* s = std::getenv("HXPROOF_SEED");
  return s ? std::strtoull(s, nullptr, 10) : 20240601ULL;
}

// Violations of `d`, plus fragment and fuzzing findings.
std::vector<std::string> audit(const Derivation& d, bool in_hylo, std::size_t fuzz) {
  std::vector<std::string> out;
  for (const auto& v : check_derivation(d)) {
    std::string where;
    for (auto k : v.path) where += "/" + std::to_string(k);
    out.push_back((where.empty() ? "/" : where) + ": " + v.cause);
  }
  if (in_hylo && out.empty()) {
    Derivation flat = expand_macros(d);
    std::function<void(const Derivation&)> go = [&](const Derivation& n) {
      if (!is_hylo(n->conclusion)) out.push_back("sequent outside H(@): " + print_sequent(n->conclusion));
      if (comparison_rules().count(n->inst.rule)) out.push_back(std::string("comparison rule ") + rule_name(n->inst.rule));
      for (const auto& c : n->children) go(c);
    };
    go(flat);
  }
  if (fuzz > 0 && out.empty()) {
    std::mt19937_64 rng(seed_from_env());
    Signature sig = d->conclusion.signature();
    std::uniform_int_distribution<std::size_t> nodes(1, 5);
    for (std::size_t k = 0; k < fuzz; ++k) {
      HybridDataModel m = random_model(sig, nodes(rng), rng);
      if (!check_sequent_validity(m, d->conclusion)) {
        out.push_back("end-sequent fails in random model " + model_to_json(m).dump());
        break;
      }
    }
  }
  return out;
}

int cmd_check(const Flags& f, const std::string& path, std::size_t fuzz) {
  Derivation d = load_derivation(path);
  auto bad = audit(d, hylo(f), fuzz);
  if (json_out(f)) {
    std::cout << json{{"ok", bad.empty()}, {"violations", bad}}.dump(2) << "\n";
  } else if (bad.empty()) {
    std::cout << "ok: " << print_sequent(d->conclusion, notation(f)) << "\n";
  } else {
    for (const auto& b : bad) std::cout << b << "\n";
  }
  return bad.empty() ? kOk : kNo;
}

int cmd_cutfree(const Flags& f, const std::string& path, const std::string& out_path) {
  Derivation d = load_derivation(path);
  if (!check_derivation(d).empty()) {
    std::cerr << "input derivation does not check\n";
    return kNo;
  }
  std::vector<CutStep> trace;
  Derivation e = eliminate_cuts(d, {}, f.trace ? &trace : nullptr);
  json steps = json::array();
  for (const auto& s : trace) {
    json after = json::array();
    for (const auto& c : s.after) after.push_back({c.k, c.h});
    steps.push_back({{"family", s.family}, {"reduced", {s.reduced.k, s.reduced.h}}, {"remaining", after}});
    if (!json_out(f))
      std::cerr << s.family << " " << to_string(s.reduced) << " -> " << s.after.size() << " cut(s) left\n";
  }
  json j = derivation_to_json(e);
  if (!out_path.empty())
    write_json_file(out_path, j);
  else if (json_out(f) && f.trace)
    std::cout << json{{"derivation", j}, {"trace", steps}}.dump(2) << "\n";
  else
    std::cout << j.dump(2) << "\n";
  return kOk;
}

int cmd_corpus(const Flags& f, const std::string& dir) {
  if (!fs::is_directory(dir)) throw std::runtime_error("not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  json report = json::array();
  int failed = 0;
  for (const auto& p : files) {
    std::vector<std::string> bad;
    std::string kind;
    try {
      json j = read_json_file(p.string());
      if (j.contains("rule")) {
        kind = "derivation";
        bad = audit(derivation_from_json(j), false, 0);
      } else {
        kind = "model";
        load_model_json(j).validate();
      }
    } catch (const std::exception& e) {
      bad.push_back(e.what());
    }
    failed += bad.empty() ? 0 : 1;
    report.push_back({{"file", p.string()}, {"kind", kind}, {"ok", bad.empty()}, {"violations", bad}});
    if (!json_out(f)) {
      std::cout << (bad.empty() ? "PASS " : "FAIL ") << p.string() << "\n";
      for (const auto& b : bad) std::cout << "  " << b << "\n";
    }
  }
  if (files.empty()) std::cerr << "warning: no .json files in " << dir << "\n";
  if (json_out(f))
    std::cout << json{{"files", report}, {"failed", failed}}.dump(2) << "\n";
  else
    std::cout << files.size() - static_cast<std::size_t>(failed) << "/" << files.size() << " passed\n";
  return failed ? kNo : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proof toolkit for the hybrid data-aware XPath logic"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_option("--emit", f.emit, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--unicode", f.unicode, "Unicode notation in text output");

  std::string text, model, at, path, out_path;
  std::size_t fuzz = 0;
  auto search_flags = [&](CLI::App* s) {
    s->add_option("--max-depth", f.max_depth, "Decomposition depth bound")->check(CLI::PositiveNumber);
    s->add_option("--fresh-budget", f.fresh_budget, "Fresh nominals per branch")->check(CLI::NonNegativeNumber);
    s->add_option("--countermodel-nodes", f.countermodel_nodes, "Largest countermodel tried");
  };

  auto* parse = app.add_subcommand("parse", "Parse and print an expression or sequent");
  parse->add_option("expr", text)->required();
  auto* eval = app.add_subcommand("eval", "Evaluate a node expression in a model");
  eval->add_option("--model", model)->required();
  eval->add_option("--at", at, "Node id; all nodes when omitted");
  eval->add_option("expr", text)->required();
  eval->add_flag("--strict", f.strict, "Refuse nominals the model does not assign");
  auto* entail = app.add_subcommand("entail", "Look for a countermodel to a sequent");
  entail->add_option("--model", model, "Check this model instead of searching");
  entail->add_option("--countermodel-nodes", f.countermodel_nodes);
  entail->add_option("sequent", text)->required();
  entail->add_flag("--strict", f.strict, "Refuse nominals the model does not assign");
  auto* prove = app.add_subcommand("prove", "Search for a derivation");
  search_flags(prove);
  prove->add_option("--fragment", f.fragment)->check(CLI::IsMember({"full", "hylo"}));
  prove->add_option("sequent", text)->required();
  auto* check = app.add_subcommand("check", "Check a derivation file");
  check->add_option("--fragment", f.fragment)->check(CLI::IsMember({"full", "hylo"}));
  check->add_option("--fuzz", fuzz, "Random models tried on the end-sequent (seed: HXPROOF_SEED)");
  check->add_option("file", path)->required();
  auto* cutfree = app.add_subcommand("cutfree", "Eliminate cuts from a derivation file");
  cutfree->add_flag("--trace", f.trace, "Report every reduction with its cut complexity");
  cutfree->add_option("-o,--output", out_path, "Write the result here instead of stdout");
  cutfree->add_option("file", path)->required();
  auto* corpus = app.add_subcommand("corpus", "Check every JSON file under a directory");
  corpus->add_option("dir", path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (*parse) return cmd_parse(f, text);
    if (*eval) return cmd_eval(f, model, at, text);
    if (*entail) return cmd_entail(f, model, text);
    if (*prove) return cmd_prove(f, text);
    if (*check) return cmd_check(f, path, fuzz);
    if (*cutfree) return cmd_cutfree(f, path, out_path);
    if (*corpus) return cmd_corpus(f, path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
