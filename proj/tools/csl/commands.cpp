#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "csl/error.hpp"
#include "csl/interpretation.hpp"
#include "csl/json_codec.hpp"
#include "csl/rewrite.hpp"
#include "csl/term.hpp"

namespace csl::cli {

namespace {

using nlohmann::json;

json set_json(const ConvexSet& s) { return json::parse(convex_set_to_json(s)); }

int cmd_normalize(const std::string& text, bool as_json, std::ostream& out) {
  const Term t = parse_term(text);
  const auto n = normalize(t);
  const NPForm form = flatten_np(n->result);
  const std::string printed = print_term(form.to_term());
  if (!as_json) {
    out << printed << '\n';
    return kExitOk;
  }
  json doc = json::object();
  doc["input"] = print_term(t);
  doc["np_form"] = printed;
  json summands = json::array();
  for (const auto& s : form.summands) summands.push_back(print_term(s.term()));
  doc["summands"] = std::move(summands);
  doc["steps"] = n->steps;
  out << doc.dump() << '\n';
  return kExitOk;
}

int cmd_canon(const std::string& text, bool as_json, std::ostream& out) {
  const Term t = parse_term(text);
  const ConvexSet s = iota(t);
  const std::string printed = print_term(kappa(s));
  if (!as_json) {
    out << printed << '\n';
    return kExitOk;
  }
  json doc = json::object();
  doc["input"] = print_term(t);
  doc["canon"] = printed;
  doc["set"] = set_json(s);
  out << doc.dump() << '\n';
  return kExitOk;
}

int cmd_eval(const std::string& text, std::ostream& out) {
  out << convex_set_to_json(iota(parse_term(text))) << '\n';
  return kExitOk;
}

int cmd_eq(const std::string& lhs_text, const std::string& rhs_text, bool as_json,
           std::ostream& out) {
  const Term lhs = parse_term(lhs_text);
  const Term rhs = parse_term(rhs_text);
  const ConvexSet lhs_set = iota(lhs);
  const ConvexSet rhs_set = iota(rhs);
  const bool equal = lhs_set == rhs_set;
  if (as_json) {
    json doc = json::object();
    doc["equal"] = equal;
    doc["left"] = set_json(lhs_set);
    doc["right"] = set_json(rhs_set);
    out << doc.dump() << '\n';
  } else {
    out << (equal ? "equal" : "not-equal") << '\n';
  }
  return equal ? kExitOk : kExitNo;
}

int cmd_base(const std::string& path, std::istream& in, std::ostream& out) {
  std::string text;
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw DecodeError("cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  out << convex_set_to_json(convex_set_from_json(text)) << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact convex sets of distributions and convex-semilattice terms", "csl"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string term_a;
  std::string term_b;
  std::string base_path;
  std::string base_positional;
  std::string demo_name;

  auto* normalize = app.add_subcommand("normalize", "Rewrite a term into n-p form");
  normalize->add_option("term", term_a, "Term in s-expression syntax")->required();
  normalize->add_flag("--json", as_json, "Machine-readable report");

  auto* canon = app.add_subcommand("canon", "Print the canonical representative of a term");
  canon->add_option("term", term_a, "Term in s-expression syntax")->required();
  canon->add_flag("--json", as_json, "Machine-readable report");

  auto* eval = app.add_subcommand("eval", "Print the convex set denoted by a term");
  eval->add_option("term", term_a, "Term in s-expression syntax")->required();

  auto* eq = app.add_subcommand("eq", "Decide equality of two terms (exit 0 equal, 1 not)");
  eq->add_option("lhs", term_a, "First term")->required();
  eq->add_option("rhs", term_b, "Second term")->required();
  eq->add_flag("--json", as_json, "Machine-readable report");

  auto* base = app.add_subcommand("base", "Unique base of a JSON generator list");
  auto* file_opt = base->add_option("--file", base_path, "Input file ('-' for stdin)");
  base->add_option("input", base_positional, "'-' for stdin")->excludes(file_opt);

  auto* demo = app.add_subcommand("demo", "Worked examples");
  demo->add_option("name", demo_name, "Example to run")
      ->required()
      ->check(CLI::IsMember({"non-natural"}));

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (normalize->parsed()) return cmd_normalize(term_a, as_json, out);
    if (canon->parsed()) return cmd_canon(term_a, as_json, out);
    if (eval->parsed()) return cmd_eval(term_a, out);
    if (eq->parsed()) return cmd_eq(term_a, term_b, as_json, out);
    if (base->parsed()) return cmd_base(base_path.empty() ? base_positional : base_path, in, out);
    if (demo->parsed()) return demo_non_natural(out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace csl::cli
