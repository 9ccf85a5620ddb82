/*
 * Copyright 2026 the ptskit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptskit/laws.hpp"
#include "ptskit/relations.hpp"
#include "ptskit/semantics.hpp"

using namespace ptskit;
using nlohmann::json;

namespace {

// Exit codes: 0 success / property holds, 1 property fails, 2 usage or
// input errors.
constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

KripkeModel load_model(const std::string& path, bool strict) {
  auto outcome = parse_model(read_file(path), strict);
  if (outcome.model) return std::move(*outcome.model);
  std::ostringstream msg;
  msg << path << " is not a valid model:";
  for (const auto& d : outcome.diagnostics) msg << "\n  " << d.location << ": " << d.message;
  throw Error(msg.str());
}

// A formula argument is either inline text or @file with one formula per
// line; blank lines and lines starting with '#' are skipped.
std::vector<FormulaPtr> load_formulas(const std::string& arg) {
  std::vector<FormulaPtr> out;
  if (!arg.starts_with("@")) {
    out.push_back(parse_formula(arg));
    return out;
  }
  std::istringstream in(read_file(arg.substr(1)));
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      out.push_back(parse_formula(line));
    } catch (const ParseError& e) {
      throw Error(arg.substr(1) + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (out.empty()) throw Error(arg.substr(1) + ": no formulas found");
  return out;
}

json region_json(const Region& r) {
  return json{{"in_delta_p", r.in_delta_p},
              {"in_delta_c", r.in_delta_c},
              {"region", std::string(region_name(r))}};
}

json wpair_json(const WPair& v) {
  const Algebra& alg = v.algebra();
  return json::array({alg.format_literal(v.pos()), alg.format_literal(v.neg())});
}

int cmd_check(const std::string& model_file, bool strict, bool as_json) {
  auto outcome = parse_model(read_file(model_file), strict);
  if (as_json) {
    json diags = json::array();
    for (const auto& d : outcome.diagnostics)
      diags.push_back({{"location", d.location}, {"message", d.message}});
    std::cout << json{{"ok", outcome.model.has_value()}, {"diagnostics", diags}}.dump(2)
              << "\n";
  } else if (outcome.model) {
    std::cout << "ok\n";
  } else {
    for (const auto& d : outcome.diagnostics)
      std::cout << d.location << ": " << d.message << "\n";
  }
  return outcome.model ? kOk : kFail;
}

int cmd_eval(const std::string& model_file, const std::string& formula_arg,
             const std::string& state, bool strict, bool as_json) {
  KripkeModel m = load_model(model_file, strict);
  auto formulas = load_formulas(formula_arg);
  std::vector<std::string> states;
  if (state.empty())
    states = m.pts().states();
  else
    states.push_back(m.pts().state_name(m.pts().state_index(state)));

  json lines = json::array();
  for (const auto& f : formulas) {
    std::string printed = print_formula(*f);
    for (const auto& w : states) {
      WPair value = eval(m, w, *f);
      Region r = classify(value);
      if (as_json) {
        lines.push_back({{"state", w},
                         {"formula", printed},
                         {"value", wpair_json(value)},
                         {"region", std::string(region_name(r))}});
      } else {
        std::cout << w << " ⊨ " << printed << " = " << format_wpair(value) << " ["
                  << region_name(r) << "]\n";
      }
    }
  }
  if (as_json) std::cout << lines.dump(2) << "\n";
  return kOk;
}

int cmd_classify(const std::string& algebra_name, const std::string& pos,
                 const std::string& neg, bool as_json) {
  Algebra alg = Algebra::parse_name(algebra_name);
  WPair value(alg.parse_literal(pos), alg.parse_literal(neg));
  Region r = classify(value);
  if (as_json) {
    json out = region_json(r);
    out["value"] = wpair_json(value);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << format_wpair(value) << " is " << region_name(r) << " (delta_p="
              << (r.in_delta_p ? "yes" : "no") << ", delta_c="
              << (r.in_delta_c ? "yes" : "no") << ")\n";
  }
  return kOk;
}

int cmd_valid(const std::string& model_file, const std::string& formula_arg, bool strict,
              bool as_json) {
  KripkeModel m = load_model(model_file, strict);
  auto formulas = load_formulas(formula_arg);
  bool all_valid = true;
  json lines = json::array();
  for (const auto& f : formulas) {
    std::string printed = print_formula(*f);
    std::optional<std::string> witness;
    for (const auto& w : m.pts().states()) {
      WPair value = eval(m, w, *f);
      if (!(value == WPair(m.algebra().top(), m.algebra().bottom()))) {
        witness = w + " = " + format_wpair(value);
        break;
      }
    }
    all_valid = all_valid && !witness;
    if (as_json)
      lines.push_back({{"formula", printed},
                       {"valid", !witness},
                       {"witness", witness ? json(*witness) : json()}});
    else if (witness)
      std::cout << "not valid: " << printed << " at " << *witness << "\n";
    else
      std::cout << "valid: " << printed << "\n";
  }
  if (as_json) std::cout << lines.dump(2) << "\n";
  return all_valid ? kOk : kFail;
}

int cmd_equiv(const std::string& model_file, const std::string& f_text,
              const std::string& g_text, bool strict, bool as_json) {
  KripkeModel m = load_model(model_file, strict);
  FormulaPtr f = parse_formula(f_text);
  FormulaPtr g = parse_formula(g_text);
  std::optional<std::string> witness;
  std::string state;
  for (const auto& w : m.pts().states()) {
    WPair a = eval(m, w, *f);
    WPair b = eval(m, w, *g);
    if (!(a == b)) {
      witness = format_wpair(a) + " != " + format_wpair(b);
      state = w;
      break;
    }
  }
  if (as_json) {
    json out{{"equivalent", !witness}};
    if (witness) {
      out["state"] = state;
      out["detail"] = *witness;
    }
    std::cout << out.dump(2) << "\n";
  } else if (witness) {
    std::cout << "not equivalent at " << state << ": " << *witness << "\n";
  } else {
    std::cout << "equivalent\n";
  }
  return witness ? kFail : kOk;
}

int cmd_relation(const std::string& file1, const std::string& file2,
                 const std::string& check_file, bool frames_only, bool bisim, bool strict,
                 bool as_json) {
  KripkeModel m1 = load_model(file1, strict);
  KripkeModel m2 = load_model(file2, strict);
  bool with_valuations = !frames_only;
  const char* noun = bisim ? "bisimulation" : "simulation";

  if (!check_file.empty()) {
    StateRelation rel = StateRelation::from_json_text(read_file(check_file));
    RelationVerdict verdict = bisim ? is_bisimulation(rel, m1, m2, with_valuations)
                                    : is_simulation(rel, m1, m2, with_valuations);
    if (as_json) {
      json out{{"holds", verdict.holds}, {"kind", noun}};
      if (verdict.violation)
        out["violation"] = {{"left", verdict.violation->left},
                            {"right", verdict.violation->right},
                            {"reason", verdict.violation->reason}};
      std::cout << out.dump(2) << "\n";
    } else if (verdict.holds) {
      std::cout << "is a " << noun << "\n";
    } else {
      std::cout << "not a " << noun << ": (" << verdict.violation->left << ", "
                << verdict.violation->right << ") " << verdict.violation->reason << "\n";
    }
    return verdict.holds ? kOk : kFail;
  }

  StateRelation largest = bisim ? largest_bisimulation(m1, m2, with_valuations)
                                : largest_simulation(m1, m2, with_valuations);
  std::cout << largest.to_json_text();
  return kOk;
}

int cmd_laws(const std::string& algebra_name, int max_denominator, bool as_json) {
  Algebra alg = Algebra::parse_name(algebra_name);
  LawSampler sampler = alg.is_finite() ? LawSampler::exhaustive(alg)
                                       : LawSampler::grid(alg, max_denominator);
  LawReport report = check_laws(alg, sampler);
  if (as_json) {
    json out = json::array();
    for (const auto& c : report.checks)
      out.push_back({{"law", c.law}, {"pass", c.passed}, {"witness", c.witness}});
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& c : report.checks) {
      if (c.passed)
        std::cout << "PASS " << c.law << "\n";
      else
        std::cout << "FAIL " << c.law << ": " << c.witness << "\n";
    }
  }
  return report.all_passed() ? kOk : kFail;
}

int cmd_regions(const std::string& algebra_name, int grid, bool as_json) {
  Algebra alg = Algebra::parse_name(algebra_name);
  std::vector<TruthValue> axis;
  if (alg.is_finite()) {
    axis = alg.carrier();
  } else {
    if (grid < 2) throw Error("--grid needs at least 2 points");
    for (int i = 0; i < grid; ++i)
      axis.push_back(alg.from_rational(Rational(i, grid - 1)));
  }
  json rows = json::array();
  if (!as_json) std::cout << "a,b,region\n";
  for (const auto& a : axis) {
    for (const auto& b : axis) {
      Region r = classify(WPair(a, b));
      if (as_json)
        rows.push_back({{"a", alg.format_literal(a)},
                        {"b", alg.format_literal(b)},
                        {"region", std::string(region_name(r))}});
      else
        std::cout << alg.format_literal(a) << "," << alg.format_literal(b) << ","
                  << region_name(r) << "\n";
    }
  }
  if (as_json) std::cout << rows.dump(2) << "\n";
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"paraconsistent transition systems: evaluation, regions, relations"};
  app.require_subcommand(1);

  struct {
    std::string model, model2, formula, formula2, state, algebra, pos, neg, check_file;
    bool strict = false, all = false, json = false, frames_only = false;
    int max_denominator = 8, grid = 11;
  } opt;

  auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", opt.json, "JSON output"); };
  auto add_strict = [&](CLI::App* cmd) {
    cmd->add_flag("--strict", opt.strict, "require a total valuation");
  };

  CLI::App* check = app.add_subcommand("check", "validate a model file");
  check->add_option("model", opt.model, "model file")->required();
  add_strict(check);
  add_json(check);

  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate formulas at states");
  eval_cmd->add_option("model", opt.model, "model file")->required();
  eval_cmd->add_option("formula", opt.formula, "formula text or @batch-file")->required();
  auto* state_opt = eval_cmd->add_option("--state", opt.state, "evaluate at one state");
  eval_cmd->add_flag("--all", opt.all, "evaluate at every state (default)")
      ->excludes(state_opt);
  add_strict(eval_cmd);
  add_json(eval_cmd);

  CLI::App* classify_cmd = app.add_subcommand("classify", "classify a weight pair");
  classify_cmd->add_option("algebra", opt.algebra, "bool2|chain3|chain:N|godel")->required();
  classify_cmd->add_option("pos", opt.pos, "positive degree literal")->required();
  classify_cmd->add_option("neg", opt.neg, "negative degree literal")->required();
  add_json(classify_cmd);

  CLI::App* valid_cmd = app.add_subcommand("valid", "check validity over all states");
  valid_cmd->add_option("model", opt.model, "model file")->required();
  valid_cmd->add_option("formula", opt.formula, "formula text or @batch-file")->required();
  add_strict(valid_cmd);
  add_json(valid_cmd);

  CLI::App* equiv_cmd = app.add_subcommand("equiv", "pointwise equivalence of two formulas");
  equiv_cmd->add_option("model", opt.model, "model file")->required();
  equiv_cmd->add_option("formula1", opt.formula, "first formula")->required();
  equiv_cmd->add_option("formula2", opt.formula2, "second formula")->required();
  add_strict(equiv_cmd);
  add_json(equiv_cmd);

  CLI::App* sim = app.add_subcommand("sim", "largest simulation, or check one");
  sim->add_option("model1", opt.model, "left model file")->required();
  sim->add_option("model2", opt.model2, "right model file")->required();
  sim->add_option("--check", opt.check_file, "relation file to verify");
  sim->add_flag("--frames-only", opt.frames_only, "ignore valuations");
  add_strict(sim);
  add_json(sim);

  CLI::App* bisim = app.add_subcommand("bisim", "largest bisimulation, or check one");
  bisim->add_option("model1", opt.model, "left model file")->required();
  bisim->add_option("model2", opt.model2, "right model file")->required();
  bisim->add_option("--check", opt.check_file, "relation file to verify");
  bisim->add_flag("--frames-only", opt.frames_only, "ignore valuations");
  add_strict(bisim);
  add_json(bisim);

  CLI::App* laws = app.add_subcommand("laws", "check the algebra laws");
  laws->add_option("algebra", opt.algebra, "bool2|chain3|chain:N|godel")->required();
  laws->add_option("--max-denominator", opt.max_denominator,
                   "grid density for godel (default 8)");
  add_json(laws);

  CLI::App* regions = app.add_subcommand("regions", "region classification table");
  regions->add_option("algebra", opt.algebra, "bool2|chain3|chain:N|godel")->required();
  regions->add_option("--grid", opt.grid, "points per axis for godel (default 11)");
  add_json(regions);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (app.got_subcommand(check)) return cmd_check(opt.model, opt.strict, opt.json);
    if (app.got_subcommand(eval_cmd))
      return cmd_eval(opt.model, opt.formula, opt.state, opt.strict, opt.json);
    if (app.got_subcommand(classify_cmd))
      return cmd_classify(opt.algebra, opt.pos, opt.neg, opt.json);
    if (app.got_subcommand(valid_cmd))
      return cmd_valid(opt.model, opt.formula, opt.strict, opt.json);
    if (app.got_subcommand(equiv_cmd))
      return cmd_equiv(opt.model, opt.formula, opt.formula2, opt.strict, opt.json);
    if (app.got_subcommand(sim))
      return cmd_relation(opt.model, opt.model2, opt.check_file, opt.frames_only, false,
                          opt.strict, opt.json);
    if (app.got_subcommand(bisim))
      return cmd_relation(opt.model, opt.model2, opt.check_file, opt.frames_only, true,
                          opt.strict, opt.json);
    if (app.got_subcommand(laws))
      return cmd_laws(opt.algebra, opt.max_denominator, opt.json);
    if (app.got_subcommand(regions)) return cmd_regions(opt.algebra, opt.grid, opt.json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
