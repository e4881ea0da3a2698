// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dmat/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <bit>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "dmat/canonical.hpp"
#include "dmat/errors.hpp"
#include "dmat/gf2.hpp"
#include "dmat/graph.hpp"
#include "dmat/hopf.hpp"
#include "dmat/io.hpp"
#include "dmat/moves.hpp"
#include "dmat/polynomial.hpp"
#include "dmat/set_system.hpp"
#include "reproduce.hpp"

namespace dmat::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Context {
  bool json = false;
  std::uint64_t seed = 1;
  bool oracle = false;
  unsigned threads = 0;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;

  void emit(const Json& j, const std::string& text) const {
    if (json) {
      *out << j.dump() << '\n';
    } else {
      *out << text;
    }
  }
};

struct Loaded {
  SetSystem system;
  std::optional<SimpleGraph> graph;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// dm, gf2 and graph files are all accepted; the header decides.
Loaded load(const std::string& path) {
  const std::string text = read_file(path);
  try {
    if (text.starts_with("graph v1")) {
      SimpleGraph g = parse_graph(text);
      return {graph_delta_matroid(g), std::move(g)};
    }
    if (text.starts_with("gf2 v1")) return {matrix_delta_matroid(parse_gf2(text)), std::nullopt};
    return {parse_dm(text), std::nullopt};
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

DeltaMatroid require_delta_matroid(const SetSystem& s, const std::string& path) {
  if (!validate(s).valid()) throw UsageError(path + ": not a delta-matroid");
  return DeltaMatroid::trusted(s);
}

Json system_json(const SetSystem& s) {
  return Json{{"n", s.size()}, {"feasible", std::vector<Mask>(s.feasible().begin(), s.feasible().end())}};
}

Json coeffs_json(const IntPolynomial& p) { return std::vector<Coeff>(p.coeffs().begin(), p.coeffs().end()); }

std::vector<int> subset_elements(Mask m) {
  std::vector<int> out;
  for (Mask rest = m; rest != 0; rest &= rest - 1) out.push_back(std::countr_zero(rest) + 1);
  return out;
}

unsigned thread_count(const Context& ctx) {
  if (ctx.threads != 0) return ctx.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

int cmd_validate(const Context& ctx, const std::string& path) {
  const SetSystem s = load(path).system;
  const ValidationResult r = validate(s);
  Json j = system_json(s);
  std::string text;
  if (r.valid()) {
    j["status"] = "ok";
    j["detail"] = "delta-matroid";
    text = "delta-matroid: yes\n";
  } else {
    const ExchangeViolation& v = *r.counterexample;
    const std::string detail = "exchange fails for X=" + format_subset(v.x_set) + " Y=" + format_subset(v.y_set) +
                               " x=" + std::to_string(v.element);
    j["status"] = "fail";
    j["detail"] = detail;
    text = "delta-matroid: no\n" + detail + "\n";
  }
  ctx.emit(j, text);
  return r.valid() ? kExitOk : kExitFailed;
}

int cmd_interlace(const Context& ctx, const std::string& path, bool recursive) {
  const Loaded in = load(path);
  IntPolynomial q;
  bool agree = true;
  if (in.graph) {
    // Graph input: the pivot recursion, checked against the shifted
    // delta-matroid polynomial under --oracle.
    q = graph_interlace(*in.graph);
    if (ctx.oracle) agree = q == shift_variable(interlace_poly(in.system), -1);
  } else if (recursive) {
    q = interlace_poly_recursive(require_delta_matroid(in.system, path));
    if (ctx.oracle) agree = q == interlace_poly(in.system);
  } else {
    q = interlace_poly(in.system);
    if (ctx.oracle && validate(in.system).valid()) {
      agree = q == interlace_poly_recursive(DeltaMatroid::trusted(in.system));
    }
  }
  Json j{{"coeffs", coeffs_json(q)}};
  if (!agree) {
    j["status"] = "fail";
    j["detail"] = "oracle disagrees";
  }
  ctx.emit(j, q.to_string() + "\n");
  if (!agree) {
    *ctx.err << "error: oracle and default computation disagree\n";
    return kExitFailed;
  }
  return kExitOk;
}

int cmd_op(const Context& ctx, const std::string& kind, const std::string& path, const std::string& arg) {
  const SetSystem s = load(path).system;
  const auto element = [&] {
    int e = 0;
    const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), e);
    if (ec != std::errc() || ptr != arg.data() + arg.size()) throw UsageError("expected an element, got '" + arg + "'");
    return e;
  };
  SetSystem result = s;
  if (kind == "twist") {
    result = twist(s, parse_subset(arg, s.size()));
  } else if (kind == "delete") {
    result = reduce(s, element(), Reduction::Delete);
  } else if (kind == "contract") {
    result = reduce(s, element(), Reduction::Contract);
  } else if (kind == "restrict") {
    result = restriction(s, parse_subset(arg, s.size()));
  } else {
    throw UsageError("unknown operation '" + kind + "'");
  }
  ctx.emit(system_json(result), format_dm(result));
  return kExitOk;
}

int cmd_move(const Context& ctx, const std::string& kind, const std::string& path, int a, int b) {
  const SetSystem s = load(path).system;
  SetSystem result = s;
  if (kind == "slide") {
    result = handle_slide(s, a, b);
  } else if (kind == "exchange") {
    result = exchange_ends(s, a, b);
  } else {
    throw UsageError("unknown move '" + kind + "'");
  }
  const bool valid = validate(result).valid();
  Json j = system_json(result);
  j["detail"] = valid ? "delta-matroid" : "not a delta-matroid";
  ctx.emit(j, format_dm(result));
  if (!valid && !ctx.json) *ctx.err << "note: result is not a delta-matroid\n";
  return kExitOk;
}

const char* const kCaseNames[] = {"all", "exchange", "slide", "none", "other"};
const char* const kPatternNames[] = {"equal", "exchange", "slide", "broken"};

template <std::size_t N>
Json tally_json(const std::array<std::uint64_t, N>& counts, const char* const* names) {
  Json j = Json::object();
  for (std::size_t i = 0; i < N; ++i) j[names[i]] = counts[i];
  return j;
}

template <std::size_t N>
std::string tally_text(const std::array<std::uint64_t, N>& counts, const char* const* names) {
  std::string out;
  for (std::size_t i = 0; i < N; ++i) out += std::string(i == 0 ? "" : " ") + names[i] + "=" + std::to_string(counts[i]);
  return out;
}

int cmd_four_term_single(const Context& ctx, const std::string& path, int a, int b) {
  const SetSystem s = load(path).system;
  const FourTermReport r = analyze_four_term(s, a, b);
  const bool ok = r.holds();
  Json j{{"defect", coeffs_json(r.defect)},
         {"members_valid", std::vector<bool>(r.member_valid.begin(), r.member_valid.end())},
         {"cases", tally_json(r.feasibility_cases, kCaseNames)},
         {"patterns", tally_json(r.distance_patterns, kPatternNames)},
         {"status", ok ? "ok" : "fail"}};
  std::ostringstream text;
  text << "defect " << r.defect.to_string() << '\n';
  text << "members valid";
  for (bool v : r.member_valid) text << ' ' << (v ? "yes" : "no");
  text << '\n';
  text << "cases " << tally_text(r.feasibility_cases, kCaseNames) << '\n';
  text << "patterns " << tally_text(r.distance_patterns, kPatternNames) << '\n';
  if (r.first_broken_subset) {
    j["detail"] = "first broken subset " + format_subset(*r.first_broken_subset);
    text << "first broken subset " << format_subset(*r.first_broken_subset) << '\n';
  }
  text << "status " << (ok ? "ok" : "fail") << '\n';
  ctx.emit(j, text.str());
  return ok ? kExitOk : kExitFailed;
}

int cmd_four_term_bulk(const Context& ctx, int n, std::uint64_t random, const std::string& emit_dir) {
  std::vector<DeltaMatroid> instances;
  if (random > 0) {
    if (n < 2 || n > kMaxGroundSet) throw UsageError("-n must be in 2.." + std::to_string(kMaxGroundSet));
    std::mt19937_64 rng(ctx.seed);
    instances.reserve(random);
    for (std::uint64_t i = 0; i < random; ++i) instances.push_back(random_binary(n, rng));
  } else {
    if (n < 2 || n > kEnumerateBound) throw UsageError("-n must be in 2.." + std::to_string(kEnumerateBound));
    instances = enumerate_binary(n);
  }
  const FourTermSummary summary =
      verify_four_term(instances, {.check_binary_closure = true, .threads = thread_count(ctx)});
  if (!emit_dir.empty() && !summary.failures.empty()) {
    std::filesystem::create_directories(emit_dir);
    for (std::size_t i = 0; i < summary.failures.size(); ++i) {
      const FourTermFailure& f = summary.failures[i];
      const auto file = std::filesystem::path(emit_dir) /
                        ("failure_" + std::to_string(i) + "_" + std::to_string(f.a) + "_" + std::to_string(f.b) + ".dm");
      std::ofstream(file) << format_dm(f.system);
    }
  }
  for (const FourTermFailure& f : summary.failures) {
    *ctx.err << "failure: " << dm_literal(f.system) << " a=" << f.a << " b=" << f.b << ": " << f.reason << '\n';
  }
  Json j{{"checked", summary.checked},
         {"pairs", summary.pairs},
         {"failures", summary.failures.size()},
         {"cases", tally_json(summary.feasibility_cases, kCaseNames)},
         {"patterns", tally_json(summary.distance_patterns, kPatternNames)},
         {"status", summary.failures.empty() ? "ok" : "fail"}};
  if (random > 0) j["seed"] = ctx.seed;
  std::ostringstream text;
  text << "checked=" << summary.checked << " pairs=" << summary.pairs << " failures=" << summary.failures.size()
       << '\n';
  if (random > 0) text << "seed=" << ctx.seed << '\n';
  ctx.emit(j, text.str());
  return summary.failures.empty() ? kExitOk : kExitFailed;
}

int cmd_binary(const Context& ctx, const std::string& path) {
  const SetSystem s = load(path).system;
  const std::optional<BinaryWitness> w = ctx.oracle ? is_binary_brute_force(s) : is_binary(s);
  bool agree = true;
  if (ctx.oracle) agree = w.has_value() == is_binary(s).has_value();
  Json j = system_json(s);
  j["binary"] = w.has_value();
  std::string text = std::string("binary: ") + (w ? "yes" : "no") + "\n";
  if (w) {
    std::vector<std::string> rows;
    for (int i = 1; i <= w->matrix.size(); ++i) {
      std::string row;
      for (int k = 1; k <= w->matrix.size(); ++k) row += w->matrix.at(i, k) ? '1' : '0';
      rows.push_back(std::move(row));
    }
    j["twist"] = subset_elements(w->twist_set);
    j["matrix"] = rows;
    text += "twist " + format_subset(w->twist_set) + "\n" + format_gf2(w->matrix);
  }
  j["status"] = agree ? "ok" : "fail";
  ctx.emit(j, text);
  if (!agree) {
    *ctx.err << "error: oracle and default binarity test disagree\n";
    return kExitFailed;
  }
  return kExitOk;
}

int cmd_project(const Context& ctx, const std::string& path) {
  const DeltaMatroid d = require_delta_matroid(load(path).system, path);
  const DmCombination c = project_primitive(d);
  const IntPolynomial q = q_of_combination(c);
  Json terms = Json::array();
  std::ostringstream text;
  for (const auto& [key, coeff] : c.terms()) {
    terms.push_back(Json{{"coeff", coeff}, {"feasible", std::vector<Mask>(key.feasible().begin(), key.feasible().end())}});
    text << coeff << ' ' << dm_literal(key) << '\n';
  }
  text << "q(x) = " << q.to_string() << '\n';
  ctx.emit(Json{{"n", d.size()}, {"terms", terms}, {"coeffs", coeffs_json(q)}}, text.str());
  return kExitOk;
}

int cmd_families(const Context& ctx, const std::string& kind, int n, int k, bool matrix) {
  Family family = Family::AllOnes;
  if (kind == "allones") {
    family = Family::AllOnes;
  } else if (kind == "tower") {
    family = Family::Tower;
  } else if (kind == "complete") {
    family = Family::Complete;
  } else {
    throw UsageError("unknown family '" + kind + "'");
  }
  const Gf2SymMatrix a = family_matrix(family, n, k);
  const DeltaMatroid d = matrix_delta_matroid(a);
  Json j = system_json(d);
  if (matrix) {
    ctx.emit(j, format_gf2(a));
  } else {
    ctx.emit(j, format_dm(d));
  }
  return kExitOk;
}

int cmd_enumerate(const Context& ctx, int n) {
  if (n < 0 || n > kEnumerateBound) throw UsageError("-n must be in 0.." + std::to_string(kEnumerateBound));
  const std::vector<DeltaMatroid> all = enumerate_binary(n);
  Json systems = Json::array();
  std::ostringstream text;
  for (const DeltaMatroid& d : all) {
    systems.push_back(std::vector<Mask>(d.feasible().begin(), d.feasible().end()));
    text << dm_literal(d) << '\n';
  }
  text << "count=" << all.size() << '\n';
  ctx.emit(Json{{"n", n}, {"count", all.size()}, {"systems", systems}}, text.str());
  return kExitOk;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::Info:
      return "-";
  }
  return "?";
}

int cmd_reproduce(const Context& ctx, const std::string& target, int n, int samples) {
  const ReproTable table = reproduce(target, {.n = n, .samples = samples, .seed = ctx.seed});
  Json rows = Json::array();
  std::size_t widths[3] = {4, 8, 8};
  for (const ReproRow& r : table.rows) {
    rows.push_back(Json{{"case", r.label}, {"computed", r.computed}, {"expected", r.expected},
                        {"result", verdict_name(r.verdict)}});
    widths[0] = std::max(widths[0], r.label.size());
    widths[1] = std::max(widths[1], r.computed.size());
    widths[2] = std::max(widths[2], r.expected.size());
  }
  std::ostringstream text;
  const auto line = [&](const std::string& a, const std::string& b, const std::string& c, const std::string& d) {
    text << a << std::string(widths[0] - a.size() + 2, ' ') << b << std::string(widths[1] - b.size() + 2, ' ') << c
         << std::string(widths[2] - c.size() + 2, ' ') << d << '\n';
  };
  text << table.target << " n=" << table.n << " seed=" << table.seed << '\n';
  line("case", "computed", "expected", "result");
  for (const ReproRow& r : table.rows) line(r.label, r.computed, r.expected, verdict_name(r.verdict));
  const bool ok = table.passed();
  text << "overall " << (ok ? "PASS" : "FAIL") << '\n';
  ctx.emit(Json{{"target", table.target}, {"n", table.n}, {"seed", table.seed}, {"rows", rows},
                {"status", ok ? "ok" : "fail"}},
           text.str());
  return ok ? kExitOk : kExitFailed;
}

int cmd_convert(const Context& ctx, const std::string& path) {
  const SetSystem s = load(path).system;
  ctx.emit(system_json(s), format_dm(s));
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Delta-matroids, interlace polynomials and the four-term relation", "dmat"};
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx;
  ctx.out = &out;
  ctx.err = &err;
  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", ctx.seed, "seed for random instances");
  app.add_flag("--oracle", ctx.oracle, "use brute-force paths and cross-check");
  app.add_option("--threads", ctx.threads, "worker threads for exhaustive runs (0 = all cores)");

  std::string file, kind, arg, target, emit_dir;
  int a = 0, b = 0, n = 0, k = 0, samples = -1;
  std::uint64_t random = 0;
  bool recursive = false, exhaustive = false, matrix = false;

  auto* validate_cmd = app.add_subcommand("validate", "check the symmetric exchange axiom");
  validate_cmd->add_option("file", file, "dm, gf2 or graph file")->required();

  auto* interlace_cmd = app.add_subcommand("interlace", "interlace polynomial");
  interlace_cmd->add_option("file", file)->required();
  interlace_cmd->add_flag("--recursive", recursive, "use the deletion/contraction recursion");

  auto* op_cmd = app.add_subcommand("op", "twist, delete, contract or restrict");
  op_cmd->add_option("kind", kind)->required()->check(CLI::IsMember({"twist", "delete", "contract", "restrict"}));
  op_cmd->add_option("file", file)->required();
  op_cmd->add_option("arg", arg, "subset such as 1,3 or {} for twist/restrict, element for delete/contract")
      ->required();

  auto* move_cmd = app.add_subcommand("move", "handle slide or end exchange");
  move_cmd->add_option("kind", kind)->required()->check(CLI::IsMember({"slide", "exchange"}));
  move_cmd->add_option("file", file)->required();
  move_cmd->add_option("a", a)->required();
  move_cmd->add_option("b", b)->required();

  auto* four_cmd = app.add_subcommand("four-term", "four-term relation for one pair or a whole universe");
  four_cmd->add_option("file", file);
  four_cmd->add_option("a", a);
  four_cmd->add_option("b", b);
  four_cmd->add_flag("--exhaustive", exhaustive, "every binary class on -n elements");
  four_cmd->add_option("-n", n);
  four_cmd->add_option("--random", random, "random binary instances on -n elements instead");
  four_cmd->add_option("--emit-failures", emit_dir, "directory for dm files of failing instances");

  auto* binary_cmd = app.add_subcommand("binary", "decide binarity and print a witness");
  binary_cmd->add_option("file", file)->required();

  auto* project_cmd = app.add_subcommand("project", "projection to primitives");
  project_cmd->add_option("file", file)->required();

  auto* families_cmd = app.add_subcommand("families", "allones, tower and complete families");
  families_cmd->add_option("kind", kind)->required()->check(CLI::IsMember({"allones", "tower", "complete"}));
  families_cmd->add_option("-n", n)->required();
  families_cmd->add_option("-k", k, "extension steps for tower");
  families_cmd->add_flag("--matrix", matrix, "print the gf2 matrix instead");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "binary delta-matroids up to isomorphism");
  enumerate_cmd->add_option("-n", n)->required();

  auto* reproduce_cmd = app.add_subcommand("reproduce", "pass/fail tables for the projection identities");
  reproduce_cmd->add_option("target", target)->required()->check(CLI::IsMember(reproduce_targets()));
  reproduce_cmd->add_option("-n", n, "size (0 = target default)");
  reproduce_cmd->add_option("--samples", samples, "random instances per size");

  auto* convert_cmd = app.add_subcommand("convert", "graph or gf2 file to dm file");
  convert_cmd->add_option("file", file)->required();

  // Named here so a typo gets a clearer message than "subcommand required".
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& s = args[i];
    if (s == "--format" || s == "--seed" || s == "--threads") {
      ++i;
      continue;
    }
    if (s.starts_with("-")) continue;
    if (app.get_subcommands([&](const CLI::App* sub) { return sub->get_name() == s; }).empty()) {
      err << "error: unknown subcommand '" << s << "'\nrun 'dmat --help' for usage\n";
      return kExitUsage;
    }
    break;
  }

  std::vector<const char*> argv{"dmat"};
  for (const std::string& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\nrun 'dmat --help' for usage\n";
    return kExitUsage;
  }
  ctx.json = format == "json";

  try {
    if (*validate_cmd) return cmd_validate(ctx, file);
    if (*interlace_cmd) return cmd_interlace(ctx, file, recursive);
    if (*op_cmd) return cmd_op(ctx, kind, file, arg);
    if (*move_cmd) return cmd_move(ctx, kind, file, a, b);
    if (*four_cmd) {
      if (exhaustive || random > 0) {
        if (!file.empty()) throw UsageError("four-term takes a file or --exhaustive/--random, not both");
        return cmd_four_term_bulk(ctx, n, random, emit_dir);
      }
      if (file.empty() || a == 0 || b == 0) throw UsageError("four-term needs <file> <a> <b> or --exhaustive -n K");
      return cmd_four_term_single(ctx, file, a, b);
    }
    if (*binary_cmd) return cmd_binary(ctx, file);
    if (*project_cmd) return cmd_project(ctx, file);
    if (*families_cmd) return cmd_families(ctx, kind, n, k, matrix);
    if (*enumerate_cmd) return cmd_enumerate(ctx, n);
    if (*reproduce_cmd) return cmd_reproduce(ctx, target, n, samples);
    if (*convert_cmd) return cmd_convert(ctx, file);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace dmat::cli
