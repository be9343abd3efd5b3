#include "fairslice/approx.hpp"
#include "fairslice/discretize.hpp"
#include "fairslice/fpt.hpp"
#include "fairslice/generators.hpp"
#include "fairslice/json_io.hpp"
#include "fairslice/nonconnected.hpp"
#include "fairslice/oracle.hpp"
#include "fairslice/reductions.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace fairslice;

constexpr int kExitValidation = 2;
constexpr int kExitGuard = 3;

Json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
}

struct OutputOptions {
  int decimal = 0;  // 0: exact only
};

void emit(Json j, const OutputOptions& opts) {
  if (opts.decimal > 0) j = with_decimals(std::move(j), opts.decimal);
  std::cout << j.dump(2) << "\n";
}

Rational parse_eps(const std::string& text) {
  Rational eps;
  try {
    eps = parse_rational(text);
  } catch (const std::exception& e) {
    throw ValidationError(std::string("bad --eps: ") + e.what());
  }
  if (eps <= 0) throw ValidationError("--eps must be positive");
  return eps;
}

void emit_trace(const std::vector<ApproxTraceStep>& trace) {
  for (const ApproxTraceStep& step : trace) {
    Json line = {{"t", step.t},
                 {"player", step.player + 1},
                 {"s", step.s},
                 {"granted_value", rational_to_json(step.granted_value)},
                 {"displaced_own", rational_to_json(step.displaced_own)},
                 {"displaced_others", rational_to_json(step.displaced_others)},
                 {"owned_sum", rational_to_json(step.owned_sum)},
                 {"ever_owned_sum", rational_to_json(step.ever_owned_sum)}};
    std::cerr << line.dump() << "\n";
  }
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Exact cake-cutting welfare optimization toolkit"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string eps_text;
  std::string objective = "util";
  bool trace = false;
  OutputOptions out;

  auto add_common = [&](CLI::App* cmd, bool needs_eps) {
    cmd->add_option("input", input, "instance JSON file, or - for standard input");
    if (needs_eps) cmd->add_option("--eps", eps_text, "precision, e.g. 1/8")->required();
    cmd->add_option("--decimal", out.decimal, "add rounded decimal display fields");
    return cmd;
  };

  auto* discretize_cmd = add_common(app.add_subcommand("discretize", "grid a continuous instance"), true);
  auto* util_approx = add_common(app.add_subcommand("util-approx", "greedy utilitarian approximation"), true);
  util_approx->add_flag("--trace", trace, "emit per-grant trace lines on standard error");
  auto* util_fpt = add_common(app.add_subcommand("util-fpt", "exact-on-grid utilitarian optimum"), true);
  auto* egal_fpt = add_common(app.add_subcommand("egal-fpt", "egalitarian binary search"), true);
  auto* egal_exact = add_common(app.add_subcommand("egal-exact", "exact discrete egalitarian optimum"), false);
  auto* nc_util = add_common(app.add_subcommand("nc-util", "non-connected utilitarian optimum"), false);
  auto* nc_egal = add_common(app.add_subcommand("nc-egal", "non-connected egalitarian optimum"), false);
  auto* brute = add_common(app.add_subcommand("brute", "exhaustive discrete optimum"), false);
  brute->add_option("--objective", objective, "util or egal")
      ->check(CLI::IsMember({"util", "egal"}));
  auto* validate = add_common(app.add_subcommand("validate", "check a division against an instance"), false);
  std::string division_path;
  validate->add_option("--division", division_path, "division JSON file")->required();

  auto* gen = app.add_subcommand("gen", "instance generators");
  gen->require_subcommand(1);
  int gn = 2, gsegs = 3;
  bool guniform = false;
  uint64_t gseed = 0;
  auto* gen_rand = gen->add_subcommand("random", "seeded random cake instance");
  gen_rand->add_option("--n", gn, "players");
  gen_rand->add_option("--segs", gsegs, "segments per player");
  gen_rand->add_flag("--uniform", guniform, "piecewise-uniform densities");
  gen_rand->add_option("--seed", gseed, "RNG seed")->required();
  gen_rand->add_option("--decimal", out.decimal, "add rounded decimal display fields");
  auto* gen_3dm = gen->add_subcommand("3dm", "matching-based egalitarian hard instance");
  gen_3dm->add_option("input", input, "problem JSON file, or -");
  gen_3dm->add_option("--decimal", out.decimal, "add rounded decimal display fields");
  auto* gen_mcsp = gen->add_subcommand("mcsp", "segment-packing utilitarian hard instance");
  gen_mcsp->add_option("input", input, "problem JSON file, or -");
  gen_mcsp->add_option("--decimal", out.decimal, "add rounded decimal display fields");

  CLI11_PARSE(app, argc, argv);

  if (discretize_cmd->parsed()) {
    CakeInstance instance = instance_from_json(read_json(input));
    CutSet C = run_discretization(instance, parse_eps(eps_text));
    emit({{"cutset", cutset_to_json(C)},
          {"discrete", discrete_to_json(to_discrete(instance, C))}},
         out);
  } else if (util_approx->parsed()) {
    CakeInstance instance = instance_from_json(read_json(input));
    auto result = approx_util(instance, parse_eps(eps_text), trace);
    if (trace) emit_trace(result.trace);
    emit({{"division", division_to_json(result.division)},
          {"report", report_to_json(result.report)}},
         out);
  } else if (util_fpt->parsed()) {
    CakeInstance instance = instance_from_json(read_json(input));
    auto result = fpt_util(instance, parse_eps(eps_text));
    emit({{"division", division_to_json(result.division)},
          {"report", report_to_json(result.report)}},
         out);
  } else if (egal_fpt->parsed()) {
    CakeInstance instance = instance_from_json(read_json(input));
    auto result = fpt_egal(instance, parse_eps(eps_text));
    emit({{"bound", rational_to_json(result.bound)},
          {"division", division_to_json(result.division)},
          {"report", report_to_json(welfare(instance, result.division))}},
         out);
  } else if (egal_exact->parsed()) {
    DiscreteInstance D = discrete_from_json(read_json(input));
    auto result = egal_exact_discrete(D);
    emit({{"bound", rational_to_json(result.bound)},
          {"division", division_to_json(result.division)},
          {"report", report_to_json(welfare_discrete(D, result.division))}},
         out);
  } else if (nc_util->parsed()) {
    CakeInstance instance = instance_from_json(read_json(input));
    auto result = util_nonconnected(instance);
    emit({{"assignment", assignment_to_json(result.assignment)},
          {"report", report_to_json(result.report)}},
         out);
  } else if (nc_egal->parsed()) {
    CakeInstance instance = instance_from_json(read_json(input));
    auto result = egal_nonconnected(instance);
    emit(assignment_to_json(result.assignment, &result.t), out);
  } else if (brute->parsed()) {
    DiscreteInstance D = discrete_from_json(read_json(input));
    auto result = brute_force(
        D, objective == "util" ? Objective::Utilitarian : Objective::Egalitarian);
    emit({{"division", division_to_json(result.division)},
          {"report", report_to_json(result.report)}},
         out);
  } else if (validate->parsed()) {
    CakeInstance instance = instance_from_json(read_json(input));
    Json dj = read_json(division_path);
    std::vector<std::string> violations;
    if (is_discrete_division_json(dj)) {
      // item count cannot be checked without a grid; validate structure only
      DiscreteDivision d = discrete_division_from_json(dj);
      int m = 0;
      for (const Piece& p : d.pieces) m = std::max(m, p.t);
      violations = validate_division(d, instance.n(), m);
    } else {
      violations = validate_division(connected_division_from_json(dj), instance.n());
    }
    if (!violations.empty()) {
      emit({{"ok", false}, {"violations", violations}}, out);
      return kExitValidation;
    }
    emit({{"ok", true}, {"violations", Json::array()}}, out);
  } else if (gen_rand->parsed()) {
    emit(instance_to_json(gen_random(gn, gsegs, guniform, gseed)), out);
  } else if (gen_3dm->parsed() || gen_mcsp->parsed()) {
    ReductionOutput r = gen_3dm->parsed() ? from_3dm(threedm_from_json(read_json(input)))
                                          : from_mcsp(mcsp_from_json(read_json(input)));
    emit({{"instance", instance_to_json(r.cake)},
          {"cutset", cutset_to_json(r.grid)},
          {"discrete", discrete_to_json(r.discrete)},
          {"bound", rational_to_json(r.bound)}},
         out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const GuardExceeded& e) {
    std::cout << Json{{"error", {{"kind", "guard"}, {"message", e.what()}}}}.dump(2) << "\n";
    return kExitGuard;
  } catch (const ValidationError& e) {
    std::cout << Json{{"error", {{"kind", "validation"}, {"message", e.what()}}}}.dump(2) << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cout << Json{{"error", {{"kind", "internal"}, {"message", e.what()}}}}.dump(2) << "\n";
    return 1;
  }
}
