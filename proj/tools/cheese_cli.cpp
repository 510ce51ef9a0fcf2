// cheese: build, transform, measure and verify Swiss cheese families.
//
// Exit codes: 0 success / verification passed, 1 verification failed,
// 2 usage or input-format error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cheese/cheese.hpp"

namespace {

using namespace cheese;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw FormatError(path, "cannot open output file");
  out << text;
}

Complex parse_point(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) return Complex(Real::from_string(text), Real(0));
    return Complex(Real::from_string(text.substr(0, comma)), Real::from_string(text.substr(comma + 1)));
  } catch (const std::exception&) {
    throw FormatError("--point", "expected 're' or 're,im', got '" + text + "'");
  }
}

Json report_json(const BrowderReport& r) {
  Json j{{"order", r.order},
         {"point", {r.point.re.str(), r.point.im.str()}},
         {"depth", r.depth},
         {"realized_terms", r.realized_terms},
         {"realized_sum", r.realized_sum.str()},
         {"non_unit_sum", r.non_unit_sum.str()},
         {"includes_unit_disc_term", r.includes_unit_disc_term},
         {"tail_kind", to_string(r.tail.kind)},
         {"tail_bound", r.tail.certified() ? Json(r.tail.value.str()) : Json(to_string(r.tail.kind))},
         {"tail_provider", r.tail.provider},
         {"certified", r.certified()}};
  if (r.certified()) j["upper_bound"] = r.upper_bound().str();
  j["warnings"] = r.warnings;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Swiss cheese families, Browder sums and Taylor functionals"};
  app.require_subcommand(1);
  // Global options are also accepted after the subcommand name.
  app.fallthrough();
  long precision = kDefaultPrecisionBits;
  std::uint64_t seed = kDefaultSeed;
  std::string output;
  app.add_option("--precision", precision, "working precision in bits (>= 53)")->check(CLI::Range(53L, 1L << 20));
  app.add_option("--seed", seed, "seed for randomized constructions")->capture_default_str();
  app.add_option("-o,--output", output, "output file (default: stdout)");

  // build
  auto* build = app.add_subcommand("build", "emit a family document from a generator");
  std::string generator;
  long gm = 0, gn = 0, gcount = 8;
  std::size_t depth = 20;
  std::string label;
  build->add_option("generator", generator, "road_runner | synthetic_budget | infinite_order")->required();
  build->add_option("--m", gm, "road_runner exponent m");
  build->add_option("--n", gn, "synthetic_budget index n");
  build->add_option("--count", gcount, "discs per synthetic family")->capture_default_str();
  build->add_option("--depth", depth, "realized indices for infinite generators")->capture_default_str();
  build->add_option("--label", label, "family label");

  // sqrt
  auto* sqrt_cmd = app.add_subcommand("sqrt", "replace every disc by the two discs covering its square root");
  std::string family_path;
  sqrt_cmd->add_option("family", family_path, "family JSON file")->required()->check(CLI::ExistingFile);

  // browder
  auto* browder = app.add_subcommand("browder", "Browder sum report");
  long order = 1;
  std::string point = "0";
  std::optional<std::string> user_tail;
  std::string format = "json";
  browder->add_option("family", family_path, "family JSON file")->required()->check(CLI::ExistingFile);
  browder->add_option("--order,-m", order, "order m >= 0")->capture_default_str();
  browder->add_option("--point", point, "evaluation point 're' or 're,im'")->capture_default_str();
  browder->add_option("--depth", depth, "realization depth")->capture_default_str();
  browder->add_option("--user-tail", user_tail, "caller-supplied tail bound");
  browder->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));

  // delta
  auto* delta = app.add_subcommand("delta", "Taylor functional f^(m)(a)/m! of a rational function");
  std::string rational_path;
  delta->add_option("function", rational_path, "rational-function JSON file")->required()->check(CLI::ExistingFile);
  delta->add_option("--order,-m", order, "order m >= 0")->capture_default_str();
  delta->add_option("--point", point, "expansion point 're' or 're,im'")->capture_default_str();

  // verify
  auto* verify = app.add_subcommand("verify", "run a property suite and emit certificates");
  std::string suite;
  SuiteConfig cfg;
  std::string seed_family_path;
  verify->add_option("suite", suite, "suite id")->required()->check(CLI::IsMember(suite_ids()));
  verify->add_option("--trials", cfg.trials, "random trials")->capture_default_str();
  verify->add_option("--samples", cfg.samples, "inclusion samples per disc")->capture_default_str();
  verify->add_option("--m", cfg.m, "order parameter m")->capture_default_str();
  verify->add_option("--depth", cfg.depth, "realization depth")->capture_default_str();
  verify->add_option("--n-max", cfg.n_max, "groups for infinite_order")->capture_default_str();
  verify->add_option("--count", cfg.count, "discs per synthetic group")->capture_default_str();
  verify->add_option("--witnesses", cfg.witnesses, "witness indices for norm_bound")->capture_default_str();
  verify->add_option("--seed-family", seed_family_path, "seed family for pipeline_main_theorem")
      ->check(CLI::ExistingFile);
  verify->add_option("--timestamp", cfg.timestamp, "fixed certificate timestamp");

  // render
  auto* render = app.add_subcommand("render", "SVG picture of a realized cheese");
  int width = 512;
  render->add_option("family", family_path, "family JSON file")->required()->check(CLI::ExistingFile);
  render->add_option("--depth", depth, "realization depth")->capture_default_str();
  render->add_option("--width", width, "width in pixels")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const PrecisionScope scope(precision);
    if (*build) {
      const auto kind = generator_from_string(generator);
      if (!kind) throw InputError("unknown generator '" + generator + "'");
      DiscFamily fam;
      switch (*kind) {
        case GeneratorKind::road_runner: {
          if (gm < 1) throw InputError("road_runner needs --m >= 1");
          const DiscFamily rr = road_runner(gm);
          fam = truncate(rr, depth);
          ParametricTail t = rr.tails.front();
          t.start = depth + 1;
          fam.tails.push_back(t);
          break;
        }
        case GeneratorKind::synthetic_budget:
          if (gn < 1) throw InputError("synthetic_budget needs --n >= 1");
          fam = synthetic_budget_family(gn, gcount, seed);
          break;
        case GeneratorKind::infinite_order: {
          ParametricTail t;
          t.generator = GeneratorKind::infinite_order;
          t.params.count = gcount;
          t.params.seed = seed;
          fam = truncate(make_family({}, {t}), depth);
          t.start = depth + 1;
          fam.tails.push_back(t);
          break;
        }
      }
      write_output(output, family_to_json(fam, label.empty() ? generator : label).dump(2) + "\n");
      return kExitPass;
    }
    if (*sqrt_cmd) {
      const CheeseSpec in = cheese_from_json(read_json_file(family_path));
      const DiscFamily out = sqrt_family(in.family);
      write_output(output, family_to_json(out, "sqrt(" + in.label + ")").dump(2) + "\n");
      return kExitPass;
    }
    if (*browder) {
      if (order < 0) throw InputError("--order must be >= 0");
      const CheeseSpec in = cheese_from_json(read_json_file(family_path));
      BrowderOptions opts;
      if (user_tail) {
        try {
          opts.user_tail = Real::from_string(*user_tail);
        } catch (const std::exception&) {
          throw FormatError("--user-tail", "expected a number");
        }
      }
      const auto rep = browder_sum(in.family, order, parse_point(point), depth, opts);
      if (format == "text") {
        std::string text = "B_" + std::to_string(order) + " realized " + rep.realized_sum.str(30) + "\ntail " +
                           to_string(rep.tail.kind) + " " + rep.tail.value.str(20) + " (" + rep.tail.provider + ")\n";
        if (rep.certified()) text += "upper bound " + rep.upper_bound().str(30) + "\n";
        write_output(output, text);
      } else {
        write_output(output, report_json(rep).dump(2) + "\n");
      }
      for (const auto& w : rep.warnings) std::cerr << "warning: " << w << "\n";
      return kExitPass;
    }
    if (*delta) {
      if (order < 0) throw InputError("--order must be >= 0");
      const RationalFunction f = rational_from_json(read_json_file(rational_path));
      const Complex v = taylor_functional(f, parse_point(point), static_cast<std::size_t>(order));
      write_output(output, Json{{"order", order}, {"point", point}, {"value", {v.re.str(), v.im.str()}},
                                {"abs", abs(v).str()}}
                                   .dump(2) +
                               "\n");
      return kExitPass;
    }
    if (*verify) {
      cfg.precision_bits = precision;
      cfg.seed = seed;
      if (!seed_family_path.empty()) cfg.seed_family = cheese_from_json(read_json_file(seed_family_path));
      const auto certs = run_suite(suite, cfg);
      Json arr = Json::array();
      for (const auto& c : certs) arr.push_back(certificate_to_json(c));
      write_output(output, arr.dump(2) + "\n");
      const Outcome o = overall(certs);
      std::cerr << suite << ": " << to_string(o) << " (" << certs.size() << " certificates)\n";
      return o == Outcome::fail ? kExitFail : kExitPass;
    }
    if (*render) {
      const CheeseSpec in = cheese_from_json(read_json_file(family_path));
      write_output(output, render_svg(in, depth, width));
      return kExitPass;
    }
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
