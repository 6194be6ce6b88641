// trideg: command-line front end. Exit status 0 when every verdict holds,
// 1 when a verification fails or a search runs out of budget, 2 on bad input.

#include <functional>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "trideg/error.hpp"

using namespace trideg::cli;

int main(int argc, char** argv) {
  CLI::App app{"Triangle degenerations in K^b(proj A) over GF(p), with certificates"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  bool as_json = false;
  app.add_option("--seed", o.seed, "random seed")->capture_default_str();
  app.add_option("--cases", o.cases, "prop-suite cases")->capture_default_str();
  app.add_option("--budget", o.budget, "iso-search attempts")->capture_default_str();
  app.add_option("--field", o.field, "field size for demos")->capture_default_str();
  app.add_flag("--json", as_json, "machine-readable report");

  std::function<Report()> run;
  std::string a, b, c;

  auto one = [&](const char* name, const char* help, const char* arg, Report (*fn)(const std::string&, const Options&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option(arg, a)->required();
    sub->callback([&, fn] { run = [&, fn] { return fn(a, o); }; });
    return sub;
  };
  auto two = [&](const char* name, const char* help, const char* arg1, const char* arg2,
                 Report (*fn)(const std::string&, const std::string&, const Options&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option(arg1, a)->required();
    sub->add_option(arg2, b)->required();
    sub->callback([&, fn] { run = [&, fn] { return fn(a, b, o); }; });
  };

  one("cone", "standard triangle of a chain map", "map", cmd_cone);
  two("deg", "homotopy pullback Deg(u, v)", "u", "v", cmd_deg);
  two("ged", "homotopy pushout Ged(u', v)", "u", "v", cmd_ged);
  auto* lw = app.add_subcommand("left-witness", "N = cone((v; u)) with its left triangle");
  lw->add_option("z", a)->required();
  lw->add_option("v", b)->required();
  lw->add_option("u", c)->required();
  lw->callback([&] { run = [&] { return cmd_left_witness(a, b, c, o); }; });
  one("nilpotent", "nilpotency certificate for an endomorphism", "v", cmd_nilpotent);
  one("k0", "class in K0 over the projective basis", "complex", cmd_k0);
  one("pair-decompose", "split a zero-class shift sum into even/odd pairs", "shiftsum", cmd_pair_decompose);
  auto* tower = one("tower-deg", "degenerations from a certified tower", "tower", cmd_tower_deg);
  auto* nc = tower->add_flag("--nil-chain", o.nil_chain, "stepwise pushouts along zero");
  tower->add_flag("--single", o.single, "one direct-sum triangle")->excludes(nc);
  one("obstruct", "isolated-homology obstruction to 0 ≤_Δ M", "complex", cmd_obstruct);
  one("zero-deg", "witness 0 ≤_{Δ+nil} S[1] ⊕ S", "complex", cmd_zero_deg);
  one("compare-cones", "cone(π) ≅ cone(v) for a left witness", "witness", cmd_compare_cones);
  two("two-pushout", "X ≤_{Δ,left} Y from two right witnesses sharing s", "w1", "w2", cmd_two_pushout);
  auto* demo = app.add_subcommand("demo", "built-in worked examples");
  demo->add_option("name", a, "zwara | lemma-counterexample | cone-zero")
      ->required()
      ->check(CLI::IsMember({"zwara", "lemma-counterexample", "cone-zero"}));
  demo->callback([&] { run = [&] { return cmd_demo(a, o); }; });
  auto* suite = app.add_subcommand("prop-suite", "seeded random property checks");
  suite->callback([&] { run = [&] { return cmd_prop_suite(o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    const Report r = run();
    r.print(as_json);
    return r.ok() ? 0 : 1;
  } catch (const trideg::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const trideg::CertificateError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  }
}
