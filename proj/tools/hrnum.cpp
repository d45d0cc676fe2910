// hrnum: command-line front end for higher-rank numerical semigroup computations.
//
//   hrnum verify SPEC [--bound N]
//   hrnum iso SPEC_A SPEC_B
//   hrnum norm SPEC POLY [--boxes 8,16,32,64] [--tol 1e-9] [--grid N]
//   hrnum char recover SPEC SAMPLE
//   hrnum char extend SPEC SAMPLE --at T [--bound N]
//   hrnum char counterexample SPEC [--axis I]
//
// Every command accepts --json. Exit codes: 0 ok, 1 not isomorphic, 2 parse,
// 3 hypothesis, 4 support, 5 data.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "cli/commands.hpp"

using namespace hrnum::cli;

int main(int argc, char** argv) {
  CLI::App app{"Higher-rank numerical semigroups: exact combinatorics and operator-norm checks"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print the JSON report instead of text")->configurable(false);
  app.fallthrough();

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Validate a cone and report axis profiles, generators and seminormality");
  v->add_option("spec", verify.spec, "Cone spec file")->required();
  v->add_option("--bound", verify.box, "Box size per dimension")->capture_default_str();

  IsoOptions iso;
  auto* i = app.add_subcommand("iso", "Decide isomorphism of the semigroup algebras of two cones");
  i->add_option("spec_a", iso.spec_a, "First cone spec")->required();
  i->add_option("spec_b", iso.spec_b, "Second cone spec")->required();

  NormOptions norm;
  auto* n = app.add_subcommand("norm", "Compare truncated Fock norms with the torus sup-norm");
  n->add_option("spec", norm.spec, "Cone spec file")->required();
  n->add_option("poly", norm.poly, "Polynomial file")->required();
  n->add_option("--boxes", norm.boxes, "Box sizes per dimension")->delimiter(',')->capture_default_str();
  n->add_option("--tol", norm.tol, "Power-iteration tolerance")->capture_default_str();
  n->add_option("--grid", norm.grid, "Torus grid points per dimension (0: default)");

  CharOptions chr;
  auto* c = app.add_subcommand("char", "Semicharacter recovery, extension and counterexamples");
  c->require_subcommand(1);
  auto* rec = c->add_subcommand("recover", "Recover the polydisc point of a sampled character");
  rec->add_option("spec", chr.spec, "Cone spec file")->required();
  rec->add_option("sample", chr.sample, "Sample file")->required();
  auto* ext = c->add_subcommand("extend", "Extend a sampled semicharacter to a point of the seminormalization");
  ext->add_option("spec", chr.spec, "Cone spec file")->required();
  ext->add_option("sample", chr.sample, "Sample file")->required();
  ext->add_option("--at", chr.at, "Point t, comma-separated")->required();
  ext->add_option("--bound", chr.bound, "Largest multiple n tried")->capture_default_str();
  auto* cex = c->add_subcommand("counterexample", "Two points with equal evaluations on an axis of gcd != 1");
  cex->add_option("spec", chr.spec, "Cone spec file")->required();
  std::size_t axis = 0;
  auto* axis_opt = cex->add_option("--axis", axis, "Axis (1-based); default: first axis with gcd != 1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  Report report;
  if (v->parsed()) {
    report = run_verify(verify);
  } else if (i->parsed()) {
    report = run_iso(iso);
  } else if (n->parsed()) {
    report = run_norm(norm);
  } else {
    chr.mode = rec->parsed() ? "recover" : ext->parsed() ? "extend" : "counterexample";
    if (axis_opt->count() > 0) chr.axis = axis;
    report = run_char(chr);
  }

  if (json) {
    std::fputs(dump(report.doc).c_str(), stdout);
  } else if (report.exit_code == kOk || report.exit_code == kNotIsomorphic) {
    std::fputs(report.text.c_str(), stdout);
  } else {
    std::fputs(report.text.c_str(), stderr);
  }
  return report.exit_code;
}
