#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "flagwitt/parse.hpp"
#include "flagwitt/report.hpp"
#include "flagwitt/selfcheck.hpp"

namespace {

using namespace flagwitt;

struct ClassifyArgs {
  std::string spec;
  std::string theta;
  std::string lambda;
  std::string bundle;
  std::string format = "text";
  bool has_lambda = false;
  bool has_bundle = false;
};

int run_classify(const ClassifyArgs& args) {
  if (args.has_lambda && args.has_bundle)
    throw ParseError("--lambda and --bundle are mutually exclusive");
  DiagramPtr d = build_diagram(parse_diagram_spec(args.spec));
  ParabolicSubset p = make_parabolic(d, parse_vertex_list(args.theta));
  LineBundleClass l =
      args.has_bundle
          ? line_bundle(p, Weight{d, parse_coeff_vector(args.bundle, d->rank())})
          : lambda_to_class(p, LambdaSet{parse_vertex_list(args.lambda)});
  VanishingVerdict v = classify(l);
  if (args.format == "records")
    std::cout << classify_record(p, lambda_of(l), v);
  else
    std::cout << classify_report_text(l, v);
  return 0;
}

struct EnumerateArgs {
  std::string spec;
  std::string theta;
  std::string format = "text";
  int rank_limit = kDefaultRankLimit;
  bool has_theta = false;
};

int run_enumerate(const EnumerateArgs& args) {
  DiagramPtr d = build_diagram(parse_diagram_spec(args.spec));
  ClassificationTable t = enumerate_decorations(d, args.rank_limit);
  if (args.has_theta) {
    VertexSet theta = normalize_vertex_set(*d, parse_vertex_list(args.theta));
    t = filter_rows(t, [&](const ClassificationRow& r) { return r.theta == theta; });
  }
  std::cout << (args.format == "records" ? enumerate_records(t) : enumerate_text(t));
  return 0;
}

int run_render(const std::string& spec, const std::string& theta,
               const std::string& lambda) {
  DiagramPtr d = build_diagram(parse_diagram_spec(spec));
  std::cout << render_dot(*d, parse_vertex_list(theta), parse_vertex_list(lambda));
  return 0;
}

int run_selfcheck_cmd() {
  bool ok = true;
  for (const auto& [name, passed] : run_selfcheck()) {
    std::cout << (passed ? "ok   " : "FAIL ") << name << "\n";
    ok = ok && passed;
  }
  std::cout << (ok ? "selfcheck passed\n" : "selfcheck FAILED\n");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Witt-group vanishing for split projective homogeneous varieties,\n"
      "decided from Dynkin-diagram combinatorics (" +
      std::string(flagwitt::VanishingVerdict::caveat) + ")"};
  app.require_subcommand(1);

  ClassifyArgs cargs;
  auto* classify_cmd =
      app.add_subcommand("classify", "Classify one (diagram, theta, bundle) input");
  classify_cmd->add_option("spec", cargs.spec, "Diagram spec, e.g. D4 or A3xB2")
      ->required();
  classify_cmd->add_option("--theta", cargs.theta, "Parabolic vertices, e.g. 1,4");
  classify_cmd->add_option("--lambda", cargs.lambda, "Parity set vertices");
  classify_cmd->add_option("--bundle", cargs.bundle, "Weight coefficients, length n");
  classify_cmd->add_option("--format", cargs.format, "text|records")
      ->check(CLI::IsMember({"text", "records"}));

  EnumerateArgs eargs;
  auto* enum_cmd =
      app.add_subcommand("enumerate", "Classify all 3^n decorations of a diagram");
  enum_cmd->add_option("spec", eargs.spec, "Diagram spec")->required();
  enum_cmd->add_option("--theta", eargs.theta, "Restrict rows to this theta");
  enum_cmd->add_option("--format", eargs.format, "text|records")
      ->check(CLI::IsMember({"text", "records"}));
  enum_cmd->add_option("--rank-limit", eargs.rank_limit, "Enumeration rank cap");

  std::string rspec, rtheta, rlambda;
  auto* render_cmd = app.add_subcommand("render", "Emit a decorated diagram as DOT");
  render_cmd->add_option("spec", rspec, "Diagram spec")->required();
  render_cmd->add_option("--theta", rtheta, "Filled vertices");
  render_cmd->add_option("--lambda", rlambda, "Double-circled vertices");

  auto* selfcheck_cmd =
      app.add_subcommand("selfcheck", "Run the built-in invariant suite");

  CLI11_PARSE(app, argc, argv);
  cargs.has_lambda = classify_cmd->count("--lambda") > 0;
  cargs.has_bundle = classify_cmd->count("--bundle") > 0;
  eargs.has_theta = enum_cmd->count("--theta") > 0;

  try {
    if (*classify_cmd) return run_classify(cargs);
    if (*enum_cmd) return run_enumerate(eargs);
    if (*render_cmd) return run_render(rspec, rtheta, rlambda);
    if (*selfcheck_cmd) return run_selfcheck_cmd();
  } catch (const flagwitt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
