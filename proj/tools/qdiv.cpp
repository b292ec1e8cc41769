// qdiv: construct rational four-dimensional division algebras A(l, c),
// classify their field/skew-field/nonassociative families, decide
// isomorphism and certify admissibility. Exit codes: 0 success, 1 negative
// verdict (refuted triple, non-isomorphic pair, non-norm, failed audit),
// 2 usage error.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "qdiv/cli_core.hpp"

namespace {

struct Args {
  std::string z = "-1";
  std::int64_t bound = 50;
  std::size_t limit = 20;
  std::string format = "json";
  std::string cache;
  bool reduce = false;
  std::string family = "f";
  std::string c, d, w;
  std::int64_t z_max = 10, w_max = 10;
};

void add_common(CLI::App* cmd, Args& a, bool wants_z = true) {
  if (wants_z) cmd->add_option("--z", a.z, "square-free integer naming Q(sqrt(z))");
  cmd->add_option("--bound", a.bound, "search bound for primitive solutions");
  cmd->add_option("--limit", a.limit, "number of rows to emit");
  cmd->add_option("--format", a.format, "output format: json, csv or text");
  cmd->add_option("--cache", a.cache, "path of the JSON-lines result cache");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rational four-dimensional unital division algebras A(l, c)"};
  app.require_subcommand(1);
  Args a;

  auto* fields = app.add_subcommand(
      "fields", "the field family A(l, (0, s, 0)), s in the transversal S(l)");
  add_common(fields, a);

  auto* skew = app.add_subcommand(
      "skewfields",
      "the skew-field family A(l, (1, 0, t)); exact transversal for z = -1, "
      "norm-class candidates otherwise");
  add_common(skew, a);
  skew->add_flag("--reduce", a.reduce,
                 "greedily drop candidates equivalent to earlier ones");

  auto* isdiv = app.add_subcommand(
      "is-division", "certify or refute that A(l, c) is a division algebra");
  add_common(isdiv, a);
  isdiv->add_option("--c", a.c, "triple c1,c2,c3 (exact rationals)")
      ->required();

  auto* iso = app.add_subcommand("iso", "decide A(l, c) ≅ A(l, d)");
  add_common(iso, a);
  iso->add_option("--c", a.c, "first triple")->required();
  iso->add_option("--d", a.d, "second triple")->required();

  auto* nucleus =
      app.add_subcommand("nucleus", "right nucleus basis and dimension");
  add_common(nucleus, a);
  nucleus->add_option("--c", a.c, "triple c1,c2,c3")->required();

  auto* family = app.add_subcommand(
      "family", "admissible families Ptilde / P1 / P2 / F(Q(i))");
  add_common(family, a);
  family->add_option("--family", a.family, "ptilde, p1, p2 or f");

  auto* norm = app.add_subcommand(
      "norm-test", "membership of w in the norm group of Q(sqrt(z))");
  add_common(norm, a);
  norm->add_option("--w", a.w, "square-free integer")->required();

  auto* structure = app.add_subcommand(
      "structure", "structure constants of A(l, c) in the fixed basis");
  add_common(structure, a);
  structure->add_option("--c", a.c, "triple c1,c2,c3")->required();

  auto* audit = app.add_subcommand(
      "audit", "cross-check the closed-form criteria against brute force");
  add_common(audit, a, /*wants_z=*/false);
  audit->add_option("--z-max", a.z_max, "sweep |z| up to this value");
  audit->add_option("--w-max", a.w_max, "sweep |w| up to this value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    qdiv::cli::RunConfig cfg;
    cfg.z = qdiv::parse_int(a.z);
    cfg.bound = a.bound;
    cfg.limit = a.limit;
    cfg.format = qdiv::cli::parse_format(a.format);
    cfg.reduce = a.reduce;
    cfg.family = a.family;
    cfg.cache_path = a.cache;
    if (cfg.cache_path.empty()) {
      if (const char* env = std::getenv("QDIV_CACHE")) cfg.cache_path = env;
    }

    std::optional<qdiv::Triple> c, d;
    std::optional<qdiv::Int> w;
    if (!a.c.empty()) c = qdiv::parse_triple(a.c);
    if (!a.d.empty()) d = qdiv::parse_triple(a.d);
    if (!a.w.empty()) w = qdiv::parse_int(a.w);

    std::string op = app.get_subcommands().front()->get_name();
    auto outcome = qdiv::cli::run_command(cfg, op, c, d, w, a.z_max, a.w_max);
    std::cout << outcome.output;
    if (!outcome.output.empty() && outcome.output.back() != '\n')
      std::cout << "\n";
    return outcome.exit_code;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
