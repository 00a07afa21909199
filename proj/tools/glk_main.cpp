#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "glk/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the Frobenius-kernel Hopf superalgebras of GL(m|n)"};
  app.require_subcommand(1);

  glk::RunConfig cfg;
  app.add_option("--m", cfg.m, "even rank m");
  app.add_option("--n", cfg.n, "odd rank n");
  app.add_option("--p", cfg.p, "prime characteristic");
  app.add_option("--r", cfg.r, "Frobenius level");
  app.add_option("--window", cfg.window, "weight window radius for blocks (default 2p^2)");
  app.add_option("--output", cfg.output, "output format: json|text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--dim-guard", cfg.dim_guard, "largest admissible dim K[G_r]");
  app.add_option("--seed", cfg.seed, "seed for sampled property checks");

  for (const char* name : {"dims", "verify", "center", "integral", "coordinv", "hc", "blocks"})
    app.add_subcommand(name)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return glk::run_command(cfg, std::cout);
}
