#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "freelat/script.hpp"

int main(int argc, char** argv) {
  CLI::App app{"freelat: word problem and free-generation checks in free lattices"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "execute a verification script");
  std::string path;
  bool json = false, time = false;
  int max_n = 6;
  run->add_option("script", path, "script file")->required();
  run->add_flag("--json", json, "emit a JSON report instead of text");
  run->add_flag("--time", time, "include per-command timing in the text report");
  run->add_option("--max-n", max_n, "largest generator count `set n` accepts")
      ->default_val(6)
      ->check(CLI::Range(2, 12));

  CLI11_PARSE(app, argc, argv);

  freelat::RunOptions options;
  options.with_time = time;
  options.max_n = max_n;
  try {
    const freelat::RunResult result = freelat::run_script_file(path, options);
    std::cout << (json ? result.to_json() : result.to_text(time));
    return result.ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "freelat: " << e.what() << '\n';
    return 2;
  }
}
