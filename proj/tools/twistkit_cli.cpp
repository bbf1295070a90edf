#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "twistkit/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact verifier for twists, duals, and cocycle deformations "
               "of m-homogeneous algebras"};
  app.require_subcommand(0, 0);

  std::string command;
  std::string file;
  std::size_t level = 1;
  std::optional<std::size_t> cap;
  std::vector<int> window;
  std::optional<std::uint64_t> seed;
  bool json = false;

  app.add_option("command", command,
                 "hilbert | twist | koszul | bullet | endr | verify-twist | "
                 "verify-dual | verify-bullet | verify-cocycle | "
                 "verify-theorem | emit-envelope | verify-all")
      ->required();
  app.add_option("file", file, "presentation document")->required();
  app.add_option("--level", level, "antipode level cap for emit-envelope");
  app.add_option("--cap", cap, "degree cap override");
  app.add_option("--window", window, "index window override LO HI")
      ->expected(2);
  app.add_option("--seed", seed, "random seed override");
  app.add_flag("--json", json, "emit the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::ifstream in(file);
  if (!in) {
    std::cerr << "cannot open '" << file << "'\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  try {
    twistkit::Document doc = twistkit::parse_document(buf.str());
    twistkit::RunOptions opts;
    opts.cap = cap;
    if (window.size() == 2)
      opts.window = twistkit::IndexWindow{window[0], window[1]};
    opts.seed = seed;
    opts.envelope_level = level;
    opts.json = json;
    twistkit::RunResult res = twistkit::run(command, doc, opts);
    std::cout << res.output;
    return res.exit_code;
  } catch (const twistkit::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
