// Command-line front end: parses flags, reads the optional input JSON, and
// hands one Job to the library driver.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <joinring/driver.hpp>

int main(int argc, char** argv) {
  CLI::App app{"Algebra of joined group circulants"};
  app.require_subcommand(0, 0);

  std::string command, field_arg, groups_arg, in_path, out_path;
  bool normalized = false;
  app.add_option("command", command,
                 "check | mul | units | count-units | radical | center | "
                 "classify | frobenius | diagonalize | spectrum")
      ->required();
  app.add_option("--field", field_arg, "scalar field: Fp:<p>, Q, or C");
  app.add_option("--groups", groups_arg,
                 "comma-separated blocks: Z/<n>, D/<n>, S/<n>, cayley:<file.json>");
  app.add_flag("--normalized", normalized, "use the unitary transform");
  app.add_option("--in", in_path, "input JSON file (default: stdin when needed)");
  app.add_option("--out", out_path, "output file (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  joinring::Job job;
  job.command = command;
  job.normalized = normalized;
  try {
    if (!field_arg.empty()) job.field = joinring::FieldSpec::parse(field_arg);
    if (!groups_arg.empty()) job.groups = joinring::parse_group_specs(groups_arg);
    if (!in_path.empty()) {
      std::ifstream in(in_path);
      if (!in) throw joinring::input_error("cannot open input file '" + in_path + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      job.input = buf.str();
    } else if (command == "check" || command == "mul" || command == "units" ||
               command == "diagonalize" || command == "spectrum") {
      std::stringstream buf;
      buf << std::cin.rdbuf();
      job.input = buf.str();
    }
  } catch (const joinring::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot open output file '" << out_path << "'\n";
      return 1;
    }
    return joinring::run_job(job, out);
  }
  return joinring::run_job(job, std::cout);
}
