#include "phk/cli/cli.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char **argv) {
  auto result = phk::cli::run({argv + 1, argv + argc});
  if (result.exit_code == phk::cli::exit_input_error)
    std::cerr << "phk: input error (details in the JSON report)\n";
  if (result.out_path.empty()) {
    std::cout << result.output;
    return result.exit_code;
  }
  std::ofstream out(result.out_path, std::ios::binary);
  if (!out) {
    std::cerr << "phk: cannot write " << result.out_path << "\n";
    return phk::cli::exit_input_error;
  }
  out << result.output;
  return result.exit_code;
}
