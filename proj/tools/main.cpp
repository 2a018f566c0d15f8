#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  frobenius::cli::Environment env;
  try {
    env = frobenius::cli::Environment::from_process();
  } catch (const frobenius::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return frobenius::cli::kParseError;
  }
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return frobenius::cli::run(args, std::cout, std::cerr, env);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
