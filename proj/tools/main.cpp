#include <iostream>

#include "burnside/report.hpp"

int main(int argc, char** argv) {
  try {
    const burnside::Config cfg = burnside::parse_config(argc, argv);
    return burnside::run(cfg, std::cout, std::cerr);
  } catch (const burnside::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "run with --help for usage\n";
    return 1;
  }
}
