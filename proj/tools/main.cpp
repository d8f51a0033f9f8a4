#include <iostream>
#include <string>
#include <vector>

#include "dosage/pipeline.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return dosage::run_pipeline(args, std::cout, std::cerr);
}
