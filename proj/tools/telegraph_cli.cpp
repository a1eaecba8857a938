// SPDX-License-Identifier: MIT
#include "telegraph/cli.hpp"

int main(int argc, char** argv) {
  return telegraph::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
