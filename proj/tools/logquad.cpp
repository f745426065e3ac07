// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "logquad/cli.hpp"

int main(int argc, char** argv) { return logquad::cli::run(argc, argv, std::cout, std::cerr); }
