// Copyright 2026 The corrmat Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "corrmat/cli.hpp"

int main(int argc, char** argv) {
  return corrmat::run_cli(argc, argv, std::cout, std::cerr);
}
