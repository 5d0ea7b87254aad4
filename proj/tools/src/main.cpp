// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "plcpem_cli/commands.hpp"

int main(int argc, char** argv) { return plcpem::cli::run(argc, argv, std::cout, std::cerr); }
