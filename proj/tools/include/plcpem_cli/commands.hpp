// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

// Subcommands of the plcpem tool, callable without going through argv.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "plcpem/pipeline.hpp"

namespace plcpem::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kVerificationFailed = 2, kFormatError = 3 };

struct IndexArgs {
    std::filesystem::path input;
    /// Output prefix; defaults to the input path.
    std::filesystem::path output;
    /// 0 selects ceil(log2 n).
    Index rate = 0;
    bool circular = false;
};

struct BuildArgs {
    std::filesystem::path bwt;
    std::filesystem::path sisa;
    std::filesystem::path output;
    BuildOptions options;
    bool keep_temp = false;
    std::optional<std::filesystem::path> temp_dir;
    std::optional<std::filesystem::path> verify_text;
};

struct DecodeArgs {
    std::filesystem::path plcp;
    std::vector<Index> positions;  ///< empty means all
};

struct VerifyArgs {
    std::filesystem::path text;
    std::filesystem::path plcp;
};

struct PeriodArgs {
    std::filesystem::path bwt;
};

// Each command throws plcpem::Error on failure; run() maps errors to exit codes.
int cmd_index(const IndexArgs& args, std::ostream& out, std::ostream& err);
int cmd_build(const BuildArgs& args, std::ostream& out, std::ostream& err);
int cmd_decode(const DecodeArgs& args, std::ostream& out);
int cmd_verify(const VerifyArgs& args, std::ostream& out);
int cmd_period(const PeriodArgs& args, std::ostream& out);

/// Parses argv and dispatches. Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace plcpem::cli
