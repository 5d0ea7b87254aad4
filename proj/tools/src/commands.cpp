// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

#include "plcpem_cli/commands.hpp"

#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "plcpem/circular.hpp"
#include "plcpem/error.hpp"
#include "plcpem/formats.hpp"

namespace plcpem::cli {
namespace {

std::filesystem::path with_suffix(const std::filesystem::path& prefix, std::string_view suffix) {
    return std::filesystem::path(prefix.string() + std::string(suffix));
}

/// The text as indexed: circular powers are replaced by their primitive root.
Text indexed_text(const Text& text, std::ostream* notice) {
    if (!text.is_circular()) return text;
    const Index p = primitive_period(text.symbols());
    if (p == text.size()) return text;
    if (notice != nullptr) {
        *notice << "notice: input is a power (exponent " << text.size() / p << ") of a word of length " << p
                << "; indexing the primitive root\n";
    }
    const auto sym = text.symbols();
    return Text::circular(std::vector<Symbol>(sym.begin(), sym.begin() + static_cast<std::ptrdiff_t>(p)),
                          text.sigma());
}

}  // namespace

int cmd_index(const IndexArgs& args, std::ostream& out, std::ostream& err) {
    const auto bytes = read_file(args.input);
    const IngestedText in = ingest(bytes, args.circular);
    const Text& text = in.text;

    Bwt bwt;
    InverseSuffixArray isa;
    if (text.is_circular()) {
        const SuffixArray full_sa = build_suffix_array(text, PowerPolicy::TieBreak);
        const Bwt full = build_bwt(text, full_sa);
        const PeriodReport period = detect_period(full.symbols);
        const Text root = indexed_text(text, period.exponent > 1 ? &err : nullptr);
        const SuffixArray sa = build_suffix_array(root);
        bwt = period.exponent > 1 ? shrink_bwt(full, period.exponent) : full;
        if (bwt.symbols != build_bwt(root, sa).symbols) {
            throw Error(Errc::InvalidText, "shrunk BWT differs from the BWT of the primitive root");
        }
        isa = invert_sa(sa);
    } else {
        const SuffixArray sa = build_suffix_array(text);
        bwt = build_bwt(text, sa);
        isa = invert_sa(sa);
    }
    const Index n = bwt.size();
    const Index rate = args.rate == 0 ? ceil_log2(n) : args.rate;
    const SampledIsa sisa = sample_isa(isa, rate);

    const std::filesystem::path prefix = args.output.empty() ? args.input : args.output;
    write_file(with_suffix(prefix, ".bwt"), encode_bwt(bwt));
    write_file(with_suffix(prefix, ".sisa"), encode_sisa(sisa, bwt.circular, bwt.sigma));
    const std::string map = in.map.to_json();
    write_file(with_suffix(prefix, ".map"),
               std::span(reinterpret_cast<const std::uint8_t*>(map.data()), map.size()));
    out << "indexed " << args.input.string() << ": n=" << n << " sigma=" << bwt.sigma << " rate=" << rate
        << (bwt.circular ? " circular" : "") << "\n";
    return kOk;
}

int cmd_build(const BuildArgs& args, std::ostream& out, std::ostream& err) {
    ArtifactHeader bwt_header;
    ArtifactHeader isa_header;
    const Bwt bwt = decode_bwt(read_file(args.bwt), &bwt_header);
    const SampledIsa sisa = decode_sisa(read_file(args.sisa), &isa_header);
    if (bwt_header.n != isa_header.n) {
        throw Error(Errc::HeaderMismatch, "BWT has n=" + std::to_string(bwt_header.n) + " but sampled ISA has n=" +
                                              std::to_string(isa_header.n));
    }
    if (bwt_header.circular() != isa_header.circular()) {
        throw Error(Errc::HeaderMismatch, "BWT and sampled ISA disagree on the circular flag");
    }

    em::Options em_options;
    em_options.backing = em::Options::Backing::Files;
    em_options.keep_temp = args.keep_temp;
    if (args.temp_dir) em_options.temp_dir = *args.temp_dir;
    em::Context ctx(em_options);

    BuildReport report;
    const PlcpBits k = build_plcp(ctx, bwt, sisa, args.options, &report);
    write_file(args.output, encode_plcp(k, bwt.circular, args.options.strategy, bwt.sigma));
    out << "built " << args.output.string() << ": n=" << k.n() << " strategy=" << to_string(args.options.strategy)
        << " rounds=" << report.rounds << " shift=" << k.shift() << "\n";
    if (args.keep_temp) err << "temporary files kept in " << em_options.temp_dir.string() << "\n";
    if (args.verify_text) return cmd_verify(VerifyArgs{*args.verify_text, args.output}, out);
    return kOk;
}

int cmd_decode(const DecodeArgs& args, std::ostream& out) {
    const PlcpBits k = decode_plcp(read_file(args.plcp));
    std::vector<Index> values;
    if (args.positions.empty()) {
        values = k.decode_all();
    } else {
        for (Index p : args.positions) values.push_back(k.decode(p));
    }
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
    out << "\n";
    return kOk;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
    const auto bytes = read_file(args.plcp);
    const ArtifactHeader header = read_header(bytes, kPlcpMagic);
    const Text text = indexed_text(ingest(read_file(args.text), header.circular()).text, nullptr);
    const PlcpArray expected = ReferenceIndex::build(text).plcp;
    if (expected.size() != header.n) {
        throw Error(Errc::VerificationFailed, "length mismatch: text has n=" + std::to_string(expected.size()) +
                                                  ", PLCP file has n=" + std::to_string(header.n));
    }
    PlcpBits k;
    try {
        k = decode_plcp(bytes);
    } catch (const Error& e) {
        throw Error(Errc::VerificationFailed, std::string("payload is not a valid PLCP vector: ") + e.what());
    }
    for (Index i = 0; i < expected.size(); ++i) {
        Index found = 0;
        bool ok = true;
        try {
            found = k.decode(i);
        } catch (const Error&) {
            ok = false;
        }
        if (!ok || found != expected[i]) {
            throw Error(Errc::VerificationFailed, "mismatch at position " + std::to_string(i) + ": expected " +
                                                      std::to_string(expected[i]) +
                                                      (ok ? ", found " + std::to_string(found) : ", undecodable"));
        }
    }
    out << "verified " << expected.size() << " positions: OK\n";
    return kOk;
}

int cmd_period(const PeriodArgs& args, std::ostream& out) {
    const Bwt bwt = decode_bwt(read_file(args.bwt));
    if (!bwt.circular) throw Error(Errc::FormatError, "period detection needs a circular BWT");
    const PeriodReport r = detect_period(bwt.symbols);
    out << "period " << r.period << " exponent " << r.exponent << "\n";
    return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Succinct PLCP construction from a BWT and a sampled inverse suffix array"};
    app.require_subcommand(1);

    IndexArgs index;
    auto* index_cmd = app.add_subcommand("index", "Build .bwt, .sisa and .map files for a text");
    index_cmd->add_option("input", index.input, "Text file")->required()->check(CLI::ExistingFile);
    index_cmd->add_option("-o,--output", index.output, "Output prefix (default: input path)");
    index_cmd->add_option("--rate", index.rate, "ISA sampling rate (default: ceil(log2 n))");
    index_cmd->add_flag("--circular", index.circular, "Treat the text as circular");

    BuildArgs build;
    std::string strategy = "external";
    std::string temp_dir;
    std::string verify_text;
    auto* build_cmd = app.add_subcommand("build", "Construct the succinct PLCP vector");
    build_cmd->add_option("bwt", build.bwt, ".bwt file")->required()->check(CLI::ExistingFile);
    build_cmd->add_option("sisa", build.sisa, ".sisa file")->required()->check(CLI::ExistingFile);
    build_cmd->add_option("-o,--output", build.output, "Output .plcp file")->required();
    build_cmd->add_option("--strategy", strategy, "internal, external or hybrid")
        ->check(CLI::IsMember({"internal", "external", "hybrid"}));
    build_cmd->add_option("--cutoff", build.options.cutoff, "Hybrid round cutoff (default: 3*ceil(log2 n))");
    build_cmd->add_option("--kernel", build.options.kernel, "Sparse LCP kernel for the hybrid strategy")
        ->check(CLI::IsMember({"direct"}));
    build_cmd->add_option("--anchor", build.options.anchor, "Circular rotation anchor (k-th symbol boundary)");
    build_cmd->add_flag("--keep-temp", build.keep_temp, "Keep temporary stream files");
    build_cmd->add_option("--temp-dir", temp_dir, "Directory for temporary stream files");
    build_cmd->add_option("--verify-after-build", verify_text, "Verify the result against this text file");

    DecodeArgs decode;
    bool all = false;
    auto* decode_cmd = app.add_subcommand("decode", "Print PLCP values");
    decode_cmd->add_option("plcp", decode.plcp, ".plcp file")->required()->check(CLI::ExistingFile);
    auto* positions = decode_cmd->add_option("--positions", decode.positions, "Comma separated positions")
                          ->delimiter(',');
    decode_cmd->add_flag("--all", all, "Print every position (default)")->excludes(positions);

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check a .plcp file against the text it was built from");
    verify_cmd->add_option("text", verify.text, "Text file")->required()->check(CLI::ExistingFile);
    verify_cmd->add_option("plcp", verify.plcp, ".plcp file")->required()->check(CLI::ExistingFile);

    PeriodArgs period;
    auto* period_cmd = app.add_subcommand("period", "Report the period of a circular BWT");
    period_cmd->add_option("bwt", period.bwt, ".bwt file")->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return kUsage;
    }

    try {
        if (*index_cmd) return cmd_index(index, out, err);
        if (*build_cmd) {
            build.options.strategy = parse_strategy(strategy);
            if (!temp_dir.empty()) build.temp_dir = temp_dir;
            if (!verify_text.empty()) build.verify_text = verify_text;
            return cmd_build(build, out, err);
        }
        if (*decode_cmd) return cmd_decode(decode, out);
        if (*verify_cmd) return cmd_verify(verify, out);
        if (*period_cmd) return cmd_period(period, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == Errc::VerificationFailed ? kVerificationFailed : kFormatError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFormatError;
    }
    return kUsage;
}

}  // namespace plcpem::cli
