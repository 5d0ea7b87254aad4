// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

// Artifact files. Every file starts with a 40-byte little-endian header:
//
//   offset  size  field
//        0     8  magic (see the k*Magic constants)
//        8     4  version (1)
//       12     4  flags (bit 0 circular, bits 8..15 strategy)
//       16     8  n
//       24     4  sigma
//       28     4  sampling rate (sampled ISA files)
//       32     8  rotation shift (PLCP files)
//
// Payloads: one byte per BWT symbol; one little-endian u64 per sampled
// rank; the K bits of a PLCP file packed least significant bit first,
// ceil(2n / 8) bytes.

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plcpem/pipeline.hpp"
#include "plcpem/plcp_bits.hpp"
#include "plcpem/textcore.hpp"

namespace plcpem {

inline constexpr std::string_view kBwtMagic = "PLCPBWT1";
inline constexpr std::string_view kIsaMagic = "PLCPISA1";
inline constexpr std::string_view kPlcpMagic = "PLCPK__1";
inline constexpr std::uint32_t kFormatVersion = 1;
inline constexpr std::size_t kHeaderBytes = 40;

struct ArtifactHeader {
    std::array<char, 8> magic{};
    std::uint32_t version = kFormatVersion;
    std::uint32_t flags = 0;
    std::uint64_t n = 0;
    std::uint32_t sigma = 0;
    std::uint32_t rate = 0;
    std::uint64_t shift = 0;

    [[nodiscard]] bool circular() const noexcept { return (flags & 1u) != 0; }
    [[nodiscard]] Strategy strategy() const noexcept { return static_cast<Strategy>((flags >> 8) & 0xffu); }
    [[nodiscard]] std::string_view magic_view() const noexcept { return {magic.data(), magic.size()}; }
};

/// Parses and checks the header only. Throws Errc::FormatError.
[[nodiscard]] ArtifactHeader read_header(std::span<const std::uint8_t> bytes, std::string_view magic);

[[nodiscard]] std::vector<std::uint8_t> encode_bwt(const Bwt& bwt);
[[nodiscard]] Bwt decode_bwt(std::span<const std::uint8_t> bytes, ArtifactHeader* header = nullptr);
[[nodiscard]] std::vector<std::uint8_t> encode_sisa(const SampledIsa& sisa, bool circular, Symbol sigma);
[[nodiscard]] SampledIsa decode_sisa(std::span<const std::uint8_t> bytes, ArtifactHeader* header = nullptr);
[[nodiscard]] std::vector<std::uint8_t> encode_plcp(const PlcpBits& k, bool circular, Strategy strategy,
                                                    Symbol sigma);
[[nodiscard]] PlcpBits decode_plcp(std::span<const std::uint8_t> bytes, ArtifactHeader* header = nullptr);

/// Throws Errc::IoError.
[[nodiscard]] std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

/// Byte to rank mapping applied on ingestion. Linear inputs reserve rank 0
/// for the terminator unless the input already ends in a unique NUL byte.
struct AlphabetMap {
    bool circular = false;
    bool terminator_appended = false;
    /// byte_of_rank[r] is the byte for rank r; absent for an appended terminator.
    std::vector<std::optional<std::uint8_t>> byte_of_rank;

    [[nodiscard]] std::string to_json() const;
    [[nodiscard]] static AlphabetMap from_json(std::string_view json);
    friend bool operator==(const AlphabetMap&, const AlphabetMap&) = default;
};

struct IngestedText {
    Text text;
    AlphabetMap map;
};

/// Throws Errc::EmptyInput and Errc::AlphabetTooLarge (more than 256 ranks).
[[nodiscard]] IngestedText ingest(std::span<const std::uint8_t> bytes, bool circular);

}  // namespace plcpem
