// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

#include "plcpem/formats.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>

#include <json.hpp>

#include "plcpem/error.hpp"

namespace plcpem {
namespace {

void put_le(std::vector<std::uint8_t>& out, std::uint64_t v, unsigned bytes) {
    for (unsigned i = 0; i < bytes; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint64_t get_le(std::span<const std::uint8_t> in, std::size_t offset, unsigned bytes) {
    std::uint64_t v = 0;
    for (unsigned i = 0; i < bytes; ++i) v |= std::uint64_t{in[offset + i]} << (8 * i);
    return v;
}

std::vector<std::uint8_t> encode_header(const ArtifactHeader& h) {
    std::vector<std::uint8_t> out;
    out.reserve(kHeaderBytes);
    out.insert(out.end(), h.magic.begin(), h.magic.end());
    put_le(out, h.version, 4);
    put_le(out, h.flags, 4);
    put_le(out, h.n, 8);
    put_le(out, h.sigma, 4);
    put_le(out, h.rate, 4);
    put_le(out, h.shift, 8);
    return out;
}

ArtifactHeader make_header(std::string_view magic, bool circular) {
    ArtifactHeader h;
    std::copy(magic.begin(), magic.end(), h.magic.begin());
    h.flags = circular ? 1u : 0u;
    return h;
}

}  // namespace

ArtifactHeader read_header(std::span<const std::uint8_t> bytes, std::string_view magic) {
    if (bytes.size() < kHeaderBytes) throw Error(Errc::FormatError, "file shorter than its header");
    ArtifactHeader h;
    std::copy_n(bytes.begin(), 8, h.magic.begin());
    if (h.magic_view() != magic) {
        throw Error(Errc::FormatError, "bad magic '" + std::string(h.magic_view()) + "', expected '" +
                                           std::string(magic) + "'");
    }
    h.version = static_cast<std::uint32_t>(get_le(bytes, 8, 4));
    if (h.version != kFormatVersion) throw Error(Errc::FormatError, "unsupported format version");
    h.flags = static_cast<std::uint32_t>(get_le(bytes, 12, 4));
    h.n = get_le(bytes, 16, 8);
    h.sigma = static_cast<std::uint32_t>(get_le(bytes, 24, 4));
    h.rate = static_cast<std::uint32_t>(get_le(bytes, 28, 4));
    h.shift = get_le(bytes, 32, 8);
    return h;
}

std::vector<std::uint8_t> encode_bwt(const Bwt& bwt) {
    if (bwt.sigma > 256) throw Error(Errc::AlphabetTooLarge, "BWT files hold at most 256 symbols");
    ArtifactHeader h = make_header(kBwtMagic, bwt.circular);
    h.n = bwt.size();
    h.sigma = bwt.sigma;
    auto out = encode_header(h);
    for (Symbol s : bwt.symbols) out.push_back(static_cast<std::uint8_t>(s));
    return out;
}

Bwt decode_bwt(std::span<const std::uint8_t> bytes, ArtifactHeader* header) {
    const ArtifactHeader h = read_header(bytes, kBwtMagic);
    if (bytes.size() - kHeaderBytes != h.n) throw Error(Errc::FormatError, "BWT payload length differs from n");
    if (h.sigma == 0 || h.sigma > 256) throw Error(Errc::FormatError, "BWT sigma out of range");
    std::vector<Symbol> symbols(bytes.begin() + kHeaderBytes, bytes.end());
    for (Symbol s : symbols) {
        if (s >= h.sigma) throw Error(Errc::FormatError, "BWT symbol beyond sigma");
    }
    if (header != nullptr) *header = h;
    return Bwt::from_symbols(std::move(symbols), h.sigma, h.circular());
}

std::vector<std::uint8_t> encode_sisa(const SampledIsa& sisa, bool circular, Symbol sigma) {
    sisa.validate();
    if (sisa.rate > 0xffffffffu) throw Error(Errc::RateMismatch, "sampling rate does not fit the header");
    ArtifactHeader h = make_header(kIsaMagic, circular);
    h.n = sisa.n;
    h.sigma = sigma;
    h.rate = static_cast<std::uint32_t>(sisa.rate);
    auto out = encode_header(h);
    for (Index r : sisa.ranks) put_le(out, r, 8);
    return out;
}

SampledIsa decode_sisa(std::span<const std::uint8_t> bytes, ArtifactHeader* header) {
    const ArtifactHeader h = read_header(bytes, kIsaMagic);
    if (h.rate == 0) throw Error(Errc::FormatError, "sampling rate must be positive");
    SampledIsa sisa;
    sisa.n = h.n;
    sisa.rate = h.rate;
    const std::size_t count = ceil_div(h.n, h.rate);
    if (bytes.size() - kHeaderBytes != count * 8) {
        throw Error(Errc::FormatError, "sampled ISA payload length differs from ceil(n / rate)");
    }
    for (std::size_t i = 0; i < count; ++i) {
        const Index r = get_le(bytes, kHeaderBytes + 8 * i, 8);
        if (r >= h.n) throw Error(Errc::FormatError, "sampled rank beyond n");
        sisa.ranks.push_back(r);
    }
    if (header != nullptr) *header = h;
    return sisa;
}

std::vector<std::uint8_t> encode_plcp(const PlcpBits& k, bool circular, Strategy strategy, Symbol sigma) {
    if (k.size_bits() != 2 * k.n()) throw Error(Errc::FormatError, "PLCP vector must hold exactly 2n bits");
    ArtifactHeader h = make_header(kPlcpMagic, circular);
    h.flags |= static_cast<std::uint32_t>(strategy) << 8;
    h.n = k.n();
    h.sigma = sigma;
    h.shift = k.shift();
    auto out = encode_header(h);
    const auto payload = k.bits().to_bytes();
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
}

PlcpBits decode_plcp(std::span<const std::uint8_t> bytes, ArtifactHeader* header) {
    const ArtifactHeader h = read_header(bytes, kPlcpMagic);
    BitVector bits = BitVector::from_bytes(bytes.subspan(kHeaderBytes), 2 * h.n);
    if (header != nullptr) *header = h;
    return PlcpBits(std::move(bits), h.n, h.shift);
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::IoError, "cannot open '" + path.string() + "' for reading");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::IoError, "cannot open '" + path.string() + "' for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(Errc::IoError, "write to '" + path.string() + "' failed");
}

std::string AlphabetMap::to_json() const {
    nlohmann::json symbols = nlohmann::json::array();
    for (const auto& b : byte_of_rank) {
        if (b) {
            symbols.push_back(*b);
        } else {
            symbols.push_back(nullptr);
        }
    }
    nlohmann::json j{{"circular", circular}, {"terminator_appended", terminator_appended}, {"symbols", symbols}};
    return j.dump(2) + "\n";
}

AlphabetMap AlphabetMap::from_json(std::string_view json) {
    try {
        const auto j = nlohmann::json::parse(json);
        AlphabetMap map;
        map.circular = j.at("circular").get<bool>();
        map.terminator_appended = j.at("terminator_appended").get<bool>();
        for (const auto& s : j.at("symbols")) {
            if (s.is_null()) {
                map.byte_of_rank.emplace_back(std::nullopt);
            } else {
                map.byte_of_rank.emplace_back(s.get<std::uint8_t>());
            }
        }
        return map;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::FormatError, std::string("bad alphabet map: ") + e.what());
    }
}

IngestedText ingest(std::span<const std::uint8_t> bytes, bool circular) {
    if (bytes.empty()) throw Error(Errc::EmptyInput, "input is empty");
    std::array<bool, 256> present{};
    for (auto b : bytes) present[b] = true;

    AlphabetMap map;
    map.circular = circular;
    std::span<const std::uint8_t> body = bytes;
    if (!circular) {
        const bool own_terminator =
            bytes.back() == 0 && std::count(bytes.begin(), bytes.end(), std::uint8_t{0}) == 1;
        map.terminator_appended = !own_terminator;
        if (own_terminator) {
            body = bytes.first(bytes.size() - 1);
            present[0] = false;
        }
        if (map.terminator_appended) {
            map.byte_of_rank.emplace_back(std::nullopt);
        } else {
            map.byte_of_rank.emplace_back(std::uint8_t{0});
        }
    }
    std::array<Symbol, 256> rank_of{};
    for (unsigned b = 0; b < 256; ++b) {
        if (!present[b]) continue;
        rank_of[b] = static_cast<Symbol>(map.byte_of_rank.size());
        map.byte_of_rank.emplace_back(static_cast<std::uint8_t>(b));
    }
    if (map.byte_of_rank.size() > 256) {
        throw Error(Errc::AlphabetTooLarge, "input uses all 256 byte values plus a terminator");
    }
    std::vector<Symbol> symbols;
    symbols.reserve(body.size() + 1);
    for (auto b : body) symbols.push_back(rank_of[b]);
    const auto sigma = static_cast<Symbol>(map.byte_of_rank.size());
    if (circular) return {Text::circular(std::move(symbols), sigma), std::move(map)};
    symbols.push_back(0);
    return {Text::linear(std::move(symbols), sigma), std::move(map)};
}

}  // namespace plcpem
