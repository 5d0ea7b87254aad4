// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

// Elias gamma code with a zero shift: v is stored as gamma(v + 1), i.e.
// floor(log2(v + 1)) zero bits followed by the binary digits of v + 1,
// most significant first. The shift lets count streams hold zeros.

#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "plcpem/bit_vector.hpp"
#include "plcpem/types.hpp"

namespace plcpem {

template <class Sink>
void put_gamma(Sink& sink, Index v) {
    const std::uint64_t x = v + 1;
    const unsigned len = static_cast<unsigned>(std::bit_width(x)) - 1;
    sink.put_zeros(len);
    sink.put_msb_first(x, len + 1);
}

/// Decodes one codeword. `Source` provides take_zero_run(), which counts a
/// run of zeros and consumes the terminating one, and get_msb_first(width).
template <class Source>
[[nodiscard]] Index get_gamma(Source& source) {
    const unsigned len = static_cast<unsigned>(source.take_zero_run());
    const std::uint64_t low = len == 0 ? 0 : source.get_msb_first(len);
    return ((std::uint64_t{1} << len) | low) - 1;
}

/// Bit length of the codeword for v.
[[nodiscard]] constexpr Index gamma_length(Index v) noexcept {
    return 2 * (static_cast<Index>(std::bit_width(v + 1)) - 1) + 1;
}

/// Append-only stream of gamma codewords.
struct GammaStream {
    BitVector bits;
    Index count = 0;

    void put(Index v) {
        put_gamma(bits, v);
        ++count;
    }
};

/// Single-consumer read cursor over a GammaStream.
class GammaCursor {
public:
    explicit GammaCursor(const GammaStream& stream) : stream_(&stream) {}

    /// Throws Errc::TruncatedCode when reading past the written bits.
    [[nodiscard]] Index get();
    [[nodiscard]] bool at_end() const noexcept { return pos_ >= stream_->bits.size(); }
    [[nodiscard]] Index position() const noexcept { return pos_; }

    Index take_zero_run();
    std::uint64_t get_msb_first(unsigned width);

private:
    const GammaStream* stream_;
    Index pos_ = 0;
};

/// Stores values[i] - values[i-1] - 1 (with values[-1] = base) as gamma codes.
/// Throws Errc::NotIncreasing unless values is strictly increasing above base.
[[nodiscard]] GammaStream diff_gamma_encode(std::span<const Index> values, std::int64_t base);
[[nodiscard]] std::vector<Index> diff_gamma_decode(const GammaStream& stream, std::int64_t base);

}  // namespace plcpem
