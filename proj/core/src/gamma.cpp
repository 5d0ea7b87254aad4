// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

#include "plcpem/gamma.hpp"

#include <string>

#include "plcpem/error.hpp"

namespace plcpem {

Index GammaCursor::take_zero_run() {
    const BitVector& bits = stream_->bits;
    Index zeros = 0;
    while (pos_ < bits.size() && !bits[pos_]) {
        ++zeros;
        ++pos_;
    }
    if (pos_ >= bits.size()) throw Error(Errc::TruncatedCode, "gamma code runs past end of stream");
    ++pos_;
    return zeros;
}

std::uint64_t GammaCursor::get_msb_first(unsigned width) {
    if (pos_ + width > stream_->bits.size()) {
        throw Error(Errc::TruncatedCode, "gamma code runs past end of stream");
    }
    const auto v = stream_->bits.get_bits(pos_, width);
    pos_ += width;
    return reverse_bits(v, width);
}

Index GammaCursor::get() { return get_gamma(*this); }

GammaStream diff_gamma_encode(std::span<const Index> values, std::int64_t base) {
    GammaStream out;
    std::int64_t prev = base;
    for (Index v : values) {
        const auto sv = static_cast<std::int64_t>(v);
        if (sv <= prev) {
            throw Error(Errc::NotIncreasing, "value " + std::to_string(v) +
                                                 " does not exceed predecessor " +
                                                 std::to_string(prev));
        }
        out.put(static_cast<Index>(sv - prev - 1));
        prev = sv;
    }
    return out;
}

std::vector<Index> diff_gamma_decode(const GammaStream& stream, std::int64_t base) {
    std::vector<Index> out;
    out.reserve(stream.count);
    GammaCursor cursor(stream);
    std::int64_t prev = base;
    for (Index i = 0; i < stream.count; ++i) {
        prev += static_cast<std::int64_t>(cursor.get()) + 1;
        out.push_back(static_cast<Index>(prev));
    }
    return out;
}

}  // namespace plcpem
