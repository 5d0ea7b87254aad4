// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

#include "plcpem/plcp_bits.hpp"

#include <string>

#include "plcpem/error.hpp"

namespace plcpem {

PlcpBits::PlcpBits(BitVector bits, Index n, Index shift) : k_(std::move(bits)), n_(n), shift_(shift) {
    if (k_.ones() != n_) {
        throw Error(Errc::FormatError, "PLCP bit vector holds " + std::to_string(k_.ones()) +
                                           " ones, expected " + std::to_string(n_));
    }
    if (n_ > 0 && shift_ >= n_) throw Error(Errc::FormatError, "rotation shift out of range");
}

Index PlcpBits::decode(Index i) const {
    if (i >= n_) throw Error(Errc::OutOfRange, "PLCP position out of range");
    const Index j = (i + n_ - shift_) % n_;
    const Index one = k_.select1(j);
    // A valid vector has at least j + 1 zeros ahead of one bit #j.
    if (one < 2 * j + 1) throw Error(Errc::FormatError, "corrupt PLCP vector: negative value decoded");
    return one - 2 * j - 1;
}

std::vector<Index> PlcpBits::decode_all() const {
    std::vector<Index> out(n_);
    for (Index i = 0; i < n_; ++i) out[i] = decode(i);
    return out;
}

PlcpBits plcp_encode(const PlcpArray& plcp, Index shift) {
    const Index n = plcp.size();
    if (n > 0 && shift >= n) throw Error(Errc::OutOfRange, "rotation shift out of range");
    BitVector k;
    Index prev = 0;
    for (Index j = 0; j < n; ++j) {
        const Index v = plcp[(j + shift) % n];
        if (j > 0 && v + 1 < prev) {
            throw Error(Errc::DiffBoundViolation,
                        "PLCP drops from " + std::to_string(prev) + " to " + std::to_string(v));
        }
        k.put_zeros(j == 0 ? v + 1 : v + 1 - prev);
        k.push_back(true);
        prev = v;
    }
    return PlcpBits(std::move(k), n, shift);
}

}  // namespace plcpem
