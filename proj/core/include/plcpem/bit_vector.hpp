// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plcpem/types.hpp"

namespace plcpem {

/// Reverses the low `width` bits of `value`.
[[nodiscard]] constexpr std::uint64_t reverse_bits(std::uint64_t value, unsigned width) noexcept {
    std::uint64_t out = 0;
    for (unsigned i = 0; i < width; ++i) {
        out = (out << 1) | (value & 1);
        value >>= 1;
    }
    return out;
}

/// Position of the (j+1)-th set bit of `word`; j must be < popcount(word).
[[nodiscard]] inline unsigned select_in_word(std::uint64_t word, unsigned j) noexcept {
    for (unsigned i = 0; i < j; ++i) word &= word - 1;
    return static_cast<unsigned>(std::countr_zero(word));
}

/// Growable bit sequence. Bit i lives in word i/64 at bit i%64, so a
/// byte-wise dump is LSB-first within each byte.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(Index size, bool value = false);

    /// Parses a string of '0'/'1' characters; whitespace is ignored.
    static BitVector from_string(std::string_view bits);

    [[nodiscard]] Index size() const noexcept { return size_; }
    [[nodiscard]] bool empty() const noexcept { return size_ == 0; }
    [[nodiscard]] bool operator[](Index i) const noexcept {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(Index i, bool value) noexcept;

    void push_back(bool bit);
    void put_bit(bool bit) { push_back(bit); }
    void put_zeros(Index count);
    /// Appends the low `width` bits of `value`, least significant first.
    void put_bits(std::uint64_t value, unsigned width);
    /// Appends the low `width` bits of `value`, most significant first.
    void put_msb_first(std::uint64_t value, unsigned width) {
        put_bits(reverse_bits(value, width), width);
    }
    /// Reads `width` bits starting at `pos`, least significant first.
    [[nodiscard]] std::uint64_t get_bits(Index pos, unsigned width) const noexcept;

    [[nodiscard]] Index count_ones() const noexcept;
    [[nodiscard]] std::span<const std::uint64_t> words() const noexcept { return words_; }
    [[nodiscard]] std::vector<std::uint8_t> to_bytes() const;
    static BitVector from_bytes(std::span<const std::uint8_t> bytes, Index size);
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const BitVector& a, const BitVector& b) noexcept {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

private:
    std::vector<std::uint64_t> words_;
    Index size_ = 0;
};

/// Static bit vector with rank and select support.
///
/// Rank uses cumulative one-counts per 512-bit superblock plus popcounts;
/// select samples every 512th one (and zero) and scans forward from there.
class RsBitVector {
public:
    RsBitVector() = default;
    explicit RsBitVector(BitVector bits);

    [[nodiscard]] Index size() const noexcept { return bits_.size(); }
    [[nodiscard]] bool operator[](Index i) const noexcept { return bits_[i]; }
    [[nodiscard]] const BitVector& bits() const noexcept { return bits_; }

    /// Number of ones in [0, i); i is clamped to size().
    [[nodiscard]] Index rank1(Index i) const noexcept;
    [[nodiscard]] Index rank0(Index i) const noexcept;
    /// 0-indexed position of the (j+1)-th one; throws Errc::OutOfRange.
    [[nodiscard]] Index select1(Index j) const;
    [[nodiscard]] Index select0(Index j) const;

    [[nodiscard]] Index ones() const noexcept { return ones_; }
    [[nodiscard]] Index zeros() const noexcept { return size() - ones_; }

private:
    template <bool One>
    [[nodiscard]] Index select_impl(Index j) const;

    static constexpr Index kWordsPerBlock = 8;
    static constexpr Index kBlockBits = 64 * kWordsPerBlock;
    static constexpr Index kSelectSample = 512;

    BitVector bits_;
    std::vector<Index> block_ranks_;  // ones before each superblock
    std::vector<Index> select1_samples_;
    std::vector<Index> select0_samples_;
    Index ones_ = 0;
};

}  // namespace plcpem
