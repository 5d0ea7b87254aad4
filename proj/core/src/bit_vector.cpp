// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

#include "plcpem/bit_vector.hpp"

#include <algorithm>
#include <cctype>

#include "plcpem/error.hpp"

namespace plcpem {

BitVector::BitVector(Index size, bool value)
    : words_(ceil_div(size, 64), value ? ~std::uint64_t{0} : 0), size_(size) {
    if (value && (size_ & 63) != 0) words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector out;
    for (char c : bits) {
        if (c == '0' || c == '1') {
            out.push_back(c == '1');
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            throw Error(Errc::FormatError, "bit string may only contain 0, 1 and spaces");
        }
    }
    return out;
}

void BitVector::set(Index i, bool value) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= mask;
    } else {
        words_[i >> 6] &= ~mask;
    }
}

void BitVector::push_back(bool bit) {
    if ((size_ & 63) == 0) words_.push_back(0);
    if (bit) words_.back() |= std::uint64_t{1} << (size_ & 63);
    ++size_;
}

void BitVector::put_zeros(Index count) {
    size_ += count;
    words_.resize(ceil_div(size_, 64), 0);
}

void BitVector::put_bits(std::uint64_t value, unsigned width) {
    if (width == 0) return;
    if (width < 64) value &= (std::uint64_t{1} << width) - 1;
    const unsigned offset = size_ & 63;
    if (offset == 0) words_.push_back(0);
    words_.back() |= value << offset;
    if (offset + width > 64) words_.push_back(value >> (64 - offset));
    size_ += width;
    words_.resize(ceil_div(size_, 64), 0);
}

std::uint64_t BitVector::get_bits(Index pos, unsigned width) const noexcept {
    if (width == 0) return 0;
    const Index word = pos >> 6;
    const unsigned offset = pos & 63;
    std::uint64_t value = words_[word] >> offset;
    if (offset + width > 64) value |= words_[word + 1] << (64 - offset);
    if (width < 64) value &= (std::uint64_t{1} << width) - 1;
    return value;
}

Index BitVector::count_ones() const noexcept {
    Index total = 0;
    for (auto w : words_) total += static_cast<Index>(std::popcount(w));
    return total;
}

std::vector<std::uint8_t> BitVector::to_bytes() const {
    std::vector<std::uint8_t> out(ceil_div(size_, 8), 0);
    for (Index i = 0; i < out.size(); ++i) {
        out[i] = static_cast<std::uint8_t>(words_[i >> 3] >> ((i & 7) * 8));
    }
    return out;
}

BitVector BitVector::from_bytes(std::span<const std::uint8_t> bytes, Index size) {
    if (bytes.size() != ceil_div(size, 8)) {
        throw Error(Errc::FormatError, "byte payload does not match declared bit length");
    }
    BitVector out;
    out.size_ = size;
    out.words_.assign(ceil_div(size, 64), 0);
    for (Index i = 0; i < bytes.size(); ++i) {
        out.words_[i >> 3] |= std::uint64_t{bytes[i]} << ((i & 7) * 8);
    }
    if ((size & 63) != 0 && !out.words_.empty()) {
        out.words_.back() &= (std::uint64_t{1} << (size & 63)) - 1;
    }
    return out;
}

std::string BitVector::to_string() const {
    std::string out;
    out.reserve(size_);
    for (Index i = 0; i < size_; ++i) out.push_back((*this)[i] ? '1' : '0');
    return out;
}

RsBitVector::RsBitVector(BitVector bits) : bits_(std::move(bits)) {
    const auto words = bits_.words();
    const Index blocks = ceil_div(words.size(), kWordsPerBlock);
    block_ranks_.assign(blocks + 1, 0);
    Index ones = 0;
    Index zeros = 0;
    for (Index w = 0; w < words.size(); ++w) {
        if (w % kWordsPerBlock == 0) block_ranks_[w / kWordsPerBlock] = ones;
        const Index valid = std::min<Index>(64, bits_.size() - w * 64);
        const auto word = words[w];
        const Index word_ones = static_cast<Index>(std::popcount(word));
        const Index word_zeros = valid - word_ones;
        // Record the word index holding every kSelectSample-th one and zero.
        while (select1_samples_.size() * kSelectSample < ones + word_ones &&
               select1_samples_.size() * kSelectSample >= ones) {
            select1_samples_.push_back(w);
        }
        while (select0_samples_.size() * kSelectSample < zeros + word_zeros &&
               select0_samples_.size() * kSelectSample >= zeros) {
            select0_samples_.push_back(w);
        }
        ones += word_ones;
        zeros += word_zeros;
    }
    block_ranks_[blocks] = ones;
    ones_ = ones;
}

Index RsBitVector::rank1(Index i) const noexcept {
    i = std::min(i, bits_.size());
    const auto words = bits_.words();
    const Index word = i >> 6;
    const Index block = word / kWordsPerBlock;
    Index r = block_ranks_[block];
    for (Index w = block * kWordsPerBlock; w < word; ++w) r += std::popcount(words[w]);
    if ((i & 63) != 0) r += std::popcount(words[word] & ((std::uint64_t{1} << (i & 63)) - 1));
    return r;
}

Index RsBitVector::rank0(Index i) const noexcept {
    i = std::min(i, bits_.size());
    return i - rank1(i);
}

template <bool One>
Index RsBitVector::select_impl(Index j) const {
    const Index total = One ? ones_ : zeros();
    if (j >= total) throw Error(Errc::OutOfRange, "select argument exceeds bit count");
    const auto& samples = One ? select1_samples_ : select0_samples_;
    const auto words = bits_.words();
    Index w = samples[j / kSelectSample];
    // Count of matching bits before word w.
    auto count_before = [&](Index word) {
        const Index r1 = rank1(word * 64);
        return One ? r1 : word * 64 - r1;
    };
    Index seen = count_before(w);
    for (;; ++w) {
        std::uint64_t word = One ? words[w] : ~words[w];
        if (!One) {
            const Index valid = std::min<Index>(64, bits_.size() - w * 64);
            if (valid < 64) word &= (std::uint64_t{1} << valid) - 1;
        }
        const Index c = static_cast<Index>(std::popcount(word));
        if (seen + c > j) return w * 64 + select_in_word(word, static_cast<unsigned>(j - seen));
        seen += c;
    }
}

Index RsBitVector::select1(Index j) const { return select_impl<true>(j); }
Index RsBitVector::select0(Index j) const { return select_impl<false>(j); }

}  // namespace plcpem
