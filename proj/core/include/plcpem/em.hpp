// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

// Simulated external memory. Every intermediate sequence of the builders
// lives in a File that can only be appended to and read front to back.
// Each file keeps an AccessLog so tests can prove that a run never seeks.

#pragma once

#include <bit>
#include <concepts>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plcpem/bit_vector.hpp"
#include "plcpem/gamma.hpp"
#include "plcpem/types.hpp"

namespace plcpem::em {

struct AccessLog {
    std::string name;
    Index words_written = 0;
    Index words_read = 0;
    Index opens = 0;    ///< reader passes started
    Index rewinds = 0;  ///< passes beyond the first
    Index non_sequential = 0;
};

class Storage {
public:
    virtual ~Storage() = default;
    virtual void append(std::span<const std::uint64_t> words) = 0;
    virtual void read(Index word_offset, std::span<std::uint64_t> out) const = 0;
};

/// Append-only bit file. Writers seal it; readers only start after sealing.
class File {
public:
    File(std::unique_ptr<Storage> storage, std::shared_ptr<AccessLog> log)
        : storage_(std::move(storage)), log_(std::move(log)) {}

    [[nodiscard]] const std::string& name() const noexcept { return log_->name; }
    [[nodiscard]] Index size_bits() const noexcept { return bits_; }
    [[nodiscard]] Index records() const noexcept { return records_; }
    void set_records(Index records) noexcept { records_ = records; }
    [[nodiscard]] bool sealed() const noexcept { return sealed_; }
    [[nodiscard]] AccessLog& log() noexcept { return *log_; }

private:
    friend class BitWriter;
    friend class BitReader;

    std::unique_ptr<Storage> storage_;
    std::shared_ptr<AccessLog> log_;
    Index bits_ = 0;
    Index records_ = 0;
    bool sealed_ = false;
};

using FileRef = std::shared_ptr<File>;

/// A logical stream made of sealed file segments read back to back.
struct Run {
    std::vector<FileRef> segments;

    Run() = default;
    Run(FileRef file) { segments.push_back(std::move(file)); }  // NOLINT(google-explicit-constructor)
    Run(std::vector<FileRef> files) : segments(std::move(files)) {}  // NOLINT

    [[nodiscard]] Index records() const noexcept;
    [[nodiscard]] Index size_bits() const noexcept;
};

class BitWriter {
public:
    BitWriter(FileRef file, Index buffer_words);
    BitWriter(const BitWriter&) = delete;
    BitWriter& operator=(const BitWriter&) = delete;
    BitWriter(BitWriter&&) noexcept = default;
    BitWriter& operator=(BitWriter&&) noexcept = default;
    ~BitWriter();

    void put_bit(bool bit) {
        if (bit) current_ |= std::uint64_t{1} << fill_;
        if (++fill_ == 64) push_word();
    }
    void put_zeros(Index count);
    /// Appends the low `width` (<= 64) bits of value, least significant first.
    void put_bits(std::uint64_t value, unsigned width) {
        if (width == 0) return;
        if (width < 64) value &= (std::uint64_t{1} << width) - 1;
        current_ |= value << fill_;
        const unsigned total = fill_ + width;
        if (total >= 64) {
            const unsigned used = 64 - fill_;
            push_word();
            fill_ = total - 64;
            current_ = fill_ == 0 ? 0 : value >> used;
        } else {
            fill_ = total;
        }
    }
    void put_msb_first(std::uint64_t value, unsigned width) { put_bits(reverse_bits(value, width), width); }
    void put_gamma(Index v) { plcpem::put_gamma(*this, v); }

    [[nodiscard]] Index bits_written() const noexcept { return full_words_ * 64 + fill_; }
    /// Flushes and seals the file; idempotent.
    FileRef finish();

private:
    void push_word() {
        buffer_.push_back(current_);
        current_ = 0;
        fill_ = 0;
        ++full_words_;
        if (buffer_.size() == capacity_) flush();
    }
    void flush();

    FileRef file_;
    std::vector<std::uint64_t> buffer_;
    Index capacity_;
    std::uint64_t current_ = 0;
    unsigned fill_ = 0;
    Index full_words_ = 0;
};

/// Forward-only reader over a Run. Opening a reader starts a pass on every
/// segment; a pass after the first is logged as a rewind.
class BitReader {
public:
    BitReader(const Run& run, Index buffer_words);

    [[nodiscard]] bool at_end() {
        return seg_remaining_ == 0 && !advance_segment();
    }
    bool get_bit() {
        if (seg_remaining_ == 0 && !advance_segment()) throw_truncated();
        if (avail_ == 0) refill();
        const bool bit = word_ & 1u;
        word_ >>= 1;
        --avail_;
        --seg_remaining_;
        return bit;
    }
    /// Reads `width` (<= 64) bits, least significant first.
    std::uint64_t get_bits(unsigned width) {
        if (width == 0) return 0;
        if (seg_remaining_ < width) return get_bits_slow(width);
        if (avail_ == 0) refill();
        std::uint64_t value;
        if (avail_ >= width) {
            value = width == 64 ? word_ : word_ & ((std::uint64_t{1} << width) - 1);
            word_ = width == 64 ? 0 : word_ >> width;
            avail_ -= width;
        } else {
            const unsigned have = avail_;
            value = word_;
            refill();
            const unsigned rest = width - have;
            value |= (rest == 64 ? word_ : (word_ & ((std::uint64_t{1} << rest) - 1))) << have;
            word_ = rest == 64 ? 0 : word_ >> rest;
            avail_ -= rest;
        }
        seg_remaining_ -= width;
        return value;
    }
    std::uint64_t get_msb_first(unsigned width) { return reverse_bits(get_bits(width), width); }
    /// Counts zeros up to the next one bit and consumes that one bit.
    Index take_zero_run();
    Index get_gamma() { return plcpem::get_gamma(*this); }

    /// Repositions the reader inside the current segment. Any jump is
    /// logged as a non-sequential access; no builder calls this.
    void seek(Index bit_in_segment);

private:
    bool advance_segment();
    void refill();
    std::uint64_t get_bits_slow(unsigned width);
    [[noreturn]] static void throw_truncated();

    std::vector<FileRef> segments_;
    std::size_t next_segment_ = 0;
    File* file_ = nullptr;
    std::vector<std::uint64_t> buffer_;
    Index capacity_;
    Index buffer_pos_ = 0;
    Index next_word_ = 0;      // storage offset of the next buffer fill
    Index seg_bits_ = 0;       // bits in the current segment
    Index loaded_words_ = 0;   // words of the current segment moved into word_
    Index seg_remaining_ = 0;  // unread bits in the current segment
    std::uint64_t word_ = 0;
    unsigned avail_ = 0;
};

/// High-water marks of items held in internal-memory containers, per owner.
class MemoryMeter {
public:
    void observe(std::string_view owner, Index items);
    [[nodiscard]] const std::map<std::string, Index, std::less<>>& peaks() const noexcept { return peaks_; }
    void reset() { peaks_.clear(); }

private:
    std::map<std::string, Index, std::less<>> peaks_;
};

struct Options {
    enum class Backing { Memory, Files };
    Backing backing = Backing::Memory;
    std::filesystem::path temp_dir = std::filesystem::temp_directory_path();
    std::string prefix = "plcpem";
    bool keep_temp = false;
    Index buffer_bytes = 64 * 1024;
    /// Intervals up to this width are sorted inside one stream buffer;
    /// wider ones go through an external radix sort.
    Index im_sort_block = 1 << 16;
};

class Context {
public:
    explicit Context(Options options = {});

    [[nodiscard]] FileRef create(std::string_view tag);
    [[nodiscard]] BitWriter writer(std::string_view tag) { return BitWriter(create(tag), buffer_words()); }
    [[nodiscard]] BitReader reader(const Run& run) const { return BitReader(run, buffer_words()); }

    [[nodiscard]] const Options& options() const noexcept { return options_; }
    [[nodiscard]] Index buffer_words() const noexcept { return options_.buffer_bytes / 8; }
    [[nodiscard]] MemoryMeter& meter() noexcept { return meter_; }
    [[nodiscard]] const MemoryMeter& meter() const noexcept { return meter_; }

    /// Logs of every file created through this context, including deleted ones.
    [[nodiscard]] const std::vector<std::shared_ptr<AccessLog>>& logs() const noexcept { return logs_; }
    [[nodiscard]] Index total_non_sequential() const noexcept;
    [[nodiscard]] Index max_rewinds() const noexcept;

    void count_round() noexcept { ++rounds_; }
    [[nodiscard]] Index rounds() const noexcept { return rounds_; }

private:
    Options options_;
    MemoryMeter meter_;
    std::vector<std::shared_ptr<AccessLog>> logs_;
    std::string run_prefix_;
    Index counter_ = 0;
    Index rounds_ = 0;
};

[[nodiscard]] FileRef write_bits(Context& ctx, const BitVector& bits, std::string_view tag);
[[nodiscard]] BitVector read_bits(const Context& ctx, const Run& run);

// ---------------------------------------------------------------------------
// Record codecs

template <class C>
concept RecordCodec = requires(const C& c, BitWriter& w, BitReader& r, const typename C::value_type& v) {
    c.write(w, v);
    { c.read(r) } -> std::same_as<typename C::value_type>;
};

struct BitCodec {
    using value_type = bool;
    void write(BitWriter& w, bool v) const { w.put_bit(v); }
    bool read(BitReader& r) const { return r.get_bit(); }
};

struct FixedCodec {
    using value_type = std::uint64_t;
    unsigned width = 64;
    void write(BitWriter& w, std::uint64_t v) const { w.put_bits(v, width); }
    std::uint64_t read(BitReader& r) const { return r.get_bits(width); }
};

struct GammaCodec {
    using value_type = Index;
    void write(BitWriter& w, Index v) const { w.put_gamma(v); }
    Index read(BitReader& r) const { return r.get_gamma(); }
};

template <RecordCodec C>
class RecordWriter {
public:
    using value_type = typename C::value_type;

    RecordWriter(Context& ctx, std::string_view tag, C codec = {})
        : writer_(ctx.writer(tag)), codec_(std::move(codec)) {}

    void push(const value_type& v) {
        codec_.write(writer_, v);
        ++count_;
    }
    [[nodiscard]] Index count() const noexcept { return count_; }
    [[nodiscard]] BitWriter& bits() noexcept { return writer_; }

    FileRef finish() {
        auto file = writer_.finish();
        file->set_records(count_);
        return file;
    }

private:
    BitWriter writer_;
    C codec_;
    Index count_ = 0;
};

template <RecordCodec C>
class RecordReader {
public:
    using value_type = typename C::value_type;

    RecordReader(const Context& ctx, const Run& run, C codec = {})
        : reader_(ctx.reader(run)), codec_(std::move(codec)), remaining_(run.records()) {}

    [[nodiscard]] Index remaining() const noexcept { return remaining_; }
    [[nodiscard]] bool has_next() const noexcept { return remaining_ > 0; }
    value_type next() {
        --remaining_;
        return codec_.read(reader_);
    }
    bool next(value_type& out) {
        if (remaining_ == 0) return false;
        out = next();
        return true;
    }
    void skip(Index count) {
        for (Index i = 0; i < count; ++i) (void)next();
    }

private:
    BitReader reader_;
    C codec_;
    Index remaining_;
};

/// Writes a plain bit sequence with one record per bit.
template <class Range>
[[nodiscard]] FileRef write_marks(Context& ctx, const Range& bits, std::string_view tag) {
    RecordWriter<BitCodec> w(ctx, tag);
    for (bool b : bits) w.push(b);
    return w.finish();
}

template <RecordCodec C>
[[nodiscard]] std::vector<typename C::value_type> read_all(const Context& ctx, const Run& run, C codec = {}) {
    std::vector<typename C::value_type> out;
    out.reserve(run.records());
    RecordReader<C> r(ctx, run, codec);
    while (r.has_next()) out.push_back(r.next());
    return out;
}

template <RecordCodec C, class Range>
[[nodiscard]] FileRef write_all(Context& ctx, const Range& values, std::string_view tag, C codec = {}) {
    RecordWriter<C> w(ctx, tag, codec);
    for (const auto& v : values) w.push(v);
    return w.finish();
}

}  // namespace plcpem::em
