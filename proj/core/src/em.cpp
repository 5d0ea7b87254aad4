// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

#include "plcpem/em.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <sstream>

#include "plcpem/error.hpp"

namespace plcpem::em {
namespace {

class MemoryStorage final : public Storage {
public:
    void append(std::span<const std::uint64_t> words) override {
        words_.insert(words_.end(), words.begin(), words.end());
    }
    void read(Index word_offset, std::span<std::uint64_t> out) const override {
        std::copy_n(words_.begin() + static_cast<std::ptrdiff_t>(word_offset), out.size(), out.begin());
    }

private:
    std::vector<std::uint64_t> words_;
};

class FileStorage final : public Storage {
public:
    FileStorage(std::filesystem::path path, bool keep) : path_(std::move(path)), keep_(keep) {
        file_ = std::fopen(path_.c_str(), "w+b");
        if (file_ == nullptr) throw Error(Errc::IoError, "cannot create temporary file " + path_.string());
    }
    FileStorage(const FileStorage&) = delete;
    FileStorage& operator=(const FileStorage&) = delete;
    ~FileStorage() override {
        std::fclose(file_);
        if (!keep_) {
            std::error_code ec;
            std::filesystem::remove(path_, ec);
        }
    }

    void append(std::span<const std::uint64_t> words) override {
        if (std::fseek(file_, 0, SEEK_END) != 0 ||
            std::fwrite(words.data(), sizeof(std::uint64_t), words.size(), file_) != words.size()) {
            throw Error(Errc::IoError, "write failed on " + path_.string());
        }
    }
    void read(Index word_offset, std::span<std::uint64_t> out) const override {
        if (std::fseek(file_, static_cast<long>(word_offset * sizeof(std::uint64_t)), SEEK_SET) != 0 ||
            std::fread(out.data(), sizeof(std::uint64_t), out.size(), file_) != out.size()) {
            throw Error(Errc::IoError, "read failed on " + path_.string());
        }
    }

private:
    std::filesystem::path path_;
    bool keep_;
    std::FILE* file_ = nullptr;
};

}  // namespace

Index Run::records() const noexcept {
    Index total = 0;
    for (const auto& f : segments) total += f->records();
    return total;
}

Index Run::size_bits() const noexcept {
    Index total = 0;
    for (const auto& f : segments) total += f->size_bits();
    return total;
}

BitWriter::BitWriter(FileRef file, Index buffer_words)
    : file_(std::move(file)), capacity_(std::max<Index>(buffer_words, 1)) {
    buffer_.reserve(capacity_);
}

BitWriter::~BitWriter() {
    if (file_ && !file_->sealed_) {
        try {
            finish();
        } catch (...) {
        }
    }
}

void BitWriter::put_zeros(Index count) {
    while (count > 0) {
        const unsigned take = static_cast<unsigned>(std::min<Index>(count, 64 - fill_));
        fill_ += take;
        count -= take;
        if (fill_ == 64) push_word();
    }
}

void BitWriter::flush() {
    if (buffer_.empty()) return;
    file_->storage_->append(buffer_);
    file_->log_->words_written += buffer_.size();
    buffer_.clear();
}

FileRef BitWriter::finish() {
    if (!file_->sealed_) {
        const Index bits = bits_written();
        if (fill_ > 0) buffer_.push_back(current_);
        flush();
        file_->bits_ = bits;
        file_->sealed_ = true;
    }
    return file_;
}

BitReader::BitReader(const Run& run, Index buffer_words)
    : segments_(run.segments), capacity_(std::max<Index>(buffer_words, 1)) {
    for (const auto& f : segments_) {
        if (!f->sealed()) throw Error(Errc::IoError, "reading unsealed file " + f->name());
        auto& log = f->log();
        if (log.opens++ > 0) ++log.rewinds;
    }
}

bool BitReader::advance_segment() {
    while (next_segment_ < segments_.size()) {
        file_ = segments_[next_segment_++].get();
        seg_bits_ = file_->size_bits();
        seg_remaining_ = seg_bits_;
        next_word_ = 0;
        loaded_words_ = 0;
        buffer_.clear();
        buffer_pos_ = 0;
        avail_ = 0;
        word_ = 0;
        if (seg_remaining_ > 0) return true;
    }
    return false;
}

void BitReader::refill() {
    if (buffer_pos_ == buffer_.size()) {
        const Index seg_words = ceil_div(seg_bits_, 64);
        const Index take = std::min(capacity_, seg_words - next_word_);
        buffer_.resize(take);
        file_->storage_->read(next_word_, buffer_);
        file_->log().words_read += take;
        next_word_ += take;
        buffer_pos_ = 0;
    }
    word_ = buffer_[buffer_pos_++];
    avail_ = static_cast<unsigned>(std::min<Index>(64, seg_bits_ - loaded_words_ * 64));
    ++loaded_words_;
}

std::uint64_t BitReader::get_bits_slow(unsigned width) {
    std::uint64_t value = 0;
    for (unsigned i = 0; i < width; ++i) value |= std::uint64_t{get_bit()} << i;
    return value;
}

Index BitReader::take_zero_run() {
    Index zeros = 0;
    for (;;) {
        if (seg_remaining_ == 0 && !advance_segment()) throw_truncated();
        if (avail_ == 0) refill();
        if (word_ == 0) {
            zeros += avail_;
            seg_remaining_ -= avail_;
            avail_ = 0;
            continue;
        }
        const unsigned tz = static_cast<unsigned>(std::countr_zero(word_));
        zeros += tz;
        word_ = tz + 1 == 64 ? 0 : word_ >> (tz + 1);
        avail_ -= tz + 1;
        seg_remaining_ -= tz + 1;
        return zeros;
    }
}

void BitReader::seek(Index bit_in_segment) {
    if (file_ == nullptr || bit_in_segment > seg_bits_) {
        throw Error(Errc::OutOfRange, "seek outside the current segment");
    }
    if (bit_in_segment != seg_bits_ - seg_remaining_) ++file_->log().non_sequential;
    next_word_ = bit_in_segment / 64;
    loaded_words_ = next_word_;
    buffer_.clear();
    buffer_pos_ = 0;
    avail_ = 0;
    seg_remaining_ = seg_bits_ - bit_in_segment;
    const unsigned skip = bit_in_segment % 64;
    if (skip > 0) {
        refill();
        word_ >>= skip;
        avail_ -= skip;
    }
}

void BitReader::throw_truncated() { throw Error(Errc::TruncatedCode, "read past end of stream"); }

void MemoryMeter::observe(std::string_view owner, Index items) {
    auto it = peaks_.find(owner);
    if (it == peaks_.end()) {
        peaks_.emplace(std::string(owner), items);
    } else if (items > it->second) {
        it->second = items;
    }
}

Context::Context(Options options) : options_(std::move(options)) {
    std::random_device rd;
    std::ostringstream os;
    os << options_.prefix << '.' << std::hex << (static_cast<std::uint64_t>(rd()) << 32 | rd());
    run_prefix_ = os.str();
}

FileRef Context::create(std::string_view tag) {
    auto log = std::make_shared<AccessLog>();
    log->name = run_prefix_ + '.' + std::to_string(counter_++) + '.' + std::string(tag);
    logs_.push_back(log);
    std::unique_ptr<Storage> storage;
    if (options_.backing == Options::Backing::Files) {
        storage = std::make_unique<FileStorage>(options_.temp_dir / log->name, options_.keep_temp);
    } else {
        storage = std::make_unique<MemoryStorage>();
    }
    return std::make_shared<File>(std::move(storage), std::move(log));
}

Index Context::total_non_sequential() const noexcept {
    Index total = 0;
    for (const auto& log : logs_) total += log->non_sequential;
    return total;
}

Index Context::max_rewinds() const noexcept {
    Index worst = 0;
    for (const auto& log : logs_) worst = std::max(worst, log->rewinds);
    return worst;
}

FileRef write_bits(Context& ctx, const BitVector& bits, std::string_view tag) {
    auto w = ctx.writer(tag);
    for (Index i = 0; i < bits.size(); i += 64) {
        const unsigned width = static_cast<unsigned>(std::min<Index>(64, bits.size() - i));
        w.put_bits(bits.get_bits(i, width), width);
    }
    auto file = w.finish();
    file->set_records(bits.size());
    return file;
}

BitVector read_bits(const Context& ctx, const Run& run) {
    BitVector out;
    auto r = ctx.reader(run);
    Index left = run.size_bits();
    while (left > 0) {
        const unsigned width = static_cast<unsigned>(std::min<Index>(64, left));
        out.put_bits(r.get_bits(width), width);
        left -= width;
    }
    return out;
}

}  // namespace plcpem::em
