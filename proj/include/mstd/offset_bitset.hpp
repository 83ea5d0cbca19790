#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace mstd {

/// Dense bit vector over the integer window [offset, offset + bits).
///
/// The workhorse behind sumset and difference-set evaluation: a sumset is a
/// union of shifted copies of one operand, so `or_shifted` does the inner
/// loop one 64-bit word at a time.
class OffsetBitset {
public:
    OffsetBitset(std::int64_t offset, std::size_t bits)
        : offset_(offset), bits_(bits), words_((bits + 63) / 64, 0) {}

    std::int64_t offset() const noexcept { return offset_; }
    std::size_t bits() const noexcept { return bits_; }

    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }

    /// this |= (src << shift). Bits shifted past the end are dropped.
    void or_shifted(const OffsetBitset& src, std::size_t shift) noexcept {
        const std::size_t word_shift = shift >> 6;
        const unsigned bit_shift = static_cast<unsigned>(shift & 63);
        const std::size_t n = words_.size();
        const auto& s = src.words_;
        for (std::size_t i = 0; i < s.size() && i + word_shift < n; ++i) {
            words_[i + word_shift] |= s[i] << bit_shift;
            if (bit_shift != 0 && i + word_shift + 1 < n) {
                words_[i + word_shift + 1] |= s[i] >> (64 - bit_shift);
            }
        }
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    /// Set positions translated back to values, ascending.
    std::vector<std::int64_t> values() const {
        std::vector<std::int64_t> out;
        out.reserve(count());
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w != 0) {
                const auto b = static_cast<std::size_t>(std::countr_zero(w));
                out.push_back(offset_ + static_cast<std::int64_t>(wi * 64 + b));
                w &= w - 1;
            }
        }
        return out;
    }

private:
    std::int64_t offset_;
    std::size_t bits_;
    std::vector<std::uint64_t> words_;
};

}  // namespace mstd
