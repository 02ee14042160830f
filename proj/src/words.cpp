#include "hitomezashi/words.hpp"

#include <deque>
#include <mutex>

namespace hitomezashi {

WordParseError::WordParseError(std::size_t position, char found)
    : std::invalid_argument("invalid character '" + std::string(1, found) +
                            "' at position " + std::to_string(position) +
                            " (expected '0' or '1')"),
      position_(position) {}

BinaryWord::BinaryWord(std::size_t length, bool fill)
    : limbs_((length + 63) / 64, fill ? ~std::uint64_t{0} : 0), size_(length) {
    clear_tail();
}

void BinaryWord::clear_tail() noexcept {
    if (size_ % 64 != 0 && !limbs_.empty()) {
        limbs_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }
}

BinaryWord BinaryWord::parse(std::string_view text) {
    BinaryWord w(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c != '0' && c != '1') {
            throw WordParseError(i, c);
        }
        w.set(i, c == '1');
    }
    return w;
}

BinaryWord BinaryWord::from_bits(const std::vector<int>& bits) {
    BinaryWord w(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 0 && bits[i] != 1) {
            throw std::invalid_argument("letter must be 0 or 1");
        }
        w.set(i, bits[i]);
    }
    return w;
}

int BinaryWord::at(std::size_t index) const {
    if (index >= size_) {
        throw std::out_of_range("word index " + std::to_string(index) + " out of range");
    }
    return (*this)[index];
}

void BinaryWord::set(std::size_t index, int bit) {
    if (index >= size_) {
        throw std::out_of_range("word index " + std::to_string(index) + " out of range");
    }
    const std::uint64_t mask = std::uint64_t{1} << (index % 64);
    if (bit) {
        limbs_[index / 64] |= mask;
    } else {
        limbs_[index / 64] &= ~mask;
    }
}

int BinaryWord::at_periodic(std::int64_t index) const {
    if (size_ == 0) {
        throw std::invalid_argument("periodic extension of the empty word");
    }
    return (*this)[static_cast<std::size_t>(floor_mod(index, static_cast<std::int64_t>(size_)))];
}

std::string BinaryWord::to_string() const {
    std::string out(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if ((*this)[i]) out[i] = '1';
    }
    return out;
}

BinaryWord BinaryWord::complement() const {
    BinaryWord out = *this;
    for (auto& limb : out.limbs_) limb = ~limb;
    out.clear_tail();
    return out;
}

BinaryWord BinaryWord::reversed() const {
    BinaryWord out(size_);
    for (std::size_t i = 0; i < size_; ++i) {
        if ((*this)[i]) out.set(size_ - 1 - i, 1);
    }
    return out;
}

BinaryWord BinaryWord::concat(const BinaryWord& other) const {
    BinaryWord out(size_ + other.size_);
    out.limbs_.assign(out.limbs_.size(), 0);
    std::copy(limbs_.begin(), limbs_.end(), out.limbs_.begin());
    for (std::size_t i = 0; i < other.size_; ++i) {
        if (other[i]) out.set(size_ + i, 1);
    }
    return out;
}

std::size_t BinaryWord::minimal_cyclic_period() const {
    if (size_ == 0) {
        throw std::invalid_argument("period of the empty word");
    }
    // Only divisors of the length can be cyclic periods.
    for (std::size_t p = 1; p < size_; ++p) {
        if (size_ % p != 0) continue;
        bool ok = true;
        for (std::size_t i = 0; i + p < size_ && ok; ++i) {
            ok = (*this)[i] == (*this)[i + p];
        }
        if (ok) return p;
    }
    return size_;
}

BinaryWord complement(const BinaryWord& w) { return w.complement(); }
BinaryWord reverse(const BinaryWord& w) { return w.reversed(); }
BinaryWord operator+(const BinaryWord& lhs, const BinaryWord& rhs) { return lhs.concat(rhs); }

const BinaryWord& koch_word(int order) {
    if (order < 1) {
        throw InvalidOrderError("Koch word order must be >= 1, got " + std::to_string(order));
    }
    // Word length is 3^(n-1); beyond this the window sizes are meaningless anyway.
    if (order > 20) {
        throw InvalidOrderError("Koch word order " + std::to_string(order) + " is too large");
    }
    static std::mutex mutex;
    static std::deque<BinaryWord> cache;  // deque keeps references stable
    std::lock_guard lock(mutex);
    if (cache.empty()) cache.push_back(BinaryWord::parse("0"));
    while (cache.size() < static_cast<std::size_t>(order)) {
        const BinaryWord& w = cache.back();
        BinaryWord flipped = w.complement();
        cache.push_back(flipped.reversed() + flipped + w);
    }
    return cache[static_cast<std::size_t>(order) - 1];
}

BinaryWord palindromic_period(const BinaryWord& w) {
    if (w.empty()) {
        throw std::invalid_argument("palindromic_period requires a non-empty word");
    }
    return w + w.reversed();
}

}  // namespace hitomezashi
