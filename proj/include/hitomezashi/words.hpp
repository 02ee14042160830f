#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hitomezashi {

/// Raised when a word string contains something other than '0' or '1'.
class WordParseError : public std::invalid_argument {
public:
    WordParseError(std::size_t position, char found);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class InvalidOrderError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Floored modulo: result always in [0, m) for m > 0.
constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t m) noexcept {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

/// Floored division matching floor_mod.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t m) noexcept {
    return (a - floor_mod(a, m)) / m;
}

/**
 * Finite word over {0, 1}, stored packed 64 letters per limb.
 *
 * Value type with structural equality. Bits past size() in the last limb
 * are always zero so limb-wise comparison is exact.
 */
class BinaryWord {
public:
    BinaryWord() = default;
    explicit BinaryWord(std::size_t length, bool fill = false);

    static BinaryWord parse(std::string_view text);
    static BinaryWord from_bits(const std::vector<int>& bits);

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    int operator[](std::size_t index) const noexcept {
        return static_cast<int>((limbs_[index / 64] >> (index % 64)) & 1u);
    }
    int at(std::size_t index) const;
    void set(std::size_t index, int bit);

    /// Letter of the infinite periodic extension at any (possibly negative) index.
    int at_periodic(std::int64_t index) const;

    std::string to_string() const;

    BinaryWord complement() const;
    BinaryWord reversed() const;
    BinaryWord concat(const BinaryWord& other) const;

    /// Smallest p >= 1 with w[i] == w[i + p] for every valid i, treating the
    /// word as one period of its infinite cyclic extension.
    std::size_t minimal_cyclic_period() const;

    friend bool operator==(const BinaryWord&, const BinaryWord&) = default;

private:
    void clear_tail() noexcept;

    std::vector<std::uint64_t> limbs_;
    std::size_t size_ = 0;
};

BinaryWord complement(const BinaryWord& w);
BinaryWord reverse(const BinaryWord& w);
BinaryWord operator+(const BinaryWord& lhs, const BinaryWord& rhs);

/// w_1 = 0, w_{n+1} = reverse(complement(w_n)) ++ complement(w_n) ++ w_n.
/// Memoized per process; thread-safe.
const BinaryWord& koch_word(int order);

/// w followed by its reversal; the period used when a word is repeated
/// forwards and backwards.
BinaryWord palindromic_period(const BinaryWord& w);

}  // namespace hitomezashi
