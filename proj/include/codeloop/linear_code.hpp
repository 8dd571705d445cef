#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "bitword.hpp"

namespace codeloop {

// Binary linear code held as a reduced basis plus the materialized list of
// all 2^k codewords. Codeword i is the XOR of the basis rows selected by
// the bits of i, so index XOR agrees with codeword XOR and index 0 is the
// zero word.
class LinearCode {
public:
    static constexpr int max_dimension = 16;

    LinearCode() = default;

    static LinearCode span(std::span<const BitWord> rows) {
        if (rows.empty())
            fail(Errc::parse_error, "no generator rows");
        const int n = rows[0].length;
        for (const BitWord& r : rows) require_same_length(rows[0], r);

        // Row reduce, pivot = lowest set coordinate, then fully reduce so the
        // basis is canonical for the row space.
        std::uint64_t by_pivot[64] = {};
        for (const BitWord& r : rows) {
            std::uint64_t cur = r.bits;
            while (cur) {
                const int p = std::countr_zero(cur);
                if (!by_pivot[p]) {
                    by_pivot[p] = cur;
                    break;
                }
                cur ^= by_pivot[p];
            }
        }
        for (int p = 0; p < 64; ++p) {
            if (!by_pivot[p]) continue;
            for (int q = 0; q < 64; ++q)
                if (q != p && by_pivot[q] && (by_pivot[q] >> p & 1)) by_pivot[q] ^= by_pivot[p];
        }

        LinearCode code;
        code.length_ = n;
        for (int p = 0; p < 64; ++p)
            if (by_pivot[p]) code.basis_.push_back(BitWord{by_pivot[p], n});
        if (code.dimension() > max_dimension)
            fail(Errc::dimension_too_large, "dimension " + std::to_string(code.dimension()) +
                                                " exceeds " + std::to_string(max_dimension));
        code.materialize();
        return code;
    }

    static LinearCode span(std::initializer_list<BitWord> rows) {
        return span(std::span<const BitWord>(rows.begin(), rows.size()));
    }

    static LinearCode zero_code(int length) {
        BitWord zero{0, length};
        return span(std::span<const BitWord>(&zero, 1));
    }

    int length() const { return length_; }
    int dimension() const { return static_cast<int>(basis_.size()); }
    std::size_t num_codewords() const { return std::size_t{1} << basis_.size(); }
    std::span<const BitWord> basis() const { return basis_; }

    BitWord codeword_at(std::size_t i) const {
        if (i >= num_codewords())
            fail(Errc::index_out_of_range, "codeword index " + std::to_string(i) + " of " +
                                               std::to_string(num_codewords()));
        return BitWord{words_[i], length_};
    }

    // Unchecked fast path for the exhaustive scans.
    std::uint64_t word_bits(std::size_t i) const { return words_[i]; }

    friend bool operator==(const LinearCode&, const LinearCode&) = default;

private:
    void materialize() {
        words_.assign(num_codewords(), 0);
        for (std::size_t i = 1; i < words_.size(); ++i)
            words_[i] = words_[i & (i - 1)] ^
                        basis_[static_cast<std::size_t>(std::countr_zero(i))].bits;
    }

    int length_ = 0;
    std::vector<BitWord> basis_;
    std::vector<std::uint64_t> words_;
};

// Verdict of the exhaustive doubly-even scan: every codeword weight must be
// divisible by 4 and every pairwise intersection count even. The first
// violation found in scan order is reported.
struct DoublyEvenCheck {
    bool ok = true;
    std::optional<BitWord> bad_word;                      // weight % 4 != 0
    std::optional<std::pair<BitWord, BitWord>> bad_pair;  // odd intersection
    std::uint64_t scanned = 0;
};

inline DoublyEvenCheck is_doubly_even(const LinearCode& code) {
    DoublyEvenCheck check;
    const std::size_t m = code.num_codewords();
    for (std::size_t i = 0; i < m; ++i) {
        ++check.scanned;
        if (std::popcount(code.word_bits(i)) % 4 != 0) {
            check.ok = false;
            check.bad_word = code.codeword_at(i);
            return check;
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        const std::uint64_t a = code.word_bits(i);
        for (std::size_t j = 0; j < m; ++j) {
            ++check.scanned;
            if (std::popcount(a & code.word_bits(j)) & 1) {
                check.ok = false;
                check.bad_pair = {code.codeword_at(i), code.codeword_at(j)};
                return check;
            }
        }
    }
    return check;
}

// Rejection-samples a doubly even code of the exact dimension k: draw k
// nonzero words with weight divisible by 4, keep the span if it has rank k
// and passes the exhaustive check. Deterministic in the seed.
inline LinearCode random_doubly_even_code(int n, int k, std::uint64_t seed) {
    if (n < 1 || n > 64)
        fail(Errc::too_long, "length " + std::to_string(n) + " outside [1,64]");
    if (k < 0 || k > 5)
        fail(Errc::dimension_too_large, "dimension " + std::to_string(k) + " outside [0,5]");
    if (k == 0) return LinearCode::zero_code(n);

    std::mt19937_64 rng(seed);
    const std::uint64_t mask = coordinate_mask(n);
    std::vector<BitWord> rows;
    for (int attempt = 0; attempt < 4096; ++attempt) {
        rows.clear();
        for (int i = 0; i < k; ++i) {
            for (int draw = 0; draw < 256; ++draw) {
                const std::uint64_t bits = rng() & mask;
                if (bits != 0 && std::popcount(bits) % 4 == 0) {
                    rows.push_back(BitWord{bits, n});
                    break;
                }
            }
        }
        if (static_cast<int>(rows.size()) < k) continue;
        LinearCode code = LinearCode::span(rows);
        if (code.dimension() != k) continue;
        if (is_doubly_even(code).ok) return code;
    }
    fail(Errc::generation_failed, "no doubly even code of length " + std::to_string(n) +
                                      " and dimension " + std::to_string(k) + " found");
}

} // namespace codeloop
