#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "errors.hpp"

namespace codeloop {

// Dense bit matrix, each row packed into 64-bit words.
class BitMatrix {
public:
    BitMatrix() = default;

    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64),
          data_(rows * words_per_row_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return data_[r * words_per_row_ + (c >> 6)] >> (c & 63) & 1;
    }

    void set(std::size_t r, std::size_t c, bool value) {
        std::uint64_t& word = data_[r * words_per_row_ + (c >> 6)];
        const std::uint64_t bit = std::uint64_t{1} << (c & 63);
        if (value)
            word |= bit;
        else
            word &= ~bit;
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0, words_per_row_ = 0;
    std::vector<std::uint64_t> data_;
};

// Incremental linear system over GF(2).
//
// Stored rows are kept fully reduced: each has a unique pivot column and
// zeros in every other pivot column. Reducing an incoming equation then
// costs one dense XOR per pivot column it touches, so the many redundant
// rows of an exhaustive scan are cheap to discard. The right-hand side is
// carried as an extra column at index num_vars().
class Gf2System {
public:
    explicit Gf2System(std::size_t vars)
        : vars_(vars), words_((vars + 1 + 63) / 64),
          pivot_mask_(words_, 0), row_of_pivot_(vars, npos), scratch_(words_, 0) {}

    std::size_t num_vars() const { return vars_; }
    std::size_t rank() const { return rows_.size(); }
    bool consistent() const { return !inconsistent_; }

    void add_equation(std::span<const std::size_t> vars, bool rhs) {
        std::fill(scratch_.begin(), scratch_.end(), 0);
        for (std::size_t v : vars) {
            if (v >= vars_)
                fail(Errc::index_out_of_range,
                     "variable " + std::to_string(v) + " of " + std::to_string(vars_));
            scratch_[v >> 6] ^= std::uint64_t{1} << (v & 63);
        }
        if (rhs) scratch_[vars_ >> 6] ^= std::uint64_t{1} << (vars_ & 63);
        reduce_and_insert();
    }

    void add_equation(std::initializer_list<std::size_t> vars, bool rhs) {
        add_equation(std::span<const std::size_t>(vars.begin(), vars.size()), rhs);
    }

    // Particular solution with every free variable set to 0.
    std::vector<std::uint8_t> particular_solution() const {
        if (inconsistent_)
            fail(Errc::inconsistent_system, "no solution exists");
        std::vector<std::uint8_t> x(vars_, 0);
        for (std::size_t i = 0; i < rows_.size(); ++i)
            x[pivots_[i]] = static_cast<std::uint8_t>(bit(rows_[i], vars_));
        return x;
    }

    // One basis vector of the homogeneous solution space per free column.
    std::vector<std::vector<std::uint8_t>> nullspace_basis() const {
        std::vector<std::vector<std::uint8_t>> basis;
        for (std::size_t f = 0; f < vars_; ++f) {
            if (row_of_pivot_[f] != npos) continue;
            std::vector<std::uint8_t> x(vars_, 0);
            x[f] = 1;
            for (std::size_t i = 0; i < rows_.size(); ++i)
                x[pivots_[i]] = static_cast<std::uint8_t>(bit(rows_[i], f));
            basis.push_back(std::move(x));
        }
        return basis;
    }

    std::size_t nullity() const { return vars_ - rank(); }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    static bool bit(const std::vector<std::uint64_t>& row, std::size_t c) {
        return row[c >> 6] >> (c & 63) & 1;
    }

    void reduce_and_insert() {
        // Clear every pivot-column bit. Stored rows carry no pivot columns
        // other than their own, so one ascending pass is complete.
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t hits = scratch_[w] & pivot_mask_[w];
            while (hits) {
                const std::size_t p = w * 64 + static_cast<std::size_t>(std::countr_zero(hits));
                const std::vector<std::uint64_t>& row = rows_[row_of_pivot_[p]];
                for (std::size_t j = 0; j < words_; ++j) scratch_[j] ^= row[j];
                hits = scratch_[w] & pivot_mask_[w];
            }
        }
        // Find the lowest remaining variable bit; none means the equation
        // was dependent (rhs 0) or contradictory (rhs 1).
        std::size_t pivot = npos;
        for (std::size_t w = 0; w < words_ && pivot == npos; ++w) {
            std::uint64_t bits = scratch_[w];
            if (w == (vars_ >> 6)) bits &= (std::uint64_t{1} << (vars_ & 63)) - 1;
            if (bits) pivot = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        }
        if (pivot == npos) {
            if (bit(scratch_, vars_)) inconsistent_ = true;
            return;
        }
        // Back-substitute the new row into earlier rows, then store it.
        for (std::vector<std::uint64_t>& row : rows_) {
            if (!bit(row, pivot)) continue;
            for (std::size_t j = 0; j < words_; ++j) row[j] ^= scratch_[j];
        }
        row_of_pivot_[pivot] = rows_.size();
        pivots_.push_back(pivot);
        rows_.push_back(scratch_);
        pivot_mask_[pivot >> 6] |= std::uint64_t{1} << (pivot & 63);
    }

    std::size_t vars_, words_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<std::uint64_t> pivot_mask_;
    std::vector<std::size_t> row_of_pivot_;
    std::vector<std::uint64_t> scratch_;
    bool inconsistent_ = false;
};

} // namespace codeloop
