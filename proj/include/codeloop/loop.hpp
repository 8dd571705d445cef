#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "factor_set.hpp"
#include "report.hpp"

namespace codeloop {

// Element (a, u) of the loop built on {0,1} x C: a is the Z2 component,
// u a codeword index. The element index is a * 2^k + u.
struct LoopElement {
    int scalar = 0;
    std::size_t word = 0;

    friend bool operator==(const LoopElement&, const LoopElement&) = default;
};

enum class Side { left, right };

// The loop with multiplication
//   (a,u) * (b,v) = (a + b + phi(u,v), u + v).
// Any normalized phi yields a loop (both translations are bijections);
// the factor set axioms are what make it a code loop.
class CodeLoop {
public:
    static constexpr std::size_t max_scan_order = std::size_t{1} << 12;
    static constexpr std::size_t materialize_limit = std::size_t{1} << 10;

    explicit CodeLoop(FactorSet phi) : phi_(std::move(phi)) {
        k_ = phi_.dim();
        words_ = phi_.size();
    }

    std::size_t order() const { return words_ * 2; }
    int code_dim() const { return k_; }
    const FactorSet& phi() const { return phi_; }

    std::size_t index(LoopElement e) const {
        return (static_cast<std::size_t>(e.scalar) << k_) | e.word;
    }

    LoopElement element(std::size_t idx) const {
        if (idx >= order())
            fail(Errc::index_out_of_range,
                 "element " + std::to_string(idx) + " of " + std::to_string(order()));
        return LoopElement{static_cast<int>(idx >> k_), idx & (words_ - 1)};
    }

    LoopElement mul(LoopElement x, LoopElement y) const {
        return LoopElement{x.scalar ^ y.scalar ^ phi_.entry(x.word, y.word), x.word ^ y.word};
    }

    // z with x * z == y, closed form from the multiplication rule.
    LoopElement left_div(LoopElement x, LoopElement y) const {
        return LoopElement{x.scalar ^ y.scalar ^ phi_.entry(x.word, x.word ^ y.word),
                           x.word ^ y.word};
    }

    // z with z * x == y.
    LoopElement right_div(LoopElement x, LoopElement y) const {
        return LoopElement{x.scalar ^ y.scalar ^ phi_.entry(x.word ^ y.word, x.word),
                           x.word ^ y.word};
    }

    LoopElement divide(Side side, LoopElement x, LoopElement y) const {
        return side == Side::left ? left_div(x, y) : right_div(x, y);
    }

    LoopElement square(LoopElement x) const {
        return LoopElement{phi_.entry(x.word, x.word), 0};
    }

    LoopElement identity() const { return LoopElement{0, 0}; }

    bool has_table() const { return !table_.empty(); }

    // Row-major order x order table of element indices.
    const std::vector<std::size_t>& table() const {
        if (table_.empty())
            fail(Errc::order_too_large,
                 "no materialized table for order " + std::to_string(order()));
        return table_;
    }

    void materialize() {
        if (!table_.empty()) return;
        const std::size_t m = order();
        table_.resize(m * m);
        for (std::size_t i = 0; i < m; ++i) {
            const LoopElement x = element(i);
            for (std::size_t j = 0; j < m; ++j)
                table_[i * m + j] = index(mul(x, element(j)));
        }
    }

private:
    FactorSet phi_;
    int k_ = 0;
    std::size_t words_ = 0;
    std::vector<std::size_t> table_;
};

inline CheckReport check_latin_square(const CodeLoop& loop) {
    CheckReport report{"LATIN_SQUARE"};
    const std::size_t m = loop.order();
    if (m > CodeLoop::max_scan_order)
        fail(Errc::order_too_large, "order " + std::to_string(m) + " exceeds scan cap");
    std::vector<std::uint8_t> seen(m);
    for (std::size_t i = 0; i < m && report.holds; ++i) {
        const LoopElement x = loop.element(i);
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t j = 0; j < m; ++j) {
            ++report.scanned;
            const std::size_t p = loop.index(loop.mul(x, loop.element(j)));
            if (seen[p]++) {
                report.holds = false;
                report.witness = {i, j};
                break;
            }
        }
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t j = 0; j < m && report.holds; ++j) {
            ++report.scanned;
            const std::size_t p = loop.index(loop.mul(loop.element(j), x));
            if (seen[p]++) {
                report.holds = false;
                report.witness = {j, i};
                break;
            }
        }
    }
    return report;
}

// Builds the loop, materializing and sanity-checking the table at small
// orders. A normalized phi always produces a Latin square, so a failure
// here means internal breakage, not bad input.
inline CodeLoop build_loop(FactorSet phi) {
    CodeLoop loop(std::move(phi));
    if (loop.order() <= CodeLoop::materialize_limit) {
        loop.materialize();
        if (!check_latin_square(loop).holds)
            fail(Errc::inconsistent_system, "loop table is not a Latin square");
        if (loop.index(loop.mul(loop.identity(), loop.identity())) != 0)
            fail(Errc::inconsistent_system, "loop identity is broken");
    }
    return loop;
}

struct Nuclei {
    std::vector<std::size_t> left, middle, right, nucleus;  // element indices, ascending
};

// Exhaustive nucleus scan: an element is in the left (middle, right)
// nucleus when it associates in that slot with every pair.
inline Nuclei nucleus(const CodeLoop& loop) {
    const std::size_t m = loop.order();
    if (m > CodeLoop::max_scan_order)
        fail(Errc::order_too_large, "order " + std::to_string(m) + " exceeds scan cap");
    Nuclei result;
    for (std::size_t c = 0; c < m; ++c) {
        const LoopElement cand = loop.element(c);
        bool left = true, middle = true, right = true;
        for (std::size_t i = 0; i < m && (left || middle || right); ++i) {
            const LoopElement x = loop.element(i);
            for (std::size_t j = 0; j < m; ++j) {
                const LoopElement y = loop.element(j);
                if (left && !(loop.mul(loop.mul(cand, x), y) == loop.mul(cand, loop.mul(x, y))))
                    left = false;
                if (middle && !(loop.mul(loop.mul(x, cand), y) == loop.mul(x, loop.mul(cand, y))))
                    middle = false;
                if (right && !(loop.mul(loop.mul(x, y), cand) == loop.mul(x, loop.mul(y, cand))))
                    right = false;
                if (!left && !middle && !right) break;
            }
        }
        if (left) result.left.push_back(c);
        if (middle) result.middle.push_back(c);
        if (right) result.right.push_back(c);
        if (left && middle && right) result.nucleus.push_back(c);
    }
    return result;
}

// Nucleus elements that commute with everything.
inline std::vector<std::size_t> center(const CodeLoop& loop) {
    std::vector<std::size_t> result;
    const std::size_t m = loop.order();
    for (std::size_t c : nucleus(loop).nucleus) {
        const LoopElement cand = loop.element(c);
        bool commutes = true;
        for (std::size_t i = 0; i < m && commutes; ++i) {
            const LoopElement x = loop.element(i);
            commutes = loop.mul(cand, x) == loop.mul(x, cand);
        }
        if (commutes) result.push_back(c);
    }
    return result;
}

// Every square lands in the nucleus?
inline CheckReport is_nuclear_square(const CodeLoop& loop) {
    CheckReport report{"NUCLEAR_SQUARE"};
    const Nuclei n = nucleus(loop);
    std::vector<std::uint8_t> in_nucleus(loop.order(), 0);
    for (std::size_t i : n.nucleus) in_nucleus[i] = 1;
    for (std::size_t i = 0; i < loop.order(); ++i) {
        ++report.scanned;
        if (!in_nucleus[loop.index(loop.square(loop.element(i)))]) {
            report.holds = false;
            report.witness = {i};
            return report;
        }
    }
    return report;
}

inline std::optional<std::array<std::size_t, 3>> find_nonassociative_triple(const CodeLoop& loop) {
    const std::size_t m = loop.order();
    if (m > CodeLoop::max_scan_order)
        fail(Errc::order_too_large, "order " + std::to_string(m) + " exceeds scan cap");
    for (std::size_t i = 0; i < m; ++i) {
        const LoopElement x = loop.element(i);
        for (std::size_t j = 0; j < m; ++j) {
            const LoopElement y = loop.element(j);
            const LoopElement xy = loop.mul(x, y);
            for (std::size_t l = 0; l < m; ++l) {
                const LoopElement z = loop.element(l);
                if (!(loop.mul(xy, z) == loop.mul(x, loop.mul(y, z))))
                    return std::array<std::size_t, 3>{i, j, l};
            }
        }
    }
    return std::nullopt;
}

} // namespace codeloop
