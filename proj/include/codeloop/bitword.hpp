#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace codeloop {

// One word of a binary code, at most 64 coordinates packed into a single
// machine word. Coordinate i of the text form is bit i, so "0100" has
// exactly bit 1 set.
struct BitWord {
    std::uint64_t bits = 0;
    int length = 0;

    friend bool operator==(const BitWord&, const BitWord&) = default;
};

inline std::uint64_t coordinate_mask(int length) {
    return length >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;
}

inline BitWord parse_word(std::string_view text) {
    if (text.empty())
        fail(Errc::parse_error, "empty code word");
    if (text.size() > 64)
        fail(Errc::too_long, "code word has " + std::to_string(text.size()) +
                                 " coordinates, limit is 64");
    BitWord w{0, static_cast<int>(text.size())};
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1')
            w.bits |= std::uint64_t{1} << i;
        else if (text[i] != '0')
            fail(Errc::bad_character, std::string("expected '0' or '1', got '") +
                                          text[i] + "' at position " + std::to_string(i));
    }
    return w;
}

inline std::string to_string(const BitWord& w) {
    std::string s(static_cast<std::size_t>(w.length), '0');
    for (int i = 0; i < w.length; ++i)
        if (w.bits >> i & 1) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

inline void require_same_length(const BitWord& a, const BitWord& b) {
    if (a.length != b.length)
        fail(Errc::length_mismatch, "word lengths differ: " + std::to_string(a.length) +
                                        " vs " + std::to_string(b.length));
}

// Hamming weight ||u||.
inline int weight(const BitWord& u) { return std::popcount(u.bits); }

// Intersection count u.v = |{i : u_i = v_i = 1}|.
inline int dot(const BitWord& u, const BitWord& v) {
    require_same_length(u, v);
    return std::popcount(u.bits & v.bits);
}

// Triple intersection count |{i : u_i = v_i = w_i = 1}|.
inline int triple_count(const BitWord& u, const BitWord& v, const BitWord& w) {
    require_same_length(u, v);
    require_same_length(u, w);
    return std::popcount(u.bits & v.bits & w.bits);
}

// Codeword addition (coordinatewise XOR), length preserving.
inline BitWord operator^(const BitWord& u, const BitWord& v) {
    require_same_length(u, v);
    return BitWord{u.bits ^ v.bits, u.length};
}

// x/2 reduced mod 2; the scans only divide even intersection counts, so an
// odd argument means the doubly-even precondition was violated upstream.
inline int half_mod2(int x) {
    if (x & 1)
        fail(Errc::not_doubly_even, "intersection count " + std::to_string(x) + " is odd");
    return (x >> 1) & 1;
}

// x/4 reduced mod 2, with the same defensive exactness check.
inline int quarter_mod2(int x) {
    if (x & 3)
        fail(Errc::not_doubly_even, "weight " + std::to_string(x) + " is not divisible by 4");
    return (x >> 2) & 1;
}

} // namespace codeloop
