#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <string>

#include <codeloop/codeloop.hpp>

using namespace codeloop;

namespace {

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return Errc::parse_error;
}

} // namespace

TEST_CASE("parse_word maps text coordinate i to bit i") {
    const BitWord w = parse_word("1000");
    CHECK(w.bits == 0b0001);
    CHECK(w.length == 4);
    CHECK(parse_word("0101").bits == 0b1010);
    CHECK(parse_word("0000000000000000000000000000000000000000000000000000000000000001").bits ==
          (std::uint64_t{1} << 63));
}

TEST_CASE("parse_word round trips through to_string") {
    for (const char* text : {"1", "0", "1111", "10010110", "0101010101010101"})
        CHECK(to_string(parse_word(text)) == text);
}

TEST_CASE("parse_word rejects bad input") {
    CHECK(code_of([] { parse_word(""); }) == Errc::parse_error);
    CHECK(code_of([] { parse_word(std::string(65, '0')); }) == Errc::too_long);
    const std::string msg = [] {
        try {
            parse_word("10x1");
        } catch (const Error& e) {
            return std::string(e.what());
        }
        return std::string();
    }();
    CHECK(msg.find("position 2") != std::string::npos);
    CHECK(code_of([] { parse_word("10x1"); }) == Errc::bad_character);
}

TEST_CASE("weight, dot and triple_count are popcounts of intersections") {
    const BitWord a = parse_word("11110000");
    const BitWord b = parse_word("00111100");
    const BitWord c = parse_word("01010101");
    CHECK(weight(a) == 4);
    CHECK(dot(a, b) == 2);
    CHECK(dot(a, a) == weight(a));
    CHECK(triple_count(a, b, c) == 1);  // coordinate 3 only
    CHECK(triple_count(a, b, parse_word("00000000")) == 0);
}

TEST_CASE("xor keeps the length and rejects mismatches") {
    const BitWord a = parse_word("1100");
    const BitWord b = parse_word("0110");
    CHECK(to_string(a ^ b) == "1010");
    CHECK((a ^ b).length == 4);
    CHECK(code_of([&] { (void)(a ^ parse_word("11000")); }) == Errc::length_mismatch);
}

TEST_CASE("half_mod2 and quarter_mod2 demand exact divisibility") {
    CHECK(half_mod2(0) == 0);
    CHECK(half_mod2(2) == 1);
    CHECK(half_mod2(4) == 0);
    CHECK(half_mod2(6) == 1);
    CHECK(quarter_mod2(0) == 0);
    CHECK(quarter_mod2(4) == 1);
    CHECK(quarter_mod2(8) == 0);
    CHECK(quarter_mod2(12) == 1);
    CHECK(code_of([] { half_mod2(3); }) == Errc::not_doubly_even);
    CHECK(code_of([] { quarter_mod2(6); }) == Errc::not_doubly_even);
}

TEST_CASE("coordinate_mask covers exactly the first length bits") {
    CHECK(coordinate_mask(1) == 1);
    CHECK(coordinate_mask(4) == 0xF);
    CHECK(coordinate_mask(64) == ~std::uint64_t{0});
}
