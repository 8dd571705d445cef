#pragma once

#include <stdexcept>
#include <string>

namespace codeloop {

enum class Errc {
    bad_character,
    too_long,
    length_mismatch,
    dimension_too_large,
    index_out_of_range,
    shape_mismatch,
    not_normalized,
    not_doubly_even,
    inconsistent_system,
    generation_failed,
    order_too_large,
    precondition_not_met,
    not_a_factor_set,
    parse_error,
    file_not_found,
    write_error,
};

inline const char* errc_name(Errc c) noexcept {
    switch (c) {
        case Errc::bad_character:       return "bad_character";
        case Errc::too_long:            return "too_long";
        case Errc::length_mismatch:     return "length_mismatch";
        case Errc::dimension_too_large: return "dimension_too_large";
        case Errc::index_out_of_range:  return "index_out_of_range";
        case Errc::shape_mismatch:      return "shape_mismatch";
        case Errc::not_normalized:      return "not_normalized";
        case Errc::not_doubly_even:     return "not_doubly_even";
        case Errc::inconsistent_system: return "inconsistent_system";
        case Errc::generation_failed:   return "generation_failed";
        case Errc::order_too_large:     return "order_too_large";
        case Errc::precondition_not_met:return "precondition_not_met";
        case Errc::not_a_factor_set:    return "not_a_factor_set";
        case Errc::parse_error:         return "parse_error";
        case Errc::file_not_found:      return "file_not_found";
        case Errc::write_error:         return "write_error";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace codeloop
