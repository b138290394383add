// num128.hpp — 128-bit accumulator type with overflow-checked arithmetic.
//
// Index sums grow like m * n^2 and do not fit in 64 bits for large systems,
// so every accumulation in the library runs through these helpers. Overflow
// raises an Error instead of wrapping.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "hexcut/errors.hpp"

namespace hexcut {

using i128 = __int128;

inline i128 checked_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(ErrorCode::Overflow, "128-bit addition overflow");
    return r;
}

inline i128 checked_sub(i128 a, i128 b) {
    i128 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw Error(ErrorCode::Overflow, "128-bit subtraction overflow");
    return r;
}

inline i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(ErrorCode::Overflow, "128-bit multiplication overflow");
    return r;
}

inline std::int64_t checked_add64(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(ErrorCode::Overflow, "64-bit aggregate overflow");
    return r;
}

std::string to_string(i128 value);

// Parses a base-10 integer (optional leading '-'); rejects anything else.
i128 i128_from_string(std::string_view text);

} // namespace hexcut
