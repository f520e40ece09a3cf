#pragma once

#include <cstdint>
#include <stdexcept>

namespace tworay {

using i64 = std::int64_t;

// All engine arithmetic goes through these; the bounded search domains keep
// every intermediate far below 2^63.

[[nodiscard]] inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in add");
    return r;
}

[[nodiscard]] inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in sub");
    return r;
}

[[nodiscard]] inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in mul");
    return r;
}

}  // namespace tworay
