#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cremona {

// All user-facing arithmetic in this library is exact. Values live in
// int64_t and every operation that could wrap goes through the checked
// helpers below; wrap-around raises OverflowError instead of corrupting
// a result silently.

struct OverflowError : std::runtime_error {
    OverflowError() : std::runtime_error("integer overflow in exact arithmetic") {}
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
    return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError();
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
    return r;
}

inline int64_t checked_neg(int64_t a) { return checked_sub(0, a); }

inline int sign_of(int64_t v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

}  // namespace cremona
