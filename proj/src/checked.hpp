#pragma once

#include <cstdint>
#include <cstdlib>

#include "error.hpp"

// Overflow-checked 64-bit arithmetic. Lattice entries stay desk-scale by
// contract, but a silent wraparound would corrupt every HNF downstream, so
// all core arithmetic funnels through these.

namespace covsys {

using i64 = std::int64_t;

inline i64 checkedAdd(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer overflow in addition");
    return r;
}

inline i64 checkedSub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer overflow in subtraction");
    return r;
}

inline i64 checkedMul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer overflow in multiplication");
    return r;
}

inline i64 checkedNeg(i64 a) {
    return checkedSub(0, a);
}

// Floor division/remainder for b > 0: floorMod result lies in [0, b).
inline i64 floorDiv(i64 a, i64 b) {
    i64 q = a / b;
    if (a % b != 0 && (a < 0) != (b < 0)) --q;
    return q;
}

inline i64 floorMod(i64 a, i64 b) {
    return checkedSub(a, checkedMul(floorDiv(a, b), b));
}

} // namespace covsys
