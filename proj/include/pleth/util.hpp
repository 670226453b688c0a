#pragma once

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <vector>

namespace pleth {

// All counters and coefficients are 64-bit; overflow aborts loudly rather
// than wrapping, since a silent wrap would corrupt verification results.
inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) {
        std::fprintf(stderr, "pleth: 64-bit overflow in addition\n");
        std::abort();
    }
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) {
        std::fprintf(stderr, "pleth: 64-bit overflow in multiplication\n");
        std::abort();
    }
    return r;
}

struct VecIntHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace pleth
