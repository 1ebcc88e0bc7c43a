#pragma once

#include <cstdint>
#include <stdexcept>

namespace coinfrac {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in addition");
    return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in multiplication");
    return out;
}

/// base^exp for non-negative exp; throws std::range_error if the result
/// does not fit in a signed 64-bit integer.
inline std::int64_t checked_pow(std::int64_t base, std::int64_t exp) {
    if (base < 0 || exp < 0)
        throw std::domain_error("checked_pow: negative input");
    std::int64_t result = 1;
    for (std::int64_t i = 0; i < exp; ++i) {
        if (__builtin_mul_overflow(result, base, &result))
            throw std::range_error("checked_pow: result exceeds 64-bit range");
    }
    return result;
}

/// Exact binomial coefficient C(n, k); throws std::range_error on overflow.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0)
        throw std::domain_error("binomial: negative input");
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    // r * (n-k+i) is always divisible by i at step i.
    __int128 r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > INT64_MAX)
            throw std::range_error("binomial: result exceeds 64-bit range");
    }
    return static_cast<std::int64_t>(r);
}

} // namespace coinfrac
