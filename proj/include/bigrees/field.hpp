#pragma once

#include <cstdint>
#include <string>

#include "bigrees/errors.hpp"

namespace bigrees {

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Residue in [0, p) for a prime p < 2^31, so products fit in int64.
struct FieldScalar {
    std::int64_t value = 0;
    std::int64_t p = 0;

    static FieldScalar of(std::int64_t v, std::int64_t p) {
        v %= p;
        if (v < 0) v += p;
        return FieldScalar{v, p};
    }
    static FieldScalar zero(std::int64_t p) { return FieldScalar{0, p}; }
    static FieldScalar one(std::int64_t p) { return FieldScalar{1, p}; }

    bool is_zero() const { return value == 0; }
    bool is_one() const { return value == 1; }

    friend bool operator==(const FieldScalar& a, const FieldScalar& b) {
        return a.value == b.value && a.p == b.p;
    }
};

namespace detail {
inline void check_same_field(const FieldScalar& a, const FieldScalar& b) {
    if (a.p != b.p)
        fail(errc::validation, "field scalars from different characteristics: " +
                                   std::to_string(a.p) + " vs " + std::to_string(b.p));
}
} // namespace detail

inline FieldScalar operator+(const FieldScalar& a, const FieldScalar& b) {
    detail::check_same_field(a, b);
    std::int64_t v = a.value + b.value;
    if (v >= a.p) v -= a.p;
    return FieldScalar{v, a.p};
}

inline FieldScalar operator-(const FieldScalar& a, const FieldScalar& b) {
    detail::check_same_field(a, b);
    std::int64_t v = a.value - b.value;
    if (v < 0) v += a.p;
    return FieldScalar{v, a.p};
}

inline FieldScalar operator-(const FieldScalar& a) {
    return FieldScalar{a.value == 0 ? 0 : a.p - a.value, a.p};
}

inline FieldScalar operator*(const FieldScalar& a, const FieldScalar& b) {
    detail::check_same_field(a, b);
    return FieldScalar{(a.value * b.value) % a.p, a.p};
}

inline FieldScalar pow(FieldScalar base, std::int64_t e) {
    FieldScalar acc = FieldScalar::one(base.p);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

inline FieldScalar inverse(const FieldScalar& a) {
    if (a.is_zero()) fail(errc::validation, "inverse of zero field element");
    return pow(a, a.p - 2);
}

inline FieldScalar operator/(const FieldScalar& a, const FieldScalar& b) {
    return a * inverse(b);
}

// symmetric representative in (-p/2, p/2], used for printing
inline std::int64_t symmetric_lift(const FieldScalar& a) {
    return a.value * 2 > a.p ? a.value - a.p : a.value;
}

} // namespace bigrees
