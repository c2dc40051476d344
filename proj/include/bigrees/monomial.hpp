#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>

#include "bigrees/errors.hpp"

namespace bigrees {

// Exponent vector with fixed capacity: up to 7 user variables plus one
// internal elimination tag. Keeps the Groebner core allocation-free.
class Monomial {
public:
    static constexpr std::size_t max_vars = 8;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : n_(check_count(nvars)) {}
    Monomial(std::initializer_list<int> exps) : n_(check_count(exps.size())) {
        std::size_t i = 0;
        for (int e : exps) e_[i++] = static_cast<std::int16_t>(e);
    }

    static Monomial one(std::size_t nvars) { return Monomial(nvars); }

    std::size_t nvars() const { return n_; }
    int exponent(std::size_t i) const { return e_[i]; }
    void set_exponent(std::size_t i, int v) { e_[i] = static_cast<std::int16_t>(v); }

    int degree() const {
        int d = 0;
        for (std::size_t i = 0; i < n_; ++i) d += e_[i];
        return d;
    }
    bool is_one() const {
        for (std::size_t i = 0; i < n_; ++i)
            if (e_[i] != 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }
    // container ordering only (map keys); monomial orders live in MonomialOrder
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.e_ <=> b.e_;
    }

private:
    static std::size_t check_count(std::size_t n) {
        if (n > max_vars)
            fail(errc::validation, "too many variables (max " + std::to_string(max_vars) + ")");
        return n;
    }

    std::array<std::int16_t, max_vars> e_{};
    std::uint8_t n_ = 0;
};

namespace detail {
inline void check_same_nvars(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) fail(errc::validation, "monomial dimension mismatch");
}
} // namespace detail

inline Monomial operator*(const Monomial& a, const Monomial& b) {
    detail::check_same_nvars(a, b);
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) r.set_exponent(i, a.exponent(i) + b.exponent(i));
    return r;
}

inline bool divides(const Monomial& a, const Monomial& b) {
    detail::check_same_nvars(a, b);
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a.exponent(i) > b.exponent(i)) return false;
    return true;
}

// b / a, requires divides(a, b)
inline Monomial quotient(const Monomial& b, const Monomial& a) {
    detail::check_same_nvars(a, b);
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        int e = b.exponent(i) - a.exponent(i);
        if (e < 0) fail(errc::validation, "monomial quotient: not divisible");
        r.set_exponent(i, e);
    }
    return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    detail::check_same_nvars(a, b);
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i)
        r.set_exponent(i, std::max(a.exponent(i), b.exponent(i)));
    return r;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
    detail::check_same_nvars(a, b);
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i)
        r.set_exponent(i, std::min(a.exponent(i), b.exponent(i)));
    return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
    detail::check_same_nvars(a, b);
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a.exponent(i) > 0 && b.exponent(i) > 0) return false;
    return true;
}

inline Monomial pow(const Monomial& a, int k) {
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) r.set_exponent(i, a.exponent(i) * k);
    return r;
}

// Total orders on monomials: degrevlex, lex, and a two-block elimination
// order (degrevlex on the first `block` variables, ties by degrevlex on the
// rest). All are multiplicative well-orders with 1 minimal.
struct MonomialOrder {
    enum class Kind { degrevlex, lex, elim_block };

    Kind kind = Kind::degrevlex;
    int block = 0;

    static MonomialOrder degrevlex() { return {Kind::degrevlex, 0}; }
    static MonomialOrder lex() { return {Kind::lex, 0}; }
    static MonomialOrder elimination(int first_k) { return {Kind::elim_block, first_k}; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
        detail::check_same_nvars(a, b);
        switch (kind) {
            case Kind::lex: {
                for (std::size_t i = 0; i < a.nvars(); ++i)
                    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) <=> b.exponent(i);
                return std::strong_ordering::equal;
            }
            case Kind::degrevlex:
                return drl_range(a, b, 0, a.nvars());
            case Kind::elim_block: {
                const auto k = static_cast<std::size_t>(block);
                if (auto c = drl_range(a, b, 0, k); c != 0) return c;
                return drl_range(a, b, k, a.nvars());
            }
        }
        return std::strong_ordering::equal;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
    static std::strong_ordering drl_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                          std::size_t hi) {
        int da = 0, db = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            da += a.exponent(i);
            db += b.exponent(i);
        }
        if (da != db) return da <=> db;
        for (std::size_t i = hi; i-- > lo;)
            if (a.exponent(i) != b.exponent(i)) return b.exponent(i) <=> a.exponent(i);
        return std::strong_ordering::equal;
    }
};

} // namespace bigrees
