#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "bigrees/field.hpp"
#include "bigrees/monomial.hpp"

namespace bigrees {

struct Term {
    Monomial mono;
    FieldScalar coeff;

    friend bool operator==(const Term& a, const Term& b) {
        return a.mono == b.mono && a.coeff == b.coeff;
    }
};

// Sparse multivariate polynomial over F_p. Terms are stored in canonical
// form: degrevlex-descending, no zero coefficients. The zero polynomial has
// an empty term list but still knows its ring shape (nvars, p).
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::size_t nvars, std::int64_t p) : nvars_(nvars), p_(p) {}

    static Polynomial zero(std::size_t nvars, std::int64_t p) { return Polynomial(nvars, p); }

    static Polynomial constant(std::size_t nvars, FieldScalar c) {
        Polynomial f(nvars, c.p);
        if (!c.is_zero()) f.terms_.push_back({Monomial::one(nvars), c});
        return f;
    }

    static Polynomial term(std::size_t nvars, Monomial m, FieldScalar c) {
        Polynomial f(nvars, c.p);
        if (!c.is_zero()) f.terms_.push_back({std::move(m), c});
        return f;
    }

    static Polynomial variable(std::size_t nvars, std::size_t i, std::int64_t p) {
        Monomial m(nvars);
        m.set_exponent(i, 1);
        return term(nvars, m, FieldScalar::one(p));
    }

    // normalizes: merges duplicates, drops zeros, sorts canonically
    static Polynomial from_terms(std::size_t nvars, std::int64_t p, std::vector<Term> ts) {
        std::map<Monomial, std::int64_t> acc;
        for (auto& t : ts) acc[t.mono] = (acc[t.mono] + t.coeff.value) % p;
        Polynomial f(nvars, p);
        for (auto& [m, v] : acc)
            if (v % p != 0) f.terms_.push_back({m, FieldScalar::of(v, p)});
        f.sort_canonical();
        return f;
    }

    std::size_t nvars() const { return nvars_; }
    std::int64_t characteristic() const { return p_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
    }

    // total degree; -1 for the zero polynomial
    int degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const int d = terms_.front().mono.degree();
        for (const auto& t : terms_)
            if (t.mono.degree() != d) return false;
        return true;
    }

    // canonical leading term (degrevlex); general orders scan
    const Term& leading_term() const { return terms_.front(); }
    const Term& leading_term(const MonomialOrder& ord) const {
        if (ord.kind == MonomialOrder::Kind::degrevlex) return terms_.front();
        std::size_t best = 0;
        for (std::size_t i = 1; i < terms_.size(); ++i)
            if (ord.greater(terms_[i].mono, terms_[best].mono)) best = i;
        return terms_[best];
    }

    FieldScalar coefficient_of(const Monomial& m) const {
        for (const auto& t : terms_)
            if (t.mono == m) return t.coeff;
        return FieldScalar::zero(p_);
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.nvars_ != b.nvars_ || a.p_ != b.p_ || a.terms_.size() != b.terms_.size())
            return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].mono == b.terms_[i].mono && a.terms_[i].coeff == b.terms_[i].coeff))
                return false;
        return true;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        return merge(a, b, false);
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        return merge(a, b, true);
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_same_ring(a, b);
        std::map<Monomial, std::int64_t> acc;
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) {
                Monomial m = ta.mono * tb.mono;
                acc[m] = (acc[m] + ta.coeff.value * tb.coeff.value) % a.p_;
            }
        Polynomial f(a.nvars_, a.p_);
        for (auto& [m, v] : acc)
            if (v != 0) f.terms_.push_back({m, FieldScalar{v, a.p_}});
        f.sort_canonical();
        return f;
    }

    Polynomial operator-() const { return scaled(-FieldScalar::one(p_)); }

    Polynomial scaled(const FieldScalar& c) const {
        Polynomial f(nvars_, p_);
        if (c.is_zero()) return f;
        f.terms_.reserve(terms_.size());
        for (const auto& t : terms_) f.terms_.push_back({t.mono, t.coeff * c});
        return f;
    }

    Polynomial times_monomial(const Monomial& m) const {
        Polynomial f(nvars_, p_);
        f.terms_.reserve(terms_.size());
        for (const auto& t : terms_) f.terms_.push_back({t.mono * m, t.coeff});
        return f; // shifting preserves the canonical order
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scaled(inverse(terms_.front().coeff));
    }

    // stable total order for deterministic generator lists
    friend std::strong_ordering compare_canonical(const Polynomial& a, const Polynomial& b) {
        const auto n = std::min(a.terms_.size(), b.terms_.size());
        const auto drl = MonomialOrder::degrevlex();
        for (std::size_t i = 0; i < n; ++i) {
            if (auto c = drl.compare(a.terms_[i].mono, b.terms_[i].mono); c != 0) return c;
            if (auto c = a.terms_[i].coeff.value <=> b.terms_[i].coeff.value; c != 0) return c;
        }
        return a.terms_.size() <=> b.terms_.size();
    }

private:
    static void check_same_ring(const Polynomial& a, const Polynomial& b) {
        if (a.nvars_ != b.nvars_ || a.p_ != b.p_)
            fail(errc::validation, "polynomials from different rings");
    }

    static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
        check_same_ring(a, b);
        const auto drl = MonomialOrder::degrevlex();
        Polynomial f(a.nvars_, a.p_);
        f.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            auto c = drl.compare(a.terms_[i].mono, b.terms_[j].mono);
            if (c > 0) {
                f.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                const auto& t = b.terms_[j++];
                f.terms_.push_back({t.mono, subtract ? -t.coeff : t.coeff});
            } else {
                FieldScalar v = subtract ? a.terms_[i].coeff - b.terms_[j].coeff
                                         : a.terms_[i].coeff + b.terms_[j].coeff;
                if (!v.is_zero()) f.terms_.push_back({a.terms_[i].mono, v});
                ++i, ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) f.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) {
            const auto& t = b.terms_[j];
            f.terms_.push_back({t.mono, subtract ? -t.coeff : t.coeff});
        }
        return f;
    }

    void sort_canonical() {
        const auto drl = MonomialOrder::degrevlex();
        std::sort(terms_.begin(), terms_.end(),
                  [&](const Term& a, const Term& b) { return drl.greater(a.mono, b.mono); });
    }

    std::size_t nvars_ = 0;
    std::int64_t p_ = 0;
    std::vector<Term> terms_;
};

inline Polynomial pow(const Polynomial& f, int n) {
    Polynomial acc = Polynomial::constant(f.nvars(), FieldScalar::one(f.characteristic()));
    for (int i = 0; i < n; ++i) acc = acc * f;
    return acc;
}

} // namespace bigrees
