#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <tuple>
#include <vector>

#include "bigrees/polynomial.hpp"

namespace bigrees {

// Reduced Groebner basis: auto-reduced, monic, sorted by leading term
// ascending. Uniqueness of the reduced basis makes results deterministic.
struct GroebnerBasis {
    std::vector<Polynomial> gens;
    MonomialOrder order;

    bool is_trivial_unit() const {
        return gens.size() == 1 && gens.front().is_constant() && !gens.front().is_zero();
    }
    bool is_zero_ideal() const { return gens.empty(); }
};

namespace detail {

// term vectors sorted descending under an arbitrary order
using TermVec = std::vector<Term>;

inline TermVec to_ordered(const Polynomial& f, const MonomialOrder& ord) {
    TermVec v(f.terms().begin(), f.terms().end());
    if (ord.kind != MonomialOrder::Kind::degrevlex)
        std::sort(v.begin(), v.end(),
                  [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
    return v;
}

inline Polynomial from_ordered(const TermVec& v, std::size_t nvars, std::int64_t p) {
    std::vector<Term> ts(v.begin(), v.end());
    return Polynomial::from_terms(nvars, p, std::move(ts));
}

// f - c * x^shift * g, all inputs sorted descending under ord
inline TermVec sub_scaled(const TermVec& f, const FieldScalar& c, const Monomial& shift,
                          const TermVec& g, const MonomialOrder& ord) {
    TermVec out;
    out.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < f.size() && j < g.size()) {
        Monomial gm = g[j].mono * shift;
        auto cmp = ord.compare(f[i].mono, gm);
        if (cmp > 0) {
            out.push_back(f[i++]);
        } else if (cmp < 0) {
            out.push_back({gm, -(c * g[j].coeff)});
            ++j;
        } else {
            FieldScalar v = f[i].coeff - c * g[j].coeff;
            if (!v.is_zero()) out.push_back({f[i].mono, v});
            ++i, ++j;
        }
    }
    for (; i < f.size(); ++i) out.push_back(f[i]);
    for (; j < g.size(); ++j) out.push_back({g[j].mono * shift, -(c * g[j].coeff)});
    return out;
}

// Full division remainder against a list of reducers (leading terms under
// ord). The reducers need not form a Groebner basis; in that case the result
// is a remainder, not a canonical normal form.
inline TermVec reduce_by_set(TermVec work, std::span<const TermVec> reducers,
                             const MonomialOrder& ord) {
    TermVec out;
    std::size_t start = 0; // work[0..start) already irreducible
    while (start < work.size()) {
        const Term& head = work[start];
        const TermVec* red = nullptr;
        for (const auto& g : reducers)
            if (!g.empty() && divides(g.front().mono, head.mono)) {
                red = &g;
                break;
            }
        if (red == nullptr) {
            out.push_back(head);
            ++start;
            continue;
        }
        FieldScalar c = head.coeff / red->front().coeff;
        Monomial shift = quotient(head.mono, red->front().mono);
        TermVec tail(work.begin() + static_cast<std::ptrdiff_t>(start), work.end());
        TermVec next = sub_scaled(tail, c, shift, *red, ord);
        work = std::move(next);
        start = 0;
    }
    return out;
}

inline TermVec spoly(const TermVec& f, const TermVec& g, const MonomialOrder& ord) {
    const Monomial l = lcm(f.front().mono, g.front().mono);
    TermVec a = sub_scaled(TermVec{}, -inverse(f.front().coeff), quotient(l, f.front().mono), f,
                           ord);
    return sub_scaled(a, inverse(g.front().coeff), quotient(l, g.front().mono), g, ord);
}

struct PairKey {
    int deg;
    std::size_t i, j;
    friend auto operator<=>(const PairKey&, const PairKey&) = default;
};

} // namespace detail

// Buchberger with the coprime and chain criteria, normal selection
// (lcm degree, then position). Returns the reduced basis.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& input, MonomialOrder ord) {
    using detail::TermVec;
    std::size_t nvars = 0;
    std::int64_t p = 0;
    for (const auto& f : input)
        if (!f.is_zero()) {
            nvars = f.nvars();
            p = f.characteristic();
            break;
        }

    // deterministic starting basis: monic, deduped, sorted
    std::vector<Polynomial> start;
    for (const auto& f : input)
        if (!f.is_zero()) start.push_back(f.monic());
    std::sort(start.begin(), start.end(),
              [](const Polynomial& a, const Polynomial& b) { return compare_canonical(a, b) < 0; });
    start.erase(std::unique(start.begin(), start.end()), start.end());

    if (start.empty()) return GroebnerBasis{{}, ord};

    std::vector<TermVec> basis;
    basis.reserve(start.size());
    for (const auto& f : start) basis.push_back(detail::to_ordered(f, ord));

    std::set<detail::PairKey> pending;
    auto enqueue = [&](std::size_t i, std::size_t j) {
        const Monomial l = lcm(basis[i].front().mono, basis[j].front().mono);
        pending.insert({l.degree(), i, j});
    };
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) enqueue(i, j);

    auto in_pending = [&](std::size_t i, std::size_t j) {
        if (i > j) std::swap(i, j);
        const Monomial l = lcm(basis[i].front().mono, basis[j].front().mono);
        return pending.count({l.degree(), i, j}) > 0;
    };

    while (!pending.empty()) {
        auto [deg, i, j] = *pending.begin();
        pending.erase(pending.begin());

        const Monomial& lti = basis[i].front().mono;
        const Monomial& ltj = basis[j].front().mono;
        if (coprime(lti, ltj)) continue;

        const Monomial l = lcm(lti, ltj);
        bool chain = false;
        for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
            if (k == i || k == j) continue;
            if (divides(basis[k].front().mono, l) && !in_pending(i, k) && !in_pending(j, k))
                chain = true;
        }
        if (chain) continue;

        TermVec s = detail::spoly(basis[i], basis[j], ord);
        TermVec r = detail::reduce_by_set(std::move(s), basis, ord);
        if (r.empty()) continue;

        FieldScalar lead = r.front().coeff;
        for (auto& t : r) t.coeff = t.coeff / lead;
        const std::size_t m = basis.size();
        basis.push_back(std::move(r));
        for (std::size_t k = 0; k < m; ++k) enqueue(k, m);
    }

    // minimalize: keep only leading terms not divisible by another's
    std::vector<std::size_t> order_idx(basis.size());
    for (std::size_t i = 0; i < order_idx.size(); ++i) order_idx[i] = i;
    std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
        return ord.less(basis[a].front().mono, basis[b].front().mono);
    });
    std::vector<TermVec> minimal;
    for (std::size_t idx : order_idx) {
        bool redundant = false;
        for (const auto& kept : minimal)
            if (divides(kept.front().mono, basis[idx].front().mono)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(basis[idx]);
    }

    // interreduce tails until stable
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<TermVec> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t k = 0; k < minimal.size(); ++k)
                if (k != i) others.push_back(minimal[k]);
            TermVec r = detail::reduce_by_set(minimal[i], others, ord);
            if (!(r == minimal[i])) {
                changed = true;
                if (r.empty()) {
                    minimal.erase(minimal.begin() + static_cast<std::ptrdiff_t>(i));
                    --i;
                } else {
                    FieldScalar lead = r.front().coeff;
                    for (auto& t : r) t.coeff = t.coeff / lead;
                    minimal[i] = std::move(r);
                }
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(), [&](const TermVec& a, const TermVec& b) {
        return ord.less(a.front().mono, b.front().mono);
    });

    GroebnerBasis gb{{}, ord};
    gb.gens.reserve(minimal.size());
    for (const auto& v : minimal) gb.gens.push_back(detail::from_ordered(v, nvars, p));
    return gb;
}

// Canonical normal form against a reduced basis: no term of the result is
// divisible by any basis leading term, and f - result lies in the ideal.
inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    if (f.is_zero() || gb.gens.empty()) return f;
    std::vector<detail::TermVec> basis;
    basis.reserve(gb.gens.size());
    for (const auto& g : gb.gens) basis.push_back(detail::to_ordered(g, gb.order));
    detail::TermVec r =
        detail::reduce_by_set(detail::to_ordered(f, gb.order), basis, gb.order);
    return detail::from_ordered(r, f.nvars(), f.characteristic());
}

inline bool is_member(const Polynomial& f, const GroebnerBasis& gb) {
    return normal_form(f, gb).is_zero();
}

// remainder of f under plain division by an arbitrary generator set
inline Polynomial remainder_by_set(const Polynomial& f, std::span<const Polynomial> reducers,
                                   const MonomialOrder& ord) {
    if (f.is_zero()) return f;
    std::vector<detail::TermVec> rs;
    rs.reserve(reducers.size());
    for (const auto& g : reducers)
        if (!g.is_zero()) rs.push_back(detail::to_ordered(g, ord));
    auto r = detail::reduce_by_set(detail::to_ordered(f, ord), rs, ord);
    return detail::from_ordered(r, f.nvars(), f.characteristic());
}

// Generators of the input ideal's intersection with the subring omitting the
// first `drop` variables. Expects polynomials in the full ring; the result
// polynomials have zero exponents on the dropped block.
inline std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, int drop) {
    GroebnerBasis gb = buchberger(gens, MonomialOrder::elimination(drop));
    std::vector<Polynomial> out;
    for (const auto& g : gb.gens) {
        bool free_of_block = true;
        for (const auto& t : g.terms())
            for (int i = 0; i < drop && free_of_block; ++i)
                if (t.mono.exponent(static_cast<std::size_t>(i)) != 0) free_of_block = false;
        if (free_of_block) out.push_back(g);
    }
    return out;
}

// exact quotient g / f for g in the principal ideal (f)
inline Polynomial divide_exact(const Polynomial& g, const Polynomial& f) {
    if (f.is_zero()) fail(errc::validation, "division by the zero polynomial");
    Polynomial rem = g;
    Polynomial quot = Polynomial::zero(g.nvars(), g.characteristic());
    while (!rem.is_zero()) {
        const Term& h = rem.leading_term();
        const Term& lf = f.leading_term();
        if (!divides(lf.mono, h.mono))
            fail(errc::validation, "divide_exact: dividend not a multiple of divisor");
        Polynomial piece =
            Polynomial::term(g.nvars(), quotient(h.mono, lf.mono), h.coeff / lf.coeff);
        quot = quot + piece;
        rem = rem - piece * f;
    }
    return quot;
}

} // namespace bigrees
