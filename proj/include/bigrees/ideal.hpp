#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "bigrees/groebner.hpp"
#include "bigrees/ring.hpp"

namespace bigrees {

// Handle for an ideal of R = (S/L)_m, carried by generators in the ambient
// ring S. Every Groebner computation silently adjoins L. Handles share a
// write-once cache (reduced degrevlex basis, colength).
class IdealHandle {
public:
    IdealHandle() = default;

    const RingContextPtr& ctx() const { return ctx_; }
    const std::vector<Polynomial>& gens() const { return data_->gens; }

    // reduced degrevlex basis of gens + L, memoized
    const GroebnerBasis& groebner() const {
        std::scoped_lock lk(data_->mu);
        if (!data_->gb) {
            std::vector<Polynomial> all = data_->gens;
            for (const auto& g : ctx_->quotient) all.push_back(g);
            data_->gb = buchberger(all, MonomialOrder::degrevlex());
        }
        return *data_->gb;
    }

    bool is_unit() const { return groebner().is_trivial_unit(); }

private:
    struct Data {
        std::vector<Polynomial> gens;
        std::mutex mu;
        std::optional<GroebnerBasis> gb;
        std::optional<std::optional<std::int64_t>> colength;
    };

    friend IdealHandle make_ideal(RingContextPtr, std::vector<Polynomial>);
    friend std::optional<std::int64_t> colength(const IdealHandle&);

    RingContextPtr ctx_;
    std::shared_ptr<Data> data_;
};

namespace detail {

inline void check_same_context(const IdealHandle& a, const IdealHandle& b) {
    if (a.ctx() != b.ctx()) fail(errc::validation, "ideal handles from different ring contexts");
}

// Drop generators whose division remainder against the remaining generators
// plus L vanishes. Processes large leading terms first; exact for monomial
// generators, conservative in general.
inline std::vector<Polynomial> trim_generators(const RingContext& ctx,
                                               std::vector<Polynomial> gens) {
    const auto ord = MonomialOrder::degrevlex();
    const GroebnerBasis& lgb = ctx.quotient_gb();

    std::vector<Polynomial> work;
    for (auto& g : gens) {
        Polynomial r = ctx.quotient.empty() ? std::move(g) : normal_form(g, lgb);
        if (!r.is_zero()) work.push_back(r.monic());
    }
    std::sort(work.begin(), work.end(),
              [](const Polynomial& a, const Polynomial& b) { return compare_canonical(a, b) > 0; });
    work.erase(std::unique(work.begin(), work.end()), work.end());

    // descending leading terms, canonical tie-break (already sorted so)
    std::vector<char> alive(work.size(), 1);
    for (std::size_t i = 0; i < work.size(); ++i) {
        std::vector<Polynomial> reducers;
        reducers.reserve(work.size() + lgb.gens.size());
        for (std::size_t k = 0; k < work.size(); ++k)
            if (k != i && alive[k]) reducers.push_back(work[k]);
        for (const auto& g : lgb.gens) reducers.push_back(g);
        if (remainder_by_set(work[i], reducers, ord).is_zero()) alive[i] = 0;
    }
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < work.size(); ++i)
        if (alive[i]) out.push_back(work[i]);
    return out;
}

} // namespace detail

inline IdealHandle make_ideal(RingContextPtr ctx, std::vector<Polynomial> gens) {
    if (!ctx) fail(errc::validation, "null ring context");
    IdealHandle h;
    h.ctx_ = std::move(ctx);
    h.data_ = std::make_shared<IdealHandle::Data>();
    h.data_->gens = detail::trim_generators(*h.ctx_, std::move(gens));
    return h;
}

inline IdealHandle zero_ideal(const RingContextPtr& ctx) { return make_ideal(ctx, {}); }

inline IdealHandle unit_ideal(const RingContextPtr& ctx) {
    return make_ideal(ctx, {Polynomial::constant(ctx->nvars(), FieldScalar::one(ctx->p))});
}

inline IdealHandle maximal_ideal(const RingContextPtr& ctx) {
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < ctx->nvars(); ++i)
        vars.push_back(Polynomial::variable(ctx->nvars(), i, ctx->p));
    return make_ideal(ctx, std::move(vars));
}

inline bool contains(const IdealHandle& A, const Polynomial& f) {
    return is_member(f, A.groebner());
}

inline bool ideal_contains(const IdealHandle& A, const IdealHandle& B) {
    detail::check_same_context(A, B);
    for (const auto& g : B.gens())
        if (!contains(A, g)) return false;
    return true;
}

inline bool ideal_equals(const IdealHandle& A, const IdealHandle& B) {
    detail::check_same_context(A, B);
    return A.groebner().gens == B.groebner().gens;
}

inline IdealHandle ideal_sum(const IdealHandle& A, const IdealHandle& B) {
    detail::check_same_context(A, B);
    std::vector<Polynomial> gens = A.gens();
    for (const auto& g : B.gens()) gens.push_back(g);
    return make_ideal(A.ctx(), std::move(gens));
}

inline IdealHandle ideal_product(const IdealHandle& A, const IdealHandle& B) {
    detail::check_same_context(A, B);
    std::vector<Polynomial> gens;
    gens.reserve(A.gens().size() * B.gens().size());
    for (const auto& a : A.gens())
        for (const auto& b : B.gens()) gens.push_back(a * b);
    return make_ideal(A.ctx(), std::move(gens));
}

inline IdealHandle ideal_power(const IdealHandle& A, int n) {
    if (n < 0) fail(errc::validation, "negative ideal power");
    if (n == 0) return unit_ideal(A.ctx());
    IdealHandle acc = A;
    for (int i = 1; i < n; ++i) acc = ideal_product(acc, A);
    return acc;
}

namespace detail {

// one extra leading slot for the elimination tag
inline Polynomial extend_front(const Polynomial& f) {
    std::vector<Term> ts;
    ts.reserve(f.size());
    for (const auto& t : f.terms()) {
        Monomial m(f.nvars() + 1);
        for (std::size_t i = 0; i < f.nvars(); ++i) m.set_exponent(i + 1, t.mono.exponent(i));
        ts.push_back({m, t.coeff});
    }
    return Polynomial::from_terms(f.nvars() + 1, f.characteristic(), std::move(ts));
}

inline Polynomial shrink_front(const Polynomial& f) {
    std::vector<Term> ts;
    ts.reserve(f.size());
    for (const auto& t : f.terms()) {
        if (t.mono.exponent(0) != 0)
            fail(errc::validation, "shrink_front: tag variable still present");
        Monomial m(f.nvars() - 1);
        for (std::size_t i = 1; i < f.nvars(); ++i) m.set_exponent(i - 1, t.mono.exponent(i));
        ts.push_back({m, t.coeff});
    }
    return Polynomial::from_terms(f.nvars() - 1, f.characteristic(), std::move(ts));
}

inline bool all_single_term(const std::vector<Polynomial>& v) {
    for (const auto& g : v)
        if (g.size() != 1) return false;
    return true;
}

// generators of (span of C's basis) ∩ (span of D's gens) via a tag variable:
// eliminate t from t*C + (1-t)*D. Inputs are plain polynomial lists in S.
inline std::vector<Polynomial> intersect_lists(std::size_t nvars, std::int64_t p,
                                               const std::vector<Polynomial>& C,
                                               const std::vector<Polynomial>& D) {
    const Polynomial t = Polynomial::variable(nvars + 1, 0, p);
    const Polynomial one_minus_t =
        Polynomial::constant(nvars + 1, FieldScalar::one(p)) - t;
    std::vector<Polynomial> ext;
    ext.reserve(C.size() + D.size());
    for (const auto& g : C) ext.push_back(t * extend_front(g));
    for (const auto& g : D) ext.push_back(one_minus_t * extend_front(g));
    std::vector<Polynomial> elim = eliminate(ext, 1);
    std::vector<Polynomial> out;
    out.reserve(elim.size());
    for (const auto& e : elim) out.push_back(shrink_front(e));
    return out;
}

// ((A + L) : f) in S
inline std::vector<Polynomial> colon_single(const IdealHandle& A, const Polynomial& f) {
    const auto& ctx = *A.ctx();
    const GroebnerBasis& gb = A.groebner();
    if (f.is_constant()) return A.gens();

    if (all_single_term(gb.gens) && f.size() == 1) {
        std::vector<Polynomial> out;
        const Monomial& fm = f.leading_term().mono;
        for (const auto& g : gb.gens) {
            const Monomial& gm = g.leading_term().mono;
            out.push_back(Polynomial::term(ctx.nvars(), quotient(gm, gcd(gm, fm)),
                                           FieldScalar::one(ctx.p)));
        }
        return out;
    }

    std::vector<Polynomial> inter = intersect_lists(ctx.nvars(), ctx.p, gb.gens, {f});
    std::vector<Polynomial> out;
    out.reserve(inter.size());
    for (const auto& w : inter) out.push_back(divide_exact(w, f));
    return out;
}

} // namespace detail

// the ideal {f in R : f * B ⊆ A}
inline IdealHandle colon(const IdealHandle& A, const IdealHandle& B) {
    detail::check_same_context(A, B);
    std::vector<Polynomial> divisors;
    for (const auto& b : B.gens())
        if (!b.is_zero()) divisors.push_back(b);
    if (divisors.empty()) fail(errc::validation, "colon by the zero ideal");

    std::optional<IdealHandle> acc;
    for (const auto& b : divisors) {
        IdealHandle piece = make_ideal(A.ctx(), detail::colon_single(A, b));
        if (!acc) {
            acc = piece;
            continue;
        }
        const auto& g1 = acc->groebner().gens;
        const auto& g2 = piece.groebner().gens;
        std::vector<Polynomial> meet;
        if (detail::all_single_term(g1) && detail::all_single_term(g2)) {
            for (const auto& a : g1)
                for (const auto& c : g2)
                    meet.push_back(Polynomial::term(A.ctx()->nvars(),
                                                    lcm(a.leading_term().mono,
                                                        c.leading_term().mono),
                                                    FieldScalar::one(A.ctx()->p)));
        } else {
            meet = detail::intersect_lists(A.ctx()->nvars(), A.ctx()->p, g1, g2);
        }
        acc = make_ideal(A.ctx(), std::move(meet));
    }
    return *acc;
}

inline IdealHandle colon(const IdealHandle& A, const Polynomial& f) {
    std::vector<Polynomial> fs;
    if (!f.is_zero()) fs.push_back(f);
    return colon(A, make_ideal(A.ctx(), std::move(fs)));
}

// Number of standard monomials of the leading-term ideal of A + L;
// nullopt when unbounded (some variable has no pure power among the
// leading terms).
inline std::optional<std::int64_t> colength(const IdealHandle& A) {
    {
        std::scoped_lock lk(A.data_->mu);
        if (A.data_->colength) return *A.data_->colength;
    }
    const GroebnerBasis& gb = A.groebner();
    std::optional<std::int64_t> result;
    if (gb.is_trivial_unit()) {
        result = 0;
    } else if (gb.is_zero_ideal()) {
        result = std::nullopt;
    } else {
        const std::size_t nv = A.ctx()->nvars();
        std::vector<Monomial> lts;
        lts.reserve(gb.gens.size());
        for (const auto& g : gb.gens) lts.push_back(g.leading_term().mono);

        std::vector<int> bound(nv, -1);
        for (const auto& m : lts) {
            int support = -1;
            bool pure = true;
            for (std::size_t i = 0; i < nv && pure; ++i)
                if (m.exponent(i) > 0) {
                    if (support >= 0) pure = false;
                    support = static_cast<int>(i);
                }
            if (pure && support >= 0) bound[static_cast<std::size_t>(support)] = m.exponent(
                static_cast<std::size_t>(support));
        }
        bool finite = true;
        for (std::size_t i = 0; i < nv; ++i)
            if (bound[i] < 0) finite = false;

        if (!finite) {
            result = std::nullopt;
        } else {
            std::int64_t count = 0;
            Monomial probe(nv);
            std::vector<int> e(nv, 0);
            while (true) {
                for (std::size_t i = 0; i < nv; ++i) probe.set_exponent(i, e[i]);
                bool standard = true;
                for (const auto& m : lts)
                    if (divides(m, probe)) {
                        standard = false;
                        break;
                    }
                if (standard) ++count;
                std::size_t i = 0;
                while (i < nv) {
                    if (++e[i] < bound[i]) break;
                    e[i] = 0;
                    ++i;
                }
                if (i == nv) break;
            }
            result = count;
        }
    }
    std::scoped_lock lk(A.data_->mu);
    A.data_->colength = result;
    return result;
}

// Length of R/A in the localization at the origin: the stabilized value of
// colength(A + m^N) (three consecutive equal values). Unbounded growth past
// the cap reports a diagnosable error instead of looping.
inline std::int64_t local_colength(const IdealHandle& A) {
    const auto& ctx = A.ctx();
    const IdealHandle m = maximal_ideal(ctx);
    if (ideal_sum(A, m).is_unit()) return 0; // origin not in the support

    const auto est = colength(A);
    const std::int64_t n_max =
        est ? std::clamp<std::int64_t>(4 * std::max<std::int64_t>(*est, 1), 8, 64) : 64;

    std::vector<std::int64_t> history;
    IdealHandle mN = m;
    for (std::int64_t N = 1; N <= n_max; ++N) {
        auto c = colength(ideal_sum(A, mN));
        if (!c) fail(errc::validation, "internal: A + m^N must have finite colength");
        history.push_back(*c);
        const std::size_t h = history.size();
        if (h >= 3 && history[h - 1] == history[h - 2] && history[h - 2] == history[h - 3])
            return history[h - 1];
        mN = ideal_product(mN, m);
    }
    fail(errc::bound_exceeded,
         "local colength did not stabilize within N <= " + std::to_string(n_max) +
             " (ideal is not zero-dimensional at the origin?)");
}

inline bool is_m_primary(const IdealHandle& A) {
    const auto c = colength(A);
    if (!c) return false;
    return *c == local_colength(A);
}

// (a, b) is a regular sequence in R: a is a nonzerodivisor mod L and b is a
// nonzerodivisor mod L + (a).
inline bool is_regular_sequence(const Polynomial& a, const Polynomial& b,
                                const RingContextPtr& ctx) {
    const GroebnerBasis& lgb = ctx->quotient_gb();
    if (normal_form(a, lgb).is_zero() || normal_form(b, lgb).is_zero()) return false;

    const IdealHandle zero = zero_ideal(ctx);
    if (!ideal_equals(colon(zero, a), zero)) return false;

    const IdealHandle Aa = make_ideal(ctx, {a});
    return ideal_equals(colon(Aa, b), Aa);
}

} // namespace bigrees
