#pragma once

#include <cctype>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "bigrees/groebner.hpp"
#include "bigrees/polynomial.hpp"

namespace bigrees {

// The ambient presentation of R = (k[x_1..x_n]/L) localized at the ideal of
// the variables. Ideals of R are carried by generators in the ambient
// polynomial ring; every Groebner/colength computation adjoins L.
struct RingContext {
    std::int64_t p = 32003;
    std::vector<std::string> vars;
    std::vector<Polynomial> quotient; // L
    bool cm_declared = false;
    int dimension_declared = 2;

    std::size_t nvars() const { return vars.size(); }

    std::optional<std::size_t> var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return i;
        return std::nullopt;
    }

    // reduced degrevlex basis of L, computed once
    const GroebnerBasis& quotient_gb() const {
        std::scoped_lock lk(mu_);
        if (!quotient_gb_) quotient_gb_ = buchberger(quotient, MonomialOrder::degrevlex());
        return *quotient_gb_;
    }

private:
    mutable std::mutex mu_;
    mutable std::optional<GroebnerBasis> quotient_gb_;
};

using RingContextPtr = std::shared_ptr<const RingContext>;

inline bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

// Structural checks only; quotient relations are attached afterwards because
// parsing them needs the variable table. Full semantic validation (Hilbert
// dimension cross-check, CM probe) lives in validate.hpp.
inline std::shared_ptr<RingContext> make_ring_context(std::int64_t p,
                                                      std::vector<std::string> vars,
                                                      bool cm_declared = false,
                                                      int dimension_declared = 2) {
    if (!is_prime(p)) fail(errc::validation, "characteristic " + std::to_string(p) + " is not prime");
    if (p >= (std::int64_t{1} << 31))
        fail(errc::validation, "characteristic too large (must be < 2^31)");
    if (vars.empty()) fail(errc::validation, "no ring variables declared");
    if (vars.size() > Monomial::max_vars - 1)
        fail(errc::validation, "at most " + std::to_string(Monomial::max_vars - 1) +
                                   " variables supported");
    for (const auto& v : vars)
        if (!is_identifier(v)) fail(errc::validation, "bad variable name '" + v + "'");
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) fail(errc::validation, "duplicate variable '" + vars[i] + "'");
    if (dimension_declared < 0) fail(errc::validation, "negative declared dimension");

    auto ctx = std::make_shared<RingContext>();
    ctx->p = p;
    ctx->vars = std::move(vars);
    ctx->cm_declared = cm_declared;
    ctx->dimension_declared = dimension_declared;
    return ctx;
}

// Quotient generators must vanish at the origin so the localization at the
// variable ideal survives in S/L.
inline void attach_quotient(RingContext& ctx, std::vector<Polynomial> relations) {
    for (const auto& f : relations) {
        if (f.is_zero()) continue;
        if (!f.coefficient_of(Monomial::one(ctx.nvars())).is_zero())
            fail(errc::validation, "quotient relation has a nonzero constant term");
    }
    std::vector<Polynomial> keep;
    for (auto& f : relations)
        if (!f.is_zero()) keep.push_back(std::move(f));
    ctx.quotient = std::move(keep);
}

} // namespace bigrees
