#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace bigrees {

// Error taxonomy; exit_code() gives the CLI process exit status.
enum class errc {
    parse,           // bad polynomial / problem-file syntax
    validation,      // precondition or input-contract violation
    not_m_primary,   // ideal fails the m-primary requirement
    bound_exceeded,  // a stabilization loop ran past its cap
    search_failed,   // randomized reduction search exhausted its retries
};

inline int exit_code(errc c) {
    switch (c) {
        case errc::parse:
        case errc::validation: return 2;
        case errc::not_m_primary: return 3;
        case errc::bound_exceeded: return 4;
        case errc::search_failed: return 5;
    }
    return 1;
}

class Error : public std::runtime_error {
public:
    Error(errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}

    errc code() const noexcept { return code_; }
    int exit_code() const noexcept { return bigrees::exit_code(code_); }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace bigrees
