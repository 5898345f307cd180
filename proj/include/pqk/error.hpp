#pragma once

#include <stdexcept>
#include <string>

namespace pqk {

// A computed quantity failed an exact cross-check (closed form vs brute-force
// contraction, assembly conflict, axiom violation). Distinct from
// std::invalid_argument, which covers precondition/usage errors.
struct VerificationError : std::runtime_error {
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pqk
