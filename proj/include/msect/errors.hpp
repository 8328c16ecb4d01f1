#pragma once

#include <stdexcept>
#include <string>

namespace msect {

// Violation of an internally asserted invariant (counting identities, method
// agreement, conjugate-symmetry checks). The CLI maps this to exit code 3.
class internal_inconsistency : public std::logic_error {
public:
    explicit internal_inconsistency(const std::string& what) : std::logic_error(what) {}
};

}  // namespace msect
