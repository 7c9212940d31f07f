#pragma once

#include <stdexcept>
#include <string>

namespace dayan {

// Bad argument: zero divisor, modulus < 2, out-of-range operand, unparsable number.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An internal identity failed to hold. Seeing one of these means a bug.
class contract_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace dayan
