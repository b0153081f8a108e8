#pragma once

#include <stdexcept>
#include <string>

namespace dihedral {

// Bad input from the caller: n out of range, a character that does not
// exist for the given n, a non-divisor passed where a divisor is required.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The exact linear-algebra oracles refuse instances above the basis-size cap.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(std::size_t basis_size, std::size_t cap)
        : std::runtime_error("monomial basis of size " + std::to_string(basis_size) +
                             " exceeds cap " + std::to_string(cap)),
          basis_size_(basis_size), cap_(cap) {}

    std::size_t basis_size() const noexcept { return basis_size_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t basis_size_;
    std::size_t cap_;
};

// An exact computation produced something that cannot be a dimension
// (a non-integer quotient, a negative count). Always a bug somewhere.
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace dihedral
