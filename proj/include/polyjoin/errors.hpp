#pragma once

#include <stdexcept>
#include <string>

namespace polyjoin {

/** Thrown when an argument violates a documented precondition (bad ground set,
 *  overlapping index pair, malformed JSON, ...). */
class invalid_input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/** Thrown when an enumeration would exceed its configured budget
 *  (face caps, tuple caps, universe size caps). */
class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/** Thrown when an operation is asked to run over a coefficient ring it does
 *  not support (e.g. torsion-sensitive comparisons over an uncertified ring). */
class unsupported_ring_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace polyjoin
