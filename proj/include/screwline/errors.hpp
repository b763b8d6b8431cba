#pragma once

#include <stdexcept>
#include <string>

namespace screw {

// Error taxonomy shared by all modules.  Everything derives from Error so
// callers can catch the whole family at the CLI boundary.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside the supported domain (x >= 1 for the Lerch series,
// zeta outside the validated strip, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Evaluation at a pole (gamma/digamma at non-positive integers, zeta at 1).
class PoleError : public Error {
public:
    using Error::Error;
};

// Evaluation too close to a pole of a meromorphic function (zero ordinates
// of the zero-sum P_t, exclusion radius around located zeros).
class PoleProximityError : public Error {
public:
    using Error::Error;
};

// Quadrature node inside the exclusion radius around a table zero.
class ExclusionZoneError : public Error {
public:
    using Error::Error;
};

// A prime sum or screw-function evaluation needs e^t beyond the sieve bound.
class TableTooSmallError : public Error {
public:
    using Error::Error;
};

// Sieve request beyond the memory guard.
class CapacityError : public Error {
public:
    using Error::Error;
};

// g'(t) or the y->inf limit requested at (or too close to) t = log n.
class JumpPointError : public Error {
public:
    using Error::Error;
};

// Adaptive quadrature ran out of nodes before meeting the tolerance.
class QuadratureError : public Error {
public:
    using Error::Error;
};

// Zero-table file could not be parsed; message carries the line number.
class ParseError : public Error {
public:
    using Error::Error;
};

// Parsed data violates a ZeroTable invariant; message names the invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Series failed to converge within the iteration cap.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

} // namespace screw
