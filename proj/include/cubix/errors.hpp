#pragma once

#include <stdexcept>

namespace cubix {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Checked integer arithmetic overflowed; results are never wrapped silently.
class OverflowError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

// No exact quotient exists in the ring.
class NotDivisible : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// Reflection vector has a norm outside the supported set {1, 2}.
class BadNorm : public Error {
public:
    using Error::Error;
};

// A reflection would not preserve the lattice.
class NonIntegral : public Error {
public:
    using Error::Error;
};

class NotAnIsometry : public Error {
public:
    using Error::Error;
};

class IsotropicVector : public Error {
public:
    using Error::Error;
};

class NotALine : public Error {
public:
    using Error::Error;
};

class NotNull : public Error {
public:
    using Error::Error;
};

class Imprimitive : public Error {
public:
    using Error::Error;
};

class NotInBall : public Error {
public:
    using Error::Error;
};

class BadExponent : public Error {
public:
    using Error::Error;
};

// A group closure exceeded its configured element cap.
class ResourceCap : public Error {
public:
    using Error::Error;
};

// The searched-for isometry of quadratic spaces does not exist.
class IsometryNotFound : public Error {
public:
    using Error::Error;
};

} // namespace cubix
