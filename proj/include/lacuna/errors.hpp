#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lacuna {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class NegativeExponent : public SyntaxError {
public:
    explicit NegativeExponent(std::size_t position) : SyntaxError("negative exponent", position) {}
};

class WrongVariable : public SyntaxError {
public:
    WrongVariable(const std::string& name, std::size_t position)
        : SyntaxError("unknown variable '" + name + "'", position) {}
};

#define LACUNA_DEFINE_ERROR(Name)                   \
    class Name : public Error {                     \
    public:                                         \
        using Error::Error;                         \
    }

LACUNA_DEFINE_ERROR(ArityMismatch);
LACUNA_DEFINE_ERROR(ZeroPolynomial);
LACUNA_DEFINE_ERROR(ZeroVector);
LACUNA_DEFINE_ERROR(TooFewTerms);
LACUNA_DEFINE_ERROR(UnsupportedArity);
LACUNA_DEFINE_ERROR(NotUnidimensional);
LACUNA_DEFINE_ERROR(DirectionMismatch);
LACUNA_DEFINE_ERROR(NotLiftable);
LACUNA_DEFINE_ERROR(EqualValuations);
LACUNA_DEFINE_ERROR(ParallelDirections);
LACUNA_DEFINE_ERROR(MonomialInput);
LACUNA_DEFINE_ERROR(BadIndex);
LACUNA_DEFINE_ERROR(BadModulus);
LACUNA_DEFINE_ERROR(PreconditionError);
LACUNA_DEFINE_ERROR(UnluckySpecialization);

#undef LACUNA_DEFINE_ERROR

/// A size guard (dense array size, product term count) was exceeded.
class GuardExceeded : public Error {
public:
    using Error::Error;
};

/// The univariate engine cannot handle an instance (e.g. a projection past the dense guard).
class EngineLimitation : public GuardExceeded {
public:
    using GuardExceeded::GuardExceeded;
};

}  // namespace lacuna
