#pragma once

#include <stdexcept>
#include <string>

namespace ffa {

// Base class for every library error.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// make_field: the supplied modulus polynomial factors over GF(2).
struct ReducibleModulus : Error {
    explicit ReducibleModulus(const std::string& what) : Error(what) {}
};

// Binary operation on elements of two different fields.
struct SpecMismatch : Error {
    explicit SpecMismatch(const std::string& what) : Error(what) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// Tower/subfield index outside the supported set.
struct BadTowerIndex : Error {
    explicit BadTowerIndex(const std::string& what) : Error(what) {}
};

// subgroup order s does not divide 2^m - 1.
struct NotADivisor : Error {
    explicit NotADivisor(const std::string& what) : Error(what) {}
};

struct ZeroInput : Error {
    explicit ZeroInput(const std::string& what) : Error(what) {}
};

struct NotInSubfield : Error {
    explicit NotInSubfield(const std::string& what) : Error(what) {}
};

// unit_circle_quadratic requires both coefficients nonzero.
struct ZeroCoefficient : Error {
    explicit ZeroCoefficient(const std::string& what) : Error(what) {}
};

// Field degree beyond the supported desk-scale range for the operation.
struct DegreeTooLarge : Error {
    explicit DegreeTooLarge(const std::string& what) : Error(what) {}
};

// catalog family outside the characteristic-2 rows.
struct UnsupportedFamily : Error {
    explicit UnsupportedFamily(const std::string& what) : Error(what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace ffa
