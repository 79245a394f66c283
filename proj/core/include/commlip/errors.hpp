#pragma once

#include <stdexcept>
#include <string>

namespace commlip {

// Base for every failure raised by the library. The CLI maps these onto
// exit codes (usage problems -> 1, certificate/validation problems -> 2).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NoSignChange : public Error {
public:
    using Error::Error;
};

// The approximate roots of j' did not pass the +-T sign checks.
class RootValidationFailed : public Error {
public:
    using Error::Error;
};

// An argument or a computed point left the admissible domain.
class DomainViolation : public Error {
public:
    using Error::Error;
};

class ArgumentOrder : public Error {
public:
    using Error::Error;
};

class DegenerateNode : public Error {
public:
    using Error::Error;
};

class CoverageGap : public Error {
public:
    using Error::Error;
};

class NotHermitian : public Error {
public:
    using Error::Error;
};

class BadParameter : public Error {
public:
    using Error::Error;
};

class ZeroDenominator : public Error {
public:
    using Error::Error;
};

class SpectralRadiusTooLarge : public Error {
public:
    using Error::Error;
};

// Malformed input files (parameter tables, certificates).
class FormatError : public Error {
public:
    using Error::Error;
};

} // namespace commlip
