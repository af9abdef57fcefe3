#pragma once

#include <stdexcept>
#include <string>

namespace lns {

// Base for every failure the library reports. The CLI maps subclasses onto
// exit codes: MathMismatch -> 1, everything input/config related -> 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InputError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class ResourceError : public Error {
public:
    using Error::Error;
};

class PrecisionError : public Error {
public:
    using Error::Error;
};

// A transcribed constant failed its verification identity.
class DataIntegrityError : public Error {
public:
    using Error::Error;
};

// A derivation or pipeline result disagrees with the recorded value.
class MathMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace lns
