#ifndef SCLAB_ERROR_HPP
#define SCLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sclab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed automaton, tableau, partition or file contents.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class AlphabetMismatch : public Error {
public:
    AlphabetMismatch() : Error("automata are defined over different alphabets") {}
};

class UnknownSymbol : public Error {
public:
    explicit UnknownSymbol(char symbol)
        : Error(std::string("symbol '") + symbol + "' is not in the alphabet") {}
};

// Size errors. The CLI maps all of these to the same exit status.
class SizeError : public Error {
public:
    using Error::Error;
};

class SizeGuardExceeded : public SizeError {
public:
    using SizeError::SizeError;
};

class SizeTooSmall : public SizeError {
public:
    using SizeError::SizeError;
};

class StateBudgetExceeded : public SizeError {
public:
    using SizeError::SizeError;
};

class NonPositiveDimension : public Error {
public:
    using Error::Error;
};

class DegenerateOperation : public Error {
public:
    using Error::Error;
};

} // namespace sclab

#endif
