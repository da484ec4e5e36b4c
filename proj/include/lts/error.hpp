#pragma once

#include <stdexcept>
#include <string>

namespace lts {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dimensions or tensor shapes do not fit together.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// A precondition on the algebraic data does not hold
/// (e.g. an operator that is not Rota-Baxter was passed where one is required).
class HypothesisError : public Error {
public:
    using Error::Error;
};

/// Malformed input text, file, or JSON document.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace lts
