#pragma once

#include <stdexcept>
#include <string>

namespace dfrieze {

/// Base class of every engine error. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RankMismatch : public Error {
public:
    using Error::Error;
};

/// A division that should have been exact left a remainder. Upstream this
/// means a broken frieze invariant, so callers let it propagate.
class InexactDivision : public Error {
public:
    using Error::Error;
};

class NotAPerfectSquare : public Error {
public:
    using Error::Error;
};

class EvaluationError : public Error {
public:
    using Error::Error;
};

class NotDynkinAD : public Error {
public:
    using Error::Error;
};

class InvalidQuiver : public Error {
public:
    using Error::Error;
};

class InvalidTriangulation : public Error {
public:
    using Error::Error;
};

class UnsupportedFork : public Error {
public:
    using Error::Error;
};

class WindowOutOfRange : public Error {
public:
    using Error::Error;
};

class WordTooShort : public Error {
public:
    using Error::Error;
};

class OutsideRegion : public Error {
public:
    using Error::Error;
};

/// Malformed textual input (quiver specs, polynomials, fixtures). Exit code 2.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Raised when a search exceeds its step budget (CLI exit code 3).
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace dfrieze
