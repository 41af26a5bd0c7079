#pragma once

#include <stdexcept>
#include <string>

namespace cv2x {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Adaptive quadrature exhausted its subdivision budget.
class NonConvergence : public Error {
public:
    using Error::Error;
};

/// Requested derivative order is not supported by the Laplace evaluator.
class UnsupportedOrder : public Error {
public:
    using Error::Error;
};

/// A link has zero length (receiver co-located with transmitter).
class DegenerateDistance : public Error {
public:
    using Error::Error;
};

class OutOfRange : public Error {
public:
    using Error::Error;
};

/// (case, serving) pair has no distance law.
class UnsupportedPair : public Error {
public:
    using Error::Error;
};

/// Joint association probabilities failed to sum to one.
class ConservationViolation : public Error {
public:
    using Error::Error;
};

/// Neither an MBS nor a typical-road SBS exists in the realization.
class NoCandidate : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, int line)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

}  // namespace cv2x
