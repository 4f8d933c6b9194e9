#pragma once

#include <stdexcept>
#include <string>

namespace nlemb {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad inputs: shape mismatches, malformed files, violated preconditions.
/// The CLI maps these to exit code 2.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Numeric failure (non-finite values reached the model). Exit code 3.
class NumericError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NegativeEntry : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ZeroRow : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NoPositivePairs : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NoNegativePairs : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class EmptyPairSet : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NotL1Normalized : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class TooManyAnchors : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class KExceedsGallery : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class BadMagic : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class UnsupportedVersion : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class CorruptPayload : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class IoError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

}  // namespace nlemb
