#pragma once

#include <stdexcept>
#include <string>

namespace crisscross {

/// Base of every error raised by the codec.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad parameters or malformed input (CLI exit code 2).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An array that fails the membership conditions where a codeword is required.
class NotACodeword : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// A valid codeword that no data vector encodes to.
class OutsideEncoderImage : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// Base of decoding failures (CLI exit code 3).
class DecodeError : public Error {
public:
    using Error::Error;
};

/// The received word is not a single-edit image of any codeword.
class NoCandidate : public DecodeError {
public:
    using DecodeError::DecodeError;
};

/// Two distinct codewords explain the received word.
class AmbiguousCodeword : public DecodeError {
public:
    using DecodeError::DecodeError;
};

/// The two-dimensional decoder could not reconstruct a codeword.
class NotDecodable : public DecodeError {
public:
    using DecodeError::DecodeError;
};

/// Broken internal invariant. Never triggered by valid input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace crisscross
