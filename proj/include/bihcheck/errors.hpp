#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bih {

/// Root of every error this library throws on invalid input.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// exact_poly
class MissingAssignment : public Error { using Error::Error; };
class ZeroDivisor : public Error { using Error::Error; };
class ExponentOverflow : public Error { using Error::Error; };

// expr_parser
class SyntaxError : public Error {
  public:
    SyntaxError(const std::string &what, std::size_t offset)
        : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

  private:
    std::size_t offset_;
};
class UnknownName : public Error { using Error::Error; };
class NegativeExponent : public SyntaxError { using SyntaxError::SyntaxError; };
class DuplicateName : public Error { using Error::Error; };
class ForwardReference : public Error { using Error::Error; };

// resultant_engine
class ZeroInput : public Error { using Error::Error; };
class BothConstant : public Error { using Error::Error; };
class InsufficientSamples : public Error { using Error::Error; };

// catalog
class DegreeTooLow : public Error { using Error::Error; };
class InvalidParameters : public Error { using Error::Error; };
class UnknownCheck : public Error { using Error::Error; };

// verify_cli
class UsageError : public Error { using Error::Error; };
class Timeout : public Error { using Error::Error; };

}  // namespace bih
