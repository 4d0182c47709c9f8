#pragma once

#include <stdexcept>
#include <string>

namespace wsa {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapacityError : public Error { using Error::Error; };
class DivisionByZero : public Error { using Error::Error; };
class ParseError : public Error { using Error::Error; };
class UnsupportedFamily : public Error { using Error::Error; };
class DecompositionError : public Error { using Error::Error; };
class ClassificationError : public Error { using Error::Error; };
class SelectionError : public Error { using Error::Error; };
class GradingError : public Error { using Error::Error; };
class DomainError : public Error { using Error::Error; };
class NotApplicable : public Error { using Error::Error; };
class StraighteningFailure : public Error { using Error::Error; };
class ConsistencyError : public Error { using Error::Error; };
class MatchabilityError : public Error { using Error::Error; };
class VerificationError : public Error { using Error::Error; };
class InternalError : public Error { using Error::Error; };

}  // namespace wsa
