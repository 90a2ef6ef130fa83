#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tetbox {

enum class ErrorCode {
    Parse,
    DivisionByZero,
    ZeroPolynomial,
    InvalidParam,
    IndicesNotDistinct,
    ShapeMismatch,
    NotWellGraded,
    FlagInconsistent,
    Inconsistent,
    PairingsInconsistent,
    NotInG,
    IsIdentity,
    NotIrreducible,
    NoForm,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every domain failure in the library is reported through this type; the
/// code is stable and is what the CLI maps onto exit statuses.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

} // namespace tetbox
