// Copyright (c) dvrbody contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dvrbody {

enum class ErrorCode {
    UnknownVertex,
    Disconnected,
    InvalidArgument,
    DimensionMismatch,
    DimensionTooLarge,
    InfeasibleEverywhere,
    UnboundedValue,
    NonIntegerDivisor,
    NonPositiveDegree,
    InvalidFlag,
    EmptyAtZero,
    EmptySystem,
    UnboundedGenericPolytope,
    NotABasis,
    FlagRayUnknown,
    OutsideGenericPolytope,
    SchemaError,
    BadRational,
    WindowEmpty,
    Internal,
};

[[nodiscard]] std::string_view to_string(ErrorCode code);

// All failures raised by the library carry one of the codes above so that
// callers (the CLI in particular) can map them onto exit statuses.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace dvrbody
