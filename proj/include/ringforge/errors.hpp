#pragma once

#include <stdexcept>
#include <string>

namespace ringforge {

/// Base type for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed dataset files (missing files, bad ids, cross-graph edges).
struct FormatError : Error { using Error::Error; };
/// Download or archive-extraction failures.
struct FetchError : Error { using Error::Error; };
/// Invalid configuration values (non-increasing granularities, mu <= 0, ...).
struct ConfigError : Error { using Error::Error; };
/// Tensor shape mismatch; the message carries both shapes.
struct ShapeError : Error { using Error::Error; };
/// A documented precondition was violated by the caller.
struct ContractError : Error { using Error::Error; };
/// NaN/Inf encountered where finite values are required.
struct NumericsError : Error { using Error::Error; };
/// Scalar special function evaluated outside its domain.
struct DomainError : Error { using Error::Error; };
/// Filesystem read/write failures.
struct IoError : Error { using Error::Error; };
/// Cross-validation fold with a degenerate class distribution.
struct FoldError : Error { using Error::Error; };
/// Stratified subsample missing a class.
struct StratifyError : Error { using Error::Error; };

}  // namespace ringforge
