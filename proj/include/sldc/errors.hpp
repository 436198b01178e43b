#pragma once

#include <stdexcept>
#include <string>

namespace sldc {

// Encoder scanned every level up to k_max without finding one that accepts.
// Retry with a larger k_max or a different master seed.
struct SearchCapExceeded : std::runtime_error {
  explicit SearchCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A decoded support has the wrong cardinality: the codeword was corrupted or
// decoded under mismatched parameters.
struct InconsistentCodeword : std::runtime_error {
  explicit InconsistentCodeword(const std::string& what) : std::runtime_error(what) {}
};

struct QueryOutOfRange : std::out_of_range {
  explicit QueryOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct LengthOutOfRange : std::out_of_range {
  explicit LengthOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct ContainerError : std::runtime_error {
  explicit ContainerError(const std::string& what) : std::runtime_error(what) {}
};

struct BadMagic : ContainerError {
  explicit BadMagic(const std::string& what) : ContainerError(what) {}
};

struct UnsupportedVersion : ContainerError {
  explicit UnsupportedVersion(const std::string& what) : ContainerError(what) {}
};

struct TruncatedPayload : ContainerError {
  explicit TruncatedPayload(const std::string& what) : ContainerError(what) {}
};

struct NonzeroPadding : ContainerError {
  explicit NonzeroPadding(const std::string& what) : ContainerError(what) {}
};

}  // namespace sldc
