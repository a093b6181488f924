// Copyright Contributors to the uvhfield Project
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace uvh {

// Errors carry a category so callers can distinguish bad configuration from
// bad data and internal invariant failures.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ContractViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void check_config(bool ok, const std::string& msg) {
  if (!ok) throw ConfigError(msg);
}
inline void check_contract(bool ok, const std::string& msg) {
  if (!ok) throw ContractViolation(msg);
}
inline void check_internal(bool ok, const std::string& msg) {
  if (!ok) throw InternalError(msg);
}

// Dense row-major 2D array. Everything the tape moves around is one of
// these; vectors are 1xN or Nx1 as convenient.
template <typename T>
struct TensorT {
  int rows = 0;
  int cols = 0;
  std::vector<T> data;

  TensorT() = default;
  TensorT(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, T(0)) {}

  size_t size() const { return data.size(); }
  T& operator()(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  const T& operator()(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
  T* row(int r) { return data.data() + static_cast<size_t>(r) * cols; }
  const T* row(int r) const { return data.data() + static_cast<size_t>(r) * cols; }
};

using Tensor = TensorT<float>;

}  // namespace uvh
