// Copyright (c) 2026 the sokit authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace sokit {

using index_t = std::ptrdiff_t;

inline constexpr double kEps = 2.220446049250313e-16;  // binary64 machine epsilon (2^-52)

/// Unit roundoff used in the backward-error bounds (2^-53).
inline constexpr double kUnitRoundoff = 1.1102230246251565e-16;

template <typename T>
struct is_complex : std::false_type {};
template <typename U>
struct is_complex<std::complex<U>> : std::true_type {};
template <typename T>
inline constexpr bool is_complex_v = is_complex<T>::value;

template <typename T>
struct real_of {
  using type = T;
};
template <typename U>
struct real_of<std::complex<U>> {
  using type = U;
};
template <typename T>
using real_of_t = typename real_of<T>::type;

template <typename T>
inline T conj_if(const T& x) {
  if constexpr (is_complex_v<T>) {
    return std::conj(x);
  } else {
    return x;
  }
}

template <typename T>
inline double abs_val(const T& x) {
  return static_cast<double>(std::abs(x));
}

// ---------------------------------------------------------------------------
// Error taxonomy. Everything derives from sokit::error so callers can catch
// library failures wholesale; specific types mirror the failure modes of the
// individual operations.
// ---------------------------------------------------------------------------

class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

class invalid_input : public error {
 public:
  explicit invalid_input(const std::string& what) : error(what) {}
};

class singular_matrix : public error {
 public:
  explicit singular_matrix(const std::string& what) : error(what) {}
};

class shift_singular : public error {
 public:
  explicit shift_singular(const std::string& what) : error(what) {}
};

/// A zero-norm U1 column was hit in the second-level MGS division.
class degenerate_column : public error {
 public:
  explicit degenerate_column(const std::string& what) : error(what) {}
};

/// A diagonal entry needed by Procedure-1/2 sits below the degeneracy floor;
/// callers fall back to the MGS variant.
class small_diagonal : public error {
 public:
  explicit small_diagonal(const std::string& what) : error(what) {}
};

class parse_error : public error {
 public:
  parse_error(const std::string& what, long line)
      : error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

class io_error : public error {
 public:
  explicit io_error(const std::string& what) : error(what) {}
};

}  // namespace sokit
