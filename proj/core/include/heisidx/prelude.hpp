#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace heisidx {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr Complex kImag{0.0, 1.0};

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operand shapes (n, r, mesh, degree) do not match.
struct DimensionError : Error {
  using Error::Error;
};

/// Text input rejected; `pos` is a 0-based offset into the source string.
struct ParseError : Error {
  std::size_t pos;
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"), pos(position) {}
};

/// A model operator failed the invertibility gate. `nodes` lists the mesh
/// nodes where it happened (empty for pointwise / constant-coefficient use).
struct DegenerateError : Error {
  std::vector<int> nodes;
  explicit DegenerateError(const std::string& what, std::vector<int> bad_nodes = {})
      : Error(what), nodes(std::move(bad_nodes)) {}
};

/// The truncation schedule did not stabilize within the requested tolerance.
struct StabilizationError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace heisidx
