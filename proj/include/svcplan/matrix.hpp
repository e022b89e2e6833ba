#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace svcplan {

// Marker for "no edge" cells in adjacency and distance matrices.
inline constexpr double kNoEdge = std::numeric_limits<double>::infinity();

// Shortest round-trip rendering; integral values print without a decimal
// point and kNoEdge prints as "inf", matching the matrix text format.
std::string format_weight(double value);

// Dense square matrix of edge weights.
class Matrix {
public:
  Matrix() = default;
  explicit Matrix(std::size_t n, double fill = kNoEdge)
      : n_(n), cells_(n * n, fill) {}

  // Parses N rows of N whitespace-separated entries with "inf" markers.
  static Matrix parse(const std::string& text);
  std::string to_text() const;

  std::size_t size() const { return n_; }
  double at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }
  double& at(std::size_t i, std::size_t j) { return cells_[i * n_ + j]; }

  bool operator==(const Matrix&) const = default;

private:
  std::size_t n_ = 0;
  std::vector<double> cells_;
};

}  // namespace svcplan
