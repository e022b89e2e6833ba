#include "svcplan/matrix.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "svcplan/errors.hpp"

namespace svcplan {

std::string format_weight(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;
  return std::string(buf, end);
}

namespace {

double parse_cell(const std::string& token, std::size_t row) {
  if (token == "inf") {
    return kNoEdge;
  }
  double value = 0.0;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || end != token.data() + token.size() || std::isnan(value)) {
    throw ValidationError("matrix row " + std::to_string(row + 1) +
                          ": invalid entry '" + token + "'");
  }
  return value;
}

}  // namespace

Matrix Matrix::parse(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream tokens(line);
    std::string token;
    std::vector<double> row;
    while (tokens >> token) {
      row.push_back(parse_cell(token, rows.size()));
    }
    if (!row.empty()) {
      rows.push_back(std::move(row));
    }
  }
  const std::size_t n = rows.size();
  if (n == 0) {
    throw ValidationError("matrix document has no rows");
  }
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw ValidationError("matrix row " + std::to_string(i + 1) + " has " +
                            std::to_string(rows[i].size()) + " entries, expected " +
                            std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

std::string Matrix::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (j != 0) {
        out += ' ';
      }
      out += format_weight(at(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace svcplan
