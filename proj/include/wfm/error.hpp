#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wfm {

/// Zero-based (row, column) position.
struct Cell {
  std::size_t row = 0;
  std::size_t col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A binary matrix holds a 1 where the weight matrix has a structural zero.
class IncompatibleMatrix : public Error {
 public:
  IncompatibleMatrix(const std::string& what, std::vector<Cell> cells)
      : Error(what), cells_(std::move(cells)) {}
  const std::vector<Cell>& cells() const noexcept { return cells_; }

 private:
  std::vector<Cell> cells_;
};

class SpaceTooLarge : public Error {
 public:
  explicit SpaceTooLarge(std::size_t cap)
      : Error("space too large: more than " + std::to_string(cap) + " states"),
        cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

class DisconnectedSpace : public Error {
 public:
  using Error::Error;
};

}  // namespace wfm
