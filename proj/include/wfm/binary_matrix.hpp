#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wfm/error.hpp"

namespace wfm {

/// Dense 0/1 matrix with cached margins and an index of its 1-entries.
///
/// The ones list supports O(1) uniform sampling of a 1-entry; a reverse map
/// from cell to list position makes every set() O(1) list surgery. Margins are
/// kept up to date on every mutation, so they only stay fixed across a
/// sequence of mutations that is itself margin-preserving (swaps, trades).
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols);

  /// Builds from nested rows; every row must have the same length and hold
  /// only 0 or 1.
  static BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows);
  static BinaryMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  bool at(std::size_t i, std::size_t j) const noexcept {
    return cells_[i * cols_ + j] != 0;
  }
  /// Row i as a contiguous span of 0/1 bytes.
  std::span<const std::uint8_t> row(std::size_t i) const noexcept {
    return {cells_.data() + i * cols_, cols_};
  }

  void set(std::size_t i, std::size_t j, bool value);

  const std::vector<Cell>& ones() const noexcept { return ones_; }
  std::size_t total_ones() const noexcept { return ones_.size(); }
  const std::vector<std::size_t>& row_sums() const noexcept { return row_sums_; }
  const std::vector<std::size_t>& col_sums() const noexcept { return col_sums_; }

  /// Row-major string of '0'/'1' characters; equal matrices of equal shape
  /// have equal keys.
  std::string key() const;

  /// Full recount of margins and the ones index against the cell storage.
  /// Returns false on any inconsistency.
  bool verify_consistency() const;

  friend bool operator==(const BinaryMatrix& a, const BinaryMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
  }

 private:
  static constexpr std::uint32_t kAbsent = UINT32_MAX;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> cells_;
  std::vector<Cell> ones_;
  std::vector<std::uint32_t> position_;  // cell -> index in ones_, or kAbsent
  std::vector<std::size_t> row_sums_;
  std::vector<std::size_t> col_sums_;
};

}  // namespace wfm
