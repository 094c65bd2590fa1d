#include "wfm/binary_matrix.hpp"

#include <set>

namespace wfm {

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows),
      cols_(cols),
      cells_(rows * cols, 0),
      position_(rows * cols, kAbsent),
      row_sums_(rows, 0),
      col_sums_(cols, 0) {}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows.front().size();
  BinaryMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != n) {
      throw DimensionError("row " + std::to_string(i) + " has " +
                           std::to_string(rows[i].size()) + " entries, expected " +
                           std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const int v = rows[i][j];
      if (v != 0 && v != 1) {
        throw ParseError("binary matrix entry must be 0 or 1, got " +
                         std::to_string(v));
      }
      if (v == 1) a.set(i, j, true);
    }
  }
  return a;
}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
  BinaryMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) a.set(i, i, true);
  return a;
}

void BinaryMatrix::set(std::size_t i, std::size_t j, bool value) {
  const std::size_t idx = i * cols_ + j;
  if ((cells_[idx] != 0) == value) return;
  cells_[idx] = value ? 1 : 0;
  if (value) {
    position_[idx] = static_cast<std::uint32_t>(ones_.size());
    ones_.push_back({i, j});
    ++row_sums_[i];
    ++col_sums_[j];
  } else {
    const std::uint32_t pos = position_[idx];
    const Cell last = ones_.back();
    ones_[pos] = last;
    position_[last.row * cols_ + last.col] = pos;
    ones_.pop_back();
    position_[idx] = kAbsent;
    --row_sums_[i];
    --col_sums_[j];
  }
}

std::string BinaryMatrix::key() const {
  std::string k(cells_.size(), '0');
  for (std::size_t idx = 0; idx < cells_.size(); ++idx) {
    if (cells_[idx]) k[idx] = '1';
  }
  return k;
}

bool BinaryMatrix::verify_consistency() const {
  if (cells_.size() != rows_ * cols_ || position_.size() != cells_.size()) {
    return false;
  }
  std::vector<std::size_t> r(rows_, 0), c(cols_, 0);
  std::size_t count = 0;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const std::uint8_t v = cells_[i * cols_ + j];
      if (v > 1) return false;
      if (v) {
        ++r[i];
        ++c[j];
        ++count;
        const std::uint32_t pos = position_[i * cols_ + j];
        if (pos >= ones_.size() || ones_[pos] != Cell{i, j}) return false;
      } else if (position_[i * cols_ + j] != kAbsent) {
        return false;
      }
    }
  }
  if (count != ones_.size() || r != row_sums_ || c != col_sums_) return false;
  std::set<Cell> seen(ones_.begin(), ones_.end());
  return seen.size() == ones_.size();
}

}  // namespace wfm
