#ifndef DPIC_SRC_EXACT_LINEAR_ALGEBRA_HPP
#define DPIC_SRC_EXACT_LINEAR_ALGEBRA_HPP

// Exact rational row reduction. Private to the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <vector>

namespace dpic::detail {

using Rational = boost::multiprecision::cpp_rational;
using RationalRow = std::vector<Rational>;

// Incrementally maintained reduced row echelon basis of a row space.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t columns) : columns_(columns) {}

  std::size_t columns() const { return columns_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Subtracts the basis from `row` so every pivot column is zero.
  void reduce(RationalRow& row) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t p = pivots_[i];
      if (row[p] == 0) continue;
      const Rational factor = row[p];
      const RationalRow& basis = rows_[i];
      for (std::size_t c = 0; c < columns_; ++c) {
        if (basis[c] != 0) row[c] -= factor * basis[c];
      }
    }
  }

  bool in_span(RationalRow row) const {
    reduce(row);
    for (const Rational& v : row) {
      if (v != 0) return false;
    }
    return true;
  }

  // Returns true when the row increased the rank.
  bool insert(RationalRow row) {
    reduce(row);
    std::size_t pivot = columns_;
    for (std::size_t c = 0; c < columns_; ++c) {
      if (row[c] != 0) {
        pivot = c;
        break;
      }
    }
    if (pivot == columns_) return false;
    const Rational lead = row[pivot];
    for (Rational& v : row) v /= lead;
    // Keep the basis fully reduced.
    for (RationalRow& other : rows_) {
      if (other[pivot] == 0) continue;
      const Rational factor = other[pivot];
      for (std::size_t c = 0; c < columns_; ++c) {
        if (row[c] != 0) other[c] -= factor * row[c];
      }
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(pivot);
    return true;
  }

  // Columns that are not pivots, ascending.
  std::vector<std::size_t> free_columns() const {
    std::vector<bool> is_pivot(columns_, false);
    for (std::size_t p : pivots_) is_pivot[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < columns_; ++c) {
      if (!is_pivot[c]) out.push_back(c);
    }
    return out;
  }

 private:
  std::size_t columns_;
  std::vector<RationalRow> rows_;
  std::vector<std::size_t> pivots_;
};

inline std::size_t rank_of(const std::vector<RationalRow>& rows, std::size_t columns) {
  RowEchelon e(columns);
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

}  // namespace dpic::detail

#endif  // DPIC_SRC_EXACT_LINEAR_ALGEBRA_HPP
