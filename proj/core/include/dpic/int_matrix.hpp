#ifndef DPIC_INT_MATRIX_HPP
#define DPIC_INT_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace dpic {

// Dense row-major integer matrix.
class IntMatrix {
 public:
  using Entry = std::int64_t;

  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<Entry>> rows);

  static IntMatrix identity(std::size_t n);
  // Column j is e_{image[j]}, so P e_x = e_{pi(x)}.
  static IntMatrix permutation(const std::vector<std::size_t>& image);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Entry& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Entry operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Entry>& data() const { return data_; }

  IntMatrix operator*(const IntMatrix& other) const;
  IntMatrix operator-() const;
  std::vector<Entry> operator*(const std::vector<Entry>& v) const;
  IntMatrix transpose() const;
  IntMatrix power(int k) const;  // negative k needs an integral inverse
  bool is_identity() const;

  // Exact determinant (fraction-free elimination).
  Entry determinant() const;
  // Exact inverse; throws ConsistencyError when it is not integral.
  IntMatrix inverse() const;

  std::string to_string() const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Entry> data_;
};

struct IntMatrixHash {
  std::size_t operator()(const IntMatrix& m) const noexcept;
};

}  // namespace dpic

#endif  // DPIC_INT_MATRIX_HPP
