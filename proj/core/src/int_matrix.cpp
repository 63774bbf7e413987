#include "dpic/int_matrix.hpp"

#include <sstream>

#include "dpic/errors.hpp"
#include "exact_linear_algebra.hpp"

namespace dpic {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Entry>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::permutation(const std::vector<std::size_t>& image) {
  IntMatrix m(image.size(), image.size());
  for (std::size_t j = 0; j < image.size(); ++j) m(image[j], j) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw InputError("matrix dimension mismatch");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Entry a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  }
  return out;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix out = *this;
  for (Entry& e : out.data_) e = -e;
  return out;
}

std::vector<IntMatrix::Entry> IntMatrix::operator*(const std::vector<Entry>& v) const {
  if (v.size() != cols_) throw InputError("matrix-vector dimension mismatch");
  std::vector<Entry> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

IntMatrix IntMatrix::power(int k) const {
  if (rows_ != cols_) throw InputError("power of a non-square matrix");
  IntMatrix base = k < 0 ? inverse() : *this;
  IntMatrix result = identity(rows_);
  for (int e = k < 0 ? -k : k; e > 0; e >>= 1) {
    if (e & 1) result = result * base;
    base = base * base;
  }
  return result;
}

bool IntMatrix::is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

IntMatrix::Entry IntMatrix::determinant() const {
  if (rows_ != cols_) throw InputError("determinant of a non-square matrix");
  using boost::multiprecision::cpp_int;
  const std::size_t n = rows_;
  if (n == 0) return 1;
  std::vector<cpp_int> a(data_.begin(), data_.end());
  auto at = [&](std::size_t r, std::size_t c) -> cpp_int& { return a[r * n + c]; };
  cpp_int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && at(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
    }
    prev = at(k, k);
  }
  return sign * static_cast<Entry>(at(n - 1, n - 1));
}

IntMatrix IntMatrix::inverse() const {
  if (rows_ != cols_) throw InputError("inverse of a non-square matrix");
  using detail::Rational;
  using detail::RationalRow;
  const std::size_t n = rows_;
  // Gauss-Jordan on [A | e_col] for each column of the inverse.
  IntMatrix out(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<RationalRow> m(n, RationalRow(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational((*this)(i, j));
      m[i][n] = (i == col) ? 1 : 0;
    }
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t piv = k;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) throw ConsistencyError("matrix is singular");
      std::swap(m[k], m[piv]);
      const Rational lead = m[k][k];
      for (Rational& v : m[k]) v /= lead;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == k || m[i][k] == 0) continue;
        const Rational f = m[i][k];
        for (std::size_t j = k; j <= n; ++j) m[i][j] -= f * m[k][j];
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      const Rational& v = m[i][n];
      if (boost::multiprecision::denominator(v) != 1) throw ConsistencyError("inverse is not integral");
      out(i, col) = static_cast<Entry>(boost::multiprecision::numerator(v));
    }
  }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out << ", ";
    out << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out << ',';
      out << (*this)(i, j);
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

std::size_t IntMatrixHash::operator()(const IntMatrix& m) const noexcept {
  std::size_t h = m.rows() * 1315423911u + m.cols();
  for (IntMatrix::Entry e : m.data()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace dpic
