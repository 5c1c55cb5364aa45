#include "artin/linalg.hpp"

#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "artin/quadratic.hpp"

namespace artin {

  using detail::checked_add;
  using detail::checked_mul;
  using Rational = boost::multiprecision::cpp_rational;

  IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        t(j, i) = (*this)(i, j);
      }
    }
    return t;
  }

  bool IntMatrix::is_identity() const {
    return rows_ == cols_ && *this == identity(rows_);
  }

  IntMatrix IntMatrix::operator*(IntMatrix const& o) const {
    if (cols_ != o.rows_) {
      throw std::invalid_argument("IntMatrix: shape mismatch in product");
    }
    IntMatrix c(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        auto a = (*this)(i, k);
        if (a == 0) {
          continue;
        }
        for (std::size_t j = 0; j < o.cols_; ++j) {
          c(i, j) = checked_add(c(i, j), checked_mul(a, o(k, j)));
        }
      }
    }
    return c;
  }

  IntVector IntMatrix::operator*(IntVector const& v) const {
    if (cols_ != v.size()) {
      throw std::invalid_argument("IntMatrix: shape mismatch in product");
    }
    IntVector out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        out[i] = checked_add(out[i], checked_mul((*this)(i, k), v[k]));
      }
    }
    return out;
  }

  IntMatrix IntMatrix::operator+(IntMatrix const& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw std::invalid_argument("IntMatrix: shape mismatch in sum");
    }
    IntMatrix c(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) {
      c.data_[i] = checked_add(data_[i], o.data_[i]);
    }
    return c;
  }

  IntMatrix IntMatrix::operator-(IntMatrix const& o) const {
    IntMatrix neg = o;
    for (auto& x : neg.data_) {
      x = checked_mul(x, -1);
    }
    return *this + neg;
  }

  std::vector<std::vector<std::int64_t>> IntMatrix::to_rows() const {
    std::vector<std::vector<std::int64_t>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      out[i].assign(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    return out;
  }

  std::string IntMatrix::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
      out << (i ? ", [" : "[");
      for (std::size_t j = 0; j < cols_; ++j) {
        out << (j ? ", " : "") << (*this)(i, j);
      }
      out << ']';
    }
    out << ']';
    return out.str();
  }

  IntMatrix power(IntMatrix const& m, std::uint64_t e) {
    IntMatrix result = IntMatrix::identity(m.rows());
    IntMatrix base   = m;
    while (e != 0) {
      if (e & 1) {
        result = result * base;
      }
      e >>= 1;
      if (e != 0) {
        base = base * base;
      }
    }
    return result;
  }

  bool commute(IntMatrix const& a, IntMatrix const& b) {
    return a * b == b * a;
  }

  std::int64_t dot(IntVector const& a, IntVector const& b) {
    if (a.size() != b.size()) {
      throw std::invalid_argument("dot: length mismatch");
    }
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      acc = checked_add(acc, checked_mul(a[i], b[i]));
    }
    return acc;
  }

  namespace {
    // Reduced row echelon form in place; returns pivot columns.
    std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& m,
                                  std::size_t                       cols) {
      std::vector<std::size_t> pivots;
      std::size_t              row = 0;
      for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col] == 0) {
          ++p;
        }
        if (p == m.size()) {
          continue;
        }
        std::swap(m[p], m[row]);
        Rational inv = 1 / m[row][col];
        for (auto& x : m[row]) {
          x *= inv;
        }
        for (std::size_t r = 0; r < m.size(); ++r) {
          if (r != row && m[r][col] != 0) {
            Rational f = m[r][col];
            for (std::size_t c = 0; c < m[r].size(); ++c) {
              m[r][c] -= f * m[row][c];
            }
          }
        }
        pivots.push_back(col);
        ++row;
      }
      return pivots;
    }
  }  // namespace

  std::size_t rank(IntMatrix const& m) {
    std::vector<std::vector<Rational>> q(m.rows(),
                                         std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        q[i][j] = m(i, j);
      }
    }
    return rref(q, m.cols()).size();
  }

  std::optional<IntVector> solve_integer(IntMatrix const& a, IntVector const& b) {
    if (a.rows() != b.size()) {
      throw std::invalid_argument("solve_integer: shape mismatch");
    }
    std::vector<std::vector<Rational>> q(a.rows(),
                                         std::vector<Rational>(a.cols() + 1));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        q[i][j] = a(i, j);
      }
      q[i][a.cols()] = b[i];
    }
    auto pivots = rref(q, a.cols() + 1);
    if (!pivots.empty() && pivots.back() == a.cols()) {
      return std::nullopt;  // inconsistent
    }
    IntVector x(a.cols(), 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      Rational v = q[r][a.cols()];
      if (boost::multiprecision::denominator(v) != 1) {
        return std::nullopt;
      }
      x[pivots[r]] = static_cast<std::int64_t>(boost::multiprecision::numerator(v));
    }
    if (a * x != b) {
      return std::nullopt;
    }
    return x;
  }

}  // namespace artin
