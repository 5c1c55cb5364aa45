// Small dense integer matrices and exact rational elimination.

#ifndef ARTIN_LINALG_HPP_
#define ARTIN_LINALG_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace artin {

  using IntVector = std::vector<std::int64_t>;

  //! Row-major integer matrix with overflow-checked arithmetic.
  class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept {
      return rows_;
    }
    std::size_t cols() const noexcept {
      return cols_;
    }

    std::int64_t& operator()(std::size_t i, std::size_t j) {
      return data_[i * cols_ + j];
    }
    std::int64_t operator()(std::size_t i, std::size_t j) const {
      return data_[i * cols_ + j];
    }

    IntMatrix transposed() const;
    bool      is_identity() const;

    IntMatrix operator*(IntMatrix const& o) const;
    IntVector operator*(IntVector const& v) const;
    IntMatrix operator+(IntMatrix const& o) const;
    IntMatrix operator-(IntMatrix const& o) const;

    //! Entry-wise, row by row.
    std::vector<std::vector<std::int64_t>> to_rows() const;
    std::string                            to_string() const;

    friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

   private:
    std::size_t               rows_ = 0;
    std::size_t               cols_ = 0;
    std::vector<std::int64_t> data_;
  };

  IntMatrix power(IntMatrix const& m, std::uint64_t e);
  bool      commute(IntMatrix const& a, IntMatrix const& b);

  std::int64_t dot(IntVector const& a, IntVector const& b);

  //! Rank over Q.
  std::size_t rank(IntMatrix const& m);

  //! An integer solution x of A x = b if the rational solution with free
  //! variables set to zero is integral; nullopt if the system is inconsistent
  //! or that solution is not integral.
  std::optional<IntVector> solve_integer(IntMatrix const& a, IntVector const& b);

}  // namespace artin

#endif  // ARTIN_LINALG_HPP_
