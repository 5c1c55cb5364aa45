// Exact arithmetic in the ring Z[sqrt2, sqrt3].

#ifndef ARTIN_QUADRATIC_HPP_
#define ARTIN_QUADRATIC_HPP_

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace artin {

  //! a + b*sqrt2 + c*sqrt3 + d*sqrt6 with 64-bit integer coordinates.
  //!
  //! Every arithmetic operation checks for overflow and throws
  //! std::overflow_error rather than wrapping.
  class QuadInt {
   public:
    constexpr QuadInt() = default;
    constexpr QuadInt(std::int64_t a) : c_{a, 0, 0, 0} {}
    constexpr QuadInt(std::int64_t a,
                      std::int64_t b,
                      std::int64_t c,
                      std::int64_t d)
        : c_{a, b, c, d} {}

    static constexpr QuadInt sqrt2() {
      return {0, 1, 0, 0};
    }
    static constexpr QuadInt sqrt3() {
      return {0, 0, 1, 0};
    }

    std::array<std::int64_t, 4> const& coords() const noexcept {
      return c_;
    }
    bool is_zero() const noexcept {
      return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
    }

    //! Exact sign of the real number: -1, 0 or 1.
    int sign() const;

    //! Approximate real value, for diagnostics only.
    double approx() const noexcept;

    QuadInt operator-() const;
    QuadInt operator+(QuadInt const& o) const;
    QuadInt operator-(QuadInt const& o) const;
    QuadInt operator*(QuadInt const& o) const;
    QuadInt& operator+=(QuadInt const& o) {
      return *this = *this + o;
    }

    std::string to_string() const;

    friend bool operator==(QuadInt const&, QuadInt const&) = default;

   private:
    std::array<std::int64_t, 4> c_{0, 0, 0, 0};
  };

  namespace detail {
    inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
      std::int64_t r;
      if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in exact arithmetic");
      }
      return r;
    }
    inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
      std::int64_t r;
      if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in exact arithmetic");
      }
      return r;
    }
  }  // namespace detail

}  // namespace artin

#endif  // ARTIN_QUADRATIC_HPP_
