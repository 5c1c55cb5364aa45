#include "artin/quadratic.hpp"

#include <cmath>
#include <initializer_list>

#include <boost/multiprecision/cpp_int.hpp>

namespace artin {

  using detail::checked_add;
  using detail::checked_mul;

  double QuadInt::approx() const noexcept {
    return static_cast<double>(c_[0]) + c_[1] * std::sqrt(2.0)
           + c_[2] * std::sqrt(3.0) + c_[3] * std::sqrt(6.0);
  }

  namespace {
    using Big = boost::multiprecision::cpp_int;

    int sgn(Big const& x) {
      return x.sign();
    }

    // Sign of u + v*sqrt2.
    int sign2(Big const& u, Big const& v) {
      int su = sgn(u);
      int sv = sgn(v);
      if (su * sv >= 0) {
        return su != 0 ? su : sv;
      }
      return su * sgn(u * u - 2 * v * v);
    }
  }  // namespace

  // x = P + sqrt3 Q with P = a + b sqrt2 and Q = c + d sqrt2.
  int QuadInt::sign() const {
    Big a = c_[0], b = c_[1], c = c_[2], d = c_[3];
    int sp = sign2(a, b);
    int sq = sign2(c, d);
    if (sp * sq >= 0) {
      return sp != 0 ? sp : sq;
    }
    // P^2 - 3Q^2 in Z[sqrt2].
    Big u = a * a + 2 * b * b - 3 * (c * c + 2 * d * d);
    Big v = 2 * a * b - 6 * c * d;
    return sp * sign2(u, v);
  }

  QuadInt QuadInt::operator-() const {
    return QuadInt(0) - *this;
  }

  QuadInt QuadInt::operator+(QuadInt const& o) const {
    return {checked_add(c_[0], o.c_[0]),
            checked_add(c_[1], o.c_[1]),
            checked_add(c_[2], o.c_[2]),
            checked_add(c_[3], o.c_[3])};
  }

  QuadInt QuadInt::operator-(QuadInt const& o) const {
    QuadInt r;
    for (int i = 0; i < 4; ++i) {
      if (__builtin_sub_overflow(c_[i], o.c_[i], &r.c_[i])) {
        throw std::overflow_error("integer overflow in exact arithmetic");
      }
    }
    return r;
  }

  // Basis 1, r2, r3, r6 with r2*r2 = 2, r3*r3 = 3, r6*r6 = 6, r2*r3 = r6,
  // r2*r6 = 2*r3, r3*r6 = 3*r2.
  QuadInt QuadInt::operator*(QuadInt const& o) const {
    auto const& x = c_;
    auto const& y = o.c_;
    auto        m = [](std::int64_t a, std::int64_t b) {
      return checked_mul(a, b);
    };
    auto sum = [](std::initializer_list<std::int64_t> terms) {
      std::int64_t acc = 0;
      for (auto t : terms) {
        acc = checked_add(acc, t);
      }
      return acc;
    };
    return {sum({m(x[0], y[0]),
                 m(2, m(x[1], y[1])),
                 m(3, m(x[2], y[2])),
                 m(6, m(x[3], y[3]))}),
            sum({m(x[0], y[1]),
                 m(x[1], y[0]),
                 m(3, m(x[2], y[3])),
                 m(3, m(x[3], y[2]))}),
            sum({m(x[0], y[2]),
                 m(x[2], y[0]),
                 m(2, m(x[1], y[3])),
                 m(2, m(x[3], y[1]))}),
            sum({m(x[0], y[3]), m(x[3], y[0]), m(x[1], y[2]), m(x[2], y[1])})};
  }

  std::string QuadInt::to_string() const {
    static constexpr char const* unit[] = {"", "*r2", "*r3", "*r6"};
    std::string                  out;
    for (int i = 0; i < 4; ++i) {
      if (c_[i] == 0) {
        continue;
      }
      if (!out.empty()) {
        out += c_[i] < 0 ? " - " : " + ";
        out += std::to_string(c_[i] < 0 ? -c_[i] : c_[i]);
      } else {
        out += std::to_string(c_[i]);
      }
      out += unit[i];
    }
    return out.empty() ? "0" : out;
  }

}  // namespace artin
