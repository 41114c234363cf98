#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>

namespace pps {

/// Exact Gaussian rational re + i*im.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar i() { return Scalar(0, 1); }

  [[nodiscard]] const mpq_class& re() const { return re_; }
  [[nodiscard]] const mpq_class& im() const { return im_; }
  [[nodiscard]] bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  [[nodiscard]] bool is_real() const { return sgn(im_) == 0; }
  [[nodiscard]] Scalar conj() const { return Scalar(re_, -im_); }
  /// |z|^2, always real and non-negative.
  [[nodiscard]] mpq_class norm_squared() const { return re_ * re_ + im_ * im_; }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a) { return Scalar(-a.re_, -a.im_); }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// "3", "-1/2", "2i", "1-i", "1/2+3/4i".
  [[nodiscard]] std::string to_string() const;
  /// Inverse of to_string.  Throws std::invalid_argument.
  static Scalar parse(const std::string& text);

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace pps
