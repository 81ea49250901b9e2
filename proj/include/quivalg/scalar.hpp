// Copyright 2026 The quivalg Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Exact complex-rational scalars.

#include <complex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace quivalg {

using Rational = mpq_class;

class Complex {
 public:
  Complex() = default;
  Complex(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }
  Complex(long re) : re_(re), im_(0) {}  // NOLINT: implicit from integer literals
  Complex(int re) : re_(re), im_(0) {}   // NOLINT

  static Complex i() { return Complex(0, 1); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Complex conj() const { return Complex(re_, -im_); }
  /// |z|^2, exact.
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  Complex& operator+=(const Complex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    Rational d = o.norm2();
    if (sgn(d) == 0) throw std::domain_error("division by zero");
    *this *= o.conj();
    re_ /= d;
    im_ /= d;
    return *this;
  }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator-(const Complex& a) { return Complex(-a.re_, -a.im_); }
  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::complex<double> to_double() const { return {re_.get_d(), im_.get_d()}; }

  /// "p/q" (or "p" for integers).
  static std::string rational_string(const Rational& q) { return q.get_str(); }

  static Rational parse_rational(std::string_view text) {
    Rational q;
    if (q.set_str(std::string(text), 10) != 0)
      throw std::invalid_argument("bad rational: " + std::string(text));
    q.canonicalize();
    return q;
  }

  /// Human readable: "3", "-1/2", "i", "2+3i", "(1/2)i".
  std::string to_string() const {
    auto part = [](const Rational& q) {
      std::string s = q.get_str();
      return q.get_den() == 1 ? s : "(" + s + ")";
    };
    if (is_real()) return re_.get_str();
    std::string im_str;
    if (im_ == 1) {
      im_str = "i";
    } else if (im_ == -1) {
      im_str = "-i";
    } else {
      im_str = part(im_) + "i";
    }
    if (sgn(re_) == 0) return im_str;
    if (sgn(im_) > 0) return part(re_) + "+" + im_str;
    return part(re_) + im_str;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline std::ostream& operator<<(std::ostream& os, const Complex& z) {
  return os << z.to_string();
}

}  // namespace quivalg
