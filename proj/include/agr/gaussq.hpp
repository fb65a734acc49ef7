#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace agr {

// Gaussian rational a + b*i with arbitrary-precision rational parts.
// mpq_class keeps numerator/denominator coprime and denominators positive,
// so values are always in canonical reduced form.
class GaussQ {
 public:
  GaussQ() : re_(0), im_(0) {}
  GaussQ(long n) : re_(n), im_(0) {}
  GaussQ(long num, long den) : re_(num, den), im_(0) {
    if (den == 0) throw std::domain_error("GaussQ: zero denominator");
    re_.canonicalize();
  }
  GaussQ(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussQ i() { return GaussQ(mpq_class(0), mpq_class(1)); }
  // c + d*i with c = a/b, d = p/q.
  static GaussQ make(long a, long b, long p, long q) {
    if (b == 0 || q == 0) throw std::domain_error("GaussQ: zero denominator");
    return GaussQ(mpq_class(a, b), mpq_class(p, q));
  }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  friend GaussQ operator+(const GaussQ& x, const GaussQ& y) {
    return GaussQ(x.re_ + y.re_, x.im_ + y.im_);
  }
  friend GaussQ operator-(const GaussQ& x, const GaussQ& y) {
    return GaussQ(x.re_ - y.re_, x.im_ - y.im_);
  }
  friend GaussQ operator-(const GaussQ& x) { return GaussQ(-x.re_, -x.im_); }
  friend GaussQ operator*(const GaussQ& x, const GaussQ& y) {
    return GaussQ(x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_);
  }
  friend GaussQ operator/(const GaussQ& x, const GaussQ& y) {
    if (y.is_zero()) throw std::domain_error("GaussQ: division by zero");
    mpq_class n = y.re_ * y.re_ + y.im_ * y.im_;  // |y|^2 > 0 for y != 0
    return GaussQ((x.re_ * y.re_ + x.im_ * y.im_) / n,
                  (x.im_ * y.re_ - x.re_ * y.im_) / n);
  }

  GaussQ& operator+=(const GaussQ& y) { return *this = *this + y; }
  GaussQ& operator-=(const GaussQ& y) { return *this = *this - y; }
  GaussQ& operator*=(const GaussQ& y) { return *this = *this * y; }
  GaussQ& operator/=(const GaussQ& y) { return *this = *this / y; }

  GaussQ conj() const { return GaussQ(re_, -im_); }

  friend bool operator==(const GaussQ& x, const GaussQ& y) {
    return x.re_ == y.re_ && x.im_ == y.im_;
  }
  friend bool operator!=(const GaussQ& x, const GaussQ& y) { return !(x == y); }

  // Total order (lexicographic on (re, im)); used for canonical sorting only.
  friend bool operator<(const GaussQ& x, const GaussQ& y) {
    int c = cmp(x.re_, y.re_);
    if (c != 0) return c < 0;
    return cmp(x.im_, y.im_) < 0;
  }

  // "0", "1", "-1/2", "i", "-i/2", "1/2+3/4i", "1-i", ...
  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    if (re_ != 0) out += re_.get_str();
    if (im_ != 0) {
      if (im_ == 1) {
        out += re_ != 0 ? "+i" : "i";
      } else if (im_ == -1) {
        out += "-i";
      } else {
        std::string s = im_.get_str();
        if (re_ != 0 && s[0] != '-') out += "+";
        out += s + "i";
      }
    }
    return out;
  }

 private:
  mpq_class re_, im_;
};

inline GaussQ operator*(long n, const GaussQ& x) { return GaussQ(n) * x; }

}  // namespace agr
