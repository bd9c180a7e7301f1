#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace scatterlab {

/// Exact rational number in lowest terms with a positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  /// Accepts "p/q" or "p" (optionally signed). Throws Error(parse).
  static Rat parse(std::string_view text);

  /// "p/q" with q > 0; integers are rendered as "p/1".
  std::string str() const;
  /// Short human form: "p" for integers, else "p/q".
  std::string pretty() const;

  double to_double() const { return v_.get_d(); }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.pretty(); }

 private:
  mpq_class v_{0};
};

Rat abs(const Rat& r);
Rat min(const Rat& a, const Rat& b);
Rat max(const Rat& a, const Rat& b);
/// r^k for k >= 0, or (1/r)^|k| for negative k.
Rat pow(const Rat& r, long k);
/// Largest integer <= r.
mpz_class floor(const Rat& r);
Rat from_integer(const mpz_class& z);

}  // namespace scatterlab
