#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace linkstar {

// Exact rational number in lowest terms with a positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Accepts "p/q" or "p" with an optional leading sign.
  static Rat parse(std::string_view text);

  // "p/q" in lowest terms, e.g. "-1/4", "2/1".
  std::string str() const;

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  double to_double() const { return v_.get_d(); }

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
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;

 private:
  mpq_class v_;
};

Rat abs(const Rat& r);

}  // namespace linkstar

template <>
struct std::hash<linkstar::Rat> {
  std::size_t operator()(const linkstar::Rat& r) const noexcept { return r.hash(); }
};
