#pragma once

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace gramholes {

// Arbitrary-precision signed integer.
//
// Values in [-2^62, 2^62) are stored inline; anything larger lives in a
// heap-allocated mpz_t. The representation is always normalized, so two
// equal values have identical storage kind. One machine word per value keeps
// polynomial term arrays compact.
class Int {
 public:
  Int() noexcept = default;
  Int(long long v) { assign_si(v); }  // NOLINT(google-explicit-constructor)
  Int(int v) : Int(static_cast<long long>(v)) {}  // NOLINT
  Int(long v) : Int(static_cast<long long>(v)) {}  // NOLINT
  explicit Int(const mpz_t v) { assign_mpz(v); }

  Int(const Int& o) { copy_from(o); }
  Int(Int&& o) noexcept : raw_(std::exchange(o.raw_, 0)) {}
  Int& operator=(const Int& o) {
    if (this != &o) {
      release();
      copy_from(o);
    }
    return *this;
  }
  Int& operator=(Int&& o) noexcept {
    std::swap(raw_, o.raw_);
    return *this;
  }
  ~Int() { release(); }

  // Parses an optionally signed decimal integer; throws std::invalid_argument.
  static Int parse(std::string_view text);
  std::string to_string() const;

  bool is_zero() const noexcept { return raw_ == 0; }
  bool is_one() const noexcept { return raw_ == 2; }
  int sign() const noexcept;
  bool is_small() const noexcept { return (raw_ & 1) == 0; }
  bool fits_int64() const noexcept;
  std::int64_t to_int64() const;  // throws std::overflow_error
  // Nonnegative residue modulo p (p > 0).
  std::uint64_t mod(std::uint64_t p) const;
  void to_mpz(mpz_t out) const;

  Int operator-() const;
  Int& operator+=(const Int& o);
  Int& operator-=(const Int& o);
  Int& operator*=(const Int& o);
  void negate();
  // *this += a * b
  void add_mul(const Int& a, const Int& b);
  // *this -= a * b
  void sub_mul(const Int& a, const Int& b);

  // Exact quotient; caller guarantees divisibility.
  Int div_exact(const Int& d) const;
  bool divisible_by(const Int& d) const;
  Int abs() const { return sign() < 0 ? -*this : *this; }
  Int pow(unsigned e) const;

  friend Int operator+(Int a, const Int& b) { return a += b; }
  friend Int operator-(Int a, const Int& b) { return a -= b; }
  friend Int operator*(Int a, const Int& b) { return a *= b; }

  friend bool operator==(const Int& a, const Int& b) noexcept;
  friend std::strong_ordering operator<=>(const Int& a, const Int& b) noexcept;

  friend std::ostream& operator<<(std::ostream& os, const Int& v);

 private:
  static constexpr std::int64_t kSmallMax = (std::int64_t{1} << 62) - 1;
  static constexpr std::int64_t kSmallMin = -(std::int64_t{1} << 62);

  std::int64_t small() const noexcept { return raw_ >> 1; }
  mpz_ptr big() const noexcept {
    return reinterpret_cast<mpz_ptr>(static_cast<std::uintptr_t>(raw_) & ~std::uintptr_t{1});
  }
  mpz_ptr make_big();  // converts storage to big, preserving value
  void assign_si(std::int64_t v);
  void assign_mpz(mpz_srcptr v);
  void set_small(std::int64_t v) noexcept {
    release();
    raw_ = static_cast<std::int64_t>(static_cast<std::uint64_t>(v) << 1);
  }
  void normalize();
  void copy_from(const Int& o);
  void release() noexcept;

  std::int64_t raw_ = 0;  // even: value << 1, odd: mpz_ptr | 1
};

}  // namespace gramholes
