#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace hjc {

/// Exact dyadic rational num / 2^exp kept in lowest terms.
///
/// All arithmetic is exact; results whose numerator no longer fits in 64
/// bits, or whose exponent exceeds kMaxExponent, raise DomainError.
class Dyadic {
 public:
  static constexpr int kMaxExponent = 62;

  constexpr Dyadic() = default;
  constexpr Dyadic(std::int64_t integer) : num_(integer) {}  // NOLINT(implicit)

  static Dyadic fraction(std::int64_t num, int exp);
  /// Exact conversion; every finite double is dyadic, but very fine ones
  /// are rejected.
  static Dyadic from_double(double v);
  /// Accepts "num/2^m", "p/q" with q a power of two, plain integers, and
  /// finite decimals that are exactly dyadic ("0.25", "-1.5").
  static Dyadic parse(std::string_view text);

  std::int64_t numerator() const { return num_; }
  int exponent() const { return exp_; }
  bool is_integer() const { return exp_ == 0; }
  double to_double() const;

  std::int64_t floor_int() const;
  std::int64_t ceil_int() const;
  Dyadic floor() const { return Dyadic(floor_int()); }
  Dyadic ceil() const { return Dyadic(ceil_int()); }
  /// x - floor(x), in [0, 1).
  Dyadic frac() const { return *this - floor(); }
  Dyadic abs() const { return num_ < 0 ? -*this : *this; }
  Dyadic half() const { return fraction(num_, exp_ + 1); }

  Dyadic operator-() const;
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
  Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.num_ == b.num_ && a.exp_ == b.exp_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  /// "num/2^m" form, e.g. "3/2^1"; integers print as "4/2^0".
  std::string to_string() const;

 private:
  std::int64_t num_ = 0;
  int exp_ = 0;
};

inline Dyadic min(const Dyadic& a, const Dyadic& b) { return b < a ? b : a; }
inline Dyadic max(const Dyadic& a, const Dyadic& b) { return a < b ? b : a; }

}  // namespace hjc
