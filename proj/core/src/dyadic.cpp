#include "hjconvex/dyadic.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <limits>

#include "hjconvex/error.hpp"

namespace hjc {
namespace {

__extension__ typedef __int128 i128;

Dyadic make_checked(i128 num, int exp) {
  while (exp > 0 && (num & 1) == 0) {
    num >>= 1;
    --exp;
  }
  if (num == 0) exp = 0;
  if (num > std::numeric_limits<std::int64_t>::max() ||
      num < std::numeric_limits<std::int64_t>::min())
    throw DomainError("dyadic numerator overflow");
  if (exp > Dyadic::kMaxExponent) throw DomainError("dyadic exponent too large");
  return Dyadic::fraction(static_cast<std::int64_t>(num), exp);
}

// Aligns both numerators to the larger exponent.
int align(const Dyadic& a, const Dyadic& b, i128& na, i128& nb) {
  const int e = std::max(a.exponent(), b.exponent());
  na = static_cast<i128>(a.numerator()) << (e - a.exponent());
  nb = static_cast<i128>(b.numerator()) << (e - b.exponent());
  return e;
}

}  // namespace

Dyadic Dyadic::fraction(std::int64_t num, int exp) {
  if (exp < 0) {
    if (exp < -62) throw DomainError("dyadic exponent out of range");
    i128 scaled = static_cast<i128>(num) << (-exp);
    if (scaled > std::numeric_limits<std::int64_t>::max() ||
        scaled < std::numeric_limits<std::int64_t>::min())
      throw DomainError("dyadic numerator overflow");
    num = static_cast<std::int64_t>(scaled);
    exp = 0;
  }
  if (num == 0) exp = 0;
  if (exp > 0 && num != 0) {
    const int tz = std::countr_zero(static_cast<std::uint64_t>(num));
    const int shift = std::min(tz, exp);
    num >>= shift;
    exp -= shift;
  }
  if (exp > kMaxExponent) throw DomainError("dyadic exponent too large");
  Dyadic d;
  d.num_ = num;
  d.exp_ = exp;
  return d;
}

Dyadic Dyadic::from_double(double v) {
  if (!std::isfinite(v)) throw DomainError("non-finite value is not dyadic");
  if (v == 0.0) return Dyadic();
  int e = 0;
  const double m = std::frexp(v, &e);  // v = m * 2^e, 0.5 <= |m| < 1
  const auto mant = static_cast<std::int64_t>(std::ldexp(m, 53));
  return fraction(mant, 53 - e);
}

Dyadic Dyadic::parse(std::string_view text) {
  auto fail = [&]() -> Dyadic {
    throw DomainError("cannot parse dyadic from '" + std::string(text) + "'");
  };
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) return fail();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t num = 0;
    int exp = 0;
    auto head = text.substr(0, slash);
    auto tail = text.substr(slash + 1);
    auto r1 = std::from_chars(head.data(), head.data() + head.size(), num);
    if (r1.ec != std::errc() || r1.ptr != head.data() + head.size()) return fail();
    if (tail.size() >= 3 && tail[0] == '2' && tail[1] == '^') {
      tail.remove_prefix(2);
      auto r2 = std::from_chars(tail.data(), tail.data() + tail.size(), exp);
      if (r2.ec != std::errc() || r2.ptr != tail.data() + tail.size()) return fail();
      return fraction(num, exp);
    }
    // Plain "p/q" with q a power of two.
    std::int64_t den = 0;
    auto r2 = std::from_chars(tail.data(), tail.data() + tail.size(), den);
    if (r2.ec != std::errc() || r2.ptr != tail.data() + tail.size()) return fail();
    if (den <= 0 || (den & (den - 1)) != 0) return fail();
    while (den > 1) {
      den >>= 1;
      ++exp;
    }
    return fraction(num, exp);
  }
  std::int64_t integer = 0;
  auto r = std::from_chars(text.data(), text.data() + text.size(), integer);
  if (r.ec == std::errc() && r.ptr == text.data() + text.size()) return Dyadic(integer);
  double v = 0.0;
  auto rd = std::from_chars(text.data(), text.data() + text.size(), v);
  if (rd.ec != std::errc() || rd.ptr != text.data() + text.size()) return fail();
  Dyadic d = from_double(v);
  // Reject decimals such as 0.1 that only round to a dyadic.
  if (d.exponent() > 30) return fail();
  return d;
}

double Dyadic::to_double() const { return std::ldexp(static_cast<double>(num_), -exp_); }

std::int64_t Dyadic::floor_int() const {
  if (exp_ == 0) return num_;
  return num_ >> exp_;  // arithmetic shift floors for negatives
}

std::int64_t Dyadic::ceil_int() const {
  if (exp_ == 0) return num_;
  return floor_int() + 1;
}

Dyadic Dyadic::operator-() const {
  if (num_ == std::numeric_limits<std::int64_t>::min()) throw DomainError("dyadic overflow");
  return fraction(-num_, exp_);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  i128 na, nb;
  const int e = align(a, b, na, nb);
  return make_checked(na + nb, e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
  i128 na, nb;
  const int e = align(a, b, na, nb);
  return make_checked(na - nb, e);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return make_checked(static_cast<i128>(a.num_) * b.num_, a.exp_ + b.exp_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  i128 na, nb;
  align(a, b, na, nb);
  if (na < nb) return std::strong_ordering::less;
  if (na > nb) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Dyadic::to_string() const {
  return std::to_string(num_) + "/2^" + std::to_string(exp_);
}

}  // namespace hjc
