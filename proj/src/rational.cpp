#include "oddpath/rational.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace oddpath {
namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();
constexpr __int128 kMin = std::numeric_limits<std::int64_t>::min();

bool fits(__int128 v) { return v >= kMin && v <= kMax; }

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits(num) || !fits(den)) throw std::overflow_error("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::operator-() const {
  if (num_ == std::numeric_limits<std::int64_t>::min()) throw std::overflow_error("rational overflow");
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& other) {
  if (den_ == other.den_) {
    __int128 n = static_cast<__int128>(num_) + other.num_;
    if (den_ == 1) {
      if (!fits(n)) throw std::overflow_error("rational overflow");
      num_ = static_cast<std::int64_t>(n);
      return *this;
    }
    return *this = from_wide(n, den_);
  }
  __int128 n = static_cast<__int128>(num_) * other.den_ + static_cast<__int128>(other.num_) * den_;
  __int128 d = static_cast<__int128>(den_) * other.den_;
  return *this = from_wide(n, d);
}

Rational& Rational::operator-=(const Rational& other) { return *this += -other; }

Rational& Rational::operator*=(const Rational& other) {
  __int128 n = static_cast<__int128>(num_) * other.num_;
  __int128 d = static_cast<__int128>(den_) * other.den_;
  return *this = from_wide(n, d);
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.num_ == 0) throw std::domain_error("division by zero");
  __int128 n = static_cast<__int128>(num_) * other.den_;
  __int128 d = static_cast<__int128>(den_) * other.num_;
  return *this = from_wide(n, d);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  };
  if (text.empty()) return fail();

  auto parse_int = [&](std::string_view s, bool allow_sign) -> __int128 {
    std::size_t i = 0;
    bool neg = false;
    if (allow_sign && i < s.size() && (s[i] == '+' || s[i] == '-')) {
      neg = s[i] == '-';
      ++i;
    }
    if (i == s.size()) fail();
    __int128 v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') fail();
      v = v * 10 + (s[i] - '0');
      if (v > kMax * 10) throw std::overflow_error("number too large: " + std::string(text));
    }
    return neg ? -v : v;
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    __int128 n = parse_int(text.substr(0, slash), true);
    __int128 d = parse_int(text.substr(slash + 1), false);
    if (d == 0) fail();
    return from_wide(n, d);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.remove_prefix(1);
    if (whole.empty() && frac.empty()) fail();
    if (frac.size() > 18) throw std::overflow_error("too many decimal places: " + std::string(text));
    __int128 w = whole.empty() ? 0 : parse_int(whole, false);
    __int128 f = frac.empty() ? 0 : parse_int(frac, false);
    __int128 scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    __int128 n = w * scale + f;
    return from_wide(neg ? -n : n, scale);
  }
  return from_wide(parse_int(text, true), 1);
}

std::string Rational::to_string() const {
  std::string s = std::to_string(num_);
  if (den_ != 1) s += "/" + std::to_string(den_);
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer weight overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer weight overflow");
  return r;
}

ScaledWeights scale_to_integers(std::span<const Rational> weights, std::int64_t headroom) {
  ScaledWeights out;
  for (const Rational& w : weights) {
    std::int64_t g = std::gcd(out.denominator, w.den());
    out.denominator = checked_mul(out.denominator / g, w.den());
  }
  out.values.reserve(weights.size());
  std::int64_t largest = 0;
  for (const Rational& w : weights) {
    std::int64_t v = checked_mul(w.num(), out.denominator / w.den());
    out.values.push_back(v);
    if (v == std::numeric_limits<std::int64_t>::min()) throw std::overflow_error("integer weight overflow");
    largest = std::max(largest, v < 0 ? -v : v);
  }
  // The kernels sum at most `headroom` values (plus small constant factors).
  checked_mul(largest + 1, std::max<std::int64_t>(headroom, 1) * 8);
  return out;
}

}  // namespace oddpath
