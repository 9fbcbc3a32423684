#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "lham/error.hpp"

namespace lham {

// Exact non-negative-denominator fraction. Comparisons cross-multiply in 128 bits,
// so no floating point is ever involved in a threshold check.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t num) : num_(num), den_(1) {}  // NOLINT
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw InputError("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  /// Accepts "p", "p/q" or a plain decimal such as "0.05". Throws InputError.
  static Rational parse(const std::string& text) {
    try {
      std::size_t used = 0;
      if (const auto slash = text.find('/'); slash != std::string::npos) {
        const std::int64_t p = std::stoll(text.substr(0, slash), &used);
        if (used != slash) throw InputError("bad fraction");
        const std::string rest = text.substr(slash + 1);
        const std::int64_t q = std::stoll(rest, &used);
        if (used != rest.size()) throw InputError("bad fraction");
        return {p, q};
      }
      const auto dot = text.find('.');
      const std::string whole = text.substr(0, dot);
      const std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);
      if (frac.size() > 15 || frac.find_first_not_of("0123456789") != std::string::npos) {
        throw InputError("bad decimal");
      }
      std::int64_t scale = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
      const std::int64_t w = whole.empty() || whole == "-" ? 0 : std::stoll(whole, &used);
      if (!whole.empty() && whole != "-" && used != whole.size()) throw InputError("bad decimal");
      const std::int64_t f = frac.empty() ? 0 : std::stoll(frac);
      const bool negative = !whole.empty() && whole[0] == '-';
      return {w * scale + (negative ? -f : f), scale};
    } catch (const std::logic_error&) {
      throw InputError("cannot parse '" + text + "' as a rational number");
    } catch (const InputError&) {
      throw InputError("cannot parse '" + text + "' as a rational number");
    }
  }

  [[nodiscard]] constexpr std::int64_t num() const { return num_; }
  [[nodiscard]] constexpr std::int64_t den() const { return den_; }
  [[nodiscard]] double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  [[nodiscard]] std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rational operator*(const Rational& a, const Rational& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend Rational operator+(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace lham
