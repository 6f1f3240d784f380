#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "hopfcat/error.hpp"

namespace hopfcat {

enum class FieldKind { rational, prime };

struct FieldSpec {
  FieldKind kind = FieldKind::rational;
  std::uint32_t p = 0;

  static FieldSpec rational() { return {}; }

  static FieldSpec prime(std::int64_t modulus) {
    require(modulus >= 2 && modulus < (std::int64_t{1} << 31), ErrorKind::invalid_argument,
            "prime modulus out of range: " + std::to_string(modulus));
    for (std::int64_t d = 2; d * d <= modulus; ++d) {
      require(modulus % d != 0, ErrorKind::invalid_argument,
              "modulus " + std::to_string(modulus) + " is not prime");
    }
    return {FieldKind::prime, static_cast<std::uint32_t>(modulus)};
  }

  [[nodiscard]] std::uint32_t characteristic() const { return kind == FieldKind::prime ? p : 0; }

  [[nodiscard]] std::string str() const {
    return kind == FieldKind::rational ? "rational" : "prime:" + std::to_string(p);
  }

  static FieldSpec parse(std::string_view text) {
    if (text == "rational" || text == "Q") return rational();
    constexpr std::string_view prefix = "prime:";
    if (text.substr(0, prefix.size()) == prefix) {
      std::string digits(text.substr(prefix.size()));
      require(!digits.empty() && digits.size() <= 10 &&
                  digits.find_first_not_of("0123456789") == std::string::npos,
              ErrorKind::parse_error, "bad prime modulus in field '" + std::string(text) + "'");
      return prime(std::stoll(digits));
    }
    fail(ErrorKind::parse_error, "unknown field '" + std::string(text) + "'");
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

namespace detail {

inline bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
}

}  // namespace detail

/// Exact rational number; always canonical (lowest terms, positive
/// denominator). Values whose numerator and denominator fit in 64 bits are
/// kept inline; anything larger lives in an mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : n_(n) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(mpq_class v) { assign(std::move(v)); }

  static Rational from_int(long n, const FieldSpec& spec) {
    require(spec.kind == FieldKind::rational, ErrorKind::field_mismatch,
            "rational scalar requested for field " + spec.str());
    return Rational(n);
  }

  static Rational parse(std::string_view text, const FieldSpec& spec) {
    require(spec.kind == FieldKind::rational, ErrorKind::field_mismatch,
            "rational scalar requested for field " + spec.str());
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    require(detail::is_integer_literal(num) && detail::is_integer_literal(den) && den.front() != '-',
            ErrorKind::parse_error, "bad rational literal '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    require(d != 0, ErrorKind::parse_error, "zero denominator in '" + std::string(text) + "'");
    return Rational(mpq_class(n, d));
  }

  [[nodiscard]] bool is_zero() const { return !big_ && n_ == 0; }
  [[nodiscard]] FieldSpec spec() const { return FieldSpec::rational(); }
  [[nodiscard]] mpq_class value() const { return big_ ? *big_ : to_mpq(); }

  [[nodiscard]] Rational inverse() const {
    require(!is_zero(), ErrorKind::not_invertible, "division by zero");
    if (!big_ && n_ != INT64_MIN) {
      Rational r;
      r.n_ = n_ < 0 ? -d_ : d_;
      r.d_ = n_ < 0 ? -n_ : n_;
      return r;
    }
    return Rational(mpq_class(1 / value()));
  }

  /// "a/b" in lowest terms, or "a" when the denominator is 1.
  [[nodiscard]] std::string str() const {
    if (!big_) return d_ == 1 ? std::to_string(n_) : std::to_string(n_) + "/" + std::to_string(d_);
    return big_->get_den() == 1 ? big_->get_num().get_str() : big_->get_str();
  }

  Rational& operator+=(const Rational& o) { return add(o, false); }
  Rational& operator-=(const Rational& o) { return add(o, true); }

  Rational& operator*=(const Rational& o) {
    if (!big_ && !o.big_) {
      const std::int64_t g1 = gcd64(n_, o.d_), g2 = gcd64(o.n_, d_);
      std::int64_t n = 0, d = 0;
      if (!__builtin_mul_overflow(n_ / g1, o.n_ / g2, &n) && !__builtin_mul_overflow(d_ / g2, o.d_ / g1, &d)) {
        n_ = n;
        d_ = n == 0 ? 1 : d;
        return *this;
      }
    }
    assign(value() * o.value());
    return *this;
  }

  Rational& operator/=(const Rational& o) { return *this *= o.inverse(); }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(0) - a; }
  friend bool operator==(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return a.big_ && b.big_ && *a.big_ == *b.big_;
    return a.n_ == b.n_ && a.d_ == b.d_;
  }

 private:
  std::int64_t n_ = 0;
  std::int64_t d_ = 1;
  std::optional<mpq_class> big_;

  static std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    std::uint64_t x = a < 0 ? 0 - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
    std::uint64_t y = b < 0 ? 0 - static_cast<std::uint64_t>(b) : static_cast<std::uint64_t>(b);
    while (y != 0) x = std::exchange(y, x % y);
    return x == 0 ? 1 : static_cast<std::int64_t>(x);
  }

  [[nodiscard]] mpq_class to_mpq() const {
    mpq_class q;
    mpz_set_si(q.get_num_mpz_t(), n_);
    mpz_set_si(q.get_den_mpz_t(), d_);
    return q;
  }

  void assign(mpq_class v) {
    v.canonicalize();
    if (mpz_fits_slong_p(v.get_num_mpz_t()) && mpz_fits_slong_p(v.get_den_mpz_t())) {
      n_ = mpz_get_si(v.get_num_mpz_t());
      d_ = mpz_get_si(v.get_den_mpz_t());
      big_.reset();
    } else {
      big_ = std::move(v);
    }
  }

  Rational& add(const Rational& o, bool subtract) {
    if (!big_ && !o.big_) {
      std::int64_t n = 0;
      if (d_ == 1 && o.d_ == 1) {
        if (!(subtract ? __builtin_sub_overflow(n_, o.n_, &n) : __builtin_add_overflow(n_, o.n_, &n))) {
          n_ = n;
          return *this;
        }
      } else {
        const std::int64_t g = gcd64(d_, o.d_);
        std::int64_t a = 0, b = 0, d = 0;
        if (!__builtin_mul_overflow(n_, o.d_ / g, &a) && !__builtin_mul_overflow(o.n_, d_ / g, &b) &&
            !(subtract ? __builtin_sub_overflow(a, b, &n) : __builtin_add_overflow(a, b, &n)) &&
            !__builtin_mul_overflow(d_ / g, o.d_, &d)) {
          const std::int64_t h = gcd64(n, d);
          n_ = n / h;
          d_ = n == 0 ? 1 : d / h;
          return *this;
        }
      }
    }
    assign(subtract ? mpq_class(value() - o.value()) : mpq_class(value() + o.value()));
    return *this;
  }
};

/// Residue modulo a prime. A modulus of 0 marks a small integer constant that
/// has not met a bound residue yet; it binds on first mixed operation.
class ModP {
 public:
  ModP() = default;
  ModP(long n) : raw_(n) {}  // NOLINT(google-explicit-constructor)
  ModP(std::int64_t value, std::uint32_t modulus) : raw_(reduce(value, modulus)), p_(modulus) {}

  static ModP from_int(long n, const FieldSpec& spec) {
    require(spec.kind == FieldKind::prime, ErrorKind::field_mismatch,
            "residue requested for field " + spec.str());
    return {n, spec.p};
  }

  static ModP parse(std::string_view text, const FieldSpec& spec) {
    require(spec.kind == FieldKind::prime, ErrorKind::field_mismatch,
            "residue requested for field " + spec.str());
    require(detail::is_integer_literal(text) && text.size() <= 18, ErrorKind::parse_error,
            "bad residue literal '" + std::string(text) + "'");
    return {std::stoll(std::string(text)), spec.p};
  }

  [[nodiscard]] bool is_zero() const { return raw_ == 0; }
  [[nodiscard]] std::uint32_t modulus() const { return p_; }
  [[nodiscard]] std::int64_t raw() const { return raw_; }
  [[nodiscard]] FieldSpec spec() const { return {FieldKind::prime, p_}; }

  [[nodiscard]] ModP inverse() const {
    require(!is_zero(), ErrorKind::not_invertible, "division by zero");
    if (p_ == 0) {
      require(raw_ == 1 || raw_ == -1, ErrorKind::field_mismatch,
              "cannot invert unbound constant " + std::to_string(raw_));
      return *this;
    }
    // extended Euclid on (raw, p)
    std::int64_t a = raw_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
      const std::int64_t q = a / b;
      std::tie(a, b) = std::pair{b, a - q * b};
      std::tie(x0, x1) = std::pair{x1, x0 - q * x1};
    }
    return {x0, p_};
  }

  [[nodiscard]] std::string str() const { return std::to_string(raw_); }

  ModP& operator+=(const ModP& o) { bind(o); raw_ = reduce(raw_ + o.as(p_), p_); return *this; }
  ModP& operator-=(const ModP& o) { bind(o); raw_ = reduce(raw_ - o.as(p_), p_); return *this; }
  ModP& operator*=(const ModP& o) { bind(o); raw_ = reduce(raw_ * o.as(p_), p_); return *this; }
  ModP& operator/=(const ModP& o) { return *this *= o.inverse(); }

  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  friend ModP operator-(const ModP& a) { ModP r; r.p_ = a.p_; r.raw_ = reduce(-a.raw_, a.p_); return r; }

  friend bool operator==(const ModP& a, const ModP& b) {
    const std::uint32_t p = common(a.p_, b.p_);
    return a.as(p) == b.as(p);
  }

 private:
  static std::int64_t reduce(std::int64_t v, std::uint32_t p) {
    if (p == 0) return v;
    v %= static_cast<std::int64_t>(p);
    return v < 0 ? v + p : v;
  }

  static std::uint32_t common(std::uint32_t p, std::uint32_t q) {
    if (p == 0) return q;
    if (q == 0 || p == q) return p;
    fail(ErrorKind::field_mismatch,
         "residues modulo " + std::to_string(p) + " and " + std::to_string(q) + " mixed");
  }

  [[nodiscard]] std::int64_t as(std::uint32_t p) const { return p_ == p ? raw_ : reduce(raw_, p); }

  void bind(const ModP& o) {
    const std::uint32_t p = common(p_, o.p_);
    if (p != p_) {
      raw_ = reduce(raw_, p);
      p_ = p;
    }
  }

  std::int64_t raw_ = 0;
  std::uint32_t p_ = 0;
};

template <class K>
concept ExactField = requires(const K& a, const K& b, const FieldSpec& spec) {
  { a + b } -> std::same_as<K>;
  { a * b } -> std::same_as<K>;
  { a.inverse() } -> std::same_as<K>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.str() } -> std::same_as<std::string>;
  { K::from_int(1, spec) } -> std::same_as<K>;
  { K::parse(std::string_view{}, spec) } -> std::same_as<K>;
};

/// Calls f with a value-initialised scalar of the type matching spec.
template <class F>
decltype(auto) with_field(const FieldSpec& spec, F&& f) {
  if (spec.kind == FieldKind::rational) return f(Rational{});
  return f(ModP{});
}

}  // namespace hopfcat
