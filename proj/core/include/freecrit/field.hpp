#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace freecrit {

class Scalar;

/// The coefficient field: a prime field GF(p) with p < 2^61, or the rationals.
class Field {
 public:
  enum class Kind : std::uint8_t { prime, rational };

  /// Throws std::invalid_argument unless p is a prime below 2^61.
  static Field prime(std::uint64_t p);
  static Field rational() noexcept { return Field(Kind::rational, 0); }
  /// Accepts "gfp:101", "gfp", "rational", "q".
  static Field parse(std::string_view spec);

  Kind kind() const noexcept { return kind_; }
  bool is_prime() const noexcept { return kind_ == Kind::prime; }
  /// Zero for the rationals.
  std::uint64_t characteristic() const noexcept { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_mpz(const mpz_class& v) const;
  /// Integer or "num/den" literal, optional leading sign.
  Scalar parse_scalar(std::string_view text) const;

  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  Kind kind_ = Kind::rational;
  std::uint64_t p_ = 0;
};

/// An element of GF(p) (value in [0, p)).
struct Residue {
  std::uint64_t value = 0;
  std::uint64_t modulus = 0;
};

/// A field element. A default-constructed Scalar is the zero of whichever
/// field it is combined with.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(Residue r) : v_(r) {}
  explicit Scalar(mpq_class q) : v_(std::move(q)) { std::get<mpq_class>(v_).canonicalize(); }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const noexcept { return std::holds_alternative<mpq_class>(v_); }
  /// Unbound zero: default constructed, not yet tied to a field.
  bool is_unbound() const noexcept {
    return std::holds_alternative<Residue>(v_) && std::get<Residue>(v_).modulus == 0;
  }

  const Residue& residue() const { return std::get<Residue>(v_); }
  const mpq_class& rational() const { return std::get<mpq_class>(v_); }

  Scalar inverse() const;
  Scalar operator-() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Prime residues print in the symmetric range (-p/2, p/2].
  std::string to_string() const;

 private:
  std::variant<Residue, mpq_class> v_;
};

namespace modular {

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inverse(std::uint64_t a, std::uint64_t p);
bool is_prime(std::uint64_t n);

/// Barrett reduction of 64-bit products for moduli below 2^32; falls back to
/// 128-bit division otherwise.
class Reducer {
 public:
  explicit Reducer(std::uint64_t p)
      : p_(p), small_(p < (std::uint64_t{1} << 32)), m_(small_ ? ~std::uint64_t{0} / p : 0) {}

  std::uint64_t modulus() const noexcept { return p_; }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (!small_) return modular::mul(a, b, p_);
    return reduce(a * b);
  }
  /// (a + b*c) mod p
  std::uint64_t mul_add(std::uint64_t a, std::uint64_t b, std::uint64_t c) const {
    if (!small_) return modular::add(a, modular::mul(b, c, p_), p_);
    return reduce(a + b * c);
  }

 private:
  std::uint64_t reduce(std::uint64_t x) const {
    std::uint64_t q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * m_) >> 64);
    std::uint64_t r = x - q * p_;
    while (r >= p_) r -= p_;
    return r;
  }

  std::uint64_t p_;
  bool small_;
  std::uint64_t m_;
};

}  // namespace modular
}  // namespace freecrit
