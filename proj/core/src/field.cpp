#include "freecrit/field.hpp"

#include <stdexcept>

#include "freecrit/errors.hpp"

namespace freecrit {

namespace modular {

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1U) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1U;
  }
  return r;
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("division by zero in GF(" + std::to_string(p) + ")");
  return pow(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // Deterministic for all 64-bit n with these witnesses.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace modular

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 61)) throw std::invalid_argument("prime field modulus must be below 2^61");
  if (!modular::is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  return Field(Kind::prime, p);
}

Field Field::parse(std::string_view spec) {
  if (spec == "rational" || spec == "q" || spec == "Q") return rational();
  if (spec == "gfp") return prime(101);
  if (spec.rfind("gfp:", 0) == 0) {
    std::string digits(spec.substr(4));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("bad field specification '" + std::string(spec) + "'");
    }
    try {
      return prime(std::stoull(digits));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    } catch (const std::out_of_range&) {
      throw ParseError("field modulus out of range");
    }
  }
  throw ParseError("bad field specification '" + std::string(spec) + "' (expected gfp:<p> or rational)");
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const {
  if (kind_ == Kind::rational) return Scalar(mpq_class(static_cast<long>(v)));
  std::int64_t m = static_cast<std::int64_t>(p_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return Scalar(Residue{static_cast<std::uint64_t>(r), p_});
}

Scalar Field::from_mpz(const mpz_class& v) const {
  if (kind_ == Kind::rational) return Scalar(mpq_class(v));
  mpz_class r;
  mpz_class m(std::to_string(p_));
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return Scalar(Residue{std::stoull(r.get_str()), p_});
}

Scalar Field::parse_scalar(std::string_view text) const {
  std::string s(text);
  auto strip = [](std::string& t) {
    auto b = t.find_first_not_of(" \t");
    auto e = t.find_last_not_of(" \t");
    t = b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
  };
  strip(s);
  auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  strip(num);
  strip(den);
  auto valid = [](const std::string& t) {
    std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    return t.size() > start && t.find_first_not_of("0123456789", start) == std::string::npos;
  };
  if (!valid(num) || !valid(den)) throw ParseError("bad scalar literal '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  Scalar dn = from_mpz(d);
  if (dn.is_zero()) throw ParseError("denominator of '" + s + "' vanishes in " + name());
  return from_mpz(n) / dn;
}

std::string Field::name() const {
  return kind_ == Kind::rational ? std::string("rational") : "gfp:" + std::to_string(p_);
}

namespace {

std::uint64_t common_modulus(const Residue& a, const Residue& b) {
  if (a.modulus == 0) return b.modulus;
  if (b.modulus == 0 || a.modulus == b.modulus) return a.modulus;
  throw FieldMismatch("scalars from GF(" + std::to_string(a.modulus) + ") and GF(" + std::to_string(b.modulus) + ")");
}

// Promotes an unbound zero to the kind of the other operand.
template <class Op>
Scalar combine(const Scalar& a, const Scalar& b, Op op) {
  if (a.is_rational() && b.is_rational()) return Scalar(op(a.rational(), b.rational()));
  if (a.is_rational() || b.is_rational()) {
    const Scalar& other = a.is_rational() ? b : a;
    if (!other.is_unbound()) throw FieldMismatch("rational scalar combined with a prime-field scalar");
    mpq_class x = a.is_rational() ? a.rational() : mpq_class(0);
    mpq_class y = b.is_rational() ? b.rational() : mpq_class(0);
    return Scalar(op(x, y));
  }
  std::uint64_t p = common_modulus(a.residue(), b.residue());
  if (p == 0) return Scalar();
  return Scalar(Residue{op(a.residue().value, b.residue().value, p), p});
}

struct AddOp {
  mpq_class operator()(const mpq_class& x, const mpq_class& y) const { return x + y; }
  std::uint64_t operator()(std::uint64_t x, std::uint64_t y, std::uint64_t p) const { return modular::add(x, y, p); }
};
struct SubOp {
  mpq_class operator()(const mpq_class& x, const mpq_class& y) const { return x - y; }
  std::uint64_t operator()(std::uint64_t x, std::uint64_t y, std::uint64_t p) const { return modular::sub(x, y, p); }
};
struct MulOp {
  mpq_class operator()(const mpq_class& x, const mpq_class& y) const { return x * y; }
  std::uint64_t operator()(std::uint64_t x, std::uint64_t y, std::uint64_t p) const { return modular::mul(x, y, p); }
};

}  // namespace

bool Scalar::is_zero() const {
  if (is_rational()) return rational() == 0;
  return residue().value == 0;
}

bool Scalar::is_one() const {
  if (is_rational()) return rational() == 1;
  return residue().modulus != 0 && residue().value == 1 % residue().modulus;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (is_rational()) return Scalar(mpq_class(1) / rational());
  return Scalar(Residue{modular::inverse(residue().value, residue().modulus), residue().modulus});
}

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(mpq_class(-rational()));
  const Residue& r = residue();
  return Scalar(Residue{r.value == 0 ? 0 : r.modulus - r.value, r.modulus});
}

Scalar operator+(const Scalar& a, const Scalar& b) { return combine(a, b, AddOp{}); }
Scalar operator-(const Scalar& a, const Scalar& b) { return combine(a, b, SubOp{}); }
Scalar operator*(const Scalar& a, const Scalar& b) { return combine(a, b, MulOp{}); }
Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_zero() && b.is_zero()) {
    return a.is_unbound() || b.is_unbound() || a.is_rational() == b.is_rational();
  }
  if (a.is_rational() != b.is_rational()) return false;
  if (a.is_rational()) return a.rational() == b.rational();
  return a.residue().value == b.residue().value && a.residue().modulus == b.residue().modulus;
}

std::string Scalar::to_string() const {
  if (is_rational()) return rational().get_str();
  const Residue& r = residue();
  if (r.modulus != 0 && r.value > r.modulus / 2) return "-" + std::to_string(r.modulus - r.value);
  return std::to_string(r.value);
}

}  // namespace freecrit
