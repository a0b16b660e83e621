#include "xlie/field.hpp"

#include <charconv>
#include <stdexcept>

namespace xlie {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

std::uint32_t reduce(long value, std::uint32_t p) {
  long r = value % static_cast<long>(p);
  if (r < 0) {
    r += p;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t reduce(const mpz_class& value, std::uint32_t p) {
  mpz_class r = value % p;
  if (r < 0) {
    r += p;
  }
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // p is prime, so a^(p-2) = a^-1.
  std::uint64_t result = 1;
  std::uint64_t base = a;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1U) {
      result = result * base % p;
    }
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31U) || !is_prime(p)) {
    throw std::invalid_argument("field modulus must be a prime below 2^31, got " +
                                std::to_string(p));
  }
  return Field(Kind::Prime, static_cast<std::uint32_t>(p));
}

Field Field::parse(std::string_view name) {
  if (name == "Q") {
    return rational();
  }
  if (name.size() >= 2 && name.front() == 'F') {
    std::string_view digits = name.substr(1);
    if (!digits.empty() && digits.front() == '_') {
      digits.remove_prefix(1);
    }
    std::uint64_t p = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && end == digits.data() + digits.size() && !digits.empty()) {
      return prime(p);
    }
  }
  throw std::invalid_argument("unknown field '" + std::string(name) + "', expected Q or F<p>");
}

std::string Field::name() const {
  return kind_ == Kind::Rational ? "Q" : "F" + std::to_string(p_);
}

Scalar::Scalar(Field field, long value) : field_(field) {
  if (field.is_finite()) {
    value_ = reduce(value, field.modulus());
  } else {
    value_ = mpq_class(value);
  }
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field) {
  if (field.is_finite()) {
    mpq_class q = value;
    q.canonicalize();
    std::uint32_t num = reduce(q.get_num(), field.modulus());
    std::uint32_t den = reduce(q.get_den(), field.modulus());
    if (den == 0) {
      throw std::domain_error("denominator vanishes in " + field.name());
    }
    value_ = static_cast<std::uint32_t>(std::uint64_t{num} * mod_inverse(den, field.modulus()) %
                                        field.modulus());
  } else {
    mpq_class q = value;
    q.canonicalize();
    value_ = std::move(q);
  }
}

Scalar Scalar::parse(Field field, std::string_view text) {
  std::string s(text);
  if (s.empty()) {
    throw std::invalid_argument("empty scalar");
  }
  if (field.is_finite() && s.find('/') == std::string::npos) {
    mpz_class z;
    if (z.set_str(s, 10) != 0) {
      throw std::invalid_argument("malformed scalar '" + s + "'");
    }
    Scalar out(field);
    out.value_ = reduce(z, field.modulus());
    return out;
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed scalar '" + s + "'");
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator in '" + s + "'");
  }
  return Scalar(field, q);
}

bool Scalar::is_zero() const {
  if (field_.is_finite()) {
    return std::get<std::uint32_t>(value_) == 0;
  }
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_finite()) {
    return std::get<std::uint32_t>(value_) == 1;
  }
  return std::get<mpq_class>(value_) == 1;
}

std::string Scalar::to_string() const {
  if (field_.is_finite()) {
    return std::to_string(std::get<std::uint32_t>(value_));
  }
  const mpq_class& q = std::get<mpq_class>(value_);
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::uint32_t Scalar::residue() const {
  if (!field_.is_finite()) {
    throw std::logic_error("residue() of a rational scalar");
  }
  return std::get<std::uint32_t>(value_);
}

const mpq_class& Scalar::rational() const {
  if (field_.is_finite()) {
    throw std::logic_error("rational() of a prime-field scalar");
  }
  return std::get<mpq_class>(value_);
}

void Scalar::require_same_field(const Scalar& other) const {
  if (!(field_ == other.field_)) {
    throw std::invalid_argument("field mismatch: " + field_.name() + " vs " + other.field_.name());
  }
}

Scalar Scalar::operator-() const {
  Scalar out(*this);
  if (field_.is_finite()) {
    std::uint32_t v = std::get<std::uint32_t>(value_);
    out.value_ = v == 0 ? 0U : field_.modulus() - v;
  } else {
    out.value_ = mpq_class(-std::get<mpq_class>(value_));
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  require_same_field(other);
  if (field_.is_finite()) {
    std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} +
                      std::get<std::uint32_t>(other.value_);
    value_ = static_cast<std::uint32_t>(s % field_.modulus());
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  return *this += -other;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  require_same_field(other);
  if (field_.is_finite()) {
    std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} *
                      std::get<std::uint32_t>(other.value_);
    value_ = static_cast<std::uint32_t>(s % field_.modulus());
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) {
    throw std::domain_error("inverse of zero");
  }
  Scalar out(*this);
  if (field_.is_finite()) {
    out.value_ = mod_inverse(std::get<std::uint32_t>(value_), field_.modulus());
  } else {
    mpq_class inv = 1 / std::get<mpq_class>(value_);
    inv.canonicalize();
    out.value_ = std::move(inv);
  }
  return out;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  require_same_field(other);
  return *this *= other.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

}  // namespace xlie
