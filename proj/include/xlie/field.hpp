#ifndef XLIE_FIELD_HPP_
#define XLIE_FIELD_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace xlie {

// The ground field: the rationals or a prime field F_p with p < 2^31.
class Field {
 public:
  enum class Kind { Rational, Prime };

  static Field rational() { return Field(Kind::Rational, 0); }
  // Throws std::invalid_argument unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);
  // Accepts "Q" or "F<p>" (also "F_<p>").
  static Field parse(std::string_view name);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Prime; }
  std::uint32_t modulus() const { return p_; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

// An exact field element. Rational values are kept in lowest terms with a
// positive denominator; prime-field values are residues in [0, p).
class Scalar {
 public:
  Scalar() : Scalar(Field::rational()) {}
  explicit Scalar(Field field) : Scalar(field, 0) {}
  Scalar(Field field, long value);
  Scalar(Field field, const mpq_class& value);

  static Scalar zero(Field field) { return Scalar(field, 0); }
  static Scalar one(Field field) { return Scalar(field, 1); }
  // "a/b" or "a" over Q; a decimal integer (or "a/b" with b invertible) over F_p.
  static Scalar parse(Field field, std::string_view text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  std::string to_string() const;

  // Residue of a prime-field element; throws over Q.
  std::uint32_t residue() const;
  // Exact rational value; throws over F_p.
  const mpq_class& rational() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  // Throws std::domain_error on zero.
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void require_same_field(const Scalar& other) const;

  Field field_;
  std::variant<std::uint32_t, mpq_class> value_;
};

}  // namespace xlie

#endif  // XLIE_FIELD_HPP_
