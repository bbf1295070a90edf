#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace twistkit {

struct ScalarError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The active base field: the rationals, or a prime field F_p.
/// A computation session fixes one Field; mixing elements of different
/// fields is a usage error and throws.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t prime_modulus() const { return p_; }

  bool operator==(const Field&) const = default;

  std::string to_string() const;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;  // 0 means Q
};

/// An exact field element: a normalized arbitrary-precision rational, or a
/// residue in [0, p).  Immutable value semantics throughout.
class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}  // rational zero

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_int(const Field& f, long n);
  static Scalar from_fraction(const Field& f, long num, long den);
  /// Parses "n" or "n/d" (the latter only over Q).
  static Scalar parse(const Field& f, const std::string& text);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  struct Residue {
    std::uint64_t v;
    std::uint64_t p;
    bool operator==(const Residue&) const = default;
  };

  explicit Scalar(mpq_class q) : v_(std::move(q)) {}
  Scalar(std::uint64_t v, std::uint64_t p) : v_(Residue{v, p}) {}

  const mpq_class& rat() const { return std::get<mpq_class>(v_); }
  const Residue& res() const { return std::get<Residue>(v_); }
  bool is_res() const { return std::holds_alternative<Residue>(v_); }
  void check_same(const Scalar& o) const;

  std::variant<mpq_class, Residue> v_;
};

namespace detail {
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);
bool is_prime(std::uint64_t n);
}  // namespace detail

}  // namespace twistkit
