#include "twistkit/scalar.hpp"

namespace twistkit {

namespace detail {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw ScalarError("division by zero in F_p");
  // extended Euclid on (a, p)
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(p),
               newr = static_cast<std::int64_t>(a);
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw ScalarError("non-invertible residue");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace detail

Field Field::prime(std::uint64_t p) {
  if (!detail::is_prime(p)) throw ScalarError("modulus is not prime");
  if (p >= (1ull << 62)) throw ScalarError("prime modulus too large");
  return Field(p);
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "Fp " + std::to_string(p_);
}

Scalar Scalar::zero(const Field& f) {
  return f.is_rational() ? Scalar(mpq_class(0))
                         : Scalar(0, f.prime_modulus());
}

Scalar Scalar::one(const Field& f) {
  return f.is_rational() ? Scalar(mpq_class(1))
                         : Scalar(1, f.prime_modulus());
}

Scalar Scalar::from_int(const Field& f, long n) {
  if (f.is_rational()) return Scalar(mpq_class(n));
  const std::uint64_t p = f.prime_modulus();
  std::int64_t r = n % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  return Scalar(static_cast<std::uint64_t>(r), p);
}

Scalar Scalar::from_fraction(const Field& f, long num, long den) {
  if (den == 0) throw ScalarError("zero denominator");
  if (f.is_rational()) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
  }
  return from_int(f, num) / from_int(f, den);
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos)
      return from_int(f, std::stol(text));
    long num = std::stol(text.substr(0, slash));
    long den = std::stol(text.substr(slash + 1));
    return from_fraction(f, num, den);
  } catch (const std::invalid_argument&) {
    throw ScalarError("malformed scalar '" + text + "'");
  } catch (const std::out_of_range&) {
    throw ScalarError("scalar literal out of range '" + text + "'");
  }
}

Field Scalar::field() const {
  return is_res() ? Field::prime(res().p) : Field::rationals();
}

bool Scalar::is_zero() const {
  return is_res() ? res().v == 0 : rat() == 0;
}

bool Scalar::is_one() const {
  return is_res() ? res().v == 1 : rat() == 1;
}

void Scalar::check_same(const Scalar& o) const {
  if (is_res() != o.is_res() || (is_res() && res().p != o.res().p))
    throw ScalarError("mixed-field scalar arithmetic");
}

Scalar Scalar::operator+(const Scalar& o) const {
  // a default-constructed Scalar is the universal additive identity:
  // map-based accumulators start from it in either field
  if (!is_res() && o.is_res() && rat() == 0) return o;
  if (is_res() && !o.is_res() && o.rat() == 0) return *this;
  check_same(o);
  if (is_res()) {
    std::uint64_t s = res().v + o.res().v;
    if (s >= res().p) s -= res().p;
    return Scalar(s, res().p);
  }
  return Scalar(mpq_class(rat() + o.rat()));
}

Scalar Scalar::operator-(const Scalar& o) const {
  if (!is_res() && o.is_res() && rat() == 0) return -o;
  if (is_res() && !o.is_res() && o.rat() == 0) return *this;
  check_same(o);
  if (is_res()) {
    std::uint64_t s = res().v + res().p - o.res().v;
    if (s >= res().p) s -= res().p;
    return Scalar(s, res().p);
  }
  return Scalar(mpq_class(rat() - o.rat()));
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  if (is_res())
    return Scalar(detail::mulmod(res().v, o.res().v, res().p), res().p);
  return Scalar(mpq_class(rat() * o.rat()));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  if (is_res())
    return Scalar(res().v == 0 ? 0 : res().p - res().v, res().p);
  return Scalar(mpq_class(-rat()));
}

Scalar Scalar::inverse() const {
  if (is_res())
    return Scalar(detail::invmod(res().v, res().p), res().p);
  if (rat() == 0) throw ScalarError("division by zero");
  return Scalar(mpq_class(1 / rat()));
}

bool Scalar::operator==(const Scalar& o) const {
  if (is_res() != o.is_res()) return false;
  if (is_res()) return res() == o.res();
  return rat() == o.rat();
}

std::string Scalar::to_string() const {
  if (is_res()) return std::to_string(res().v);
  return rat().get_str();
}

}  // namespace twistkit
