#include "strata/linalg/field.hpp"

#include <charconv>

namespace strata::linalg {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t acc = 1;
  b %= p;
  while (e) {
    if (e & 1) acc = acc * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return acc;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p))
    throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                " is not a prime below 2^31");
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.size() >= 2 && text[0] == 'F') {
    std::uint64_t p = 0;
    auto body = text.substr(1);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec == std::errc() && ptr == body.data() + body.size()) return prime(p);
  }
  throw std::invalid_argument("unknown field descriptor '" + std::string(text) +
                              "' (expected \"Q\" or \"F<p>\")");
}

std::string Field::name() const {
  return is_rational() ? "Q" : "F" + std::to_string(p_);
}

Scalar Field::zero() const {
  Scalar s;
  s.p_ = p_;
  return s;
}

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long n) const {
  Scalar s;
  s.p_ = p_;
  if (is_rational()) {
    s.q_ = mpq_class(mpz_class(std::to_string(n)));
  } else {
    long long m = n % static_cast<long long>(p_);
    if (m < 0) m += static_cast<long long>(p_);
    s.r_ = static_cast<std::uint64_t>(m);
  }
  return s;
}

Scalar Field::from_rational(const mpq_class& q) const {
  Scalar s;
  s.p_ = p_;
  if (is_rational()) {
    s.q_ = q;
    s.q_.canonicalize();
    return s;
  }
  std::uint64_t den = reduce(q.get_den(), p_);
  if (den == 0)
    throw std::domain_error("denominator vanishes in " + name());
  s.r_ = reduce(q.get_num(), p_) * pow_mod(den, p_ - 2, p_) % p_;
  return s;
}

Scalar Field::parse_scalar(std::string_view text) const {
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0)
    throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
  q.canonicalize();
  if (!is_rational() && q.get_den() != 1)
    throw std::invalid_argument("prime-field scalar must be an integer: '" +
                                std::string(text) + "'");
  return from_rational(q);
}

Field Scalar::field() const {
  return p_ == 0 ? Field::rationals() : Field::prime(p_);
}

bool Scalar::is_zero() const { return p_ ? r_ == 0 : sgn(q_) == 0; }

bool Scalar::is_one() const { return p_ ? r_ == 1 : q_ == 1; }

void Scalar::check_same(const Scalar& o) const {
  if (p_ != o.p_)
    throw FieldMismatch("field mismatch: " +
                        (p_ ? "F" + std::to_string(p_) : std::string("Q")) +
                        " vs " +
                        (o.p_ ? "F" + std::to_string(o.p_) : std::string("Q")));
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_)
    s.r_ = r_ ? p_ - r_ : 0;
  else
    s.q_ = -q_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (p_)
    r_ = (r_ + o.r_) % p_;
  else
    q_ += o.q_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (p_)
    r_ = (r_ + p_ - o.r_) % p_;
  else
    q_ -= o.q_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (p_)
    r_ = r_ * o.r_ % p_;
  else
    q_ *= o.q_;
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar s = *this;
  if (p_)
    s.r_ = pow_mod(r_, p_ - 2, p_);
  else
    s.q_ = 1 / q_;
  return s;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return false;
  return a.p_ ? a.r_ == b.r_ : a.q_ == b.q_;
}

std::string Scalar::to_string() const {
  return p_ ? std::to_string(r_) : q_.get_str();
}

}  // namespace strata::linalg
