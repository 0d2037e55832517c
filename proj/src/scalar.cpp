#include "d2lab/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace d2lab {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("field characteristic must be a prime below 2^31, got " +
                                std::to_string(p));
  Field f;
  f.p_ = p;
  return f;
}

Scalar::Scalar(const mpq_class& v, std::uint32_t modulus) : v_(v), p_(modulus) {
  v_.canonicalize();
  reduce();
}

Scalar Scalar::parse(std::string_view text, Field f) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty scalar");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed scalar '" + s + "'");
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  if (f.kind() == Field::Kind::prime) {
    mpz_class r = q.get_den() % f.characteristic();
    if (r == 0) throw std::invalid_argument("denominator of '" + s + "' vanishes mod p");
  }
  return Scalar(q, f.characteristic());
}

void Scalar::reduce() {
  if (p_ == 0) return;
  if (v_.get_den() == 1) {
    mpz_class r = v_.get_num() % p_;
    if (r < 0) r += p_;
    v_ = r;
    return;
  }
  mpz_class num = v_.get_num() % p_;
  mpz_class den = v_.get_den() % p_;
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p_).get_mpz_t()) == 0)
    throw std::domain_error("denominator not invertible modulo " + std::to_string(p_));
  mpz_class r = (num * inv) % p_;
  if (r < 0) r += p_;
  v_ = r;
}

std::uint32_t Scalar::unify(const Scalar& o) {
  if (o.p_ == p_) return p_;
  if (p_ == 0) {
    p_ = o.p_;
    reduce();
    return p_;
  }
  if (o.p_ == 0) return p_;
  throw std::logic_error("mixing scalars from different prime fields");
}

bool Scalar::is_one() const { return v_ == 1; }

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.p_ != p_ && o.p_ != 0) unify(o);
  if (p_ != 0 && o.p_ == 0) return *this += Scalar(o.v_, p_);
  v_ += o.v_;
  if (p_ != 0 && v_ >= p_) v_ -= p_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (o.p_ != p_ && o.p_ != 0) unify(o);
  if (p_ != 0 && o.p_ == 0) return *this -= Scalar(o.v_, p_);
  v_ -= o.v_;
  if (p_ != 0 && sgn(v_) < 0) v_ += p_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (o.p_ != p_ && o.p_ != 0) unify(o);
  if (p_ != 0 && o.p_ == 0) return *this *= Scalar(o.v_, p_);
  v_ *= o.v_;
  if (p_ != 0) {
    mpz_class r = v_.get_num() % p_;
    v_ = r;
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (p_ == 0 || r.is_zero()) {
    r.v_ = -r.v_;
  } else {
    r.v_ = mpq_class(p_) - r.v_;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar r;
  r.p_ = p_;
  if (p_ == 0) {
    r.v_ = 1 / v_;
    return r;
  }
  mpz_class inv;
  mpz_class num = v_.get_num();
  mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), mpz_class(p_).get_mpz_t());
  r.v_ = inv;
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ == b.p_) return a.v_ == b.v_;
  if (a.p_ != 0 && b.p_ != 0) return false;
  const std::uint32_t p = a.p_ != 0 ? a.p_ : b.p_;
  return Scalar(a.v_, p).v_ == Scalar(b.v_, p).v_;
}

std::string Scalar::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace d2lab
