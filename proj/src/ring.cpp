#include "freyd/ring.hpp"

namespace freyd {

RingId RingId::residues(const mpz_class& modulus) {
  if (modulus < 2) {
    throw std::invalid_argument("residue ring modulus must be >= 2");
  }
  return RingId(RingKind::residues, modulus);
}

bool RingId::is_field() const {
  switch (kind_) {
    case RingKind::integers:
      return false;
    case RingKind::rationals:
      return true;
    case RingKind::residues:
      return mpz_probab_prime_p(modulus_.get_mpz_t(), 25) != 0;
  }
  return false;
}

std::string RingId::to_string() const {
  switch (kind_) {
    case RingKind::integers:
      return "Z";
    case RingKind::rationals:
      return "Q";
    case RingKind::residues:
      return "Z/" + modulus_.get_str();
  }
  return "?";
}

RingElement::RingElement(RingId ring, const mpz_class& value)
    : ring_(std::move(ring)), num_(value), den_(1) {
  canonicalize();
}

RingElement::RingElement(RingId ring, const mpz_class& num,
                         const mpz_class& den)
    : ring_(std::move(ring)), num_(num), den_(den) {
  if (ring_.kind() != RingKind::rationals && den != 1) {
    throw std::invalid_argument("denominator only meaningful over Q");
  }
  if (den == 0) {
    throw std::invalid_argument("zero denominator");
  }
  canonicalize();
}

void RingElement::canonicalize() {
  switch (ring_.kind()) {
    case RingKind::integers:
      den_ = 1;
      break;
    case RingKind::rationals: {
      if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
      }
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
      if (g > 1) {
        num_ /= g;
        den_ /= g;
      }
      if (num_ == 0) den_ = 1;
      break;
    }
    case RingKind::residues: {
      mpz_fdiv_r(num_.get_mpz_t(), num_.get_mpz_t(),
                 ring_.modulus().get_mpz_t());
      den_ = 1;
      break;
    }
  }
}

void RingElement::require_same_ring(const RingElement& other) const {
  if (ring_ != other.ring_) {
    throw std::invalid_argument("ring mismatch: " + ring_.to_string() +
                                " vs " + other.ring_.to_string());
  }
}

RingElement RingElement::operator+(const RingElement& other) const {
  require_same_ring(other);
  if (ring_.kind() == RingKind::rationals) {
    return RingElement(ring_, num_ * other.den_ + other.num_ * den_,
                       den_ * other.den_);
  }
  return RingElement(ring_, num_ + other.num_);
}

RingElement RingElement::operator-(const RingElement& other) const {
  return *this + (-other);
}

RingElement RingElement::operator*(const RingElement& other) const {
  require_same_ring(other);
  if (ring_.kind() == RingKind::rationals) {
    return RingElement(ring_, num_ * other.num_, den_ * other.den_);
  }
  return RingElement(ring_, num_ * other.num_);
}

RingElement RingElement::operator-() const {
  if (ring_.kind() == RingKind::rationals) {
    return RingElement(ring_, -num_, den_);
  }
  return RingElement(ring_, -num_);
}

bool RingElement::operator==(const RingElement& other) const {
  require_same_ring(other);
  return num_ == other.num_ && den_ == other.den_;
}

bool RingElement::divisible_by(const RingElement& other) const {
  if (is_zero()) return true;
  switch (ring_.kind()) {
    case RingKind::rationals:
      return !other.is_zero();
    case RingKind::integers:
      return !other.is_zero() &&
             mpz_divisible_p(num_.get_mpz_t(), other.num_.get_mpz_t()) != 0;
    case RingKind::residues: {
      // a divisible by b in Z/n iff gcd(b, n) divides a.
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), other.num_.get_mpz_t(),
              ring_.modulus().get_mpz_t());
      return mpz_divisible_p(num_.get_mpz_t(), g.get_mpz_t()) != 0;
    }
  }
  return false;
}

RingElement RingElement::exact_div(const RingElement& other) const {
  require_same_ring(other);
  if (!divisible_by(other)) {
    throw std::domain_error("inexact division");
  }
  switch (ring_.kind()) {
    case RingKind::rationals:
      return RingElement(ring_, num_ * other.den_, den_ * other.num_);
    case RingKind::integers: {
      if (is_zero()) return zero(ring_);
      mpz_class q;
      mpz_divexact(q.get_mpz_t(), num_.get_mpz_t(), other.num_.get_mpz_t());
      return RingElement(ring_, q);
    }
    case RingKind::residues: {
      // Solve q * other = this mod n via the extended gcd.
      const mpz_class& n = ring_.modulus();
      mpz_class g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                 other.num_.get_mpz_t(), n.get_mpz_t());
      mpz_class q = (num_ / g) * s;
      return RingElement(ring_, q);
    }
  }
  throw std::logic_error("unreachable ring kind");
}

std::string RingElement::to_string() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

}  // namespace freyd
