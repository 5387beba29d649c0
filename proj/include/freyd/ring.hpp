#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace freyd {

/// Thrown when an exhaustive computation would exceed its configured bound.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class RingKind { integers, rationals, residues };

/// Identifies one of the supported computable rings: Z, Q, or Z/n (n >= 2).
class RingId {
 public:
  static RingId integers() { return RingId(RingKind::integers, 0); }
  static RingId rationals() { return RingId(RingKind::rationals, 0); }
  static RingId residues(const mpz_class& modulus);

  RingKind kind() const { return kind_; }
  const mpz_class& modulus() const { return modulus_; }
  bool is_field() const;

  bool operator==(const RingId& other) const {
    return kind_ == other.kind_ && modulus_ == other.modulus_;
  }
  bool operator!=(const RingId& other) const { return !(*this == other); }

  std::string to_string() const;

 private:
  RingId(RingKind kind, mpz_class modulus)
      : kind_(kind), modulus_(std::move(modulus)) {}

  RingKind kind_;
  mpz_class modulus_;
};

/// An element of a RingId in canonical form: plain integer for Z, reduced
/// fraction with positive denominator for Q, residue in [0, n) for Z/n.
/// Canonical forms make equality a bitwise comparison.
class RingElement {
 public:
  RingElement(RingId ring, const mpz_class& value);
  RingElement(RingId ring, const mpz_class& num, const mpz_class& den);

  static RingElement zero(const RingId& ring) { return RingElement(ring, 0); }
  static RingElement one(const RingId& ring) { return RingElement(ring, 1); }

  const RingId& ring() const { return ring_; }
  const mpz_class& num() const { return num_; }
  const mpz_class& den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }

  RingElement operator+(const RingElement& other) const;
  RingElement operator-(const RingElement& other) const;
  RingElement operator*(const RingElement& other) const;
  RingElement operator-() const;
  bool operator==(const RingElement& other) const;
  bool operator!=(const RingElement& other) const { return !(*this == other); }

  /// Exact division; throws std::domain_error when the quotient does not
  /// exist in the ring.
  RingElement exact_div(const RingElement& other) const;
  /// True when `other` divides this element exactly.
  bool divisible_by(const RingElement& other) const;

  std::string to_string() const;

 private:
  void canonicalize();
  void require_same_ring(const RingElement& other) const;

  RingId ring_;
  mpz_class num_;
  mpz_class den_;
};

}  // namespace freyd
