// Arithmetic in the localization Z_(2) (rationals with odd denominator),
// truncated 2-adic residues mod 2^m, the quotient Z_(2) mod 1, unit-square
// testing and Hensel square roots.
//
// All types are immutable values; operations are pure.
#pragma once

#include <gmpxx.h>

#include <string>

namespace nilc {

// x mod 2^m, representative in [0, 2^m).
mpz_class mod_pow2(const mpz_class& x, unsigned m);

// Inverse of an odd a mod 2^m. Throws std::invalid_argument if a is even.
mpz_class invert_odd_mod_pow2(const mpz_class& a, unsigned m);

// A rational with odd positive denominator, kept in lowest terms.
// Closed under +, -, *; division is defined exactly when the quotient
// still has odd denominator (divisor a unit, or an exact 2-power split).
class DyadicLocal {
 public:
  DyadicLocal() : num_(0), den_(1) {}
  DyadicLocal(long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  explicit DyadicLocal(mpz_class n) : num_(std::move(n)), den_(1) {}
  DyadicLocal(mpz_class num, mpz_class den);  // throws if den even or zero

  const mpz_class& num() const { return num_; }
  const mpz_class& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  // Unit of Z_(2), i.e. odd numerator.
  bool is_unit() const { return mpz_odd_p(num_.get_mpz_t()) != 0; }

  mpz_class floor() const;

  DyadicLocal operator-() const;
  DyadicLocal operator+(const DyadicLocal& o) const;
  DyadicLocal operator-(const DyadicLocal& o) const;
  DyadicLocal operator*(const DyadicLocal& o) const;
  // Throws std::domain_error if the quotient leaves Z_(2).
  DyadicLocal operator/(const DyadicLocal& o) const;

  bool operator==(const DyadicLocal& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const DyadicLocal& o) const { return !(*this == o); }

  std::string str() const;

 private:
  mpz_class num_;
  mpz_class den_;  // odd, positive; gcd(num, den) = 1
};

// Residue mod 2^precision. Mixing two values truncates to the minimum
// precision; the result records the precision it is valid at.
class TruncatedTwoAdic {
 public:
  TruncatedTwoAdic(mpz_class value, unsigned precision);

  const mpz_class& residue() const { return residue_; }
  unsigned precision() const { return precision_; }
  bool is_unit() const { return mpz_odd_p(residue_.get_mpz_t()) != 0; }
  bool is_zero() const { return residue_ == 0; }

  TruncatedTwoAdic truncate(unsigned m) const;

  TruncatedTwoAdic operator-() const;
  TruncatedTwoAdic operator+(const TruncatedTwoAdic& o) const;
  TruncatedTwoAdic operator-(const TruncatedTwoAdic& o) const;
  TruncatedTwoAdic operator*(const TruncatedTwoAdic& o) const;
  TruncatedTwoAdic inverse() const;  // throws if even

  // Same precision and same residue.
  bool operator==(const TruncatedTwoAdic& o) const {
    return precision_ == o.precision_ && residue_ == o.residue_;
  }
  bool operator!=(const TruncatedTwoAdic& o) const { return !(*this == o); }

  std::string str() const;

 private:
  mpz_class residue_;
  unsigned precision_;
};

// Agreement at the minimum of the two precisions.
bool congruent(const TruncatedTwoAdic& a, const TruncatedTwoAdic& b);

// Element of Z_(2) taken modulo the integers: canonical representative
// lies in [0, 1) with odd denominator.
class DyadicModOne {
 public:
  DyadicModOne() : rep_(0) {}
  explicit DyadicModOne(const DyadicLocal& x);

  const DyadicLocal& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }

  DyadicModOne operator-() const;
  DyadicModOne operator+(const DyadicModOne& o) const;
  DyadicModOne operator-(const DyadicModOne& o) const;
  DyadicModOne scale(const mpz_class& w) const;

  bool operator==(const DyadicModOne& o) const { return rep_ == o.rep_; }
  bool operator!=(const DyadicModOne& o) const { return !(*this == o); }

  std::string str() const { return rep_.str(); }

 private:
  DyadicLocal rep_;
};

// num * den^{-1} mod 2^m; the denominator is odd, hence invertible.
TruncatedTwoAdic reduce_mod_power(const DyadicLocal& x, unsigned m);

// A unit of Z_2 is a square iff it is congruent to 1 mod 8. Requires a
// unit at precision >= 3; throws std::invalid_argument otherwise.
bool is_unit_square(const TruncatedTwoAdic& a);

// Square root of a == 1 (mod 8) at the precision of a, canonicalized to
// the root that is == 1 (mod 4) with bit (precision-1) clear -- the value
// obtained by Hensel lifting from 1. Throws unless a == 1 (mod 8) and
// precision >= 3.
TruncatedTwoAdic hensel_sqrt(const TruncatedTwoAdic& a);

DyadicModOne mod_one(const DyadicLocal& x);

}  // namespace nilc
