#include "nilcomplete/local_arith.hpp"

#include <stdexcept>
#include <utility>

namespace nilc {

mpz_class mod_pow2(const mpz_class& x, unsigned m) {
  mpz_class r;
  mpz_fdiv_r_2exp(r.get_mpz_t(), x.get_mpz_t(), m);
  return r;
}

mpz_class invert_odd_mod_pow2(const mpz_class& a, unsigned m) {
  if (mpz_even_p(a.get_mpz_t()))
    throw std::invalid_argument("invert_odd_mod_pow2: even argument");
  mpz_class mod = mpz_class(1) << m;
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t());
  return inv;
}

DyadicLocal::DyadicLocal(mpz_class num, mpz_class den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::invalid_argument("DyadicLocal: zero denominator");
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  if (mpz_even_p(den_.get_mpz_t()))
    throw std::invalid_argument("DyadicLocal: even denominator");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

mpz_class DyadicLocal::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  return q;
}

DyadicLocal DyadicLocal::operator-() const {
  DyadicLocal r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

DyadicLocal DyadicLocal::operator+(const DyadicLocal& o) const {
  return DyadicLocal(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

DyadicLocal DyadicLocal::operator-(const DyadicLocal& o) const {
  return DyadicLocal(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

DyadicLocal DyadicLocal::operator*(const DyadicLocal& o) const {
  return DyadicLocal(num_ * o.num_, den_ * o.den_);
}

DyadicLocal DyadicLocal::operator/(const DyadicLocal& o) const {
  if (o.num_ == 0) throw std::domain_error("DyadicLocal: division by zero");
  mpz_class n = num_ * o.den_;
  mpz_class d = den_ * o.num_;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  n /= g;
  d /= g;
  if (mpz_even_p(d.get_mpz_t()))
    throw std::domain_error("DyadicLocal: quotient leaves Z_(2)");
  return DyadicLocal(n, d);
}

std::string DyadicLocal::str() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

TruncatedTwoAdic::TruncatedTwoAdic(mpz_class value, unsigned precision)
    : residue_(mod_pow2(value, precision)), precision_(precision) {
  if (precision == 0)
    throw std::invalid_argument("TruncatedTwoAdic: precision must be >= 1");
}

TruncatedTwoAdic TruncatedTwoAdic::truncate(unsigned m) const {
  if (m > precision_)
    throw std::invalid_argument("TruncatedTwoAdic::truncate: cannot raise precision");
  return TruncatedTwoAdic(residue_, m);
}

TruncatedTwoAdic TruncatedTwoAdic::operator-() const {
  return TruncatedTwoAdic(-residue_, precision_);
}

TruncatedTwoAdic TruncatedTwoAdic::operator+(const TruncatedTwoAdic& o) const {
  unsigned m = std::min(precision_, o.precision_);
  return TruncatedTwoAdic(residue_ + o.residue_, m);
}

TruncatedTwoAdic TruncatedTwoAdic::operator-(const TruncatedTwoAdic& o) const {
  unsigned m = std::min(precision_, o.precision_);
  return TruncatedTwoAdic(residue_ - o.residue_, m);
}

TruncatedTwoAdic TruncatedTwoAdic::operator*(const TruncatedTwoAdic& o) const {
  unsigned m = std::min(precision_, o.precision_);
  return TruncatedTwoAdic(residue_ * o.residue_, m);
}

TruncatedTwoAdic TruncatedTwoAdic::inverse() const {
  if (!is_unit()) throw std::domain_error("TruncatedTwoAdic: inverse of a non-unit");
  return TruncatedTwoAdic(invert_odd_mod_pow2(residue_, precision_), precision_);
}

std::string TruncatedTwoAdic::str() const {
  return residue_.get_str() + " (mod 2^" + std::to_string(precision_) + ")";
}

bool congruent(const TruncatedTwoAdic& a, const TruncatedTwoAdic& b) {
  unsigned m = std::min(a.precision(), b.precision());
  return mod_pow2(a.residue(), m) == mod_pow2(b.residue(), m);
}

DyadicModOne::DyadicModOne(const DyadicLocal& x) : rep_(x - DyadicLocal(x.floor())) {}

DyadicModOne DyadicModOne::operator-() const { return DyadicModOne(-rep_); }

DyadicModOne DyadicModOne::operator+(const DyadicModOne& o) const {
  return DyadicModOne(rep_ + o.rep_);
}

DyadicModOne DyadicModOne::operator-(const DyadicModOne& o) const {
  return DyadicModOne(rep_ - o.rep_);
}

DyadicModOne DyadicModOne::scale(const mpz_class& w) const {
  return DyadicModOne(rep_ * DyadicLocal(w));
}

TruncatedTwoAdic reduce_mod_power(const DyadicLocal& x, unsigned m) {
  if (m == 0) throw std::invalid_argument("reduce_mod_power: precision must be >= 1");
  mpz_class inv = invert_odd_mod_pow2(x.den(), m);
  return TruncatedTwoAdic(x.num() * inv, m);
}

bool is_unit_square(const TruncatedTwoAdic& a) {
  if (!a.is_unit()) throw std::invalid_argument("is_unit_square: argument is not a unit");
  if (a.precision() < 3)
    throw std::invalid_argument("is_unit_square: precision must be >= 3");
  return mod_pow2(a.residue(), 3) == 1;
}

TruncatedTwoAdic hensel_sqrt(const TruncatedTwoAdic& a) {
  if (a.precision() < 3)
    throw std::invalid_argument("hensel_sqrt: precision must be >= 3");
  if (mod_pow2(a.residue(), 3) != 1)
    throw std::invalid_argument("hensel_sqrt: argument is not == 1 (mod 8)");
  unsigned m = a.precision();
  // Lift x = 1 through x^2 == a (mod 2^{j+1}); the increment at stage j is
  // 0 or 2^{j-1}, so the result stays == 1 (mod 4) and below 2^{m-1}.
  mpz_class x = 1;
  for (unsigned j = 3; j < m; ++j) {
    mpz_class diff = mod_pow2(a.residue() - x * x, j + 1);
    if (diff != 0) x += mpz_class(1) << (j - 1);
  }
  return TruncatedTwoAdic(x, m);
}

DyadicModOne mod_one(const DyadicLocal& x) { return DyadicModOne(x); }

}  // namespace nilc
