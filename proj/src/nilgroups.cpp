#include "nilcomplete/nilgroups.hpp"

namespace nilc {

ModVecFiber::ModVecFiber(IntMatrix a, unsigned m) : a_(std::move(a)), m_(m) {
  if (!a_.is_square()) throw std::invalid_argument("ModVecFiber: matrix not square");
  mpz_class det = determinant(a_);
  if (mpz_odd_p(det.get_mpz_t()) == 0)
    throw std::invalid_argument("ModVecFiber: matrix not invertible mod 2^m");
  // adj(a) * det^{-1} mod 2^m
  int n = a_.rows();
  a_inv_ = IntMatrix(n, n);
  if (n == 2) {
    a_inv_.at(0, 0) = a_.at(1, 1);
    a_inv_.at(0, 1) = -a_.at(0, 1);
    a_inv_.at(1, 0) = -a_.at(1, 0);
    a_inv_.at(1, 1) = a_.at(0, 0);
  } else {
    throw std::invalid_argument("ModVecFiber: only 2x2 actions supported");
  }
  mpz_class det_inv = invert_odd_mod_pow2(det, m_);
  a_inv_ = a_inv_.scaled(det_inv);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a_inv_.at(i, j) = mod_pow2(a_inv_.at(i, j), m_);
}

ModVecFiber::El ModVecFiber::identity() const {
  return El(a_.rows(), TruncatedTwoAdic(0, m_));
}

ModVecFiber::El ModVecFiber::from(const std::vector<mpz_class>& v) const {
  El e;
  e.reserve(v.size());
  for (const mpz_class& x : v) e.emplace_back(x, m_);
  return e;
}

ModVecFiber::El ModVecFiber::mul(const El& a, const El& b) const {
  El r;
  r.reserve(a.size());
  for (size_t i = 0; i < a.size(); ++i) r.push_back(a[i] + b[i]);
  return r;
}

ModVecFiber::El ModVecFiber::inv(const El& a) const {
  El r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(-x);
  return r;
}

bool ModVecFiber::equal(const El& a, const El& b) const { return a == b; }

ModVecFiber::El ModVecFiber::twist(long long j, const El& h) const {
  const IntMatrix& m = j >= 0 ? a_ : a_inv_;
  El cur = h;
  for (long long c = 0; c < std::abs(j); ++c) {
    El next = identity();
    for (int i = 0; i < a_.rows(); ++i) {
      mpz_class acc = 0;
      for (int l = 0; l < a_.cols(); ++l) acc += m.at(i, l) * cur[l].residue();
      next[i] = TruncatedTwoAdic(acc, m_);
    }
    cur = next;
  }
  return cur;
}

IntVecFiber::IntVecFiber(IntMatrix a) : a_(std::move(a)) {
  if (!a_.is_square()) throw std::invalid_argument("IntVecFiber: matrix not square");
  mpz_class det = determinant(a_);
  if (det != 1 && det != -1)
    throw std::invalid_argument("IntVecFiber: matrix not in GL(Z)");
  int n = a_.rows();
  if (n != 2) throw std::invalid_argument("IntVecFiber: only 2x2 actions supported");
  a_inv_ = IntMatrix(n, n);
  a_inv_.at(0, 0) = a_.at(1, 1);
  a_inv_.at(0, 1) = -a_.at(0, 1);
  a_inv_.at(1, 0) = -a_.at(1, 0);
  a_inv_.at(1, 1) = a_.at(0, 0);
  if (det == -1) a_inv_ = -a_inv_;
}

IntVecFiber::El IntVecFiber::identity() const { return El(a_.rows(), mpz_class(0)); }

IntVecFiber::El IntVecFiber::mul(const El& a, const El& b) const {
  El r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVecFiber::El IntVecFiber::inv(const El& a) const {
  El r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

bool IntVecFiber::equal(const El& a, const El& b) const { return a == b; }

IntVecFiber::El IntVecFiber::twist(long long j, const El& h) const {
  const IntMatrix& m = j >= 0 ? a_ : a_inv_;
  El cur = h;
  for (long long c = 0; c < std::abs(j); ++c) {
    El next(cur.size());
    for (int i = 0; i < a_.rows(); ++i) {
      mpz_class acc = 0;
      for (int l = 0; l < a_.cols(); ++l) acc += m.at(i, l) * cur[l];
      next[i] = acc;
    }
    cur = next;
  }
  return cur;
}

IntMatrix ak_matrix(long k) {
  IntMatrix a(2, 2);
  a.at(0, 0) = -1;
  a.at(0, 1) = k;
  a.at(1, 1) = -1;
  return a;
}

IntMatrix bk_matrix(long k) { return ak_matrix(k) - IntMatrix::identity(2); }

IntMatrix bk_power_closed_form(long k, int n) {
  if (k % 2 == 0) throw std::invalid_argument("bk_power_closed_form: k must be odd");
  if (n < 1) throw std::invalid_argument("bk_power_closed_form: n must be >= 1");
  mpz_class m2n;
  mpz_ui_pow_ui(m2n.get_mpz_t(), 2, static_cast<unsigned long>(n));
  if (n % 2 == 1) m2n = -m2n;  // (-2)^n
  mpz_class m2n1;
  mpz_ui_pow_ui(m2n1.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
  if ((n - 1) % 2 == 1) m2n1 = -m2n1;  // (-2)^{n-1}
  IntMatrix b(2, 2);
  b.at(0, 0) = m2n;
  b.at(0, 1) = m2n1 * n * k;
  b.at(1, 1) = m2n;
  return b;
}

Lattice lcs_semidirect_lattice(const IntMatrix& a, int n) {
  if (!a.is_square()) throw std::invalid_argument("lcs_semidirect_lattice: not square");
  if (n < 1) throw std::invalid_argument("lcs_semidirect_lattice: n must be >= 1");
  mpz_class det = determinant(a);
  if (det != 1 && det != -1)
    throw std::invalid_argument("lcs_semidirect_lattice: matrix is singular over Z");
  IntMatrix b = a - IntMatrix::identity(a.rows());
  return Lattice(a.rows(), b.pow(static_cast<unsigned>(n)));
}

bool central_identity_check(long k, int n, unsigned m) {
  if (n < 0) throw std::invalid_argument("central_identity_check: n must be >= 0");
  if (m < 1) throw std::invalid_argument("central_identity_check: precision >= 1");
  using Fiber = HeisFiber<HeisModDomain>;
  HeisGroup<HeisModDomain> h(HeisModDomain(m + 1));
  SemidirectGroup<Fiber> e{Fiber(h, k)};

  auto gx = e.from_fiber(h.x());
  auto ga = e.a();
  auto gy = e.from_fiber(h.y());

  auto c = gx;
  for (int i = 0; i < n; ++i) c = e.commutator(c, ga);
  auto r = e.commutator(c, gy);

  mpz_class expo;
  mpz_ui_pow_ui(expo.get_mpz_t(), 2, static_cast<unsigned long>(n));
  if (n % 2 == 1) expo = -expo;  // (-2)^n
  auto expected = e.from_fiber(h.c(expo));
  return e.equal(r, expected);
}

mpz_class cocycle_alpha(const mpz_class& s, const mpz_class& t, const mpz_class& sp,
                        const mpz_class& tp) {
  (void)s;
  (void)tp;
  return -t * sp;
}

bool cocycle_identity_exhaustive(long box) {
  std::vector<std::array<mpz_class, 2>> pts;
  for (long s = -box; s <= box; ++s)
    for (long t = -box; t <= box; ++t)
      pts.push_back({mpz_class(s), mpz_class(t)});
  return cocycle_identity_on(HeisIntDomain{}, pts);
}

}  // namespace nilc
