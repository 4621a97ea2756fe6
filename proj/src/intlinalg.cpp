#include "nilcomplete/intlinalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilc {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative size");
  e_.resize(static_cast<size_t>(rows) * cols);
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  IntMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c)
      throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
    int j = 0;
    for (long v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: size mismatch in *");
  IntMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const mpz_class& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("IntMatrix: size mismatch in +");
  IntMatrix r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("IntMatrix: size mismatch in -");
  IntMatrix r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

IntMatrix IntMatrix::scaled(const mpz_class& c) const {
  IntMatrix r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = c * e_[i];
  return r;
}

IntMatrix IntMatrix::pow(unsigned n) const {
  if (!is_square()) throw std::invalid_argument("IntMatrix::pow: not square");
  IntMatrix acc = identity(rows_);
  for (unsigned i = 0; i < n; ++i) acc = acc * *this;
  return acc;
}

bool IntMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const mpz_class& x) { return x == 0; });
}

void IntMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row(int i, int j, const mpz_class& c) {
  for (int col = 0; col < cols_; ++col) at(i, col) += c * at(j, col);
}

void IntMatrix::add_col(int i, int j, const mpz_class& c) {
  for (int row = 0; row < rows_; ++row) at(row, i) += c * at(row, j);
}

void IntMatrix::negate_row(int i) {
  for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(int i) {
  for (int r = 0; r < rows_; ++r) at(r, i) = -at(r, i);
}

std::vector<mpz_class> IntMatrix::col(int j) const {
  std::vector<mpz_class> v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

IntMatrix IntMatrix::cols_slice(const std::vector<int>& idx) const {
  IntMatrix r(rows_, static_cast<int>(idx.size()));
  for (int j = 0; j < r.cols(); ++j)
    for (int i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
  return r;
}

IntMatrix IntMatrix::hcat(const IntMatrix& o) const {
  if (rows_ != o.rows_) throw std::invalid_argument("IntMatrix::hcat: row mismatch");
  IntMatrix r(rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

mpz_class determinant(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: not square");
  int n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        mpz_class t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

std::vector<mpz_class> SmithForm::diagonal() const {
  std::vector<mpz_class> out;
  int n = std::min(d.rows(), d.cols());
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(d.at(i, i));
  return out;
}

namespace {

// Pivot choice: minimal nonzero absolute value in the trailing submatrix,
// ties broken by scan order.
bool find_pivot(const IntMatrix& a, int t, int& pi, int& pj) {
  bool found = false;
  mpz_class best;
  for (int i = t; i < a.rows(); ++i)
    for (int j = t; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      mpz_class v = abs(a.at(i, j));
      if (!found || v < best) {
        found = true;
        best = v;
        pi = i;
        pj = j;
      }
    }
  return found;
}

// Replace diag entries (a, b) at positions (i, j), i < j, by (g, lcm) via
// unimodular row/col operations mirrored into u and v.
void chain_fix(IntMatrix& d, IntMatrix& u, IntMatrix& v, int i, int j) {
  mpz_class a = d.at(i, i), b = d.at(j, j);
  if (b == 0) return;
  if (a == 0) {  // swap the two diagonal entries
    d.swap_rows(i, j);
    u.swap_rows(i, j);
    d.swap_cols(i, j);
    v.swap_cols(i, j);
    return;
  }
  if (b % a == 0) return;
  mpz_class g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_class ag = a / g, bg = b / g;
  // L = [s t; -b/g a/g], R = [1 -t*b/g; 1 s*a/g]; L diag(a,b) R = diag(g, ab/g).
  auto left = [&](IntMatrix& m) {
    for (int c = 0; c < m.cols(); ++c) {
      mpz_class ri = s * m.at(i, c) + t * m.at(j, c);
      mpz_class rj = -bg * m.at(i, c) + ag * m.at(j, c);
      m.at(i, c) = ri;
      m.at(j, c) = rj;
    }
  };
  auto right = [&](IntMatrix& m) {
    for (int r = 0; r < m.rows(); ++r) {
      mpz_class ci = m.at(r, i) + m.at(r, j);
      mpz_class cj = -t * bg * m.at(r, i) + s * ag * m.at(r, j);
      m.at(r, i) = ci;
      m.at(r, j) = cj;
    }
  };
  left(d);
  left(u);
  right(d);
  right(v);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  int n = std::min(m.rows(), m.cols());

  for (int t = 0; t < n; ++t) {
    int pi, pj;
    if (!find_pivot(d, t, pi, pj)) break;
    d.swap_rows(t, pi);
    u.swap_rows(t, pi);
    d.swap_cols(t, pj);
    v.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (int i = t + 1; i < d.rows(); ++i) {
        if (d.at(i, t) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), d.at(i, t).get_mpz_t(), d.at(t, t).get_mpz_t());
        d.add_row(i, t, -q);
        u.add_row(i, t, -q);
        if (d.at(i, t) != 0) {
          d.swap_rows(t, i);
          u.swap_rows(t, i);
          clean = false;
        }
      }
      for (int j = t + 1; j < d.cols(); ++j) {
        if (d.at(t, j) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), d.at(t, j).get_mpz_t(), d.at(t, t).get_mpz_t());
        d.add_col(j, t, -q);
        v.add_col(j, t, -q);
        if (d.at(t, j) != 0) {
          d.swap_cols(t, j);
          v.swap_cols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // Pull any non-divisible entry of the trailing block into row t.
      bool pulled = false;
      for (int i = t + 1; i < d.rows() && !pulled; ++i)
        for (int j = t + 1; j < d.cols() && !pulled; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            d.add_row(t, i, 1);
            u.add_row(t, i, 1);
            pulled = true;
          }
      if (!pulled) break;
    }
  }

  for (int i = 0; i < n; ++i)
    if (d.at(i, i) < 0) {
      d.negate_row(i);
      u.negate_row(i);
    }

  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (d.at(i + 1, i + 1) != 0 && (d.at(i, i) == 0 || d.at(i + 1, i + 1) % d.at(i, i) != 0)) {
        chain_fix(d, u, v, i, i + 1);
        changed = true;
      }
    }
  }
  for (int i = 0; i < n; ++i)
    if (d.at(i, i) < 0) {
      d.negate_row(i);
      u.negate_row(i);
    }

  return SmithForm{std::move(u), std::move(d), std::move(v)};
}

int rank(const IntMatrix& m) {
  SmithForm s = smith_normal_form(m);
  int r = 0;
  for (const mpz_class& x : s.diagonal())
    if (x != 0) ++r;
  return r;
}

AbelianGroupInvariants cokernel(const IntMatrix& m) {
  SmithForm s = smith_normal_form(m);
  AbelianGroupInvariants inv;
  int nonzero = 0;
  for (const mpz_class& d : s.diagonal()) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) inv.torsion.push_back(d);
  }
  inv.free_rank = m.rows() - nonzero;
  return inv;
}

IntMatrix hnf_columns(const IntMatrix& m) {
  // Column operations only (right-unimodular); echelon by pivot rows.
  IntMatrix h = m;
  int rows = h.rows(), cols = h.cols();
  int lead = 0;  // next column to place a pivot in
  for (int r = 0; r < rows && lead < cols; ++r) {
    // Make all entries of row r in columns >= lead share a single nonzero.
    for (;;) {
      int nz = -1;
      mpz_class best;
      for (int j = lead; j < cols; ++j) {
        if (h.at(r, j) == 0) continue;
        mpz_class v = abs(h.at(r, j));
        if (nz < 0 || v < best) {
          nz = j;
          best = v;
        }
      }
      if (nz < 0) break;
      h.swap_cols(lead, nz);
      bool clean = true;
      for (int j = lead + 1; j < cols; ++j) {
        if (h.at(r, j) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), h.at(r, j).get_mpz_t(), h.at(r, lead).get_mpz_t());
        h.add_col(j, lead, -q);
        if (h.at(r, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h.at(r, lead) == 0) continue;
    if (h.at(r, lead) < 0) h.negate_col(lead);
    // Reduce entries to the left of the pivot into [0, pivot).
    for (int j = 0; j < lead; ++j) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), h.at(r, j).get_mpz_t(), h.at(r, lead).get_mpz_t());
      if (q != 0) h.add_col(j, lead, -q);
    }
    ++lead;
  }
  // Keep the pivot columns only; tail columns are zero.
  std::vector<int> keep;
  for (int j = 0; j < lead; ++j) keep.push_back(j);
  return h.cols_slice(keep);
}

Lattice::Lattice(int ambient, const IntMatrix& generators) : ambient_(ambient) {
  if (generators.cols() > 0 && generators.rows() != ambient)
    throw std::invalid_argument("Lattice: generator row count != ambient rank");
  basis_ = hnf_columns(generators.rows() == ambient ? generators
                                                    : IntMatrix(ambient, 0));
}

Lattice Lattice::zero(int ambient) { return Lattice(ambient, IntMatrix(ambient, 0)); }

Lattice Lattice::full(int ambient) { return Lattice(ambient, IntMatrix::identity(ambient)); }

bool Lattice::contains_vector(const std::vector<mpz_class>& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("Lattice::contains_vector: dimension mismatch");
  std::vector<mpz_class> x = v;
  int col = 0;
  for (int r = 0; r < ambient_ && col < basis_.cols(); ++r) {
    if (basis_.at(r, col) == 0) continue;  // not a pivot row of this column
    mpz_class q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), x[r].get_mpz_t(),
                basis_.at(r, col).get_mpz_t());
    if (rem != 0) return false;
    if (q != 0)
      for (int i = r; i < ambient_; ++i) x[i] -= q * basis_.at(i, col);
    ++col;
  }
  return std::all_of(x.begin(), x.end(), [](const mpz_class& z) { return z == 0; });
}

Lattice kernel(const IntMatrix& m) {
  SmithForm s = smith_normal_form(m);
  std::vector<int> zero_cols;
  int n = std::min(m.rows(), m.cols());
  for (int j = 0; j < m.cols(); ++j) {
    bool is_zero = j >= n || s.d.at(j, j) == 0;
    if (is_zero) zero_cols.push_back(j);
  }
  return Lattice(m.cols(), s.v.cols_slice(zero_cols));
}

bool lattice_contains(const Lattice& a, const Lattice& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("lattice_contains: ambient rank mismatch");
  for (int j = 0; j < a.basis().cols(); ++j)
    if (!b.contains_vector(a.basis().col(j))) return false;
  return true;
}

std::vector<FiltrationOffsets> filtration_equivalent(const std::vector<Lattice>& f,
                                                     const std::vector<Lattice>& g,
                                                     int depth) {
  auto check_descending = [](const std::vector<Lattice>& c, const char* name) {
    for (size_t i = 0; i + 1 < c.size(); ++i)
      if (!lattice_contains(c[i + 1], c[i]))
        throw std::invalid_argument(std::string("filtration_equivalent: chain ") +
                                    name + " is not descending");
  };
  check_descending(f, "F");
  check_descending(g, "G");

  std::vector<FiltrationOffsets> out;
  for (int n = 0; n < depth; ++n) {
    if (n >= static_cast<int>(f.size()) || n >= static_cast<int>(g.size())) break;
    FiltrationOffsets o;
    o.level = n;
    for (size_t j = n; j < f.size(); ++j)
      if (lattice_contains(f[j], g[n])) {
        o.p = static_cast<int>(j) - n;
        break;
      }
    for (size_t j = n; j < g.size(); ++j)
      if (lattice_contains(g[j], f[n])) {
        o.q = static_cast<int>(j) - n;
        break;
      }
    out.push_back(o);
  }
  return out;
}

std::optional<IntMatrix> solve_exact(const IntMatrix& t, const IntMatrix& b) {
  if (t.rows() != b.rows()) throw std::invalid_argument("solve_exact: row mismatch");
  SmithForm s = smith_normal_form(t);
  // t x = b  <=>  d (v^{-1} x) = u b; read off y then x = v y.
  IntMatrix ub = s.u * b;
  int n = std::min(t.rows(), t.cols());
  IntMatrix y(t.cols(), b.cols());
  for (int i = 0; i < t.rows(); ++i) {
    mpz_class di = i < n ? s.d.at(i, i) : mpz_class(0);
    for (int j = 0; j < b.cols(); ++j) {
      if (di == 0) {
        if (ub.at(i, j) != 0) return std::nullopt;
      } else {
        mpz_class q, rem;
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), ub.at(i, j).get_mpz_t(),
                    di.get_mpz_t());
        if (rem != 0) return std::nullopt;
        if (i < t.cols()) y.at(i, j) = q;
      }
    }
  }
  return s.v * y;
}

}  // namespace nilc
