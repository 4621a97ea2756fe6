// Integer matrix normal forms (Hermite, Smith), kernels and cokernels,
// invariant factors of finitely generated abelian groups, and lattice
// containment / filtration comparison.
//
// Entries are arbitrary-precision throughout; all functions are pure.
#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <vector>

namespace nilc {

class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols);
  static IntMatrix identity(int n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  mpz_class& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const mpz_class& at(int i, int j) const {
    return e_[static_cast<size_t>(i) * cols_ + j];
  }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator-() const;
  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  IntMatrix transpose() const;
  IntMatrix scaled(const mpz_class& c) const;
  IntMatrix pow(unsigned n) const;  // square matrices
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  // row i += c * row j / col analog
  void add_row(int i, int j, const mpz_class& c);
  void add_col(int i, int j, const mpz_class& c);
  void negate_row(int i);
  void negate_col(int i);

  std::vector<mpz_class> col(int j) const;
  IntMatrix cols_slice(const std::vector<int>& idx) const;
  // Horizontal concatenation [this | o] (same row count).
  IntMatrix hcat(const IntMatrix& o) const;

 private:
  int rows_, cols_;
  std::vector<mpz_class> e_;  // row-major
};

// Exact determinant (Bareiss fraction-free elimination).
mpz_class determinant(const IntMatrix& m);

struct SmithForm {
  IntMatrix u, d, v;  // u*m*v = d; u, v unimodular; d diagonal, d1 | d2 | ...
  std::vector<mpz_class> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

int rank(const IntMatrix& m);

// Invariant-factor decomposition Z^free_rank + Z/d1 + ... with d1 | d2 | ...
// and every di > 1.
struct AbelianGroupInvariants {
  std::vector<mpz_class> torsion;
  int free_rank = 0;

  bool operator==(const AbelianGroupInvariants& o) const {
    return torsion == o.torsion && free_rank == o.free_rank;
  }
  bool operator!=(const AbelianGroupInvariants& o) const { return !(*this == o); }
  bool is_trivial() const { return torsion.empty() && free_rank == 0; }
};

// Invariant factors of Z^rows / M Z^cols.
AbelianGroupInvariants cokernel(const IntMatrix& m);

// Canonical column Hermite form of the column lattice of m: pivot rows
// strictly increasing, pivots positive, entries left of a pivot reduced
// into [0, pivot); zero columns dropped.
IntMatrix hnf_columns(const IntMatrix& m);

// Subgroup of Z^ambient generated by the columns of a matrix, stored in
// column Hermite normal form.
class Lattice {
 public:
  Lattice(int ambient, const IntMatrix& generators);
  static Lattice zero(int ambient);
  static Lattice full(int ambient);

  int ambient() const { return ambient_; }
  int rank() const { return basis_.cols(); }
  const IntMatrix& basis() const { return basis_; }

  bool contains_vector(const std::vector<mpz_class>& v) const;
  bool operator==(const Lattice& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Lattice& o) const { return !(*this == o); }

 private:
  int ambient_;
  IntMatrix basis_;
};

// Basis of the integer kernel of m, as a lattice in Z^cols.
Lattice kernel(const IntMatrix& m);

// a as a subgroup of b.
bool lattice_contains(const Lattice& a, const Lattice& b);

struct FiltrationOffsets {
  int level = 0;                 // index n into the chains
  std::optional<int> p;          // least p with F[n+p] contained in G[n]
  std::optional<int> q;          // least q with G[n+q] contained in F[n]
};

// Per-level interleaving offsets of two descending chains of lattices.
// Throws std::invalid_argument if either chain fails to be descending.
std::vector<FiltrationOffsets> filtration_equivalent(const std::vector<Lattice>& f,
                                                     const std::vector<Lattice>& g,
                                                     int depth);

// Exact solve t*x = b over the integers (x unique when t is nonsingular);
// nullopt when no integer solution exists.
std::optional<IntMatrix> solve_exact(const IntMatrix& t, const IntMatrix& b);

}  // namespace nilc
