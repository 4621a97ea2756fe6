// Free-group computations through the Magnus embedding (truncated
// noncommutative power series), lower-central-series weight, graded images
// in the Lyndon basis of the free Lie ring, Witt ranks, and the induced
// action of an integer matrix on a graded Lie component.
#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilcomplete/intlinalg.hpp"

namespace nilc {

// Display letter for generator index i (x, y, z, w).
char letter_char(int i);

// Freely reduced word in a free group; letters are (generator, +-1).
class FreeWord {
 public:
  FreeWord() = default;
  static FreeWord gen(int i, int exponent = 1);

  const std::vector<std::pair<int, int>>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  int max_generator() const;

  FreeWord inverse() const;
  FreeWord operator*(const FreeWord& o) const;
  FreeWord pow(long e) const;
  // [a, b] = a^{-1} b^{-1} a b
  static FreeWord commutator(const FreeWord& a, const FreeWord& b);
  // [w1, w2, ..., wn] = [[...[w1, w2], ...], wn]
  static FreeWord left_normed(const std::vector<FreeWord>& ws);

  bool operator==(const FreeWord& o) const { return letters_ == o.letters_; }

  std::string str() const;

 private:
  void push(int g, int e);  // with free reduction
  std::vector<std::pair<int, int>> letters_;
};

// Truncated series in noncommuting variables X_0..X_{r-1} over Z, all
// terms of degree > C dropped. Truncation class is capped at 8: storage
// is dense, r^C coefficients per top degree.
class MagnusSeries {
 public:
  MagnusSeries(int rank, int trunc_class);  // zero series
  static MagnusSeries one(int rank, int trunc_class);
  static MagnusSeries generator_image(int i, int rank, int trunc_class);
  static MagnusSeries generator_inverse_image(int i, int rank, int trunc_class);

  int rank() const { return rank_; }
  int trunc_class() const { return trunc_; }

  // Coefficient of the monomial given by a letter sequence (empty = 1).
  const mpz_class& coefficient(const std::vector<int>& word) const;
  const std::vector<mpz_class>& degree_slice(int d) const { return coef_[d]; }
  bool degree_is_zero(int d) const;

  MagnusSeries operator*(const MagnusSeries& o) const;
  bool operator==(const MagnusSeries& o) const {
    return rank_ == o.rank_ && trunc_ == o.trunc_ && coef_ == o.coef_;
  }

 private:
  int rank_, trunc_;
  std::vector<std::vector<mpz_class>> coef_;  // coef_[d][monomial index]
  friend MagnusSeries magnus_embed(const FreeWord&, int, int);
};

MagnusSeries magnus_embed(const FreeWord& w, int rank, int trunc_class);

// Least degree of a nonconstant term of the Magnus expansion = the
// lower-central-series weight; nullopt means ">= C+1".
std::optional<int> lcs_weight(const FreeWord& w, int trunc_class);

// Homogeneous element of the free Lie ring, coefficients over the Lyndon
// words of its degree. Keys are letter strings like "xxy".
struct LiePoly {
  int rank = 0;
  int degree = 0;
  std::map<std::string, mpz_class> coeff;

  LiePoly() = default;
  LiePoly(int r, int n) : rank(r), degree(n) {}

  bool is_zero() const;
  LiePoly operator+(const LiePoly& o) const;
  LiePoly operator-(const LiePoly& o) const;
  LiePoly operator-() const;
  LiePoly scaled(const mpz_class& c) const;
  bool operator==(const LiePoly& o) const;
  std::string str() const;
};

// Lyndon words of length n over r letters, lexicographically ascending.
std::vector<std::string> lyndon_words(int r, int n);
bool is_lyndon(const std::string& w);

// Rank of the degree-n component of the free Lie ring on r generators:
// (1/n) sum_{d|n} mu(d) r^{n/d}.
long witt_rank(int r, int n);

// Degree-n component of w in the Lyndon basis. Requires weight >= n
// (checked); throws std::domain_error if the component fails to be a Lie
// element, which cannot happen under the precondition.
LiePoly graded_image(const FreeWord& w, int n, int r);

// The left-normed bracket [l_0, l_1, ..., l_{k-1}] of generator letters,
// as an element of the degree-k component.
LiePoly left_normed_bracket(const std::vector<int>& letters, int r);

// The group word whose graded image realizes the standard Lyndon bracket.
FreeWord lyndon_bracket_word(const std::string& word);

// Matrix of the degree-n Lie power of a (columns/rows indexed by the
// Lyndon words in ascending order, column convention).
IntMatrix lie_functor_matrix(const IntMatrix& a, int n);

// Same map expressed in an alternative basis of the degree-n component.
// Throws std::domain_error if the given family is not a Z-basis.
IntMatrix lie_functor_matrix_in_basis(const IntMatrix& a, int n,
                                      const std::vector<LiePoly>& basis);

}  // namespace nilc
