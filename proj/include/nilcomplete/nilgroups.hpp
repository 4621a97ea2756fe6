// The coordinate groups of the torus-bundle pipeline: the free class-2
// group N and its coefficient extensions N (x) R in Mal'cev coordinates
// x^s y^t [x,y]^u, the automorphisms a_k and a'_k, semidirect products
// Z |x H under the right-action convention, lower central series of
// matrix semidirect products, and the b_k^n closed form.
//
// The semidirect product convention lives entirely in SemidirectGroup:
//   (a^n h)(a^{n'} h') = a^{n+n'} (phi^{n'} h) h'.
// Every sign-sensitive identity in the test suites pins this choice.
#pragma once

#include <gmpxx.h>

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nilcomplete/intlinalg.hpp"
#include "nilcomplete/local_arith.hpp"

namespace nilc {

// --- Coefficient domains -------------------------------------------------
//
// A domain provides the scalar type S of the x,y exponents, the type U of
// the central exponent, the cocycle push-down embed(S*S) -> U, and the
// exact halving t(t-1)/2 landing in U.

struct HeisIntDomain {
  using S = mpz_class;
  using U = mpz_class;
  S s_zero() const { return 0; }
  S s_from(const mpz_class& v) const { return v; }
  U u_zero() const { return 0; }
  U u_from(const mpz_class& v) const { return v; }
  S s_add(const S& a, const S& b) const { return a + b; }
  S s_neg(const S& a) const { return -a; }
  S s_scale(const S& a, const mpz_class& w) const { return a * w; }
  U u_add(const U& a, const U& b) const { return a + b; }
  U u_neg(const U& a) const { return -a; }
  U u_scale(const U& a, const mpz_class& w) const { return a * w; }
  U cocycle(const S& t, const S& sp) const { return t * sp; }
  U tchoose2(const S& t) const {
    mpz_class p = t * (t - 1);
    mpz_class h;
    mpz_divexact_ui(h.get_mpz_t(), p.get_mpz_t(), 2);
    return h;
  }
  bool s_eq(const S& a, const S& b) const { return a == b; }
  bool u_eq(const U& a, const U& b) const { return a == b; }
};

struct HeisDyadicDomain {
  using S = DyadicLocal;
  using U = DyadicLocal;
  S s_zero() const { return DyadicLocal(); }
  S s_from(const mpz_class& v) const { return DyadicLocal(v); }
  U u_zero() const { return DyadicLocal(); }
  U u_from(const mpz_class& v) const { return DyadicLocal(v); }
  S s_add(const S& a, const S& b) const { return a + b; }
  S s_neg(const S& a) const { return -a; }
  S s_scale(const S& a, const mpz_class& w) const { return a * DyadicLocal(w); }
  U u_add(const U& a, const U& b) const { return a + b; }
  U u_neg(const U& a) const { return -a; }
  U u_scale(const U& a, const mpz_class& w) const { return a * DyadicLocal(w); }
  U cocycle(const S& t, const S& sp) const { return t * sp; }
  U tchoose2(const S& t) const { return (t * (t - DyadicLocal(1))) / DyadicLocal(2); }
  bool s_eq(const S& a, const S& b) const { return a == b; }
  bool u_eq(const U& a, const U& b) const { return a == b; }
};

// Fiber of the Z-infinity model: exponents in Z_(2), center in Z_(2)/Z.
struct HeisTorusDomain {
  using S = DyadicLocal;
  using U = DyadicModOne;
  S s_zero() const { return DyadicLocal(); }
  S s_from(const mpz_class& v) const { return DyadicLocal(v); }
  U u_zero() const { return DyadicModOne(); }
  U u_from(const mpz_class&) const { return DyadicModOne(); }
  S s_add(const S& a, const S& b) const { return a + b; }
  S s_neg(const S& a) const { return -a; }
  S s_scale(const S& a, const mpz_class& w) const { return a * DyadicLocal(w); }
  U u_add(const U& a, const U& b) const { return a + b; }
  U u_neg(const U& a) const { return -a; }
  U u_scale(const U& a, const mpz_class& w) const { return a.scale(w); }
  U cocycle(const S& t, const S& sp) const { return mod_one(t * sp); }
  U tchoose2(const S& t) const {
    return mod_one((t * (t - DyadicLocal(1))) / DyadicLocal(2));
  }
  bool s_eq(const S& a, const S& b) const { return a == b; }
  bool u_eq(const U& a, const U& b) const { return a == b; }
};

// Finite-stage fiber: s,t tracked mod 2^{st_prec}, u mod 2^{st_prec - 1}.
// The extra bit on s,t is exactly what makes t(t-1)/2 well defined at the
// center's precision.
struct HeisModDomain {
  unsigned st_prec;

  explicit HeisModDomain(unsigned st_precision) : st_prec(st_precision) {
    if (st_precision < 2)
      throw std::invalid_argument("HeisModDomain: need st precision >= 2");
  }
  unsigned u_prec() const { return st_prec - 1; }

  using S = TruncatedTwoAdic;
  using U = TruncatedTwoAdic;
  S s_zero() const { return TruncatedTwoAdic(0, st_prec); }
  S s_from(const mpz_class& v) const { return TruncatedTwoAdic(v, st_prec); }
  U u_zero() const { return TruncatedTwoAdic(0, u_prec()); }
  U u_from(const mpz_class& v) const { return TruncatedTwoAdic(v, u_prec()); }
  S s_add(const S& a, const S& b) const { return a + b; }
  S s_neg(const S& a) const { return -a; }
  S s_scale(const S& a, const mpz_class& w) const {
    return TruncatedTwoAdic(a.residue() * w, a.precision());
  }
  U u_add(const U& a, const U& b) const { return a + b; }
  U u_neg(const U& a) const { return -a; }
  U u_scale(const U& a, const mpz_class& w) const {
    return TruncatedTwoAdic(a.residue() * w, a.precision());
  }
  U cocycle(const S& t, const S& sp) const { return (t * sp).truncate(u_prec()); }
  U tchoose2(const S& t) const {
    mpz_class lift = t.residue();  // canonical lift mod 2^{st_prec}
    mpz_class p = lift * (lift - 1);
    mpz_class h;
    mpz_divexact_ui(h.get_mpz_t(), p.get_mpz_t(), 2);
    return TruncatedTwoAdic(h, u_prec());
  }
  bool s_eq(const S& a, const S& b) const { return a == b; }
  bool u_eq(const U& a, const U& b) const { return a == b; }
};

// --- Heisenberg elements and group operations ----------------------------

template <class D>
struct HeisEl {
  typename D::S s, t;
  typename D::U u;
};

// x^s y^t [x,y]^u with the product
//   (s,t,u)(s',t',u') = (s+s', t+t', u+u'-t*s').
template <class D>
class HeisGroup {
 public:
  using Domain = D;
  using El = HeisEl<D>;

  explicit HeisGroup(D dom) : dom_(std::move(dom)) {}
  const D& domain() const { return dom_; }

  El el(typename D::S s, typename D::S t, typename D::U u) const {
    return El{std::move(s), std::move(t), std::move(u)};
  }
  El identity() const { return El{dom_.s_zero(), dom_.s_zero(), dom_.u_zero()}; }
  El x(const mpz_class& s = 1) const {
    return El{dom_.s_from(s), dom_.s_zero(), dom_.u_zero()};
  }
  El y(const mpz_class& t = 1) const {
    return El{dom_.s_zero(), dom_.s_from(t), dom_.u_zero()};
  }
  El c(const mpz_class& u = 1) const {
    return El{dom_.s_zero(), dom_.s_zero(), dom_.u_from(u)};
  }

  El mul(const El& a, const El& b) const {
    return El{dom_.s_add(a.s, b.s), dom_.s_add(a.t, b.t),
              dom_.u_add(dom_.u_add(a.u, b.u), dom_.u_neg(dom_.cocycle(a.t, b.s)))};
  }
  El inv(const El& a) const {
    return El{dom_.s_neg(a.s), dom_.s_neg(a.t),
              dom_.u_neg(dom_.u_add(a.u, dom_.cocycle(a.t, a.s)))};
  }
  El commutator(const El& a, const El& b) const {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  // (s,t,u)^w = (ws, wt, wu - ts*w(w-1)/2) for any integer w.
  El pow(const El& a, const mpz_class& w) const {
    mpz_class binom = w * (w - 1);
    mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), 2);
    return El{dom_.s_scale(a.s, w), dom_.s_scale(a.t, w),
              dom_.u_add(dom_.u_scale(a.u, w),
                         dom_.u_neg(dom_.u_scale(dom_.cocycle(a.t, a.s), binom)))};
  }
  bool equal(const El& a, const El& b) const {
    return dom_.s_eq(a.s, b.s) && dom_.s_eq(a.t, b.t) && dom_.u_eq(a.u, b.u);
  }

  // a'_k: x -> x^{-1}, y -> x^k y^{-1}, fixing the center pointwise:
  //   (s,t,u) -> (-s+kt, -t, u + k*t(t-1)/2).
  El ak_prime(long k, const El& g) const {
    require_odd(k);
    return El{dom_.s_add(dom_.s_neg(g.s), dom_.s_scale(g.t, k)), dom_.s_neg(g.t),
              dom_.u_add(g.u, dom_.u_scale(dom_.tchoose2(g.t), k))};
  }
  El ak_prime_inv(long k, const El& g) const {
    require_odd(k);
    return El{dom_.s_neg(dom_.s_add(g.s, dom_.s_scale(g.t, k))), dom_.s_neg(g.t),
              dom_.u_add(g.u, dom_.u_neg(dom_.u_scale(dom_.tchoose2(dom_.s_neg(g.t)), k)))};
  }

 private:
  static void require_odd(long k) {
    if (k % 2 == 0) throw std::invalid_argument("a'_k requires odd k");
  }
  D dom_;
};

// Heisenberg fiber with the structure automorphism a'_k, for semidirect use.
template <class D>
class HeisFiber {
 public:
  using El = typename HeisGroup<D>::El;

  HeisFiber(HeisGroup<D> group, long k) : g_(std::move(group)), k_(k) {}
  const HeisGroup<D>& group() const { return g_; }
  long k() const { return k_; }

  El identity() const { return g_.identity(); }
  El mul(const El& a, const El& b) const { return g_.mul(a, b); }
  El inv(const El& a) const { return g_.inv(a); }
  bool equal(const El& a, const El& b) const { return g_.equal(a, b); }
  El twist(long long j, const El& h) const {
    El r = h;
    for (long long i = 0; i < j; ++i) r = g_.ak_prime(k_, r);
    for (long long i = 0; i > j; --i) r = g_.ak_prime_inv(k_, r);
    return r;
  }

 private:
  HeisGroup<D> g_;
  long k_;
};

// (Z/2^m)^2 fiber with a matrix automorphism (for the Ghat model).
class ModVecFiber {
 public:
  using El = std::vector<TruncatedTwoAdic>;

  ModVecFiber(IntMatrix a, unsigned m);
  unsigned precision() const { return m_; }

  El identity() const;
  El from(const std::vector<mpz_class>& v) const;
  El mul(const El& a, const El& b) const;
  El inv(const El& a) const;
  bool equal(const El& a, const El& b) const;
  El twist(long long j, const El& h) const;

 private:
  IntMatrix a_, a_inv_;
  unsigned m_;
};

// Z^s fiber with a unimodular matrix automorphism (exact integers).
class IntVecFiber {
 public:
  using El = std::vector<mpz_class>;

  explicit IntVecFiber(IntMatrix a);

  El identity() const;
  El mul(const El& a, const El& b) const;
  El inv(const El& a) const;
  bool equal(const El& a, const El& b) const;
  El twist(long long j, const El& h) const;

 private:
  IntMatrix a_, a_inv_;
};

// Z |x_phi H with (a^n h)(a^{n'} h') = a^{n+n'} (phi^{n'} h) h'.
template <class F>
class SemidirectGroup {
 public:
  using Fiber = F;
  using FEl = typename F::El;
  struct El {
    long long n;
    FEl h;
  };

  explicit SemidirectGroup(F fiber) : fiber_(std::move(fiber)) {}
  const F& fiber() const { return fiber_; }

  El identity() const { return El{0, fiber_.identity()}; }
  El a(long long n = 1) const { return El{n, fiber_.identity()}; }
  El from_fiber(FEl h) const { return El{0, std::move(h)}; }
  El el(long long n, FEl h) const { return El{n, std::move(h)}; }

  El mul(const El& g1, const El& g2) const {
    return El{g1.n + g2.n, fiber_.mul(fiber_.twist(g2.n, g1.h), g2.h)};
  }
  El inv(const El& g) const {
    return El{-g.n, fiber_.twist(-g.n, fiber_.inv(g.h))};
  }
  El commutator(const El& g1, const El& g2) const {
    return mul(mul(inv(g1), inv(g2)), mul(g1, g2));
  }
  bool equal(const El& g1, const El& g2) const {
    return g1.n == g2.n && fiber_.equal(g1.h, g2.h);
  }

 private:
  F fiber_;
};

// --- Matrices of the family ----------------------------------------------

IntMatrix ak_matrix(long k);                     // [[-1, k], [0, -1]]
IntMatrix bk_matrix(long k);                     // a_k - 1
IntMatrix bk_power_closed_form(long k, int n);   // [[(-2)^n, (-2)^{n-1} n k], [0, (-2)^n]]

// gamma_{n+1}(Z |x_A Z^s) = 0 |x b^n(Z^s) with b = A - 1; requires A in
// GL_s(Z).
Lattice lcs_semidirect_lattice(const IntMatrix& a, int n);

// Evaluates [x, a, ..., a, y] (n copies of a) in the finite-stage model of
// E_k with center precision m and compares with [x,y]^{(-2)^n}.
bool central_identity_check(long k, int n, unsigned m);

// The 2-cocycle alpha((s,t),(s',t')) = -t s' defining N (x) R.
mpz_class cocycle_alpha(const mpz_class& s, const mpz_class& t, const mpz_class& sp,
                        const mpz_class& tp);

// Cocycle identity alpha(g,h) + alpha(g+h,k) = alpha(h,k) + alpha(g,h+k),
// exhaustively over the integer box |coords| <= box.
bool cocycle_identity_exhaustive(long box);

// Same identity over an arbitrary domain at given sample pairs.
template <class D>
bool cocycle_identity_on(const D& dom,
                         const std::vector<std::array<typename D::S, 2>>& samples) {
  auto alpha = [&dom](const std::array<typename D::S, 2>& g,
                      const std::array<typename D::S, 2>& h) {
    return dom.u_neg(dom.cocycle(g[1], h[0]));
  };
  auto add = [&dom](const std::array<typename D::S, 2>& g,
                    const std::array<typename D::S, 2>& h) {
    return std::array<typename D::S, 2>{dom.s_add(g[0], h[0]), dom.s_add(g[1], h[1])};
  };
  for (const auto& g : samples)
    for (const auto& h : samples)
      for (const auto& k : samples) {
        auto lhs = dom.u_add(alpha(g, h), alpha(add(g, h), k));
        auto rhs = dom.u_add(alpha(h, k), alpha(g, add(h, k)));
        if (!dom.u_eq(lhs, rhs)) return false;
      }
  return true;
}

}  // namespace nilc
