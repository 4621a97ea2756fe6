// The invariant pipeline: H1 of finite presentations, H2 of the central
// extensions E_k via the degree-3 Lie action, Baer invariants of free
// nilpotent groups through Hopf's formula, transition-map triviality,
// inverse-tower lim^1 checks, the completion models, and explicit
// gamma_omega witnesses in the Z-infinity model.
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "nilcomplete/freelie.hpp"
#include "nilcomplete/intlinalg.hpp"
#include "nilcomplete/nilgroups.hpp"

namespace nilc {

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<FreeWord> relators;
};

// G_k = Z |x_{a_k} Z^2 = <a,x,y | [x,y], x^a x, y^a (x^k y^{-1})^{-1}>.
GroupPresentation gk_presentation(long k);
// E_k = <a,x,y | x^a x, y^a (x^k y^{-1})^{-1}, [x,y,y], [x,y,x]>.
GroupPresentation ek_presentation(long k);

// Exponent-sum matrix of the relators (rows: generators, cols: relators).
IntMatrix exponent_sum_matrix(const GroupPresentation& p);

// Abelianization: cokernel of the exponent-sum matrix.
AbelianGroupInvariants h1_presentation(const GroupPresentation& p);

struct H2Report {
  AbelianGroupInvariants h2;            // coinvariants of the degree-3 action
  IntMatrix action_on_h2n;              // in the basis ([x,y,x], [x,y,y])
  AbelianGroupInvariants h1n_invariants;  // kernel of b_k acting on H1 N
};

// H2(E_k) via the five-term pipeline: the degree-3 Lie power of the
// abelianized monodromy acts on H2 N by a_k, the invariants end vanishes,
// and the coinvariants are Z/4. Throws std::invalid_argument for even k
// and std::domain_error("extension ambiguous") if the invariants term is
// nonzero.
H2Report h2_torus_extension(long k);

// The paper-ordered basis ([x,y,x], [x,y,y]) of the degree-3 component.
std::vector<LiePoly> h2n_basis();

// Baer invariant M_n of the free nilpotent group of rank r and class c:
// free abelian of rank sum_{i=max(c,n)+1}^{n+c} witt_rank(r, i).
// Requires n + c <= 8 (the truncation bound of the Magnus machinery).
AbelianGroupInvariants baer_free_nilpotent(int r, int c, int n);

// Whether the inclusion-induced map M_{n_from} -> M_{n_to} vanishes.
bool baer_transition_is_zero(int r, int c, int n_from, int n_to);
// The c-step transition M_{n+c} -> M_n (always zero for these groups).
bool baer_transition_trivial(int r, int c, int n);
// Rank of the image of M_{n_from} -> M_{n_to}.
long baer_transition_image_rank(int r, int c, int n_from, int n_to);

// Inverse tower of finitely presented abelian groups. Level i is
// Z^{generators} modulo the column lattice of `relations`; maps[i] sends
// level i+1 generators into level i.
struct TowerLevel {
  int generators = 0;
  IntMatrix relations;
};

struct Tower {
  std::vector<TowerLevel> levels;
  std::vector<IntMatrix> maps;

  void validate() const;  // throws on dimension mismatch
  AbelianGroupInvariants invariants_at(int i) const;
};

enum class Lim1Verdict { Zero, Unknown };

// Mittag-Leffler detection: "Zero" iff at every level the images of the
// composite maps stabilize strictly inside the given finite window. A
// finite tower can never certify nonvanishing, hence "Unknown".
Lim1Verdict lim1_mittag_leffler(const Tower& t);

// The graded model of the Baer tower {M_n} of the free nilpotent group,
// with the inclusion-induced connecting maps.
Tower baer_tower_free_nilpotent(int r, int c, int levels);

// --- Completion models ----------------------------------------------------

using GhatModel = SemidirectGroup<ModVecFiber>;
using EhatModel = SemidirectGroup<HeisFiber<HeisModDomain>>;
using ZinfModel = SemidirectGroup<HeisFiber<HeisTorusDomain>>;
using NDyadicGroup = HeisGroup<HeisDyadicDomain>;

// Ghat(k, m): Z |x_{a_k} (Z/2^m)^2.
GhatModel make_ghat(long k, unsigned m);
// Ehat(k, m): Z |x_{a'_k} (N with s,t mod 2^{m+1} and u mod 2^m).
EhatModel make_ehat(long k, unsigned m);
// Zinf(k): Z |x_{a'_k} N with exact Z_(2) exponents and center in Z_(2)/Z.
ZinfModel make_zinf(long k);

// Projection Ehat(k, m) -> Ghat(k, m+1) forgetting the center.
GhatModel::El project_to_ghat(const GhatModel& target, const EhatModel::El& g);

// --- gamma_omega witnesses -------------------------------------------------

// Certificate that [x,y]^u lies in gamma_{n+2} of the Z-infinity model:
// the (n+1)-fold commutator [x^w, a, ..., a, y] evaluates to [x,y]^u.
struct GammaOmegaWitness {
  long k = 0;
  DyadicModOne target_u;
  int depth_n = 0;
  DyadicLocal base_exponent_w;
  mpz_class shift_z;
};

GammaOmegaWitness gamma_omega_witness(long k, const DyadicModOne& u, int n);
bool verify_gamma_omega_witness(const GammaOmegaWitness& w);

}  // namespace nilc
