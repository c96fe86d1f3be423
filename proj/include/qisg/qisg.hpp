#pragma once

#include "qisg/algebra.hpp"
#include "qisg/report.hpp"

#include <stdexcept>

namespace qisg {

/// Quantum inverse semigroup data: an algebra H, a multiplicative
/// coassociative comultiplication and a pseudo-antipode. The flags record
/// whether the unital/counital clauses are claimed (and then checked).
struct Qisg {
  FinAlgebra H;
  FinCoalgebra C;   // comultiplication (+ counit when counital)
  LinMap antipode;  // the pseudo-antipode
  bool unital = false;
  bool counital = false;
};

/// Checks the four axioms plus the unital/counital clauses.
/// Report rows: QISG1 (k-ring), QISG2 (Delta multiplicative + coassociative),
/// QISG3 (I*S*I = I and S*I*S = S), QISG4 (images of I*S and S*I commute),
/// "S-antimultiplicative" (required; reported as its own row), and the
/// never-required "S-anticomultiplicative". Witnesses name the first failing
/// basis pair with both sides' coefficient vectors.
Report check_qisg(const Qisg& q);

/// kS with grouplike Delta, eps = 1, S(delta_s) = delta_{s*}; counital, and
/// unital when S is a monoid.
Qisg qisg_from_inverse_semigroup(const FinSemigroup& s);

/// Weak Hopf algebra data (unital algebra + coalgebra + antipode).
struct WeakHopf {
  FinAlgebra H;
  FinCoalgebra C;
  LinMap antipode;
};

/// Weak Hopf axiom suite: comultiplication multiplicative, weak unit law,
/// weak counit law, the three antipode laws; informational rows record the
/// stronger Hopf laws that weak Hopf algebras may violate.
Report check_weak_hopf(const WeakHopf& w);
/// Validates, then reuses Delta and S as a QISG. Throws CheckFailure if the
/// weak Hopf axioms fail.
Qisg qisg_from_weak_hopf(const WeakHopf& w);

/// M_n(k) with Delta(E_ij) = E_ij (x) E_ij, eps = 1, S(E_ij) = E_ji.
WeakHopf matrix_weak_hopf(int n);
/// Groupoid algebra kG with grouplike Delta and S(delta_g) = delta_{g^-1}.
WeakHopf groupoid_weak_hopf(const FinGroupoid& g);

/// Small category enriched in coalgebras, with an antipode family.
struct HopfCategory {
  int nobj = 0;
  std::vector<BasedSpace> comp;       // spaces H_{x,y}, row-major (x*nobj+y)
  std::vector<LinMap> comult;         // H_{x,y} -> H_{x,y} (x) H_{x,y}
  std::vector<LinMap> counit;         // H_{x,y} -> k
  std::vector<LinMap> mult;           // (x,y,z): H_{x,y} (x) H_{y,z} -> H_{x,z}, index (x*n+y)*n+z
  std::vector<Vec> eta;               // unit element of H_{x,x}
  std::vector<LinMap> antipode;       // H_{x,y} -> H_{y,x}

  const BasedSpace& at(int x, int y) const { return comp[static_cast<std::size_t>(x * nobj + y)]; }
  const LinMap& mu(int x, int y, int z) const { return mult[static_cast<std::size_t>((x * nobj + y) * nobj + z)]; }
};

/// Enriched-category laws, Delta/eps compatibility, unit compatibility, and
/// the antipode laws; also the antipode's anti(co)multiplicativity.
Report check_hopf_category(const HopfCategory& h);

struct HopfCategoryAlgebra {
  Qisg qisg;
  std::vector<Vec> local_units;  // eta_x(1) inside the direct sum
};

/// Direct-sum algebra of a Hopf category: products vanish across mismatched
/// objects; the eta_x(1) are orthogonal local units summing to the unit.
/// check_qisg passes, with S anticomultiplicative (recorded, not required).
HopfCategoryAlgebra hopf_category_alg(const HopfCategory& h);

/// All H_{x,y} = k with the trivial coalgebra; alg() is M_n(k).
HopfCategory trivial_hopf_category(int n);
/// Single-object category holding one Hopf algebra.
HopfCategory one_object_hopf_category(const FinAlgebra& h, const FinCoalgebra& c, const LinMap& antipode);

/// Quotient of k[u_ij] by u_ij u_ik = delta_jk u_ij and u_ij u_kj =
/// delta_ik u_ij, with Delta(u_ij) = sum_k u_ik (x) u_kj, eps(u_ij) =
/// delta_ij, S(u_ij) = u_ji. Basis: monomials with pairwise distinct rows and
/// columns in sorted form, the empty monomial included. n <= 3.
Qisg hadamard_qisg(int n);

/// The partial Hopf algebra of kG on the normal-form basis eps_A[g] <-> (A,g)
/// with {1,g} <= A <= G: grouplike Delta, S(A,g) = (g^-1 A, g^-1). Structure
/// constants follow the normal-form product (A,g)(B,h) = (A u gB, gh),
/// computed here independently of the semigroups module.
Qisg partial_group_qisg(const FinGroup& g);

/// PR1-PR5 for a linear map pi : kG -> B on the grouplike basis.
Report check_partial_rep(const LinMap& pi, const FinGroup& g, const FinAlgebra& b);

/// Pseudo-antipode uniqueness is only decidable against explicit candidates
/// (paper remark: unique when convolution idempotents commute). Returns the
/// candidates among `alternatives` that satisfy QISG3(ii) yet differ from S.
std::vector<int> antipode_alternatives(const Qisg& q, const std::vector<LinMap>& alternatives);

}  // namespace qisg
