#pragma once

#include "qisg/algebra.hpp"
#include "qisg/report.hpp"
#include "qisg/subspace.hpp"

namespace qisg {

enum class AlgebroidMode {
  commutative,                // commutative H over commutative A; s_l = t, t_l = s
  restricted_noncommutative,  // one commutative base with s_l = t_r = t, s_r = t_l = s
};

/// Hopf algebroid over a split commutative base. The comultiplication is
/// stored as a lift into H (x) H together with the balancing subspaces;
/// axioms whose statement lives in H (x)_A H are checked after reducing
/// modulo the balancing.
struct HopfAlgebroid {
  AlgebroidMode mode = AlgebroidMode::commutative;
  std::string name;
  FinAlgebra H;  // unital
  CommSplitAlgebra A;
  LinMap s, t;         // A -> H
  LinMap comult_l;     // H -> H (x) H, lift of Delta_l
  LinMap comult_r;     // lift of Delta_r (equal to comult_l in commutative mode)
  LinMap counit_l;     // H -> A
  LinMap counit_r;     // equal to counit_l in commutative mode
  LinMap antipode;     // H -> H
  Subspace balancing_l{BasedSpace{}};  // span{ s(a)h (x) k - h (x) t(a)k }
  Subspace balancing_r{BasedSpace{}};  // span{ h s(a) (x) k - h (x) k t(a) }

  const Subspace& balancing() const { return balancing_r; }
  /// Rebuilds both balancing subspaces from the current s and t (used after
  /// mutating structure maps in tests).
  void refresh_balancing();
};

/// Generators s(chi_a) h (x) k - h (x) t(chi_a) k over all basis triples.
std::vector<Vec> left_balancing_generators(const FinAlgebra& h, const LinMap& s, const LinMap& t);
/// Generators h s(chi_a) (x) k - h (x) k t(chi_a) over all basis triples.
std::vector<Vec> right_balancing_generators(const FinAlgebra& h, const LinMap& s, const LinMap& t);

/// Axiom suite per mode: structure maps, Takeuchi containment, comultiplication
/// multiplicative and coassociative modulo balancing, counit laws, HA2/HA3,
/// the antipode laws, and the derived identities of the commutative case.
Report check_hopf_algebroid(const HopfAlgebroid& x);

/// H = A (x) A with s(a) = 1(x)a, t(a) = a(x)1, Delta(a(x)b) =
/// (a(x)1) (x)_A (1(x)b), eps(a(x)b) = ab, S(a(x)b) = b(x)a.
HopfAlgebroid pair_algebroid(const CommSplitAlgebra& a);

/// A (x) R(G) (x) A with R(G) = Fun(G), Delta p_h = sum_{ab=h} p_a (x) p_b;
/// the representative-function algebroid of the transitive groupoid
/// X x G x X. Basis labels (x,g,y) match the product groupoid's arrows.
HopfAlgebroid repfun_transitive_algebroid(int npoints, const FinGroup& g);

/// Groupoid algebra kG over A = span{delta_{1_x}}, all four structure maps
/// the inclusion, eps_l = eps_t, eps_r = eps_s, S = inversion.
HopfAlgebroid weakhopf_algebroid(const FinGroupoid& g);

}  // namespace qisg
