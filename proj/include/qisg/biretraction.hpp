#pragma once

#include "qisg/algebroid.hpp"
#include "qisg/graded.hpp"
#include "qisg/qisg.hpp"

namespace qisg {

/// Local biretraction alpha : H -> A with its witness idempotent e^alpha and
/// the partial point bijection realized by alpha . t (lambda[y] = x means
/// alpha(t(chi_y)) = chi_x, -1 off the witness ideal). Holds a pointer to its
/// model; the algebroid must outlive the biretraction.
struct Biretraction {
  const HopfAlgebroid* model = nullptr;
  LinMap alpha;
  Vec e;       // witness idempotent
  Vec alpha1;  // alpha(1_H)
  std::vector<int> lambda;

  bool is_global() const;
  /// (alpha . t)^{-1} as a linear map, the exact solve on the witness ideal
  /// (zero off A*alpha(1)).
  LinMap t_inverse() const;
};

/// Checks multiplicativity, BRT1 and BRT2; finds e^alpha by the split-base
/// rule (or the structural s = t rule) and asserts its uniqueness by sweeping
/// every idempotent of A. Returns nullopt with a reason on failure.
std::optional<Biretraction> validate_biretraction(const HopfAlgebroid& x, const LinMap& alpha,
                                                  std::string* why = nullptr);

/// The counit as a global biretraction (commutative mode).
Biretraction counit_biretraction(const HopfAlgebroid& x);

/// (alpha * beta)(h) = beta(t(alpha(h_(1)))) beta(h_(2)) through the stored
/// lift. Asserts the paper's witness formula e^{a*b} = (a.t)^{-1}(e^b a(1)),
/// the identity (a*b).t = b.t . a.t, and that the result validates.
Biretraction convolve(const Biretraction& a, const Biretraction& b);

/// Commutative mode: a* = (a.t)^{-1} . a . S. Restricted mode:
/// a*(h) = (a.t)^{-1}(eps_l(h^(1)) (a.S)(h^(2))). Asserts a*a* = eps e^a and
/// a**a = eps a(1) (with eps_l in restricted mode) plus the witness swaps.
Biretraction star(const Biretraction& a);

/// Convolution of the integrand (h1, h2) -> b(t(a(h1)) h2) over one vector of
/// H (x) H; used to verify that balancing generators are annihilated.
Vec convolution_integrand(const Biretraction& a, const Biretraction& b, const Vec& hh);

struct BrtSemigroup {
  std::vector<Biretraction> elems;
  FinSemigroup sgp;           // convolution table
  std::vector<int> star_of;   // pseudo-inverse as an index map
  bool idempotents_commute = false;
  bool complete_over_Q = false;  // character-completeness caveat
};

/// Enumerates every biretraction with rational values by decomposing
/// A-valued multiplicative maps into per-point characters, then filtering by
/// BRT1/BRT2. The regular-monoid identities are verified exhaustively.
BrtSemigroup enumerate_biretractions(const HopfAlgebroid& x);

/// alpha_[phi,e](a (x) b) = phi(ae) b on the pair algebroid.
Biretraction from_phi_data(const HopfAlgebroid& pair_model, const LinMap& phi, const Vec& e);

/// Classes [phi, e] of the M(A) x E(A) monoid, held as the partial point
/// bijection mu (mu[z] = image of z, -1 outside supp e).
struct PhiClass {
  std::vector<int> mu;
  friend bool operator==(const PhiClass&, const PhiClass&) = default;
};

std::vector<PhiClass> enumerate_phi_classes(int npoints);
LinMap phi_linmap(const CommSplitAlgebra& a, const PhiClass& p);
Vec phi_witness(const CommSplitAlgebra& a, const PhiClass& p);
/// [phi,e][psi,f] = [phi . psi, psi^{-1}(e psi(f))], computed through the
/// realized linear maps.
PhiClass phi_mul(const CommSplitAlgebra& a, const PhiClass& p, const PhiClass& q);
/// [phi,e]* = [phi^{-1}, phi(e)].
PhiClass phi_star(const CommSplitAlgebra& a, const PhiClass& p);

/// alpha_{(u,X)}(a (x) f (x) b)_x = a(lambda(x)) f(phi(x)) b(x) [x in X] on
/// the repfun algebroid of the matching product groupoid.
Biretraction from_bisection(const HopfAlgebroid& repfun_model, const FinGroupoid& gpd, const Bisection& u);

/// Reconstructs (lambda, phi, X) from every enumerated biretraction and
/// certifies that from_bisection is a bijective morphism of regular monoids
/// (tables, unit and star match).
Report classify_repfun(const HopfAlgebroid& repfun_model, const FinGroupoid& gpd);

/// Global biretraction of the commutative torus, determined by
/// alpha(U) = U, alpha(V) = q_alpha U^{t_alpha}.
struct TorusBiretraction {
  Rational q_alpha;
  long t_alpha = 0;
};

struct TorusBrtOutcome {
  bool exists = false;
  std::optional<TorusBiretraction> brt;
  std::vector<std::string> certificate;  // derivation of q = 1 when q != 1
  Report checks;
};

/// For q != 1 produces the nonexistence certificate (alpha(V) invertible and
/// U alpha(V) = q U alpha(V) force q = 1); for q = 1 validates the
/// biretraction on a degree window.
TorusBrtOutcome torus_biretraction(const Rational& q, const Rational& q_alpha, long t_alpha, int window = 3);

TorusElem torus_brt_eval(const TorusBiretraction& a, long n, long m);
/// alpha * beta = (q_a q_b, t_a + t_b), computed through the convolution
/// formula and cross-checked on the window.
TorusBiretraction torus_brt_convolve(const TorusBiretraction& a, const TorusBiretraction& b, int window = 3);

/// Laurent-algebroid biretraction alpha_[phi,e,p]((a (x) b)x^n) = phi(ae) b p^n
/// with p p' = phi(e) solved pointwise.
struct LaurentBrt {
  LinMap phi;
  Vec e;
  Vec p, pprime;
};

LaurentBrt laurent_brt(const LaurentAlgebroid& la, const LinMap& phi, const Vec& e, const Vec& p);
Vec laurent_brt_eval(const LaurentAlgebroid& la, const LaurentBrt& a, long degree, int h0_basis);
LaurentBrt laurent_brt_convolve(const LaurentAlgebroid& la, const LaurentBrt& a, const LaurentBrt& b);
LaurentBrt laurent_brt_star(const LaurentAlgebroid& la, const LaurentBrt& a);

/// The free algebra on a biretraction monoid with grouplike Delta and
/// S = star: the paper's QISG span B(H).
Qisg qisg_span(const BrtSemigroup& b);

}  // namespace qisg
