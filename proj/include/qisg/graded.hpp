#pragma once

#include "qisg/algebroid.hpp"

#include <map>

namespace qisg {

/// (A (x) A)[x, x^-1]: degree-n component a copy of the pair algebroid core,
/// all structure maps degree-homogeneous (S negates degree). Axiom checks run
/// on a degree window; homogeneity makes window checks conclusive for
/// windowed elements.
struct LaurentAlgebroid {
  CommSplitAlgebra A;
  HopfAlgebroid core;  // pair_algebroid(A): the degree-0 data
  int default_window = 3;
};

LaurentAlgebroid laurent_algebroid(const CommSplitAlgebra& a);
Report check_laurent_algebroid(const LaurentAlgebroid& la, int max_degree);

/// The algebraic quantum torus T_q: invertible U, V with U V = q V U, graded
/// by Z^2 in the U^n V^m basis with U^n V^m * U^a V^b = q^{-m a} U^{n+a} V^{m+b}.
/// Base A = k[U, U^-1]; Delta_l(U^n V^m) = U^n V^m (x)_A V^m, eps_l = U^n,
/// S(U^n V^m) = V^-m U^n. Checked on a bounded degree window.
struct QuantumTorus {
  Rational q;
};

/// Element in the U^n V^m basis: finitely supported (n, m) -> coefficient.
using TorusElem = std::map<std::pair<long, long>, Rational>;

TorusElem torus_mono(long n, long m, Rational c = Rational(1));
TorusElem torus_mul(const QuantumTorus& t, const TorusElem& a, const TorusElem& b);
TorusElem torus_antipode(const QuantumTorus& t, const TorusElem& a);
/// eps_l(U^n V^m) = U^n; eps_r(U^n V^m) = q^{mn} U^n. Values land in A = k[U,U^-1],
/// represented as elements with m = 0.
TorusElem torus_eps_l(const TorusElem& a);
TorusElem torus_eps_r(const QuantumTorus& t, const TorusElem& a);
bool torus_equal(const TorusElem& a, const TorusElem& b);
std::string torus_str(const TorusElem& a);

Report check_quantum_torus(const QuantumTorus& t, int max_degree);

}  // namespace qisg
