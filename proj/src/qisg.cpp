#include "qisg/qisg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace qisg {

namespace {

using SparseTensor = std::map<long, Rational>;  // key = i * dim + j (or deeper)

bool tensors_equal(const SparseTensor& a, const SparseTensor& b) {
  for (auto& [k, v] : a) {
    auto it = b.find(k);
    if (!(it != b.end() ? it->second == v : v.is_zero())) return false;
  }
  for (auto& [k, v] : b)
    if (!a.count(k) && !v.is_zero()) return false;
  return true;
}

void prune(SparseTensor& t) {
  for (auto it = t.begin(); it != t.end();)
    it = it->second.is_zero() ? t.erase(it) : std::next(it);
}

std::string tensor_str(const SparseTensor& t, const BasedSpace& s, const BasedSpace& s2) {
  std::string out;
  for (auto& [k, v] : t) {
    if (v.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += v.str() + "*" + s.label(k / s2.dim()) + "(x)" + s2.label(k % s2.dim());
  }
  return out.empty() ? "0" : out;
}

// Delta(v) for a dense vector, as a sparse 2-tensor.
SparseTensor delta_of(const FinCoalgebra& c, const Vec& v) {
  SparseTensor out;
  const Eigen::Index d = c.dim();
  for (Eigen::Index b = 0; b < d; ++b) {
    if (v(b).is_zero()) continue;
    for (auto& [i, j, coef] : c.delta(static_cast<int>(b))) out[static_cast<long>(i) * d + j] += v(b) * coef;
  }
  prune(out);
  return out;
}

struct Witness {
  std::string text;
  bool triggered = false;
  void set(std::string t) {
    if (!triggered) {
      text = std::move(t);
      triggered = true;
    }
  }
};

}  // namespace

Report check_qisg(const Qisg& q) {
  const FinAlgebra& H = q.H;
  const FinCoalgebra& C = q.C;
  const LinMap& S = q.antipode;
  if (C.space() != H.space()) throw std::invalid_argument("check_qisg: comultiplication lives on a different space");
  if (S.dom != H.space() || S.cod != H.space()) throw std::invalid_argument("check_qisg: antipode must map H to H");
  const Eigen::Index d = H.dim();
  Report rep;
  rep.title = "QISG axioms (Def. of quantum inverse semigroup)";
  rep.count("dim", static_cast<long>(d));

  // QISG1: H is a k-ring; associativity was verified exactly when the
  // FinAlgebra was constructed.
  rep.add("QISG1", true, "");

  // QISG2: Delta multiplicative on basis pairs + coassociative.
  {
    Witness w;
    for (Eigen::Index i = 0; i < d && !w.triggered; ++i)
      for (Eigen::Index j = 0; j < d && !w.triggered; ++j) {
        SparseTensor lhs;
        for (auto& [k, c] : H.basis_product(static_cast<int>(i), static_cast<int>(j)))
          for (auto& [p, qq, c2] : C.delta(k)) lhs[static_cast<long>(p) * d + qq] += c * c2;
        SparseTensor rhs;
        for (auto& [a, b, c1] : C.delta(static_cast<int>(i)))
          for (auto& [x, y, c2] : C.delta(static_cast<int>(j))) {
            Rational cc = c1 * c2;
            for (auto& [p, cp] : H.basis_product(a, x))
              for (auto& [qq, cq] : H.basis_product(b, y)) rhs[static_cast<long>(p) * d + qq] += cc * cp * cq;
          }
        prune(lhs);
        prune(rhs);
        if (!tensors_equal(lhs, rhs))
          w.set("Delta not multiplicative at (" + H.space().label(i) + ", " + H.space().label(j) +
                "): Delta(hk) = " + tensor_str(lhs, H.space(), H.space()) +
                ", Delta(h)Delta(k) = " + tensor_str(rhs, H.space(), H.space()));
      }
    // coassociativity (re-verified; also guaranteed by FinCoalgebra)
    for (Eigen::Index b = 0; b < d && !w.triggered; ++b) {
      SparseTensor lhs, rhs;
      for (auto& [i, j, c] : C.delta(static_cast<int>(b))) {
        for (auto& [p, qq, c2] : C.delta(i)) lhs[(static_cast<long>(p) * d + qq) * d + j] += c * c2;
        for (auto& [p, qq, c2] : C.delta(j)) rhs[(static_cast<long>(i) * d + p) * d + qq] += c * c2;
      }
      prune(lhs);
      prune(rhs);
      if (!tensors_equal(lhs, rhs)) w.set("coassociativity fails at " + H.space().label(b));
    }
    rep.add("QISG2", !w.triggered, w.text);
  }

  // QISG3: I*S*I = I and S*I*S = S, evaluated per basis element through the
  // sparse Delta^2 expansion.
  {
    Witness w;
    for (Eigen::Index b = 0; b < d && !w.triggered; ++b) {
      Vec isi(d), sis(d);
      isi.setZero();
      sis.setZero();
      for (auto& [i, j, c] : C.delta(static_cast<int>(b)))
        for (auto& [k, l, c2] : C.delta(i)) {
          Rational cc = c * c2;
          Vec t1 = H.mul(H.mul(H.space().basis_vector(k), S.column(l)), H.space().basis_vector(j));
          Vec t2 = H.mul(H.mul(S.column(k), H.space().basis_vector(l)), S.column(j));
          for (Eigen::Index r = 0; r < d; ++r) {
            isi(r) += cc * t1(r);
            sis(r) += cc * t2(r);
          }
        }
      if (!exact_equal(isi, H.space().basis_vector(b)))
        w.set("I*S*I != I at " + H.space().label(b) + ": got " + pretty(isi, H.space()));
      else if (!exact_equal(sis, Vec(S.column(b))))
        w.set("S*I*S != S at " + H.space().label(b) + ": got " + pretty(sis, H.space()));
    }
    rep.add("QISG3", !w.triggered, w.text);
  }

  // QISG4: images of I*S and S*I commute, on all basis pairs.
  {
    std::vector<Vec> u(static_cast<std::size_t>(d)), v(static_cast<std::size_t>(d));
    for (Eigen::Index b = 0; b < d; ++b) {
      Vec ub(d), vb(d);
      ub.setZero();
      vb.setZero();
      for (auto& [i, j, c] : C.delta(static_cast<int>(b))) {
        Vec t1 = H.mul(H.space().basis_vector(i), S.column(j));
        Vec t2 = H.mul(S.column(i), H.space().basis_vector(j));
        for (Eigen::Index r = 0; r < d; ++r) {
          ub(r) += c * t1(r);
          vb(r) += c * t2(r);
        }
      }
      u[static_cast<std::size_t>(b)] = std::move(ub);
      v[static_cast<std::size_t>(b)] = std::move(vb);
    }
    Witness w;
    for (Eigen::Index h = 0; h < d && !w.triggered; ++h)
      for (Eigen::Index k = 0; k < d && !w.triggered; ++k) {
        Vec lhs = H.mul(u[static_cast<std::size_t>(h)], v[static_cast<std::size_t>(k)]);
        Vec rhs = H.mul(v[static_cast<std::size_t>(k)], u[static_cast<std::size_t>(h)]);
        if (!exact_equal(lhs, rhs))
          w.set("(h, k) = (" + H.space().label(h) + ", " + H.space().label(k) + "): h_(1)S(h_(2))S(k_(1))k_(2) = " +
                pretty(lhs, H.space()) + " but S(k_(1))k_(2)h_(1)S(h_(2)) = " + pretty(rhs, H.space()));
      }
    rep.add("QISG4", !w.triggered, w.text);
  }

  // The definition makes the pseudo-antipode antimultiplicative; reported as
  // its own required row so QISG3 stays the pair of convolution identities.
  {
    Witness w;
    for (Eigen::Index i = 0; i < d && !w.triggered; ++i)
      for (Eigen::Index j = 0; j < d && !w.triggered; ++j) {
        Vec prod(d);
        prod.setZero();
        for (auto& [k, c] : H.basis_product(static_cast<int>(i), static_cast<int>(j)))
          for (Eigen::Index r = 0; r < d; ++r) prod(r) += c * S.m(r, k);
        Vec rhs = H.mul(S.column(j), S.column(i));
        if (!exact_equal(prod, rhs))
          w.set("S(hk) != S(k)S(h) at (" + H.space().label(i) + ", " + H.space().label(j) + "): " +
                pretty(prod, H.space()) + " vs " + pretty(rhs, H.space()));
      }
    rep.add("S-antimultiplicative", !w.triggered, w.text);
  }

  // Anticomultiplicativity holds in most examples but is never required.
  {
    Witness w;
    for (Eigen::Index b = 0; b < d && !w.triggered; ++b) {
      SparseTensor lhs = delta_of(C, S.column(b));
      SparseTensor rhs;
      for (auto& [i, j, c] : C.delta(static_cast<int>(b)))
        for (Eigen::Index p = 0; p < d; ++p) {
          if (S.m(p, j).is_zero()) continue;
          for (Eigen::Index qq = 0; qq < d; ++qq) {
            if (S.m(qq, i).is_zero()) continue;
            rhs[static_cast<long>(p) * d + qq] += c * S.m(p, j) * S.m(qq, i);
          }
        }
      prune(rhs);
      if (!tensors_equal(lhs, rhs)) w.set("Delta(S(h)) != (S(x)S)(Delta^op(h)) at " + H.space().label(b));
    }
    rep.add("S-anticomultiplicative", !w.triggered, w.text, /*required=*/false);
  }

  if (q.unital) {
    Witness w;
    if (!H.unit())
      w.set("no unit declared on H");
    else if (!exact_equal(Vec(S.m * *H.unit()), *H.unit()))
      w.set("S(1) = " + pretty(S.m * *H.unit(), H.space()) + " != 1");
    rep.add("unital", !w.triggered, w.text);
  }
  if (q.counital) {
    Witness w;
    if (!C.counit())
      w.set("no counit declared");
    else {
      // counit laws hold by FinCoalgebra construction; the QISG clause adds
      // eps . S = eps
      Mat lhs = C.counit()->m * S.m;
      if (!exact_equal(lhs, C.counit()->m)) w.set("eps . S != eps");
    }
    rep.add("counital", !w.triggered, w.text);
  }
  return rep;
}

Qisg qisg_from_inverse_semigroup(const FinSemigroup& s) {
  auto inv = is_inverse(s);
  if (inv.kind != InverseClass::inverse)
    throw std::invalid_argument("qisg_from_inverse_semigroup: " + inv.message);
  FinAlgebra H = semigroup_algebra(s);
  const Eigen::Index d = H.dim();
  Mat cm(d * d, d);
  cm.setZero();
  for (Eigen::Index b = 0; b < d; ++b) cm(b * d + b, b) = Rational(1);
  Mat eps(1, d);
  for (Eigen::Index b = 0; b < d; ++b) eps(0, b) = Rational(1);
  Mat sm(d, d);
  sm.setZero();
  for (Eigen::Index b = 0; b < d; ++b) sm(inv.star[static_cast<std::size_t>(b)], b) = Rational(1);
  FinCoalgebra C(H.space(), LinMap(H.space(), tensor(H.space(), H.space()), std::move(cm)),
                 LinMap(H.space(), BasedSpace({"1"}), std::move(eps)));
  LinMap antipode(H.space(), H.space(), std::move(sm));
  return Qisg{std::move(H), std::move(C), std::move(antipode), s.unit.has_value(), true};
}

namespace {

// eps_t(h) = eps(1_(1) h) 1_(2) and eps_s(h) = 1_(1) eps(h 1_(2)).
Vec eps_t(const WeakHopf& w, const SparseTensor& delta1, const Vec& h) {
  const Eigen::Index d = w.H.dim();
  Vec out(d);
  out.setZero();
  for (auto& [key, c] : delta1) {
    Eigen::Index i = key / d, j = key % d;
    Rational e = (w.C.counit()->m * w.H.mul(w.H.space().basis_vector(i), h))(0);
    out(j) += c * e;
  }
  return out;
}

Vec eps_s(const WeakHopf& w, const SparseTensor& delta1, const Vec& h) {
  const Eigen::Index d = w.H.dim();
  Vec out(d);
  out.setZero();
  for (auto& [key, c] : delta1) {
    Eigen::Index i = key / d, j = key % d;
    Rational e = (w.C.counit()->m * w.H.mul(h, w.H.space().basis_vector(j)))(0);
    out(i) += c * e;
  }
  return out;
}

}  // namespace

Report check_weak_hopf(const WeakHopf& w) {
  Report rep;
  rep.title = "weak Hopf algebra axioms";
  const FinAlgebra& H = w.H;
  const FinCoalgebra& C = w.C;
  const Eigen::Index d = H.dim();
  if (!H.unit()) {
    rep.add("unital-algebra", false, "weak Hopf algebras are unital");
    return rep;
  }
  if (!C.counit()) {
    rep.add("counital-coalgebra", false, "weak Hopf algebras are counital");
    return rep;
  }
  rep.add("unital-algebra", true);
  rep.add("counital-coalgebra", true);
  rep.count("dim", static_cast<long>(d));

  SparseTensor delta1 = delta_of(C, *H.unit());

  // Delta multiplicative (same computation as the QISG2 row).
  {
    Witness witness;
    for (Eigen::Index i = 0; i < d && !witness.triggered; ++i)
      for (Eigen::Index j = 0; j < d && !witness.triggered; ++j) {
        SparseTensor lhs, rhs;
        for (auto& [k, c] : H.basis_product(static_cast<int>(i), static_cast<int>(j)))
          for (auto& [p, qq, c2] : C.delta(k)) lhs[static_cast<long>(p) * d + qq] += c * c2;
        for (auto& [a, b, c1] : C.delta(static_cast<int>(i)))
          for (auto& [x, y, c2] : C.delta(static_cast<int>(j))) {
            Rational cc = c1 * c2;
            for (auto& [p, cp] : H.basis_product(a, x))
              for (auto& [qq, cq] : H.basis_product(b, y)) rhs[static_cast<long>(p) * d + qq] += cc * cp * cq;
          }
        prune(lhs);
        prune(rhs);
        if (!tensors_equal(lhs, rhs))
          witness.set("at (" + H.space().label(i) + ", " + H.space().label(j) + ")");
      }
    rep.add("comult-multiplicative", !witness.triggered, witness.text);
  }

  // Weak unit law: (Delta(1)(x)1)(1(x)Delta(1)) = (1(x)Delta(1))(Delta(1)(x)1)
  // = (Delta(x)I)Delta(1), all inside H^(x)3.
  {
    SparseTensor a, b, d2;
    for (auto& [k1, c1] : delta1)
      for (auto& [k2, c2] : delta1) {
        Eigen::Index i = k1 / d, j = k1 % d, k = k2 / d, l = k2 % d;
        for (auto& [m, cm] : H.basis_product(static_cast<int>(j), static_cast<int>(k)))
          a[(static_cast<long>(i) * d + m) * d + l] += c1 * c2 * cm;
        for (auto& [m, cm] : H.basis_product(static_cast<int>(k), static_cast<int>(j)))
          b[(static_cast<long>(i) * d + m) * d + l] += c1 * c2 * cm;
      }
    for (auto& [k1, c1] : delta1) {
      Eigen::Index i = k1 / d, j = k1 % d;
      for (auto& [p, qq, c2] : C.delta(static_cast<int>(i))) d2[(static_cast<long>(p) * d + qq) * d + j] += c1 * c2;
    }
    prune(a);
    prune(b);
    prune(d2);
    bool ok = tensors_equal(a, d2) && tensors_equal(b, d2);
    rep.add("weak-unit-law", ok, ok ? "" : "(Delta(1)(x)1)(1(x)Delta(1)) != (Delta(x)I)Delta(1)");
  }

  // Weak counit law on all basis triples.
  {
    Witness witness;
    const Mat& eps = C.counit()->m;
    for (Eigen::Index h = 0; h < d && !witness.triggered; ++h)
      for (Eigen::Index k = 0; k < d && !witness.triggered; ++k) {
        Vec hk = H.mul(H.space().basis_vector(h), H.space().basis_vector(k));
        for (Eigen::Index l = 0; l < d && !witness.triggered; ++l) {
          Rational lhs = (eps * H.mul(hk, H.space().basis_vector(l)))(0);
          Rational r1(0), r2(0);
          for (auto& [k1, k2, c] : C.delta(static_cast<int>(k))) {
            Rational e1 = (eps * H.mul(H.space().basis_vector(h), H.space().basis_vector(k1)))(0);
            Rational e2 = (eps * H.mul(H.space().basis_vector(k2), H.space().basis_vector(l)))(0);
            r1 += c * e1 * e2;
            Rational f1 = (eps * H.mul(H.space().basis_vector(h), H.space().basis_vector(k2)))(0);
            Rational f2 = (eps * H.mul(H.space().basis_vector(k1), H.space().basis_vector(l)))(0);
            r2 += c * f1 * f2;
          }
          if (lhs != r1 || lhs != r2)
            witness.set("at (" + H.space().label(h) + ", " + H.space().label(k) + ", " + H.space().label(l) + ")");
        }
      }
    rep.add("weak-counit-law", !witness.triggered, witness.text);
  }

  // Antipode laws.
  {
    Witness wl, wr, wf;
    for (Eigen::Index b = 0; b < d; ++b) {
      Vec left(d), right(d), full(d);
      left.setZero();
      right.setZero();
      full.setZero();
      for (auto& [i, j, c] : C.delta(static_cast<int>(b))) {
        Vec t1 = H.mul(H.space().basis_vector(i), w.antipode.column(j));
        Vec t2 = H.mul(w.antipode.column(i), H.space().basis_vector(j));
        for (Eigen::Index r = 0; r < d; ++r) {
          left(r) += c * t1(r);
          right(r) += c * t2(r);
        }
        for (auto& [k, l, c2] : C.delta(i)) {
          Vec t3 = H.mul(H.mul(w.antipode.column(k), H.space().basis_vector(l)), w.antipode.column(j));
          for (Eigen::Index r = 0; r < d; ++r) full(r) += c * c2 * t3(r);
        }
      }
      Vec et = eps_t(w, delta1, H.space().basis_vector(b));
      Vec es = eps_s(w, delta1, H.space().basis_vector(b));
      if (!exact_equal(left, et) && !wl.triggered)
        wl.set("h_(1)S(h_(2)) != eps_t(h) at " + H.space().label(b) + ": " + pretty(left, H.space()) + " vs " +
               pretty(et, H.space()));
      if (!exact_equal(right, es) && !wr.triggered)
        wr.set("S(h_(1))h_(2) != eps_s(h) at " + H.space().label(b));
      if (!exact_equal(full, Vec(w.antipode.column(b))) && !wf.triggered)
        wf.set("S(h_(1))h_(2)S(h_(3)) != S(h) at " + H.space().label(b));
    }
    rep.add("antipode-target-law", !wl.triggered, wl.text);
    rep.add("antipode-source-law", !wr.triggered, wr.text);
    rep.add("antipode-full-law", !wf.triggered, wf.text);
  }

  // Stronger Hopf laws, informational: weak Hopf algebras may violate both.
  {
    SparseTensor one_one;
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) {
        Rational c = (*H.unit())(i) * (*H.unit())(j);
        if (!c.is_zero()) one_one[static_cast<long>(i) * d + j] = c;
      }
    rep.add("hopf-unit-law", tensors_equal(delta1, one_one),
            tensors_equal(delta1, one_one) ? "" : "Delta(1) != 1(x)1", /*required=*/false);
    Witness witness;
    for (Eigen::Index b = 0; b < d && !witness.triggered; ++b) {
      Vec left(d);
      left.setZero();
      for (auto& [i, j, c] : C.delta(static_cast<int>(b))) {
        Vec t1 = H.mul(H.space().basis_vector(i), w.antipode.column(j));
        for (Eigen::Index r = 0; r < d; ++r) left(r) += c * t1(r);
      }
      Rational e = (C.counit()->m * H.space().basis_vector(b))(0);
      Vec expected = *H.unit();
      for (Eigen::Index r = 0; r < d; ++r) expected(r) *= e;
      if (!exact_equal(left, expected)) witness.set("h_(1)S(h_(2)) != eps(h)1 at " + H.space().label(b));
    }
    rep.add("hopf-antipode-law", !witness.triggered, witness.text, /*required=*/false);
  }
  return rep;
}

Qisg qisg_from_weak_hopf(const WeakHopf& w) {
  Report rep = check_weak_hopf(w);
  if (!rep.ok()) throw CheckFailure("weak Hopf axioms fail", rep);
  return Qisg{w.H, w.C, w.antipode, true, true};
}

WeakHopf matrix_weak_hopf(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) labels.push_back("E" + std::to_string(i) + std::to_string(j));
  BasedSpace s{labels};
  const Eigen::Index d = s.dim();
  Mat m(d, d * d);
  m.setZero();
  auto idx = [n](int i, int j) { return i * n + j; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (j == k) m(idx(i, l), static_cast<Eigen::Index>(idx(i, j)) * d + idx(k, l)) = Rational(1);
  Vec unit(d);
  unit.setZero();
  for (int i = 0; i < n; ++i) unit(idx(i, i)) = Rational(1);
  FinAlgebra H(s, LinMap(tensor(s, s), s, std::move(m)), unit);
  Mat cm(d * d, d);
  cm.setZero();
  for (Eigen::Index b = 0; b < d; ++b) cm(b * d + b, b) = Rational(1);
  Mat eps(1, d);
  for (Eigen::Index b = 0; b < d; ++b) eps(0, b) = Rational(1);
  FinCoalgebra C(s, LinMap(s, tensor(s, s), std::move(cm)), LinMap(s, BasedSpace({"1"}), std::move(eps)));
  Mat sm(d, d);
  sm.setZero();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sm(idx(j, i), idx(i, j)) = Rational(1);
  LinMap antipode(s, s, std::move(sm));
  return WeakHopf{std::move(H), std::move(C), std::move(antipode)};
}

WeakHopf groupoid_weak_hopf(const FinGroupoid& g) {
  FinAlgebra H = groupoid_algebra(g);
  const BasedSpace s = H.space();
  const Eigen::Index d = s.dim();
  Mat cm(d * d, d);
  cm.setZero();
  for (Eigen::Index b = 0; b < d; ++b) cm(b * d + b, b) = Rational(1);
  Mat eps(1, d);
  for (Eigen::Index b = 0; b < d; ++b) eps(0, b) = Rational(1);
  FinCoalgebra C(s, LinMap(s, tensor(s, s), std::move(cm)), LinMap(s, BasedSpace({"1"}), std::move(eps)));
  Mat sm(d, d);
  sm.setZero();
  for (Eigen::Index b = 0; b < d; ++b) sm(g.inv[static_cast<std::size_t>(b)], b) = Rational(1);
  LinMap antipode(s, s, std::move(sm));
  return WeakHopf{std::move(H), std::move(C), std::move(antipode)};
}

namespace {

SparseTensor map_delta(const LinMap& comult, const Vec& v) {
  SparseTensor out;
  const Eigen::Index d = comult.dom.dim();
  (void)d;
  Vec dv = comult.m * v;
  for (Eigen::Index k = 0; k < dv.size(); ++k)
    if (!dv(k).is_zero()) out[k] = dv(k);
  return out;
}

}  // namespace

Report check_hopf_category(const HopfCategory& h) {
  Report rep;
  rep.title = "Hopf category laws";
  const int n = h.nobj;
  Witness coalg, assoc, ident, dmult, dunit, emult, eunit, anti1, anti2, lemma_mu, lemma_delta;

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      // component coalgebra axioms via FinCoalgebra construction
      try {
        FinCoalgebra c(h.at(x, y), h.comult[static_cast<std::size_t>(x * n + y)],
                       h.counit[static_cast<std::size_t>(x * n + y)]);
      } catch (const std::exception& e) {
        coalg.set("component (" + std::to_string(x + 1) + "," + std::to_string(y + 1) + "): " + e.what());
      }
    }
  rep.add("component-coalgebras", !coalg.triggered, coalg.text);

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int t = 0; t < n; ++t) {
          LinMap lhs = compose(h.mu(x, y, t), tensor_map(LinMap::identity(h.at(x, y)), h.mu(y, z, t)));
          LinMap rhs = compose(h.mu(x, z, t), tensor_map(h.mu(x, y, z), LinMap::identity(h.at(z, t))));
          if (!exact_equal(lhs.m, rhs.m) && !assoc.triggered)
            assoc.set("associativity fails at objects (" + std::to_string(x + 1) + "," + std::to_string(y + 1) + "," +
                      std::to_string(z + 1) + "," + std::to_string(t + 1) + ")");
        }
  rep.add("enriched-associativity", !assoc.triggered, assoc.text);

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const BasedSpace& comp = h.at(x, y);
      for (Eigen::Index b = 0; b < comp.dim(); ++b) {
        Vec e = comp.basis_vector(b);
        Vec left = h.mu(x, x, y).apply(kron(h.eta[static_cast<std::size_t>(x)], e));
        Vec right = h.mu(x, y, y).apply(kron(e, h.eta[static_cast<std::size_t>(y)]));
        if ((!exact_equal(left, e) || !exact_equal(right, e)) && !ident.triggered)
          ident.set("unit law fails in component (" + std::to_string(x + 1) + "," + std::to_string(y + 1) + ")");
      }
    }
  rep.add("enriched-units", !ident.triggered, ident.text);

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const LinMap& dxy = h.comult[static_cast<std::size_t>(x * n + y)];
        const LinMap& dyz = h.comult[static_cast<std::size_t>(y * n + z)];
        const LinMap& dxz = h.comult[static_cast<std::size_t>(x * n + z)];
        const Eigen::Index dy = h.at(x, y).dim(), dz = h.at(y, z).dim(), dt = h.at(x, z).dim();
        for (Eigen::Index a = 0; a < dy; ++a)
          for (Eigen::Index b = 0; b < dz; ++b) {
            Vec prod = h.mu(x, y, z).apply(kron(h.at(x, y).basis_vector(a), h.at(y, z).basis_vector(b)));
            SparseTensor lhs = map_delta(dxz, prod);
            SparseTensor rhs;
            SparseTensor da = map_delta(dxy, h.at(x, y).basis_vector(a));
            SparseTensor db = map_delta(dyz, h.at(y, z).basis_vector(b));
            for (auto& [ka, ca] : da)
              for (auto& [kb, cb] : db) {
                Eigen::Index a1 = ka / dy, a2 = ka % dy, b1 = kb / dz, b2 = kb % dz;
                Vec m1 = h.mu(x, y, z).apply(kron(h.at(x, y).basis_vector(a1), h.at(y, z).basis_vector(b1)));
                Vec m2 = h.mu(x, y, z).apply(kron(h.at(x, y).basis_vector(a2), h.at(y, z).basis_vector(b2)));
                for (Eigen::Index p = 0; p < dt; ++p)
                  for (Eigen::Index q = 0; q < dt; ++q)
                    if (!m1(p).is_zero() && !m2(q).is_zero()) rhs[static_cast<long>(p) * dt + q] += ca * cb * m1(p) * m2(q);
              }
            prune(lhs);
            prune(rhs);
            if (!tensors_equal(lhs, rhs) && !dmult.triggered)
              dmult.set("Delta incompatible with mu at objects (" + std::to_string(x + 1) + "," +
                        std::to_string(y + 1) + "," + std::to_string(z + 1) + ")");
            Rational el = (h.counit[static_cast<std::size_t>(x * n + z)].m * prod)(0);
            Rational er = (h.counit[static_cast<std::size_t>(x * n + y)].m * h.at(x, y).basis_vector(a))(0) *
                          (h.counit[static_cast<std::size_t>(y * n + z)].m * h.at(y, z).basis_vector(b))(0);
            if (el != er && !emult.triggered)
              emult.set("eps incompatible with mu at objects (" + std::to_string(x + 1) + "," + std::to_string(y + 1) +
                        "," + std::to_string(z + 1) + ")");
          }
      }
  rep.add("comult-compatible-with-mu", !dmult.triggered, dmult.text);
  rep.add("counit-compatible-with-mu", !emult.triggered, emult.text);

  for (int x = 0; x < n; ++x) {
    const Vec& e = h.eta[static_cast<std::size_t>(x)];
    SparseTensor de = map_delta(h.comult[static_cast<std::size_t>(x * n + x)], e);
    SparseTensor ee;
    const Eigen::Index dx = h.at(x, x).dim();
    for (Eigen::Index i = 0; i < dx; ++i)
      for (Eigen::Index j = 0; j < dx; ++j)
        if (!e(i).is_zero() && !e(j).is_zero()) ee[static_cast<long>(i) * dx + j] = e(i) * e(j);
    if (!tensors_equal(de, ee) && !dunit.triggered)
      dunit.set("Delta(eta) != eta(x)eta at object " + std::to_string(x + 1));
    if ((h.counit[static_cast<std::size_t>(x * n + x)].m * e)(0) != Rational(1) && !eunit.triggered)
      eunit.set("eps(eta) != 1 at object " + std::to_string(x + 1));
  }
  rep.add("comult-unital", !dunit.triggered, dunit.text);
  rep.add("counit-unital", !eunit.triggered, eunit.text);

  // antipode laws: mu_{x,y,x}(h_(1) (x) S(h_(2))) = eta_x eps(h) and
  // mu_{y,x,y}(S(h_(1)) (x) h_(2)) = eta_y eps(h)
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const BasedSpace& comp = h.at(x, y);
      const LinMap& s = h.antipode[static_cast<std::size_t>(x * n + y)];
      for (Eigen::Index b = 0; b < comp.dim(); ++b) {
        SparseTensor db = map_delta(h.comult[static_cast<std::size_t>(x * n + y)], comp.basis_vector(b));
        Vec acc1(h.at(x, x).dim()), acc2(h.at(y, y).dim());
        acc1.setZero();
        acc2.setZero();
        for (auto& [k, c] : db) {
          Eigen::Index i = k / comp.dim(), j = k % comp.dim();
          Vec t1 = h.mu(x, y, x).apply(kron(comp.basis_vector(i), s.column(j)));
          Vec t2 = h.mu(y, x, y).apply(kron(s.column(i), comp.basis_vector(j)));
          for (Eigen::Index r = 0; r < acc1.size(); ++r) acc1(r) += c * t1(r);
          for (Eigen::Index r = 0; r < acc2.size(); ++r) acc2(r) += c * t2(r);
        }
        Rational e = (h.counit[static_cast<std::size_t>(x * n + y)].m * comp.basis_vector(b))(0);
        Vec exp1 = h.eta[static_cast<std::size_t>(x)], exp2 = h.eta[static_cast<std::size_t>(y)];
        for (Eigen::Index r = 0; r < exp1.size(); ++r) exp1(r) *= e;
        for (Eigen::Index r = 0; r < exp2.size(); ++r) exp2(r) *= e;
        if (!exact_equal(acc1, exp1) && !anti1.triggered)
          anti1.set("h_(1)S(h_(2)) != eps(h)eta_x at component (" + std::to_string(x + 1) + "," +
                    std::to_string(y + 1) + ")");
        if (!exact_equal(acc2, exp2) && !anti2.triggered)
          anti2.set("S(h_(1))h_(2) != eps(h)eta_y at component (" + std::to_string(x + 1) + "," +
                    std::to_string(y + 1) + ")");
      }
    }
  rep.add("antipode-law-target", !anti1.triggered, anti1.text);
  rep.add("antipode-law-source", !anti2.triggered, anti2.text);

  // S . mu = mu . (S (x) S) . twist, and Delta . S = twist . (S (x) S) . Delta
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        const Eigen::Index dy = h.at(x, y).dim(), dz = h.at(y, z).dim();
        for (Eigen::Index a = 0; a < dy; ++a)
          for (Eigen::Index b = 0; b < dz; ++b) {
            Vec lhs = h.antipode[static_cast<std::size_t>(x * n + z)].apply(
                h.mu(x, y, z).apply(kron(h.at(x, y).basis_vector(a), h.at(y, z).basis_vector(b))));
            Vec rhs = h.mu(z, y, x).apply(kron(h.antipode[static_cast<std::size_t>(y * n + z)].column(b),
                                               h.antipode[static_cast<std::size_t>(x * n + y)].column(a)));
            if (!exact_equal(lhs, rhs) && !lemma_mu.triggered)
              lemma_mu.set("S . mu != mu . (S(x)S) . twist at objects (" + std::to_string(x + 1) + "," +
                           std::to_string(y + 1) + "," + std::to_string(z + 1) + ")");
          }
      }
      const BasedSpace& comp = h.at(x, y);
      const LinMap& s = h.antipode[static_cast<std::size_t>(x * n + y)];
      const Eigen::Index dyx = h.at(y, x).dim();
      for (Eigen::Index b = 0; b < comp.dim(); ++b) {
        SparseTensor lhs = map_delta(h.comult[static_cast<std::size_t>(y * n + x)], s.column(b));
        SparseTensor rhs;
        SparseTensor db = map_delta(h.comult[static_cast<std::size_t>(x * n + y)], comp.basis_vector(b));
        for (auto& [k, c] : db) {
          Eigen::Index i = k / comp.dim(), j = k % comp.dim();
          for (Eigen::Index p = 0; p < dyx; ++p)
            for (Eigen::Index q = 0; q < dyx; ++q)
              if (!s.m(p, j).is_zero() && !s.m(q, i).is_zero())
                rhs[static_cast<long>(p) * dyx + q] += c * s.m(p, j) * s.m(q, i);
        }
        prune(lhs);
        prune(rhs);
        if (!tensors_equal(lhs, rhs) && !lemma_delta.triggered)
          lemma_delta.set("Delta . S != twist . (S(x)S) . Delta at component (" + std::to_string(x + 1) + "," +
                          std::to_string(y + 1) + ")");
      }
    }
  rep.add("antipode-antimultiplicative", !lemma_mu.triggered, lemma_mu.text);
  rep.add("antipode-anticomultiplicative", !lemma_delta.triggered, lemma_delta.text);
  return rep;
}

HopfCategoryAlgebra hopf_category_alg(const HopfCategory& h) {
  Report rep = check_hopf_category(h);
  if (!rep.ok()) throw CheckFailure("Hopf category laws fail", rep);
  const int n = h.nobj;
  std::vector<std::string> labels;
  std::vector<int> offset(static_cast<std::size_t>(n * n), 0);
  int total = 0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      offset[static_cast<std::size_t>(x * n + y)] = total;
      const BasedSpace& comp = h.at(x, y);
      for (Eigen::Index b = 0; b < comp.dim(); ++b)
        labels.push_back("(" + std::to_string(x + 1) + "," + std::to_string(y + 1) + "):" + comp.label(b));
      total += static_cast<int>(comp.dim());
    }
  BasedSpace space{labels};
  const Eigen::Index d = space.dim();
  Mat mult(d, d * d);
  mult.setZero();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const Eigen::Index dxy = h.at(x, y).dim(), dyz = h.at(y, z).dim();
        const LinMap& mu = h.mu(x, y, z);
        for (Eigen::Index a = 0; a < dxy; ++a)
          for (Eigen::Index b = 0; b < dyz; ++b) {
            Eigen::Index col = static_cast<Eigen::Index>(offset[static_cast<std::size_t>(x * n + y)] + a) * d +
                               offset[static_cast<std::size_t>(y * n + z)] + b;
            Vec prod = mu.apply(kron(h.at(x, y).basis_vector(a), h.at(y, z).basis_vector(b)));
            for (Eigen::Index r = 0; r < prod.size(); ++r)
              if (!prod(r).is_zero()) mult(offset[static_cast<std::size_t>(x * n + z)] + r, col) = prod(r);
          }
      }
  Vec unit(d);
  unit.setZero();
  std::vector<Vec> local;
  for (int x = 0; x < n; ++x) {
    Vec lu(d);
    lu.setZero();
    const Vec& e = h.eta[static_cast<std::size_t>(x)];
    for (Eigen::Index r = 0; r < e.size(); ++r) {
      lu(offset[static_cast<std::size_t>(x * n + x)] + r) = e(r);
      unit(offset[static_cast<std::size_t>(x * n + x)] + r) += e(r);
    }
    local.push_back(std::move(lu));
  }
  Mat comult(d * d, d);
  comult.setZero();
  Mat eps(1, d);
  eps.setZero();
  Mat sm(d, d);
  sm.setZero();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const BasedSpace& comp = h.at(x, y);
      int off = offset[static_cast<std::size_t>(x * n + y)];
      int soff = offset[static_cast<std::size_t>(y * n + x)];
      const LinMap& s = h.antipode[static_cast<std::size_t>(x * n + y)];
      for (Eigen::Index b = 0; b < comp.dim(); ++b) {
        SparseTensor db = map_delta(h.comult[static_cast<std::size_t>(x * n + y)], comp.basis_vector(b));
        for (auto& [k, c] : db) {
          Eigen::Index i = k / comp.dim(), j = k % comp.dim();
          comult((static_cast<Eigen::Index>(off) + i) * d + off + j, off + b) = c;
        }
        eps(0, off + b) = (h.counit[static_cast<std::size_t>(x * n + y)].m * comp.basis_vector(b))(0);
        for (Eigen::Index r = 0; r < s.m.rows(); ++r)
          if (!s.m(r, b).is_zero()) sm(soff + r, off + b) = s.m(r, b);
      }
    }
  FinAlgebra H(space, LinMap(tensor(space, space), space, std::move(mult)), unit, local);
  FinCoalgebra C(space, LinMap(space, tensor(space, space), std::move(comult)),
                 LinMap(space, BasedSpace({"1"}), std::move(eps)));
  Qisg q{std::move(H), std::move(C), LinMap(space, space, std::move(sm)), true, true};
  return HopfCategoryAlgebra{std::move(q), std::move(local)};
}

HopfCategory trivial_hopf_category(int n) {
  HopfCategory h;
  h.nobj = n;
  BasedSpace k({"1"});
  BasedSpace kk = tensor(k, k);
  Mat dm(1, 1);
  dm(0, 0) = Rational(1);
  Mat cm(1, 1);
  cm(0, 0) = Rational(1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      h.comp.push_back(k);
      h.comult.push_back(LinMap(k, kk, dm));
      h.counit.push_back(LinMap(k, k, cm));
      h.antipode.push_back(LinMap(k, k, cm));
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) h.mult.push_back(LinMap(kk, k, dm.transpose().eval()));
  Vec eta(1);
  eta(0) = Rational(1);
  h.eta.assign(static_cast<std::size_t>(n), eta);
  return h;
}

HopfCategory one_object_hopf_category(const FinAlgebra& alg, const FinCoalgebra& c, const LinMap& antipode) {
  if (!alg.unit()) throw std::invalid_argument("one-object Hopf category needs a unital algebra");
  HopfCategory h;
  h.nobj = 1;
  h.comp.push_back(alg.space());
  h.comult.push_back(c.comult());
  if (!c.counit()) throw std::invalid_argument("one-object Hopf category needs a counit");
  h.counit.push_back(*c.counit());
  h.antipode.push_back(antipode);
  h.mult.push_back(alg.mult());
  h.eta.push_back(*alg.unit());
  return h;
}

namespace {

using Monomial = std::vector<std::pair<int, int>>;  // sorted (row, col) pairs

std::string monomial_label(const Monomial& m) {
  if (m.empty()) return "1";
  std::string out;
  for (std::size_t t = 0; t < m.size(); ++t) {
    if (t) out += "*";
    out += "u" + std::to_string(m[t].first + 1) + std::to_string(m[t].second + 1);
  }
  return out;
}

// union if rows and columns stay pairwise distinct, nullopt when the
// relations kill the product
std::optional<Monomial> monomial_product(const Monomial& a, const Monomial& b) {
  Monomial u = a;
  for (auto& p : b)
    if (std::find(u.begin(), u.end(), p) == u.end()) u.push_back(p);
  std::sort(u.begin(), u.end());
  for (std::size_t s = 0; s < u.size(); ++s)
    for (std::size_t t = s + 1; t < u.size(); ++t)
      if (u[s].first == u[t].first || u[s].second == u[t].second) return std::nullopt;
  return u;
}

}  // namespace

Qisg hadamard_qisg(int n) {
  if (n < 1 || n > 3) throw std::invalid_argument("hadamard_qisg supports n in 1..3");
  // enumerate monomials with distinct rows and distinct columns, by size
  std::vector<Monomial> basis;
  std::vector<unsigned> row_subsets;
  for (unsigned mask = 0; mask < (1u << n); ++mask) row_subsets.push_back(mask);
  std::sort(row_subsets.begin(), row_subsets.end(), [](unsigned a, unsigned b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  for (unsigned mask : row_subsets) {
    std::vector<int> rows;
    for (int r = 0; r < n; ++r)
      if (mask & (1u << r)) rows.push_back(r);
    std::vector<int> cols(rows.size());
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    auto dfs = [&](auto&& self, std::size_t pos) -> void {
      if (pos == rows.size()) {
        Monomial m;
        for (std::size_t t = 0; t < rows.size(); ++t) m.emplace_back(rows[t], cols[t]);
        basis.push_back(std::move(m));
        return;
      }
      for (int c = 0; c < n; ++c) {
        if (used[static_cast<std::size_t>(c)]) continue;
        used[static_cast<std::size_t>(c)] = true;
        cols[pos] = c;
        self(self, pos + 1);
        used[static_cast<std::size_t>(c)] = false;
      }
    };
    dfs(dfs, 0);
  }
  std::map<std::string, int> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    labels.push_back(monomial_label(basis[i]));
    index[labels.back()] = static_cast<int>(i);
  }
  BasedSpace space{labels};
  const Eigen::Index d = space.dim();
  Mat mult(d, d * d);
  mult.setZero();
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) {
      auto prod = monomial_product(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]);
      if (prod) mult(index.at(monomial_label(*prod)), i * d + j) = Rational(1);
    }
  Vec unit(d);
  unit.setZero();
  unit(index.at("1")) = Rational(1);

  // Delta(u_i1j1 ... u_iNjN) = sum over injective k-tuples of
  // (u_i1k1...u_iNkN) (x) (u_k1j1...u_kNjN), from the generator rule applied
  // multiplicatively.
  Mat comult(d * d, d);
  comult.setZero();
  for (Eigen::Index b = 0; b < d; ++b) {
    const Monomial& m = basis[static_cast<std::size_t>(b)];
    std::vector<int> ks(m.size());
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    auto dfs = [&](auto&& self, std::size_t pos) -> void {
      if (pos == m.size()) {
        Monomial left, right;
        for (std::size_t t = 0; t < m.size(); ++t) {
          left.emplace_back(m[t].first, ks[t]);
          right.emplace_back(ks[t], m[t].second);
        }
        std::sort(left.begin(), left.end());
        std::sort(right.begin(), right.end());
        comult(static_cast<Eigen::Index>(index.at(monomial_label(left))) * d + index.at(monomial_label(right)), b) +=
            Rational(1);
        return;
      }
      for (int k = 0; k < n; ++k) {
        if (used[static_cast<std::size_t>(k)]) continue;
        used[static_cast<std::size_t>(k)] = true;
        ks[pos] = k;
        self(self, pos + 1);
        used[static_cast<std::size_t>(k)] = false;
      }
    };
    dfs(dfs, 0);
  }
  Mat eps(1, d);
  eps.setZero();
  for (Eigen::Index b = 0; b < d; ++b) {
    bool diag = true;
    for (auto& [r, c] : basis[static_cast<std::size_t>(b)])
      if (r != c) diag = false;
    eps(0, b) = diag ? Rational(1) : Rational(0);
  }
  Mat sm(d, d);
  sm.setZero();
  for (Eigen::Index b = 0; b < d; ++b) {
    Monomial t;
    for (auto& [r, c] : basis[static_cast<std::size_t>(b)]) t.emplace_back(c, r);
    std::sort(t.begin(), t.end());
    sm(index.at(monomial_label(t)), b) = Rational(1);
  }
  FinAlgebra H(space, LinMap(tensor(space, space), space, std::move(mult)), unit);
  FinCoalgebra C(space, LinMap(space, tensor(space, space), std::move(comult)),
                 LinMap(space, BasedSpace({"1"}), std::move(eps)));
  return Qisg{std::move(H), std::move(C), LinMap(space, space, std::move(sm)), true, true};
}

Qisg partial_group_qisg(const FinGroup& g) {
  const int n = g.size();
  if (n > 6) throw std::invalid_argument("partial_group_qisg: practical bound is |G| <= 6");
  // normal-form basis eps_A [g] <-> (A, g) with {1, g} <= A <= G; the product
  // eps_A[g] eps_B[h] = eps_{A u gB}[gh] is computed here from scratch
  struct El {
    unsigned mask;
    int gidx;
  };
  std::vector<El> els;
  std::map<std::pair<unsigned, int>, int> index;
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    for (int gi = 0; gi < n; ++gi)
      if ((mask & 1u) && (mask & (1u << gi))) {
        index[{mask, gi}] = static_cast<int>(els.size());
        els.push_back({mask, gi});
      }
  std::vector<std::string> labels;
  for (const auto& e : els) {
    std::string out = "({";
    bool first = true;
    for (int x = 0; x < n; ++x)
      if (e.mask & (1u << x)) {
        if (!first) out += ",";
        first = false;
        out += g.elems[static_cast<std::size_t>(x)];
      }
    labels.push_back(out + "}," + g.elems[static_cast<std::size_t>(e.gidx)] + ")");
  }
  BasedSpace space{labels};
  const Eigen::Index d = space.dim();
  Mat mult(d, d * d);
  mult.setZero();
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) {
      unsigned shifted = 0;
      for (int x = 0; x < n; ++x)
        if (els[static_cast<std::size_t>(j)].mask & (1u << x))
          shifted |= 1u << g.op(els[static_cast<std::size_t>(i)].gidx, x);
      int target = index.at({els[static_cast<std::size_t>(i)].mask | shifted,
                             g.op(els[static_cast<std::size_t>(i)].gidx, els[static_cast<std::size_t>(j)].gidx)});
      mult(target, i * d + j) = Rational(1);
    }
  Vec unit(d);
  unit.setZero();
  unit(index.at({1u, 0})) = Rational(1);
  Mat comult(d * d, d);
  comult.setZero();
  for (Eigen::Index b = 0; b < d; ++b) comult(b * d + b, b) = Rational(1);
  Mat eps(1, d);
  for (Eigen::Index b = 0; b < d; ++b) eps(0, b) = Rational(1);
  Mat sm(d, d);
  sm.setZero();
  for (Eigen::Index b = 0; b < d; ++b) {
    unsigned mask = els[static_cast<std::size_t>(b)].mask;
    int gi = els[static_cast<std::size_t>(b)].gidx;
    int ginv = g.inv[static_cast<std::size_t>(gi)];
    unsigned shifted = 0;
    for (int x = 0; x < n; ++x)
      if (mask & (1u << x)) shifted |= 1u << g.op(ginv, x);
    sm(index.at({shifted, ginv}), b) = Rational(1);
  }
  FinAlgebra H(space, LinMap(tensor(space, space), space, std::move(mult)), unit);
  FinCoalgebra C(space, LinMap(space, tensor(space, space), std::move(comult)),
                 LinMap(space, BasedSpace({"1"}), std::move(eps)));
  return Qisg{std::move(H), std::move(C), LinMap(space, space, std::move(sm)), true, true};
}

Report check_partial_rep(const LinMap& pi, const FinGroup& g, const FinAlgebra& b) {
  Report rep;
  rep.title = "partial representation axioms PR1-PR5";
  const int n = g.size();
  if (pi.m.cols() != n || pi.cod != b.space())
    throw std::invalid_argument("check_partial_rep: pi must map kG to B");
  if (!b.unit()) throw std::invalid_argument("check_partial_rep: B must be unital");
  auto p = [&](int gi) { return Vec(pi.column(gi)); };
  auto pinv = [&](int gi) { return Vec(pi.column(g.inv[static_cast<std::size_t>(gi)])); };

  rep.add("PR1", exact_equal(p(0), *b.unit()),
          exact_equal(p(0), *b.unit()) ? "" : "pi(1_H) = " + pretty(p(0), b.space()) + " != 1_B");

  Witness w2, w3, w4, w5;
  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k) {
      std::string at = " at (h, k) = (" + g.elems[static_cast<std::size_t>(h)] + ", " + g.elems[static_cast<std::size_t>(k)] + ")";
      Vec lhs = b.mul(b.mul(p(h), p(k)), pinv(k));
      Vec rhs = b.mul(p(g.op(h, k)), pinv(k));
      if (!exact_equal(lhs, rhs)) w2.set("pi(h)pi(k)pi(k^-1) != pi(hk)pi(k^-1)" + at);
      Vec lhs3 = b.mul(b.mul(p(h), pinv(h)), p(k));
      Vec rhs3 = b.mul(p(h), p(g.op(g.inv[static_cast<std::size_t>(h)], k)));
      if (!exact_equal(lhs3, rhs3)) w3.set("pi(h)pi(h^-1)pi(k) != pi(h)pi(h^-1 k)" + at);
      Vec lhs4 = b.mul(b.mul(p(h), pinv(k)), p(k));
      Vec rhs4 = b.mul(p(g.op(h, g.inv[static_cast<std::size_t>(k)])), p(k));
      if (!exact_equal(lhs4, rhs4)) w4.set("pi(h)pi(k^-1)pi(k) != pi(hk^-1)pi(k)" + at);
      Vec lhs5 = b.mul(pinv(h), b.mul(p(h), p(k)));
      Vec rhs5 = b.mul(pinv(h), p(g.op(h, k)));
      if (!exact_equal(lhs5, rhs5)) w5.set("pi(h^-1)pi(h)pi(k) != pi(h^-1)pi(hk)" + at);
    }
  rep.add("PR2", !w2.triggered, w2.text);
  rep.add("PR3", !w3.triggered, w3.text);
  rep.add("PR4", !w4.triggered, w4.text);
  rep.add("PR5", !w5.triggered, w5.text);
  return rep;
}

std::vector<int> antipode_alternatives(const Qisg& q, const std::vector<LinMap>& alternatives) {
  std::vector<int> out;
  for (std::size_t a = 0; a < alternatives.size(); ++a) {
    Qisg probe = q;
    probe.antipode = alternatives[a];
    Report rep = check_qisg(probe);
    const CheckItem* row = rep.find("QISG3");
    if (row && row->pass && !exact_equal(alternatives[a].m, q.antipode.m)) out.push_back(static_cast<int>(a));
  }
  return out;
}

}  // namespace qisg
