#include "qisg/algebroid.hpp"

#include <map>
#include <stdexcept>

namespace qisg {

namespace {

struct LiftTerm {
  int i, j;
  Rational c;
};

std::vector<LiftTerm> lift_terms(const LinMap& lift, int b) {
  const Eigen::Index d = lift.dom.dim();
  std::vector<LiftTerm> out;
  for (Eigen::Index k = 0; k < lift.m.rows(); ++k)
    if (!lift.m(k, b).is_zero())
      out.push_back({static_cast<int>(k / d), static_cast<int>(k % d), lift.m(k, b)});
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

// triple balanced tensor: (H(x)H(x)H) / (B12 (x) H + H (x) B23)
Subspace triple_balancing(const BasedSpace& h, const Subspace& b12, const Subspace& b23) {
  BasedSpace hhh = tensor(tensor(h, h), h);
  Subspace out(hhh);
  const Eigen::Index d = h.dim(), dd = d * d;
  for (const Vec& row : b12.echelon())
    for (Eigen::Index m = 0; m < d; ++m) {
      Vec v(dd * d);
      v.setZero();
      for (Eigen::Index k = 0; k < dd; ++k)
        if (!row(k).is_zero()) v(k * d + m) = row(k);
      out.insert(v);
    }
  for (const Vec& row : b23.echelon())
    for (Eigen::Index m = 0; m < d; ++m) {
      Vec v(dd * d);
      v.setZero();
      for (Eigen::Index k = 0; k < dd; ++k)
        if (!row(k).is_zero()) v(m * dd + k) = row(k);
      out.insert(v);
    }
  return out;
}

}  // namespace

std::vector<Vec> left_balancing_generators(const FinAlgebra& h, const LinMap& s, const LinMap& t) {
  const Eigen::Index d = h.dim(), da = s.dom.dim();
  std::vector<Vec> gens;
  gens.reserve(static_cast<std::size_t>(da * d * d));
  for (Eigen::Index a = 0; a < da; ++a) {
    Vec sa = s.column(a), ta = t.column(a);
    for (Eigen::Index i = 0; i < d; ++i) {
      Vec sh = h.mul(sa, h.space().basis_vector(i));
      for (Eigen::Index j = 0; j < d; ++j) {
        Vec tk = h.mul(ta, h.space().basis_vector(j));
        Vec g(d * d);
        g.setZero();
        for (Eigen::Index r = 0; r < d; ++r) {
          if (!sh(r).is_zero()) g(r * d + j) += sh(r);
          if (!tk(r).is_zero()) g(i * d + r) -= tk(r);
        }
        gens.push_back(std::move(g));
      }
    }
  }
  return gens;
}

std::vector<Vec> right_balancing_generators(const FinAlgebra& h, const LinMap& s, const LinMap& t) {
  const Eigen::Index d = h.dim(), da = s.dom.dim();
  std::vector<Vec> gens;
  gens.reserve(static_cast<std::size_t>(da * d * d));
  for (Eigen::Index a = 0; a < da; ++a) {
    Vec sa = s.column(a), ta = t.column(a);
    for (Eigen::Index i = 0; i < d; ++i) {
      Vec hs = h.mul(h.space().basis_vector(i), sa);
      for (Eigen::Index j = 0; j < d; ++j) {
        Vec kt = h.mul(h.space().basis_vector(j), ta);
        Vec g(d * d);
        g.setZero();
        for (Eigen::Index r = 0; r < d; ++r) {
          if (!hs(r).is_zero()) g(r * d + j) += hs(r);
          if (!kt(r).is_zero()) g(i * d + r) -= kt(r);
        }
        gens.push_back(std::move(g));
      }
    }
  }
  return gens;
}

void HopfAlgebroid::refresh_balancing() {
  BasedSpace hh = tensor(H.space(), H.space());
  balancing_l = Subspace(hh, left_balancing_generators(H, s, t));
  balancing_r = Subspace(hh, right_balancing_generators(H, s, t));
}

Report check_hopf_algebroid(const HopfAlgebroid& x) {
  Report rep;
  rep.title = "Hopf algebroid axioms (" + x.name + ", " +
              (x.mode == AlgebroidMode::commutative ? "commutative" : "restricted noncommutative") + " mode)";
  const FinAlgebra& H = x.H;
  const FinAlgebra& A = x.A.alg;
  const Eigen::Index d = H.dim(), da = A.dim();
  rep.count("dim H", static_cast<long>(d));
  rep.count("dim A", static_cast<long>(da));
  const bool comm = x.mode == AlgebroidMode::commutative;
  auto hlbl = [&](Eigen::Index i) { return H.space().label(i); };

  if (!H.unit()) {
    rep.add("unital-algebra", false, "H must be unital");
    return rep;
  }

  if (comm) {
    Witness w;
    for (Eigen::Index i = 0; i < d && !w.triggered; ++i)
      for (Eigen::Index j = 0; j < d && !w.triggered; ++j)
        if (!exact_equal(H.mul(H.space().basis_vector(i), H.space().basis_vector(j)),
                         H.mul(H.space().basis_vector(j), H.space().basis_vector(i))))
          w.set("H is not commutative at (" + hlbl(i) + ", " + hlbl(j) + ")");
    rep.add("algebra-commutative", !w.triggered, w.text);
  }

  {
    Witness ws, wt, wc;
    for (Eigen::Index a = 0; a < da; ++a)
      for (Eigen::Index b = 0; b < da; ++b) {
        Vec ab = A.mul(A.space().basis_vector(a), A.space().basis_vector(b));
        Vec s_ab = x.s.m * ab, t_ab = x.t.m * ab;
        if (!exact_equal(s_ab, H.mul(x.s.column(a), x.s.column(b))) && !ws.triggered)
          ws.set("s not multiplicative at (" + A.space().label(a) + ", " + A.space().label(b) + ")");
        if (!exact_equal(t_ab, H.mul(x.t.column(b), x.t.column(a))) && !wt.triggered)
          wt.set("t not antimultiplicative at (" + A.space().label(a) + ", " + A.space().label(b) + ")");
        if (!exact_equal(H.mul(x.s.column(a), x.t.column(b)), H.mul(x.t.column(b), x.s.column(a))) && !wc.triggered)
          wc.set("images of s and t fail to commute at (" + A.space().label(a) + ", " + A.space().label(b) + ")");
      }
    Vec one_a(da);
    one_a.setZero();
    for (Eigen::Index a = 0; a < da; ++a) one_a(a) = Rational(1);  // 1_A in the split basis
    if (!exact_equal(Vec(x.s.m * one_a), *H.unit()) && !ws.triggered) ws.set("s(1_A) != 1_H");
    if (!exact_equal(Vec(x.t.m * one_a), *H.unit()) && !wt.triggered) wt.set("t(1_A) != 1_H");
    rep.add("source-multiplicative", !ws.triggered, ws.text);
    rep.add("target-antimultiplicative", !wt.triggered, wt.text);
    rep.add("source-target-commute", !wc.triggered, wc.text);
  }

  // the stored balancing subspaces must be the ones generated by s and t
  {
    Witness w;
    auto check_side = [&](const Subspace& stored, const std::vector<Vec>& gens, const char* side) {
      Subspace fresh(tensor(H.space(), H.space()), gens);
      if (fresh.rank() != stored.rank()) {
        w.set(std::string(side) + " balancing rank mismatch: stored " + std::to_string(stored.rank()) +
              ", generated " + std::to_string(fresh.rank()));
        return;
      }
      for (const Vec& g : gens)
        if (!stored.contains(g)) {
          w.set(std::string(side) + " balancing does not contain a generator");
          return;
        }
    };
    check_side(x.balancing_l, left_balancing_generators(H, x.s, x.t), "left");
    if (!w.triggered) check_side(x.balancing_r, right_balancing_generators(H, x.s, x.t), "right");
    rep.add("balancing-consistent", !w.triggered, w.text);
  }

  // Takeuchi containment: the lift lands in H x_A H modulo balancing
  {
    Witness wl, wr;
    for (Eigen::Index b = 0; b < d; ++b) {
      auto terms_l = lift_terms(x.comult_l, static_cast<int>(b));
      auto terms_r = lift_terms(x.comult_r, static_cast<int>(b));
      for (Eigen::Index a = 0; a < da; ++a) {
        Vec sa = x.s.column(a), ta = x.t.column(a);
        Vec diff_l(d * d), diff_r(d * d);
        diff_l.setZero();
        diff_r.setZero();
        for (auto& tm : terms_l) {
          // LB3 with t_l = s, s_l = t: sum h_i s(a) (x) k_i = sum h_i (x) k_i t(a)
          Vec hs = H.mul(H.space().basis_vector(tm.i), sa);
          Vec kt = H.mul(H.space().basis_vector(tm.j), ta);
          for (Eigen::Index r = 0; r < d; ++r) {
            if (!hs(r).is_zero()) diff_l(r * d + tm.j) += tm.c * hs(r);
            if (!kt(r).is_zero()) diff_l(tm.i * d + r) -= tm.c * kt(r);
          }
        }
        for (auto& tm : terms_r) {
          // RB3 with s_r = s, t_r = t: sum s(a) h_i (x) k_i = sum h_i (x) t(a) k_i
          Vec sh = H.mul(sa, H.space().basis_vector(tm.i));
          Vec tk = H.mul(ta, H.space().basis_vector(tm.j));
          for (Eigen::Index r = 0; r < d; ++r) {
            if (!sh(r).is_zero()) diff_r(r * d + tm.j) += tm.c * sh(r);
            if (!tk(r).is_zero()) diff_r(tm.i * d + r) -= tm.c * tk(r);
          }
        }
        if (!x.balancing_l.contains(diff_l) && !wl.triggered)
          wl.set("left Takeuchi containment fails at h = " + hlbl(b) + ", a = " + A.space().label(a));
        if (!x.balancing_r.contains(diff_r) && !wr.triggered)
          wr.set("right Takeuchi containment fails at h = " + hlbl(b) + ", a = " + A.space().label(a));
      }
    }
    rep.add("takeuchi-left", !wl.triggered, wl.text);
    rep.add("takeuchi-right", !wr.triggered, wr.text);
  }

  // comultiplication lifts are multiplicative modulo balancing
  {
    auto check_mult = [&](const LinMap& lift, const Subspace& bal, const char* which, Report& out) {
      Witness w;
      for (Eigen::Index i = 0; i < d && !w.triggered; ++i)
        for (Eigen::Index j = 0; j < d && !w.triggered; ++j) {
          Vec diff(d * d);
          diff.setZero();
          for (auto& [k, c] : H.basis_product(static_cast<int>(i), static_cast<int>(j)))
            for (auto& tm : lift_terms(lift, k)) diff(static_cast<Eigen::Index>(tm.i) * d + tm.j) += c * tm.c;
          for (auto& t1 : lift_terms(lift, static_cast<int>(i)))
            for (auto& t2 : lift_terms(lift, static_cast<int>(j))) {
              Vec p1 = H.mul(H.space().basis_vector(t1.i), H.space().basis_vector(t2.i));
              Vec p2 = H.mul(H.space().basis_vector(t1.j), H.space().basis_vector(t2.j));
              Rational cc = t1.c * t2.c;
              for (Eigen::Index r1 = 0; r1 < d; ++r1) {
                if (p1(r1).is_zero()) continue;
                for (Eigen::Index r2 = 0; r2 < d; ++r2)
                  if (!p2(r2).is_zero()) diff(r1 * d + r2) -= cc * p1(r1) * p2(r2);
              }
            }
          if (!bal.contains(diff))
            w.set("Delta(hk) != Delta(h)Delta(k) mod balancing at (" + hlbl(i) + ", " + hlbl(j) + ")");
        }
      out.add(std::string("comult-") + which + "-multiplicative", !w.triggered, w.text);
    };
    check_mult(x.comult_l, x.balancing_l, "l", rep);
    if (!comm) check_mult(x.comult_r, x.balancing_r, "r", rep);
  }

  // coassociativity modulo the triple balancing, and HA3 in restricted mode
  {
    auto coassoc = [&](const LinMap& outer_first, const LinMap& inner_first, const LinMap& outer_second,
                       const LinMap& inner_second, const Subspace& b12, const Subspace& b23) -> std::pair<bool, std::string> {
      Subspace triple = triple_balancing(H.space(), b12, b23);
      for (Eigen::Index b = 0; b < d; ++b) {
        std::map<long, Rational> acc;
        for (auto& tm : lift_terms(outer_first, static_cast<int>(b)))
          for (auto& t2 : lift_terms(inner_first, tm.i))
            acc[(static_cast<long>(t2.i) * d + t2.j) * d + tm.j] += tm.c * t2.c;
        for (auto& tm : lift_terms(outer_second, static_cast<int>(b)))
          for (auto& t2 : lift_terms(inner_second, tm.j))
            acc[(static_cast<long>(tm.i) * d + t2.i) * d + t2.j] -= tm.c * t2.c;
        Vec diff(d * d * d);
        diff.setZero();
        for (auto& [k, v] : acc) diff(k) = v;
        if (!triple.contains(diff)) return {false, "fails at h = " + hlbl(b)};
      }
      return {true, ""};
    };
    auto [okl, wl] = coassoc(x.comult_l, x.comult_l, x.comult_l, x.comult_l, x.balancing_l, x.balancing_l);
    rep.add("coassociative-l", okl, wl);
    if (!comm) {
      auto [okr, wr] = coassoc(x.comult_r, x.comult_r, x.comult_r, x.comult_r, x.balancing_r, x.balancing_r);
      rep.add("coassociative-r", okr, wr);
      auto [ok1, w1] = coassoc(x.comult_r, x.comult_l, x.comult_l, x.comult_r, x.balancing_l, x.balancing_r);
      rep.add("ha3-mixed-lr", ok1, w1);
      auto [ok2, w2] = coassoc(x.comult_l, x.comult_r, x.comult_r, x.comult_l, x.balancing_r, x.balancing_l);
      rep.add("ha3-mixed-rl", ok2, w2);
    }
  }

  // counit laws, via the lifts
  {
    Witness w1, w2;
    for (Eigen::Index b = 0; b < d; ++b) {
      Vec acc1(d), acc2(d);
      acc1.setZero();
      acc2.setZero();
      for (auto& tm : lift_terms(x.comult_l, static_cast<int>(b))) {
        Vec te = x.t.m * x.counit_l.column(tm.i);
        Vec prod = H.mul(te, H.space().basis_vector(tm.j));  // t(eps_l(h1)) h2
        Vec se = x.s.m * x.counit_l.column(tm.j);
        Vec prod2 = H.mul(se, H.space().basis_vector(tm.i));  // s(eps_l(h2)) h1
        for (Eigen::Index r = 0; r < d; ++r) {
          acc1(r) += tm.c * prod(r);
          acc2(r) += tm.c * prod2(r);
        }
      }
      if (!exact_equal(acc1, H.space().basis_vector(b)) && !w1.triggered)
        w1.set("t(eps_l(h_(1))) h_(2) != h at " + hlbl(b) + ": got " + pretty(acc1, H.space()));
      if (!exact_equal(acc2, H.space().basis_vector(b)) && !w2.triggered)
        w2.set("s(eps_l(h_(2))) h_(1) != h at " + hlbl(b) + ": got " + pretty(acc2, H.space()));
    }
    rep.add("counit-l-law-1", !w1.triggered, w1.text);
    rep.add("counit-l-law-2", !w2.triggered, w2.text);
  }
  if (!comm) {
    Witness w1, w2;
    for (Eigen::Index b = 0; b < d; ++b) {
      Vec acc1(d), acc2(d);
      acc1.setZero();
      acc2.setZero();
      for (auto& tm : lift_terms(x.comult_r, static_cast<int>(b))) {
        Vec te = x.t.m * x.counit_r.column(tm.i);
        Vec prod = H.mul(H.space().basis_vector(tm.j), te);  // h^2 t(eps_r(h^1))
        Vec se = x.s.m * x.counit_r.column(tm.j);
        Vec prod2 = H.mul(H.space().basis_vector(tm.i), se);  // h^1 s(eps_r(h^2))
        for (Eigen::Index r = 0; r < d; ++r) {
          acc1(r) += tm.c * prod(r);
          acc2(r) += tm.c * prod2(r);
        }
      }
      if (!exact_equal(acc1, H.space().basis_vector(b)) && !w1.triggered)
        w1.set("h^(2) t(eps_r(h^(1))) != h at " + hlbl(b));
      if (!exact_equal(acc2, H.space().basis_vector(b)) && !w2.triggered)
        w2.set("h^(1) s(eps_r(h^(2))) != h at " + hlbl(b));
    }
    rep.add("counit-r-law-1", !w1.triggered, w1.text);
    rep.add("counit-r-law-2", !w2.triggered, w2.text);
  } else {
    rep.add("counits-coincide", exact_equal(x.counit_l.m, x.counit_r.m),
            exact_equal(x.counit_l.m, x.counit_r.m) ? "" : "commutative mode stores one counit twice");
  }

  if (comm) {
    bool ok = exact_equal(Mat(x.counit_l.m * x.s.m), Mat(Mat::Identity(da, da))) &&
              exact_equal(Mat(x.counit_l.m * x.t.m), Mat(Mat::Identity(da, da)));
    rep.add("counit-sections", ok, ok ? "" : "eps . s or eps . t is not the identity of A");
    Witness w;
    for (Eigen::Index i = 0; i < d && !w.triggered; ++i)
      for (Eigen::Index j = 0; j < d && !w.triggered; ++j) {
        Vec lhs = x.counit_l.m * H.mul(H.space().basis_vector(i), H.space().basis_vector(j));
        Vec rhs = A.mul(x.counit_l.column(i), x.counit_l.column(j));
        if (!exact_equal(lhs, rhs)) w.set("eps(hk) != eps(h)eps(k) at (" + hlbl(i) + ", " + hlbl(j) + ")");
      }
    rep.add("counit-morphism", !w.triggered, w.text);
  } else {
    bool ok = exact_equal(Mat(x.t.m * x.counit_l.m * x.t.m), x.t.m) &&
              exact_equal(Mat(x.s.m * x.counit_l.m * x.s.m), x.s.m) &&
              exact_equal(Mat(x.s.m * x.counit_r.m * x.s.m), x.s.m) &&
              exact_equal(Mat(x.t.m * x.counit_r.m * x.t.m), x.t.m);
    rep.add("ha2", ok, ok ? "" : "one of the HA2 section identities fails");
  }

  {
    bool ok1 = exact_equal(Mat(x.antipode.m * x.s.m), x.t.m);
    bool ok2 = exact_equal(Mat(x.antipode.m * x.t.m), x.s.m);
    rep.add("antipode-swaps-source-target", ok1 && ok2,
            ok1 && ok2 ? "" : (ok1 ? "S . t != s" : "S . s != t"));
  }

  // HA5 through the lifts: S(h_(1)) h_(2) = s(eps_r(h)), h^(1) S(h^(2)) = t(eps_l(h))
  {
    Witness w1, w2;
    for (Eigen::Index b = 0; b < d; ++b) {
      Vec acc1(d), acc2(d);
      acc1.setZero();
      acc2.setZero();
      for (auto& tm : lift_terms(x.comult_l, static_cast<int>(b))) {
        Vec prod = H.mul(x.antipode.column(tm.i), H.space().basis_vector(tm.j));
        for (Eigen::Index r = 0; r < d; ++r) acc1(r) += tm.c * prod(r);
      }
      for (auto& tm : lift_terms(x.comult_r, static_cast<int>(b))) {
        Vec prod = H.mul(H.space().basis_vector(tm.i), x.antipode.column(tm.j));
        for (Eigen::Index r = 0; r < d; ++r) acc2(r) += tm.c * prod(r);
      }
      Vec rhs1 = x.s.m * x.counit_r.column(b);
      Vec rhs2 = x.t.m * x.counit_l.column(b);
      if (!exact_equal(acc1, rhs1) && !w1.triggered)
        w1.set("S(h_(1))h_(2) != s(eps_r(h)) at " + hlbl(b) + ": " + pretty(acc1, H.space()) + " vs " +
               pretty(rhs1, H.space()));
      if (!exact_equal(acc2, rhs2) && !w2.triggered)
        w2.set("h^(1)S(h^(2)) != t(eps_l(h)) at " + hlbl(b) + ": " + pretty(acc2, H.space()) + " vs " +
               pretty(rhs2, H.space()));
    }
    rep.add("antipode-left-law", !w1.triggered, w1.text);
    rep.add("antipode-right-law", !w2.triggered, w2.text);
  }

  // HA4: S(s(a) h t(b)) = s(b) S(h) t(a)
  {
    Witness w;
    for (Eigen::Index a = 0; a < da && !w.triggered; ++a)
      for (Eigen::Index b = 0; b < da && !w.triggered; ++b)
        for (Eigen::Index i = 0; i < d && !w.triggered; ++i) {
          Vec inner = H.mul(H.mul(x.s.column(a), H.space().basis_vector(i)), x.t.column(b));
          Vec lhs = x.antipode.m * inner;
          Vec rhs = H.mul(H.mul(x.s.column(b), x.antipode.column(i)), x.t.column(a));
          if (!exact_equal(lhs, rhs))
            w.set("HA4 fails at a = " + A.space().label(a) + ", h = " + hlbl(i) + ", b = " + A.space().label(b));
        }
    rep.add("antipode-ha4", !w.triggered, w.text);
  }

  if (comm) {
    Witness w;
    for (Eigen::Index b = 0; b < d && !w.triggered; ++b) {
      Vec acc1(d), acc2(d);
      acc1.setZero();
      acc2.setZero();
      for (auto& tm : lift_terms(x.comult_l, static_cast<int>(b)))
        for (auto& t2 : lift_terms(x.comult_l, tm.i)) {
          // h_(1) S(h_(2)) h_(3) and S(h_(1)) h_(2) S(h_(3))
          Vec p1 = H.mul(H.mul(H.space().basis_vector(t2.i), x.antipode.column(t2.j)),
                         H.space().basis_vector(tm.j));
          Vec p2 = H.mul(H.mul(x.antipode.column(t2.i), H.space().basis_vector(t2.j)), x.antipode.column(tm.j));
          Rational cc = tm.c * t2.c;
          for (Eigen::Index r = 0; r < d; ++r) {
            acc1(r) += cc * p1(r);
            acc2(r) += cc * p2(r);
          }
        }
      if (!exact_equal(acc1, H.space().basis_vector(b)))
        w.set("h_(1)S(h_(2))h_(3) != h at " + hlbl(b) + ": got " + pretty(acc1, H.space()));
      else if (!exact_equal(acc2, Vec(x.antipode.column(b))))
        w.set("S(h_(1))h_(2)S(h_(3)) != S(h) at " + hlbl(b));
    }
    rep.add("antipode-full", !w.triggered, w.text);
  }

  {
    bool ok = exact_equal(Vec(x.antipode.m * *H.unit()), *H.unit());
    rep.add("antipode-unit", ok, ok ? "" : "S(1) != 1");
    Witness w;
    for (Eigen::Index i = 0; i < d && !w.triggered; ++i)
      for (Eigen::Index j = 0; j < d && !w.triggered; ++j) {
        Vec lhs = x.antipode.m * H.mul(H.space().basis_vector(i), H.space().basis_vector(j));
        Vec rhs = H.mul(x.antipode.column(j), x.antipode.column(i));
        if (!exact_equal(lhs, rhs)) w.set("S(hk) != S(k)S(h) at (" + hlbl(i) + ", " + hlbl(j) + ")");
      }
    rep.add("antipode-antimultiplicative", !w.triggered, w.text);
  }

  if (!comm) {
    bool ok1 = exact_equal(Mat(x.counit_l.m * x.antipode.m), x.counit_r.m);
    bool ok2 = exact_equal(Mat(x.counit_r.m * x.antipode.m), x.counit_l.m);
    rep.add("counit-swap", ok1 && ok2, ok1 && ok2 ? "" : "eps_l . S != eps_r or eps_r . S != eps_l");
  }

  // anticomultiplicativity: Delta_l . S = (S (x) S) . Delta_r^cop mod B_l
  {
    Witness w;
    for (Eigen::Index b = 0; b < d && !w.triggered; ++b) {
      Vec diff(d * d);
      diff.setZero();
      Vec sb = x.antipode.column(b);
      for (Eigen::Index l = 0; l < d; ++l)
        if (!sb(l).is_zero())
          for (auto& tm : lift_terms(x.comult_l, static_cast<int>(l)))
            diff(static_cast<Eigen::Index>(tm.i) * d + tm.j) += sb(l) * tm.c;
      for (auto& tm : lift_terms(x.comult_r, static_cast<int>(b))) {
        Vec si = x.antipode.column(tm.i), sj = x.antipode.column(tm.j);
        for (Eigen::Index p = 0; p < d; ++p) {
          if (sj(p).is_zero()) continue;
          for (Eigen::Index q = 0; q < d; ++q)
            if (!si(q).is_zero()) diff(p * d + q) -= tm.c * sj(p) * si(q);
        }
      }
      if (!x.balancing_l.contains(diff)) w.set("fails at " + hlbl(b));
    }
    rep.add("antipode-anticomultiplicative", !w.triggered, w.text, /*required=*/false);
  }

  return rep;
}

HopfAlgebroid pair_algebroid(const CommSplitAlgebra& a) {
  const Eigen::Index n = a.alg.dim();
  HopfAlgebroid x;
  x.mode = AlgebroidMode::commutative;
  x.name = "pair";
  x.A = a;
  BasedSpace hs = tensor(a.alg.space(), a.alg.space());
  const Eigen::Index d = n * n;
  Mat mult(d, d * d);
  mult.setZero();
  for (Eigen::Index i = 0; i < d; ++i) mult(i, i * d + i) = Rational(1);  // Fun(X x X), pointwise
  Vec unit(d);
  for (Eigen::Index i = 0; i < d; ++i) unit(i) = Rational(1);
  x.H = FinAlgebra(hs, LinMap(tensor(hs, hs), hs, std::move(mult)), unit);
  Mat sm(d, n), tm(d, n);
  sm.setZero();
  tm.setZero();
  for (Eigen::Index u = 0; u < n; ++u)
    for (Eigen::Index v = 0; v < n; ++v) {
      sm(u * n + v, v) = Rational(1);  // s(chi_v) = sum_u (u, v)
      tm(u * n + v, u) = Rational(1);  // t(chi_u) = sum_v (u, v)
    }
  x.s = LinMap(a.alg.space(), hs, std::move(sm));
  x.t = LinMap(a.alg.space(), hs, std::move(tm));
  Mat lift(d * d, d);
  lift.setZero();
  for (Eigen::Index p = 0; p < n; ++p)
    for (Eigen::Index q = 0; q < n; ++q)
      for (Eigen::Index u = 0; u < n; ++u)
        for (Eigen::Index v = 0; v < n; ++v)
          lift((p * n + u) * d + (v * n + q), p * n + q) = Rational(1);
  x.comult_l = LinMap(hs, tensor(hs, hs), std::move(lift));
  x.comult_r = x.comult_l;
  Mat eps(n, d);
  eps.setZero();
  for (Eigen::Index p = 0; p < n; ++p) eps(p, p * n + p) = Rational(1);
  x.counit_l = LinMap(hs, a.alg.space(), std::move(eps));
  x.counit_r = x.counit_l;
  Mat anti(d, d);
  anti.setZero();
  for (Eigen::Index p = 0; p < n; ++p)
    for (Eigen::Index q = 0; q < n; ++q) anti(q * n + p, p * n + q) = Rational(1);
  x.antipode = LinMap(hs, hs, std::move(anti));
  x.refresh_balancing();
  return x;
}

HopfAlgebroid repfun_transitive_algebroid(int npoints, const FinGroup& g) {
  const int ng = g.size();
  if (static_cast<long>(npoints) * ng * npoints > 200)
    throw std::invalid_argument("repfun_transitive_algebroid: |X|*|G|*|X| bound exceeded");
  HopfAlgebroid x;
  x.mode = AlgebroidMode::commutative;
  x.name = "repfun";
  x.A = fun_algebra(npoints);
  // basis labels match the arrows of the product groupoid X x G x X
  FinGroupoid gpd = product_groupoid(npoints, g);
  BasedSpace hs{gpd.arrows};
  const Eigen::Index d = hs.dim();
  auto idx = [&](int xx, int gi, int yy) { return (static_cast<Eigen::Index>(xx) * ng + gi) * npoints + yy; };
  Mat mult(d, d * d);
  mult.setZero();
  for (Eigen::Index i = 0; i < d; ++i) mult(i, i * d + i) = Rational(1);  // functions on arrows
  Vec unit(d);
  for (Eigen::Index i = 0; i < d; ++i) unit(i) = Rational(1);
  x.H = FinAlgebra(hs, LinMap(tensor(hs, hs), hs, std::move(mult)), unit);
  Mat sm(d, npoints), tm(d, npoints);
  sm.setZero();
  tm.setZero();
  for (int xx = 0; xx < npoints; ++xx)
    for (int gi = 0; gi < ng; ++gi)
      for (int yy = 0; yy < npoints; ++yy) {
        sm(idx(xx, gi, yy), yy) = Rational(1);  // s'(a) = 1 (x) 1 (x) a
        tm(idx(xx, gi, yy), xx) = Rational(1);  // t'(a) = a (x) 1 (x) 1
      }
  x.s = LinMap(x.A.alg.space(), hs, std::move(sm));
  x.t = LinMap(x.A.alg.space(), hs, std::move(tm));
  Mat lift(d * d, d);
  lift.setZero();
  for (int xx = 0; xx < npoints; ++xx)
    for (int h = 0; h < ng; ++h)
      for (int yy = 0; yy < npoints; ++yy)
        for (int g1 = 0; g1 < ng; ++g1)
          for (int g2 = 0; g2 < ng; ++g2) {
            if (g.op(g1, g2) != h) continue;
            for (int u = 0; u < npoints; ++u)
              for (int v = 0; v < npoints; ++v)
                lift(idx(xx, g1, u) * d + idx(v, g2, yy), idx(xx, h, yy)) += Rational(1);
          }
  x.comult_l = LinMap(hs, tensor(hs, hs), std::move(lift));
  x.comult_r = x.comult_l;
  Mat eps(npoints, d);
  eps.setZero();
  for (int xx = 0; xx < npoints; ++xx) eps(xx, idx(xx, 0, xx)) = Rational(1);  // a(x)b(x)f(1_G)
  x.counit_l = LinMap(hs, x.A.alg.space(), std::move(eps));
  x.counit_r = x.counit_l;
  Mat anti(d, d);
  anti.setZero();
  for (int xx = 0; xx < npoints; ++xx)
    for (int gi = 0; gi < ng; ++gi)
      for (int yy = 0; yy < npoints; ++yy)
        anti(idx(yy, g.inv[static_cast<std::size_t>(gi)], xx), idx(xx, gi, yy)) = Rational(1);
  x.antipode = LinMap(hs, hs, std::move(anti));
  x.refresh_balancing();
  return x;
}

HopfAlgebroid weakhopf_algebroid(const FinGroupoid& g) {
  HopfAlgebroid x;
  x.mode = AlgebroidMode::restricted_noncommutative;
  x.name = "weakhopf";
  x.H = groupoid_algebra(g);
  x.A = fun_algebra(g.objects);
  const Eigen::Index d = x.H.dim(), da = x.A.alg.dim();
  const BasedSpace hs = x.H.space();
  Mat incl(d, da);
  incl.setZero();
  for (Eigen::Index a = 0; a < da; ++a) incl(g.unit[static_cast<std::size_t>(a)], a) = Rational(1);
  x.s = LinMap(x.A.alg.space(), hs, incl);
  x.t = x.s;
  Mat lift(d * d, d);
  lift.setZero();
  for (Eigen::Index b = 0; b < d; ++b) lift(b * d + b, b) = Rational(1);
  x.comult_l = LinMap(hs, tensor(hs, hs), std::move(lift));
  x.comult_r = x.comult_l;
  Mat el(da, d), er(da, d);
  el.setZero();
  er.setZero();
  for (Eigen::Index b = 0; b < d; ++b) {
    el(g.tgt[static_cast<std::size_t>(b)], b) = Rational(1);  // eps_l = eps_t
    er(g.src[static_cast<std::size_t>(b)], b) = Rational(1);  // eps_r = eps_s
  }
  x.counit_l = LinMap(hs, x.A.alg.space(), std::move(el));
  x.counit_r = LinMap(hs, x.A.alg.space(), std::move(er));
  Mat anti(d, d);
  anti.setZero();
  for (Eigen::Index b = 0; b < d; ++b) anti(g.inv[static_cast<std::size_t>(b)], b) = Rational(1);
  x.antipode = LinMap(hs, hs, std::move(anti));
  x.refresh_balancing();
  return x;
}

}  // namespace qisg
