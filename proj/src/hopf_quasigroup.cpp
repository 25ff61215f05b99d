#include "qhopf/hopf_quasigroup.hpp"

#include <sstream>

#include "qhopf/errors.hpp"

namespace qhopf {

namespace {

std::string short_vec(const Vec& v) { return vec_str(v); }

// Coefficient matrix of the componentwise product (x⊗y)(x'⊗y') extended to
// tensors given by coefficient matrices.
Matrix tensor_square_product(const StructureTensors& t, const Matrix& a, const Matrix& b) {
  const int n = t.dim();
  Matrix r(n, n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      if (a.at(p, q).is_zero()) continue;
      for (int s = 0; s < n; ++s)
        for (int w = 0; w < n; ++w) {
          if (b.at(s, w).is_zero()) continue;
          Scalar c = a.at(p, q) * b.at(s, w);
          for (int u = 0; u < n; ++u) {
            if (t.mult.at(p, s, u).is_zero()) continue;
            Scalar cu = c * t.mult.at(p, s, u);
            for (int v = 0; v < n; ++v)
              if (!t.mult.at(q, w, v).is_zero()) r.at(u, v) += cu * t.mult.at(q, w, v);
          }
        }
    }
  return r;
}

std::string mat_str(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m.at(i, j);
    }
  }
  os << "]";
  return os.str();
}

}  // namespace

FinDimHopfQuasigroup group_algebra(const FiniteLoop& q) {
  const int n = q.order();
  StructureTensors t;
  t.basis = q.labels();
  t.mult = Tensor3(n, n, n);
  t.comult = Tensor3(n, n, n);
  t.unit = Vec(n);
  t.counit = Vec(n);
  t.antipode = Matrix(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t.mult.at(i, j, q.product(i, j)) = Scalar(1);
    t.comult.at(i, i, i) = Scalar(1);
    t.counit[i] = Scalar(1);
    t.antipode.at(q.inverse(i), i) = Scalar(1);
  }
  t.unit[q.identity()] = Scalar(1);
  return {std::move(t)};
}

AxiomReport verify_hopf_quasigroup(const FinDimHopfQuasigroup& h) {
  const StructureTensors& t = h.t;
  const int n = t.dim();
  AxiomReport rep;

  std::vector<Vec> s_of(n);
  std::vector<Matrix> cop(n);
  for (int i = 0; i < n; ++i) {
    s_of[i] = t.apply_antipode(t.basis_vec(i));
    cop[i] = t.coproduct(t.basis_vec(i));
  }

  for (int i = 0; i < n; ++i) {
    ++rep.checks_run;
    Vec left = t.product(t.unit, t.basis_vec(i));
    Vec right = t.product(t.basis_vec(i), t.unit);
    if (left != t.basis_vec(i))
      rep.add("unit_left", {i}, short_vec(left), short_vec(t.basis_vec(i)));
    if (right != t.basis_vec(i))
      rep.add("unit_right", {i}, short_vec(right), short_vec(t.basis_vec(i)));
  }

  // (ε⊗id)Δ = id = (id⊗ε)Δ
  for (int k = 0; k < n; ++k) {
    ++rep.checks_run;
    Vec l(n), r(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (cop[k].at(i, j).is_zero()) continue;
        l[j] += t.counit[i] * cop[k].at(i, j);
        r[i] += t.counit[j] * cop[k].at(i, j);
      }
    if (l != t.basis_vec(k)) rep.add("counit_left", {k}, short_vec(l), short_vec(t.basis_vec(k)));
    if (r != t.basis_vec(k)) rep.add("counit_right", {k}, short_vec(r), short_vec(t.basis_vec(k)));
  }

  // coassociativity of Δ (required: the dual product must be associative)
  for (int k = 0; k < n; ++k) {
    ++rep.checks_run;
    bool bad = false;
    for (int p = 0; p < n && !bad; ++p)
      for (int q = 0; q < n && !bad; ++q)
        for (int r = 0; r < n && !bad; ++r) {
          Scalar lhs, rhs;
          for (int m = 0; m < n; ++m) {
            if (!cop[k].at(m, r).is_zero()) lhs += cop[k].at(m, r) * cop[m].at(p, q);
            if (!cop[k].at(p, m).is_zero()) rhs += cop[k].at(p, m) * cop[m].at(q, r);
          }
          if (lhs != rhs) {
            rep.add("coassociativity", {k, p, q, r}, lhs.str(), rhs.str());
            bad = true;
          }
        }
  }

  // Δ multiplicative, ε multiplicative
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ++rep.checks_run;
      Vec prod = t.product_basis(i, j);
      Matrix lhs = t.coproduct(prod);
      Matrix rhs = tensor_square_product(t, cop[i], cop[j]);
      if (!(lhs == rhs)) rep.add("coproduct_multiplicative", {i, j}, mat_str(lhs), mat_str(rhs));
      Scalar el = t.counit_of(prod);
      Scalar er = t.counit[i] * t.counit[j];
      if (el != er) rep.add("counit_multiplicative", {i, j}, el.str(), er.str());
    }
  {
    ++rep.checks_run;
    Matrix one_cop = t.coproduct(t.unit);
    Matrix expect(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) expect.at(i, j) = t.unit[i] * t.unit[j];
    if (!(one_cop == expect)) rep.add("coproduct_unital", {}, mat_str(one_cop), mat_str(expect));
    Scalar e1 = t.counit_of(t.unit);
    if (!e1.is_one()) rep.add("counit_unital", {}, e1.str(), "1");
  }

  // S antimultiplicative / anticomultiplicative
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ++rep.checks_run;
      Vec lhs = t.apply_antipode(t.product_basis(i, j));
      Vec rhs = t.product(s_of[j], s_of[i]);
      if (lhs != rhs) rep.add("antipode_antimultiplicative", {i, j}, short_vec(lhs), short_vec(rhs));
    }
  for (int k = 0; k < n; ++k) {
    ++rep.checks_run;
    Matrix lhs = t.coproduct(s_of[k]);
    Matrix rhs = t.antipode.mul(cop[k].transposed()).mul(t.antipode.transposed());
    if (!(lhs == rhs)) rep.add("antipode_anticomultiplicative", {k}, mat_str(lhs), mat_str(rhs));
  }

  // The four quasi-antipode identities, for all basis pairs (a, b):
  //   Σ S(a₍₁₎)(a₍₂₎b) = ε(a)b = Σ a₍₁₎(S(a₍₂₎)b)
  //   Σ (bS(a₍₁₎))a₍₂₎ = bε(a) = Σ (ba₍₁₎)S(a₍₂₎)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      ++rep.checks_run;
      Vec want = vec_scale(t.counit[a], t.basis_vec(b));
      Vec q1(n), q2(n), q3(n), q4(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const Scalar& c = cop[a].at(i, j);
          if (c.is_zero()) continue;
          q1 = vec_add(q1, vec_scale(c, t.product(s_of[i], t.product_basis(j, b))));
          q2 = vec_add(q2, vec_scale(c, t.product(t.basis_vec(i), t.product(s_of[j], t.basis_vec(b)))));
          q3 = vec_add(q3, vec_scale(c, t.product(t.product(t.basis_vec(b), s_of[i]), t.basis_vec(j))));
          q4 = vec_add(q4, vec_scale(c, t.product(t.product_basis(b, i), s_of[j])));
        }
      if (q1 != want) rep.add("quasi_antipode_1", {a, b}, short_vec(q1), short_vec(want));
      if (q2 != want) rep.add("quasi_antipode_2", {a, b}, short_vec(q2), short_vec(want));
      if (q3 != want) rep.add("quasi_antipode_3", {a, b}, short_vec(q3), short_vec(want));
      if (q4 != want) rep.add("quasi_antipode_4", {a, b}, short_vec(q4), short_vec(want));
    }

  // ε∘S = ε
  for (int i = 0; i < n; ++i) {
    ++rep.checks_run;
    Scalar lhs = t.counit_of(s_of[i]);
    if (lhs != t.counit[i]) rep.add("counit_antipode", {i}, lhs.str(), t.counit[i].str());
  }

  {
    ++rep.checks_run;
    if (rank(t.antipode) != n)
      rep.add("antipode_invertible", {}, std::to_string(rank(t.antipode)), std::to_string(n));
  }

  // associativity probe (informational)
  bool assoc = true;
  for (int a = 0; a < n && assoc; ++a)
    for (int b = 0; b < n && assoc; ++b)
      for (int c = 0; c < n && assoc; ++c)
        if (t.product(t.product_basis(a, b), t.basis_vec(c)) !=
            t.product(t.basis_vec(a), t.product_basis(b, c))) {
          std::ostringstream os;
          os << "(" << t.basis[a] << "," << t.basis[b] << "," << t.basis[c] << ")";
          rep.probes.emplace_back("nonassoc_witness", os.str());
          assoc = false;
        }
  if (assoc) rep.probes.emplace_back("associative", "true");

  return rep;
}

std::vector<Vec> integral_space(const StructureTensors& t, Side side) {
  const int n = t.dim();
  Matrix sys(n * n, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      int row = k * n + i;
      for (int j = 0; j < n; ++j) {
        // Left: Σ_j Δ(e_k)_{i,j} λ_j = λ_k·1_i ; Right mirrors the legs.
        sys.at(row, j) = (side == Side::Left) ? t.comult.at(k, i, j) : t.comult.at(k, j, i);
        if (j == k) sys.at(row, j) -= t.unit[i];
      }
    }
  return kernel_basis(sys);
}

std::vector<Vec> cointegral_space(const StructureTensors& t, Side side) {
  const int n = t.dim();
  Matrix sys(n * n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int row = i * n + k;
      for (int j = 0; j < n; ++j) {
        sys.at(row, j) = (side == Side::Left) ? t.mult.at(i, j, k) : t.mult.at(j, i, k);
        if (j == k) sys.at(row, j) -= t.counit[i];
      }
    }
  return kernel_basis(sys);
}

bool is_faithful(const StructureTensors& t, const Vec& f) {
  const int n = t.dim();
  if (vec_is_zero(f)) return false;
  Matrix g(n, n), gr(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      g.at(i, j) = dot(f, t.product_basis(i, j));
      gr.at(i, j) = dot(f, t.product_basis(j, i));
    }
  return rank(g) == n && rank(gr) == n;
}

Vec normalized_left_integral(const StructureTensors& t) {
  auto space = integral_space(t, Side::Left);
  if (space.empty()) throw NoIntegral("no nonzero left integral");
  Vec phi = space.front();
  auto coint = cointegral_space(t, Side::Left);
  if (!coint.empty()) {
    Scalar v = dot(phi, coint.front());
    if (!v.is_zero()) return vec_scale(v.inverse(), phi);
  }
  for (const auto& c : phi)
    if (!c.is_zero()) return vec_scale(c.inverse(), phi);
  throw NoIntegral("left integral basis vector is zero");  // unreachable
}

FinDimMHC dual_to_mhc(const FinDimHopfQuasigroup& h, const Vec& phi) {
  const StructureTensors& t = h.t;
  const int n = t.dim();

  // φ must solve the left-integral system exactly.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      Scalar acc;
      for (int j = 0; j < n; ++j)
        if (!t.comult.at(k, i, j).is_zero()) acc += t.comult.at(k, i, j) * phi[j];
      if (acc != phi[k] * t.unit[i])
        throw NotIntegral("dual_to_mhc: functional is not a left integral");
    }
  if (!is_faithful(t, phi)) throw NotFaithful("dual_to_mhc: integral is not faithful");

  StructureTensors d;
  d.basis = t.basis;
  d.mult = Tensor3(n, n, n);
  d.comult = Tensor3(n, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        d.mult.at(i, j, k) = t.comult.at(k, i, j);
        d.comult.at(k, i, j) = t.mult.at(i, j, k);
      }
  d.unit = t.counit;
  d.counit = t.unit;
  d.antipode = t.antipode.transposed();

  // Associativity of the dual product = coassociativity of Δ on h.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (d.product(d.product_basis(a, b), d.basis_vec(c)) !=
            d.product(d.basis_vec(a), d.product_basis(b, c)))
          throw NotAssociative("dual_to_mhc: coproduct of h is not coassociative");

  return {std::move(d)};
}

}  // namespace qhopf
