#include "qhopf/mhc.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qhopf/errors.hpp"

namespace qhopf {

// ---------------------------------------------------------------------------
// FinSupp / PairTensor helpers

FinSupp fs_basis(Elem u) { return {{u, Scalar(1)}}; }

void fs_accumulate(FinSupp& into, Elem u, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = into.find(u);
  if (it == into.end()) {
    into.emplace(u, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) into.erase(it);
}

FinSupp fs_add(const FinSupp& a, const FinSupp& b) {
  FinSupp r = a;
  for (const auto& [u, c] : b) fs_accumulate(r, u, c);
  return r;
}

FinSupp fs_sub(const FinSupp& a, const FinSupp& b) {
  FinSupp r = a;
  for (const auto& [u, c] : b) fs_accumulate(r, u, -c);
  return r;
}

FinSupp fs_scale(const Scalar& c, const FinSupp& a) {
  FinSupp r;
  if (c.is_zero()) return r;
  for (const auto& [u, x] : a) r.emplace(u, c * x);
  return r;
}

void fs_prune(FinSupp& a) {
  for (auto it = a.begin(); it != a.end();) {
    if (it->second.is_zero())
      it = a.erase(it);
    else
      ++it;
  }
}

bool fs_is_zero(const FinSupp& a) { return a.empty(); }

std::vector<Elem> fs_support(const FinSupp& a) {
  std::vector<Elem> s;
  s.reserve(a.size());
  for (const auto& [u, c] : a) s.push_back(u);
  return s;
}

PairMap pair_map(const PairTensor& t) {
  PairMap m;
  for (const auto& term : t) {
    auto key = std::make_pair(term.first, term.second);
    auto it = m.find(key);
    if (it == m.end())
      m.emplace(key, term.coef);
    else {
      it->second += term.coef;
      if (it->second.is_zero()) m.erase(it);
    }
  }
  return m;
}

void pair_accumulate(PairMap& into, const FinSupp& x, const FinSupp& y, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& [u, cu] : x)
    for (const auto& [v, cv] : y) {
      auto key = std::make_pair(u, v);
      Scalar add = c * cu * cv;
      auto it = into.find(key);
      if (it == into.end()) {
        if (!add.is_zero()) into.emplace(key, add);
      } else {
        it->second += add;
        if (it->second.is_zero()) into.erase(it);
      }
    }
}

namespace {

PairTensor pair_tensor_from_map(const PairMap& m) {
  PairTensor t;
  t.reserve(m.size());
  for (const auto& [key, c] : m) t.push_back({key.first, key.second, c});
  return t;
}

void pair_tensor_add(PairMap& into, Elem a, Elem b, const Scalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(a, b);
  auto it = into.find(key);
  if (it == into.end())
    into.emplace(key, c);
  else {
    it->second += c;
    if (it->second.is_zero()) into.erase(it);
  }
}

std::vector<Elem> dedup(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

using TripleMap = std::map<std::tuple<Elem, Elem, Elem>, Scalar>;

void triple_accumulate(TripleMap& into, const FinSupp& x, const FinSupp& y, const FinSupp& z,
                       const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& [u, cu] : x)
    for (const auto& [v, cv] : y)
      for (const auto& [w, cw] : z) {
        auto key = std::make_tuple(u, v, w);
        Scalar add = c * cu * cv * cw;
        auto it = into.find(key);
        if (it == into.end()) {
          if (!add.is_zero()) into.emplace(key, add);
        } else {
          it->second += add;
          if (it->second.is_zero()) into.erase(it);
        }
      }
}

}  // namespace

// ---------------------------------------------------------------------------
// MhcAlgebra defaults

int MhcAlgebra::dim() const { throw Error("dim: carrier is not finite"); }

std::vector<Elem> MhcAlgebra::basis_labels() const {
  throw Error("basis_labels: carrier is not finite");
}

FinSupp MhcAlgebra::one() const { throw Error("one: the unit exists only in M(A)"); }

PairTensor MhcAlgebra::coproduct_full(const FinSupp& a) const {
  return coproduct_second_in(a, basis_labels());
}

// ---------------------------------------------------------------------------
// FunctionAlgebra

FunctionAlgebra::FunctionAlgebra(QuasigroupHandle q)
    : q_(std::move(q)),
      s_([this](Elem u) { return q_.inverse(u); }),
      s_inv_([this](Elem u) { return q_.inverse(u); }) {}

FunctionAlgebra::FunctionAlgebra(QuasigroupHandle q, std::function<Elem(Elem)> antipode_label,
                                 std::function<Elem(Elem)> antipode_label_inv)
    : q_(std::move(q)), s_(std::move(antipode_label)), s_inv_(std::move(antipode_label_inv)) {}

FinSupp FunctionAlgebra::product(const FinSupp& a, const FinSupp& b) const {
  const FinSupp& small = a.size() <= b.size() ? a : b;
  const FinSupp& large = a.size() <= b.size() ? b : a;
  FinSupp r;
  for (const auto& [u, c] : small) {
    auto it = large.find(u);
    if (it != large.end()) {
      Scalar v = c * it->second;
      if (!v.is_zero()) r.emplace(u, v);
    }
  }
  return r;
}

Scalar FunctionAlgebra::counit(const FinSupp& a) const {
  auto it = a.find(q_.identity());
  return it == a.end() ? Scalar(0) : it->second;
}

FinSupp FunctionAlgebra::antipode(const FinSupp& a) const {
  FinSupp r;
  for (const auto& [u, c] : a) fs_accumulate(r, s_(u), c);
  return r;
}

FinSupp FunctionAlgebra::antipode_inv(const FinSupp& a) const {
  FinSupp r;
  for (const auto& [u, c] : a) fs_accumulate(r, s_inv_(u), c);
  return r;
}

PairTensor FunctionAlgebra::t1(const FinSupp& a, const FinSupp& b) const {
  // Δ(a)(1⊗b): second legs selected by supp(b), first legs by division.
  PairMap m;
  for (const auto& [w, cw] : a)
    for (const auto& [u, cu] : b) pair_tensor_add(m, q_.right_divide(w, u), u, cw * cu);
  return pair_tensor_from_map(m);
}

PairTensor FunctionAlgebra::t2(const FinSupp& a, const FinSupp& b) const {
  // (a⊗1)Δ(b): first legs selected by supp(a), second legs by division.
  PairMap m;
  for (const auto& [w, cw] : a)
    for (const auto& [y, cy] : b) pair_tensor_add(m, w, q_.left_divide(w, y), cw * cy);
  return pair_tensor_from_map(m);
}

PairTensor FunctionAlgebra::t1_leftmul(const FinSupp& a, const FinSupp& b) const {
  return t1(a, b);  // pointwise product is commutative
}

PairTensor FunctionAlgebra::t2_rightmul(const FinSupp& a, const FinSupp& b) const {
  return t2(a, b);
}

FinSupp FunctionAlgebra::contract_first(const FinSupp& g, const FinSupp& b) const {
  FinSupp r;
  for (const auto& [y, cy] : b)
    for (const auto& [t, ct] : g) fs_accumulate(r, q_.left_divide(t, y), cy * ct);
  return r;
}

FinSupp FunctionAlgebra::contract_second(const FinSupp& b, const FinSupp& g) const {
  FinSupp r;
  for (const auto& [y, cy] : b)
    for (const auto& [t, ct] : g) fs_accumulate(r, q_.right_divide(y, t), cy * ct);
  return r;
}

PairTensor FunctionAlgebra::coproduct_first_in(const FinSupp& a,
                                               const std::vector<Elem>& firsts) const {
  PairMap m;
  for (Elem v : dedup(firsts))
    for (const auto& [w, c] : a) pair_tensor_add(m, v, q_.left_divide(v, w), c);
  return pair_tensor_from_map(m);
}

PairTensor FunctionAlgebra::coproduct_second_in(const FinSupp& a,
                                                const std::vector<Elem>& seconds) const {
  PairMap m;
  for (Elem u : dedup(seconds))
    for (const auto& [w, c] : a) pair_tensor_add(m, q_.right_divide(w, u), u, c);
  return pair_tensor_from_map(m);
}

std::vector<Elem> FunctionAlgebra::candidates_mul(const std::vector<Elem>& labels) const {
  return dedup(labels);
}

std::vector<Elem> FunctionAlgebra::candidates_antipode_hits(const std::vector<Elem>& labels) const {
  std::vector<Elem> r;
  for (Elem u : labels) r.push_back(s_inv_(u));
  return dedup(r);
}

std::vector<Elem> FunctionAlgebra::candidates_antipode_inv_hits(
    const std::vector<Elem>& labels) const {
  std::vector<Elem> r;
  for (Elem u : labels) r.push_back(s_(u));
  return dedup(r);
}

std::vector<Elem> FunctionAlgebra::middle_candidates(const FinSupp& /*a*/,
                                                     const std::vector<Elem>& xs,
                                                     const std::vector<Elem>& ys) const {
  std::vector<Elem> p, q;
  for (Elem x : xs) {
    p.push_back(x);
    p.push_back(s_(x));
    p.push_back(s_inv_(x));
  }
  for (Elem y : ys) {
    q.push_back(y);
    q.push_back(s_(y));
    q.push_back(s_inv_(y));
  }
  p = dedup(p);
  q = dedup(q);
  std::vector<Elem> m;
  for (Elem a : p)
    for (Elem b : q) m.push_back(q_.product(a, b));
  return dedup(m);
}

int FunctionAlgebra::dim() const {
  if (!finite()) throw Error("dim: infinite carrier");
  return q_.order();
}

std::vector<Elem> FunctionAlgebra::basis_labels() const {
  if (!finite()) throw Error("basis_labels: infinite carrier");
  std::vector<Elem> v(q_.order());
  for (int i = 0; i < q_.order(); ++i) v[i] = i;
  return v;
}

FinSupp FunctionAlgebra::one() const {
  if (!finite()) throw Error("one: 1 = Σ δ_u exists only in M(A) for infinite G");
  FinSupp r;
  for (int i = 0; i < q_.order(); ++i) r.emplace(i, Scalar(1));
  return r;
}

std::unique_ptr<FunctionAlgebra> function_algebra(QuasigroupHandle q,
                                                  const std::vector<Elem>* ip_sample) {
  IpReport rep = check_ip(q, ip_sample);
  if (!rep.pass()) {
    std::ostringstream os;
    os << "function_algebra: carrier fails the inverse property at (" << q.label(rep.violations[0].u)
       << ", " << q.label(rep.violations[0].v) << ")";
    throw NotIP(os.str());
  }
  return std::make_unique<FunctionAlgebra>(std::move(q));
}

// ---------------------------------------------------------------------------
// TensorMhc

TensorMhc::TensorMhc(StructureTensors t) : t_(std::move(t)) {
  const int n = t_.dim();
  commutative_ = true;
  for (int i = 0; i < n && commutative_; ++i)
    for (int j = 0; j < n && commutative_; ++j)
      for (int k = 0; k < n; ++k)
        if (t_.mult.at(i, j, k) != t_.mult.at(j, i, k)) {
          commutative_ = false;
          break;
        }
  antipode_inv_ = inverse(t_.antipode);  // empty when S is singular
}

Vec TensorMhc::to_vec(const FinSupp& a) const {
  Vec v(t_.dim());
  for (const auto& [u, c] : a) v[static_cast<size_t>(u)] = c;
  return v;
}

FinSupp TensorMhc::from_vec(const Vec& v) const {
  FinSupp r;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r.emplace(static_cast<Elem>(i), v[i]);
  return r;
}

FinSupp TensorMhc::product(const FinSupp& a, const FinSupp& b) const {
  FinSupp r;
  const int n = t_.dim();
  for (const auto& [i, ci] : a)
    for (const auto& [j, cj] : b) {
      Scalar c = ci * cj;
      for (int k = 0; k < n; ++k) {
        const Scalar& m = t_.mult.at(static_cast<int>(i), static_cast<int>(j), k);
        if (!m.is_zero()) fs_accumulate(r, k, c * m);
      }
    }
  return r;
}

Scalar TensorMhc::counit(const FinSupp& a) const {
  Scalar r;
  for (const auto& [u, c] : a) r += c * t_.counit[static_cast<size_t>(u)];
  return r;
}

FinSupp TensorMhc::antipode(const FinSupp& a) const {
  return from_vec(t_.antipode.apply(to_vec(a)));
}

const Matrix& TensorMhc::antipode_inverse() const {
  if (!antipode_inv_) throw Error("antipode is not invertible (not regular)");
  return *antipode_inv_;
}

FinSupp TensorMhc::antipode_inv(const FinSupp& a) const {
  return from_vec(antipode_inverse().apply(to_vec(a)));
}

PairTensor TensorMhc::t1(const FinSupp& a, const FinSupp& b) const {
  PairMap m;
  for (const auto& term : coproduct_full(a)) {
    FinSupp right = product(fs_basis(term.second), b);
    for (const auto& [k, c] : right) pair_tensor_add(m, term.first, k, term.coef * c);
  }
  return pair_tensor_from_map(m);
}

PairTensor TensorMhc::t2(const FinSupp& a, const FinSupp& b) const {
  PairMap m;
  for (const auto& term : coproduct_full(b)) {
    FinSupp left = product(a, fs_basis(term.first));
    for (const auto& [k, c] : left) pair_tensor_add(m, k, term.second, term.coef * c);
  }
  return pair_tensor_from_map(m);
}

PairTensor TensorMhc::t1_leftmul(const FinSupp& a, const FinSupp& b) const {
  PairMap m;
  for (const auto& term : coproduct_full(a)) {
    FinSupp right = product(b, fs_basis(term.second));
    for (const auto& [k, c] : right) pair_tensor_add(m, term.first, k, term.coef * c);
  }
  return pair_tensor_from_map(m);
}

PairTensor TensorMhc::t2_rightmul(const FinSupp& a, const FinSupp& b) const {
  PairMap m;
  for (const auto& term : coproduct_full(b)) {
    FinSupp left = product(fs_basis(term.first), a);
    for (const auto& [k, c] : left) pair_tensor_add(m, k, term.second, term.coef * c);
  }
  return pair_tensor_from_map(m);
}

FinSupp TensorMhc::contract_first(const FinSupp& g, const FinSupp& b) const {
  FinSupp r;
  for (const auto& term : coproduct_full(b)) {
    auto it = g.find(term.first);
    if (it != g.end()) fs_accumulate(r, term.second, term.coef * it->second);
  }
  return r;
}

FinSupp TensorMhc::contract_second(const FinSupp& b, const FinSupp& g) const {
  FinSupp r;
  for (const auto& term : coproduct_full(b)) {
    auto it = g.find(term.second);
    if (it != g.end()) fs_accumulate(r, term.first, term.coef * it->second);
  }
  return r;
}

PairTensor TensorMhc::coproduct_first_in(const FinSupp& a, const std::vector<Elem>& firsts) const {
  std::set<Elem> allow(firsts.begin(), firsts.end());
  PairMap m;
  const int n = t_.dim();
  for (const auto& [k, ck] : a)
    for (int i = 0; i < n; ++i) {
      if (!allow.count(i)) continue;
      for (int j = 0; j < n; ++j) {
        const Scalar& c = t_.comult.at(static_cast<int>(k), i, j);
        if (!c.is_zero()) pair_tensor_add(m, i, j, ck * c);
      }
    }
  return pair_tensor_from_map(m);
}

PairTensor TensorMhc::coproduct_second_in(const FinSupp& a, const std::vector<Elem>& seconds) const {
  std::set<Elem> allow(seconds.begin(), seconds.end());
  PairMap m;
  const int n = t_.dim();
  for (const auto& [k, ck] : a)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (!allow.count(j)) continue;
        const Scalar& c = t_.comult.at(static_cast<int>(k), i, j);
        if (!c.is_zero()) pair_tensor_add(m, i, j, ck * c);
      }
  return pair_tensor_from_map(m);
}

std::vector<Elem> TensorMhc::candidates_mul(const std::vector<Elem>&) const {
  return basis_labels();
}

std::vector<Elem> TensorMhc::candidates_antipode_hits(const std::vector<Elem>&) const {
  return basis_labels();
}

std::vector<Elem> TensorMhc::candidates_antipode_inv_hits(const std::vector<Elem>&) const {
  return basis_labels();
}

std::vector<Elem> TensorMhc::middle_candidates(const FinSupp&, const std::vector<Elem>&,
                                               const std::vector<Elem>&) const {
  return basis_labels();
}

std::vector<Elem> TensorMhc::basis_labels() const {
  std::vector<Elem> v(t_.dim());
  for (int i = 0; i < t_.dim(); ++i) v[i] = i;
  return v;
}

StructureTensors materialize_tensors(const MhcAlgebra& a) {
  if (!a.finite()) throw Error("materialize_tensors: infinite carrier");
  const int n = a.dim();
  StructureTensors t;
  t.basis.resize(n);
  t.mult = Tensor3(n, n, n);
  t.comult = Tensor3(n, n, n);
  t.unit = Vec(n);
  t.counit = Vec(n);
  t.antipode = Matrix(n, n);
  for (int i = 0; i < n; ++i) {
    t.basis[i] = a.elem_name(i);
    t.counit[i] = a.counit(fs_basis(i));
    for (const auto& [k, c] : a.antipode(fs_basis(i))) t.antipode.at(static_cast<int>(k), i) = c;
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : a.product(fs_basis(i), fs_basis(j)))
        t.mult.at(i, j, static_cast<int>(k)) = c;
    for (const auto& term : a.coproduct_full(fs_basis(i)))
      t.comult.at(i, static_cast<int>(term.first), static_cast<int>(term.second)) = term.coef;
  }
  for (const auto& [k, c] : a.one()) t.unit[static_cast<size_t>(k)] = c;
  return t;
}

// ---------------------------------------------------------------------------
// Integral

Scalar Integral::operator()(const FinSupp& x) const {
  Scalar r;
  for (const auto& [u, c] : x) r += c * weight_(u);
  return r;
}

Integral Integral::scaled(const Scalar& c) const {
  auto w = weight_;
  return Integral([w, c](Elem u) { return c * w(u); });
}

// ---------------------------------------------------------------------------
// integrals / cointegral / local_unit

namespace {

std::vector<Elem> test_elems(const MhcAlgebra& a, const std::vector<Elem>* sample) {
  if (sample && !sample->empty()) return dedup(*sample);
  if (a.finite()) return a.basis_labels();
  throw SampleRequired("infinite carrier: a sample of labels is required");
}

bool is_sampled(const MhcAlgebra& a, const std::vector<Elem>* sample) {
  return !a.finite() || (sample && !sample->empty() &&
                         static_cast<int>(dedup(*sample).size()) < a.dim());
}

FinSupp solve_cointegral_finite(const MhcAlgebra& a) {
  const int n = a.dim();
  Matrix sys(n * n, n);
  for (int i = 0; i < n; ++i) {
    Scalar eps = a.counit(fs_basis(i));
    for (int j = 0; j < n; ++j) {
      FinSupp prod = a.product(fs_basis(i), fs_basis(j));
      for (const auto& [k, c] : prod) sys.at(i * n + static_cast<int>(k), j) += c;
    }
    for (int k = 0; k < n; ++k) sys.at(i * n + k, k) -= eps;
  }
  auto basis = kernel_basis(sys);
  if (basis.empty()) throw NotDiscreteType("no left cointegral: not of discrete type");
  FinSupp xi;
  for (int j = 0; j < n; ++j)
    if (!basis[0][j].is_zero()) xi.emplace(j, basis[0][j]);
  return xi;
}

}  // namespace

MhcIntegrals integrals(const MhcAlgebra& a) {
  if (a.is_function_algebra()) {
    // Coefficient-sum functional; ψ = φ∘S stays all-ones since S permutes
    // the δ-basis.
    Integral phi([](Elem) { return Scalar(1); });
    return {phi, phi};
  }

  // Finite tensor algebra: solve (id⊗φ)Δ(x) = φ(x)1 on the basis.
  const int n = a.dim();
  FinSupp unit = a.one();
  Matrix sys(n * n, n);
  for (int k = 0; k < n; ++k) {
    for (const auto& term : a.coproduct_full(fs_basis(k)))
      sys.at(k * n + static_cast<int>(term.first), static_cast<int>(term.second)) += term.coef;
    for (int i = 0; i < n; ++i) {
      auto it = unit.find(i);
      if (it != unit.end()) sys.at(k * n + i, k) -= it->second;
    }
  }
  auto basis = kernel_basis(sys);
  if (basis.empty()) throw NoIntegral("integral space is trivial");
  Vec phi_vec = basis.front();

  // Normalize: φ(ξ) = 1 when a cointegral exists, else first nonzero = 1.
  try {
    FinSupp xi = solve_cointegral_finite(a);
    Scalar v;
    for (const auto& [u, c] : xi) v += c * phi_vec[static_cast<size_t>(u)];
    if (!v.is_zero()) phi_vec = vec_scale(v.inverse(), phi_vec);
  } catch (const NotDiscreteType&) {
    for (const auto& c : phi_vec)
      if (!c.is_zero()) {
        phi_vec = vec_scale(c.inverse(), phi_vec);
        break;
      }
  }

  // Faithfulness of φ (both Gram matrices).
  Matrix g(n, n), gr(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar v;
      for (const auto& [k, c] : a.product(fs_basis(i), fs_basis(j)))
        v += c * phi_vec[static_cast<size_t>(k)];
      g.at(i, j) = v;
      gr.at(j, i) = v;
    }
  if (rank(g) != n || rank(gr) != n) throw NotFaithful("left integral is not faithful");

  Vec psi_vec(n);
  for (int j = 0; j < n; ++j) {
    FinSupp sj = a.antipode(fs_basis(j));
    for (const auto& [k, c] : sj) psi_vec[j] += c * phi_vec[static_cast<size_t>(k)];
  }
  // ψ = φ∘S must solve the right-integral system.
  for (int k = 0; k < n; ++k) {
    FinSupp contracted;  // (ψ⊗id)Δ(e_k)
    for (const auto& term : a.coproduct_full(fs_basis(k)))
      fs_accumulate(contracted, term.second, term.coef * psi_vec[static_cast<size_t>(term.first)]);
    FinSupp expect = fs_scale(psi_vec[k], unit);
    if (!(contracted == expect)) throw NotIntegral("φ∘S fails the right-integral law");
  }

  Integral phi([phi_vec](Elem u) { return phi_vec[static_cast<size_t>(u)]; });
  Integral psi([psi_vec](Elem u) { return psi_vec[static_cast<size_t>(u)]; });
  return {phi, psi};
}

FinSupp cointegral(const MhcAlgebra& a, const std::vector<Elem>* sample) {
  FinSupp xi;
  if (a.is_function_algebra()) {
    const auto* fa = dynamic_cast<const FunctionAlgebra*>(&a);
    Elem e = fa->carrier().identity();
    xi = fs_basis(e);
    std::vector<Elem> probes = a.finite() ? a.basis_labels()
                               : sample   ? dedup(*sample)
                                          : std::vector<Elem>{e};
    for (Elem u : probes) {
      FinSupp lhs = a.product(fs_basis(u), xi);
      FinSupp rhs = fs_scale(a.counit(fs_basis(u)), xi);
      if (!(lhs == rhs)) throw NotDiscreteType("aξ = ε(a)ξ fails at " + a.elem_name(u));
    }
    return xi;
  }
  xi = solve_cointegral_finite(a);
  Scalar v = integrals(a).phi(xi);
  if (v.is_zero()) throw NotDiscreteType("cointegral exists but φ(ξ) = 0");
  return xi;
}

FinSupp local_unit(const MhcAlgebra& a, const std::vector<FinSupp>& elems) {
  if (elems.empty()) throw Error("local_unit: empty element list");
  FinSupp e;
  if (a.is_function_algebra()) {
    for (const auto& x : elems)
      for (const auto& [u, c] : x) e.emplace(u, Scalar(1));
  } else {
    e = a.one();
  }
  for (const auto& x : elems) {
    if (!(a.product(x, e) == x) || !(a.product(e, x) == x))
      throw Error("local_unit: verification failed");
  }
  return e;
}

// ---------------------------------------------------------------------------
// verify_mhc

namespace {

std::string fs_render(const MhcAlgebra& a, const FinSupp& x) {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [u, c] : x) {
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << c.str() << "*";
    os << "d[" << a.elem_name(u) << "]";
  }
  return os.str();
}

std::string pm_render(const MhcAlgebra& a, const PairMap& m) {
  if (m.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : m) {
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << c.str() << "*";
    os << "d[" << a.elem_name(key.first) << "]⊗d[" << a.elem_name(key.second) << "]";
  }
  return os.str();
}

void check_fs(AxiomReport& rep, const MhcAlgebra& a, const std::string& axiom,
              std::vector<long long> where, const FinSupp& lhs, const FinSupp& rhs) {
  ++rep.checks_run;
  if (!(lhs == rhs)) rep.add(axiom, std::move(where), fs_render(a, lhs), fs_render(a, rhs));
}

void check_scalar(AxiomReport& rep, const std::string& axiom, std::vector<long long> where,
                  const Scalar& lhs, const Scalar& rhs) {
  ++rep.checks_run;
  if (lhs != rhs) rep.add(axiom, std::move(where), lhs.str(), rhs.str());
}

void check_pm(AxiomReport& rep, const MhcAlgebra& a, const std::string& axiom,
              std::vector<long long> where, const PairMap& lhs, const PairMap& rhs) {
  ++rep.checks_run;
  if (!(lhs == rhs)) rep.add(axiom, std::move(where), pm_render(a, lhs), pm_render(a, rhs));
}

// Test elements capped for triple loops on sampled carriers.
std::vector<Elem> capped(const std::vector<Elem>& v, size_t cap) {
  if (v.size() <= cap) return v;
  return std::vector<Elem>(v.begin(), v.begin() + cap);
}

}  // namespace

AxiomReport verify_mhc(const MhcAlgebra& a, const std::vector<Elem>* sample) {
  AxiomReport rep;
  std::vector<Elem> elems = test_elems(a, sample);
  rep.sampled = is_sampled(a, sample);
  std::vector<Elem> small = capped(elems, 12);

  // unit law (finite: M(A) = A, so 1 ∈ A)
  if (a.finite()) {
    FinSupp one = a.one();
    for (Elem x : elems) {
      check_fs(rep, a, "unit_law", {x}, a.product(one, fs_basis(x)), fs_basis(x));
      check_fs(rep, a, "unit_law", {x}, a.product(fs_basis(x), one), fs_basis(x));
    }
  }

  // associativity of the product
  for (Elem x : small)
    for (Elem y : small)
      for (Elem z : small)
        check_fs(rep, a, "product_associative", {x, y, z},
                 a.product(a.product(fs_basis(x), fs_basis(y)), fs_basis(z)),
                 a.product(fs_basis(x), a.product(fs_basis(y), fs_basis(z))));

  // nondegeneracy (finite): trivial kernels of both multiplication operators
  if (a.finite()) {
    const int n = a.dim();
    Matrix left(n * n, n), right(n * n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        for (const auto& [k, c] : a.product(fs_basis(i), fs_basis(j)))
          left.at(j * n + static_cast<int>(k), i) = c;   // x ↦ x·e_j
        for (const auto& [k, c] : a.product(fs_basis(j), fs_basis(i)))
          right.at(j * n + static_cast<int>(k), i) = c;  // x ↦ e_j·x
      }
    ++rep.checks_run;
    if (!kernel_basis(left).empty())
      rep.add("product_nondegenerate", {}, "nontrivial right annihilator", "0");
    ++rep.checks_run;
    if (!kernel_basis(right).empty())
      rep.add("product_nondegenerate", {}, "nontrivial left annihilator", "0");
  }

  // counit laws through the T-maps
  for (Elem x : elems)
    for (Elem y : elems) {
      FinSupp prod = a.product(fs_basis(x), fs_basis(y));
      FinSupp via_t1, via_t2;
      for (const auto& term : a.t1(fs_basis(x), fs_basis(y)))
        fs_accumulate(via_t1, term.second, term.coef * a.counit(fs_basis(term.first)));
      for (const auto& term : a.t2(fs_basis(x), fs_basis(y)))
        fs_accumulate(via_t2, term.first, term.coef * a.counit(fs_basis(term.second)));
      check_fs(rep, a, "counit_t1", {x, y}, via_t1, prod);
      check_fs(rep, a, "counit_t2", {x, y}, via_t2, prod);
    }

  // S antimultiplicative
  for (Elem x : elems)
    for (Elem y : elems)
      check_fs(rep, a, "antipode_antimultiplicative", {x, y},
               a.antipode(a.product(fs_basis(x), fs_basis(y))),
               a.product(a.antipode(fs_basis(y)), a.antipode(fs_basis(x))));

  // S anticomultiplicative: Δ(S(a)) = (S⊗S)Δᶜᵒᵖ(a)
  if (a.finite()) {
    for (Elem u : elems) {
      PairMap lhs = pair_map(a.coproduct_full(a.antipode(fs_basis(u))));
      PairMap rhs;
      for (const auto& term : a.coproduct_full(fs_basis(u)))
        pair_accumulate(rhs, a.antipode(fs_basis(term.second)), a.antipode(fs_basis(term.first)),
                        term.coef);
      check_pm(rep, a, "antipode_anticomultiplicative", {u}, lhs, rhs);
    }
  } else {
    for (Elem u : small)
      for (Elem x : small)
        for (Elem y : small) {
          PairMap lhs;
          for (const auto& term : a.t1(a.antipode(fs_basis(u)), fs_basis(y)))
            pair_accumulate(lhs, a.product(fs_basis(term.first), fs_basis(x)),
                            fs_basis(term.second), term.coef);
          PairMap rhs;
          auto seconds = a.candidates_antipode_hits(a.candidates_mul({x}));
          for (const auto& term : a.coproduct_second_in(fs_basis(u), seconds))
            pair_accumulate(rhs, a.product(a.antipode(fs_basis(term.second)), fs_basis(x)),
                            a.product(a.antipode(fs_basis(term.first)), fs_basis(y)), term.coef);
          check_pm(rep, a, "antipode_anticomultiplicative", {u, x, y}, lhs, rhs);
        }
  }

  // (2.1): S(a₍₁₎)a₍₂₎₍₁₎ ⊗ a₍₂₎₍₂₎ = 1⊗a = a₍₁₎S(a₍₂₎₍₁₎) ⊗ a₍₂₎₍₂₎
  // (2.2): a₍₁₎₍₁₎ ⊗ S(a₍₁₎₍₂₎)a₍₂₎ = a⊗1 = a₍₁₎₍₁₎ ⊗ a₍₁₎₍₂₎S(a₍₂₎)
  if (a.finite()) {
    FinSupp one = a.one();
    for (Elem u : elems) {
      PairMap l21a, l21b, l22a, l22b;
      for (const auto& outer : a.coproduct_full(fs_basis(u))) {
        // split of the second leg
        for (const auto& inner : a.coproduct_full(fs_basis(outer.second))) {
          Scalar c = outer.coef * inner.coef;
          pair_accumulate(l21a, a.product(a.antipode(fs_basis(outer.first)), fs_basis(inner.first)),
                          fs_basis(inner.second), c);
          pair_accumulate(l21b, a.product(fs_basis(outer.first), a.antipode(fs_basis(inner.first))),
                          fs_basis(inner.second), c);
        }
        // split of the first leg
        for (const auto& inner : a.coproduct_full(fs_basis(outer.first))) {
          Scalar c = outer.coef * inner.coef;
          pair_accumulate(l22a, fs_basis(inner.first),
                          a.product(a.antipode(fs_basis(inner.second)), fs_basis(outer.second)), c);
          pair_accumulate(l22b, fs_basis(inner.first),
                          a.product(fs_basis(inner.second), a.antipode(fs_basis(outer.second))), c);
        }
      }
      PairMap one_a, a_one;
      pair_accumulate(one_a, one, fs_basis(u), Scalar(1));
      pair_accumulate(a_one, fs_basis(u), one, Scalar(1));
      check_pm(rep, a, "axiom_2_1_first", {u}, l21a, one_a);
      check_pm(rep, a, "axiom_2_1_second", {u}, l21b, one_a);
      check_pm(rep, a, "axiom_2_2_first", {u}, l22a, a_one);
      check_pm(rep, a, "axiom_2_2_second", {u}, l22b, a_one);
    }
  } else {
    for (Elem u : small)
      for (Elem x : small)
        for (Elem y : small) {
          auto middles = a.middle_candidates(fs_basis(u), {x}, {y});
          PairMap l21a, l21b, l22a, l22b;
          for (Elem m : middles) {
            for (const auto& outer : a.coproduct_second_in(fs_basis(u), {m}))
              for (const auto& inner : a.t1(fs_basis(m), fs_basis(y))) {
                Scalar c = outer.coef * inner.coef;
                pair_accumulate(
                    l21a,
                    a.product(a.antipode(fs_basis(outer.first)),
                              a.product(fs_basis(inner.first), fs_basis(x))),
                    fs_basis(inner.second), c);
                pair_accumulate(
                    l21b,
                    a.product(fs_basis(outer.first),
                              a.product(a.antipode(fs_basis(inner.first)), fs_basis(x))),
                    fs_basis(inner.second), c);
              }
            for (const auto& outer : a.coproduct_first_in(fs_basis(u), {m}))
              for (const auto& inner : a.t2(fs_basis(x), fs_basis(m))) {
                Scalar c = outer.coef * inner.coef;
                pair_accumulate(
                    l22a, fs_basis(inner.first),
                    a.product(a.antipode(fs_basis(inner.second)),
                              a.product(fs_basis(outer.second), fs_basis(y))),
                    c);
                pair_accumulate(
                    l22b, fs_basis(inner.first),
                    a.product(fs_basis(inner.second),
                              a.product(a.antipode(fs_basis(outer.second)), fs_basis(y))),
                    c);
              }
          }
          PairMap one_a, a_one;
          pair_accumulate(one_a, fs_basis(x), a.product(fs_basis(u), fs_basis(y)), Scalar(1));
          pair_accumulate(a_one, a.product(fs_basis(u), fs_basis(x)), fs_basis(y), Scalar(1));
          check_pm(rep, a, "axiom_2_1_first", {u, x, y}, l21a, one_a);
          check_pm(rep, a, "axiom_2_1_second", {u, x, y}, l21b, one_a);
          check_pm(rep, a, "axiom_2_2_first", {u, x, y}, l22a, a_one);
          check_pm(rep, a, "axiom_2_2_second", {u, x, y}, l22b, a_one);
        }
  }

  // m(S⊗id)(Δ(a)(1⊗b)) = ε(a)b and m(id⊗S)((a⊗1)Δ(b)) = ε(b)a
  for (Elem x : elems)
    for (Elem y : elems) {
      FinSupp l1, l2;
      for (const auto& term : a.t1(fs_basis(x), fs_basis(y)))
        l1 = fs_add(l1, fs_scale(term.coef, a.product(a.antipode(fs_basis(term.first)),
                                                      fs_basis(term.second))));
      for (const auto& term : a.t2(fs_basis(x), fs_basis(y)))
        l2 = fs_add(l2, fs_scale(term.coef, a.product(fs_basis(term.first),
                                                      a.antipode(fs_basis(term.second)))));
      check_fs(rep, a, "antipode_cancel_left", {x, y}, l1,
               fs_scale(a.counit(fs_basis(x)), fs_basis(y)));
      check_fs(rep, a, "antipode_cancel_right", {x, y}, l2,
               fs_scale(a.counit(fs_basis(y)), fs_basis(x)));
    }

  // coassociativity probe (informational: Δ need not be coassociative)
  bool coassoc = true;
  std::string witness;
  if (a.finite()) {
    for (Elem u : elems) {
      TripleMap lhs, rhs;
      for (const auto& outer : a.coproduct_full(fs_basis(u))) {
        for (const auto& inner : a.coproduct_full(fs_basis(outer.first)))
          triple_accumulate(lhs, fs_basis(inner.first), fs_basis(inner.second),
                            fs_basis(outer.second), outer.coef * inner.coef);
        for (const auto& inner : a.coproduct_full(fs_basis(outer.second)))
          triple_accumulate(rhs, fs_basis(outer.first), fs_basis(inner.first),
                            fs_basis(inner.second), outer.coef * inner.coef);
      }
      if (!(lhs == rhs)) {
        coassoc = false;
        witness = "d[" + a.elem_name(u) + "]";
        break;
      }
    }
  } else {
    for (Elem u : small) {
      for (Elem x : small)
        for (Elem y : small)
          for (Elem z : small) {
            TripleMap lhs, rhs;
            for (Elem m : a.middle_candidates(fs_basis(u), {x}, {y}))
              for (const auto& outer : a.coproduct_first_in(fs_basis(u), {m}))
                for (const auto& inner : a.t1(fs_basis(m), fs_basis(y)))
                  triple_accumulate(lhs, a.product(fs_basis(inner.first), fs_basis(x)),
                                    fs_basis(inner.second),
                                    a.product(fs_basis(outer.second), fs_basis(z)),
                                    outer.coef * inner.coef);
            for (Elem m : a.middle_candidates(fs_basis(u), {y}, {z}))
              for (const auto& outer : a.coproduct_second_in(fs_basis(u), {m}))
                for (const auto& inner : a.t1(fs_basis(m), fs_basis(z)))
                  triple_accumulate(rhs, a.product(fs_basis(outer.first), fs_basis(x)),
                                    a.product(fs_basis(inner.first), fs_basis(y)),
                                    fs_basis(inner.second), outer.coef * inner.coef);
            if (!(lhs == rhs)) {
              coassoc = false;
              witness = "d[" + a.elem_name(u) + "] against (" + a.elem_name(x) + "," +
                        a.elem_name(y) + "," + a.elem_name(z) + ")";
            }
            if (!coassoc) break;
          }
      if (!coassoc) break;
    }
  }
  if (coassoc)
    rep.probes.emplace_back("coassociative", "true");
  else
    rep.probes.emplace_back("noncoassoc_witness", witness);

  return rep;
}

// ---------------------------------------------------------------------------
// verify_integral_identities

namespace {

// Finitely supported functional from per-label evaluation over candidates.
FinSupp pullback(const std::vector<Elem>& candidates, const std::function<Scalar(Elem)>& eval) {
  FinSupp g;
  for (Elem t : candidates) {
    Scalar v = eval(t);
    if (!v.is_zero()) fs_accumulate(g, t, v);
  }
  return g;
}

}  // namespace

AxiomReport verify_integral_identities(const MhcAlgebra& a, const Integral& phi,
                                       const Integral& psi, const std::vector<Elem>* sample) {
  AxiomReport rep;
  std::vector<Elem> elems = test_elems(a, sample);
  rep.sampled = is_sampled(a, sample);

  for (Elem u : elems)
    for (Elem y : elems) {
      FinSupp da = fs_basis(u), db = fs_basis(y);
      FinSupp sb = a.antipode(db);
      FinSupp sa = a.antipode(da);

      // (3.1) first: a₍₁₎φ(a₍₂₎S(b)) = φ(aS(b₍₁₎))b₍₂₎
      {
        FinSupp lhs;
        for (const auto& term : a.t1(da, sb))
          fs_accumulate(lhs, term.first, term.coef * phi(fs_basis(term.second)));
        FinSupp g = pullback(a.candidates_antipode_hits(a.candidates_mul({u})), [&](Elem t) {
          return phi(a.product(da, a.antipode(fs_basis(t))));
        });
        FinSupp rhs = a.contract_first(g, db);
        check_fs(rep, a, "integral_3_1_first", {u, y}, lhs, rhs);
      }

      // (3.1) second: a₍₁₎φ(ba₍₂₎) = S(b₍₁₎)φ(b₍₂₎a)
      {
        FinSupp f = pullback(a.candidates_mul({y}),
                             [&](Elem t) { return phi(a.product(db, fs_basis(t))); });
        FinSupp lhs = a.contract_second(da, f);
        FinSupp f2 = pullback(a.candidates_mul({u}),
                              [&](Elem t) { return phi(a.product(fs_basis(t), da)); });
        FinSupp rhs = a.antipode(a.contract_second(db, f2));
        check_fs(rep, a, "integral_3_1_second", {u, y}, lhs, rhs);
      }

      // (3.2) first: ψ(S(a)b₍₁₎)b₍₂₎ = ψ(S(a₍₂₎)b)a₍₁₎
      {
        FinSupp g = pullback(a.candidates_mul(fs_support(sa)),
                             [&](Elem t) { return psi(a.product(sa, fs_basis(t))); });
        FinSupp lhs = a.contract_first(g, db);
        FinSupp f = pullback(a.candidates_antipode_hits(a.candidates_mul({y})), [&](Elem t) {
          return psi(a.product(a.antipode(fs_basis(t)), db));
        });
        FinSupp rhs = a.contract_second(da, f);
        check_fs(rep, a, "integral_3_2_first", {u, y}, lhs, rhs);
      }

      // (3.2) second: ψ(a₍₁₎b)a₍₂₎ = ψ(ab₍₁₎)S(b₍₂₎)
      {
        FinSupp g = pullback(a.candidates_mul({y}),
                             [&](Elem t) { return psi(a.product(fs_basis(t), db)); });
        FinSupp lhs = a.contract_first(g, da);
        FinSupp f = pullback(a.candidates_mul({u}),
                             [&](Elem t) { return psi(a.product(da, fs_basis(t))); });
        FinSupp rhs = a.antipode(a.contract_first(f, db));
        check_fs(rep, a, "integral_3_2_second", {u, y}, lhs, rhs);
      }
    }
  return rep;
}

// ---------------------------------------------------------------------------
// modular data

Multiplier unit_multiplier() {
  Multiplier m;
  m.left = [](const FinSupp& x) { return x; };
  m.right = [](const FinSupp& x) { return x; };
  return m;
}

LinearMap identity_map() {
  LinearMap m;
  m.fwd = [](const FinSupp& x) { return x; };
  m.inv = [](const FinSupp& x) { return x; };
  return m;
}

namespace {

FinSupp matrix_apply_fs(const Matrix& m, const FinSupp& x) {
  FinSupp r;
  for (const auto& [j, c] : x)
    for (int i = 0; i < m.rows(); ++i) {
      const Scalar& v = m.at(i, static_cast<int>(j));
      if (!v.is_zero()) fs_accumulate(r, i, c * v);
    }
  return r;
}

}  // namespace

ModularData modular_data(const MhcAlgebra& a, const Integral& phi,
                         const std::vector<Elem>* sample) {
  std::vector<Elem> elems = test_elems(a, sample);
  std::vector<Elem> small = capped(elems, 12);

  Elem a0 = -1;
  bool found = false;
  for (Elem u : elems)
    if (!phi.at(u).is_zero()) {
      a0 = u;
      found = true;
      break;
    }
  if (!found) throw NotIntegral("modular_data: φ vanishes on every probe element");
  Scalar c0 = phi.at(a0).inverse();

  ModularData md;
  md.delta.left = [&a, phi, a0, c0](const FinSupp& x) {
    FinSupp r;
    for (const auto& term : a.t1(fs_basis(a0), x))
      fs_accumulate(r, term.second, term.coef * c0 * phi(fs_basis(term.first)));
    return r;
  };
  md.delta.right = [&a, phi, a0, c0](const FinSupp& x) {
    FinSupp r;
    for (const auto& term : a.t1_leftmul(fs_basis(a0), x))
      fs_accumulate(r, term.second, term.coef * c0 * phi(fs_basis(term.first)));
    return r;
  };
  if (a.finite()) {
    FinSupp g;
    for (Elem u : a.basis_labels()) {
      Scalar w = phi.at(u);
      if (!w.is_zero()) g.emplace(u, w);
    }
    md.delta.element = fs_scale(c0, a.contract_first(g, fs_basis(a0)));
  }

  // Cross-check the defining relation over other probes: (φ⊗id)Δ(u)·x must
  // equal φ(u)·δ·x for every u, not just the reference element.
  for (Elem u : small) {
    for (Elem x : small) {
      FinSupp lhs;
      for (const auto& term : a.t1(fs_basis(u), fs_basis(x)))
        fs_accumulate(lhs, term.second, term.coef * phi(fs_basis(term.first)));
      FinSupp rhs = fs_scale(phi.at(u), md.delta.left(fs_basis(x)));
      if (!(lhs == rhs))
        throw NotIntegral("modular_data: (φ⊗id)Δ(a) = φ(a)δ fails; φ is not an integral");
      FinSupp lhs2;
      for (const auto& term : a.t1_leftmul(fs_basis(u), fs_basis(x)))
        fs_accumulate(lhs2, term.second, term.coef * phi(fs_basis(term.first)));
      FinSupp rhs2 = fs_scale(phi.at(u), md.delta.right(fs_basis(x)));
      if (!(lhs2 == rhs2))
        throw NotIntegral("modular_data: x·δ probe disagrees; φ is not an integral");
    }
  }

  // δ⁻¹ = S(δ): actions through antimultiplicativity of S.
  auto delta_left = md.delta.left;
  auto delta_right = md.delta.right;
  md.delta_inv.left = [&a, delta_right](const FinSupp& x) {
    return a.antipode(delta_right(a.antipode_inv(x)));
  };
  md.delta_inv.right = [&a, delta_left](const FinSupp& x) {
    return a.antipode(delta_left(a.antipode_inv(x)));
  };
  if (md.delta.element) md.delta_inv.element = a.antipode(*md.delta.element);

  for (Elem x : small) {
    FinSupp b = fs_basis(x);
    if (!(md.delta.left(md.delta_inv.left(b)) == b) ||
        !(md.delta_inv.left(md.delta.left(b)) == b) ||
        !(md.delta.right(md.delta_inv.right(b)) == b) ||
        !(md.delta_inv.right(md.delta.right(b)) == b))
      throw Error("modular_data: S(δ) is not a two-sided inverse of δ");
  }

  md.delta_is_unit = true;
  for (Elem x : small) {
    FinSupp b = fs_basis(x);
    if (!(md.delta.left(b) == b) || !(md.delta.right(b) == b)) {
      md.delta_is_unit = false;
      break;
    }
  }

  // τ from φ∘S² = τφ, cross-checked on every probe.
  bool tau_set = false;
  for (Elem u : elems) {
    Scalar s2 = phi(a.antipode(a.antipode(fs_basis(u))));
    Scalar w = phi.at(u);
    if (w.is_zero()) {
      if (!s2.is_zero())
        throw InconsistentTau("φ(S²(a)) ≠ 0 while φ(a) = 0 at " + a.elem_name(u));
      continue;
    }
    Scalar ratio = s2 / w;
    if (!tau_set) {
      md.tau = ratio;
      tau_set = true;
    } else if (ratio != md.tau) {
      throw InconsistentTau("φ∘S² / φ disagrees between probe elements");
    }
  }
  if (!tau_set) throw NotIntegral("modular_data: φ vanishes on every probe element");

  // σ: Gram solve on finite carriers, identity on commutative ones.
  if (a.finite()) {
    const int n = a.dim();
    Matrix g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g.at(i, j) = phi(a.product(fs_basis(i), fs_basis(j)));
    auto ginv = inverse(g);
    if (!ginv) throw NotFaithful("modular_data: Gram matrix singular, φ not faithful");
    Matrix sigma_mat = ginv->mul(g.transposed());
    auto sigma_inv_mat = inverse(sigma_mat);
    if (!sigma_inv_mat) throw NotFaithful("modular_data: σ not invertible");
    md.sigma.fwd = [sigma_mat](const FinSupp& x) { return matrix_apply_fs(sigma_mat, x); };
    Matrix sim = *sigma_inv_mat;
    md.sigma.inv = [sim](const FinSupp& x) { return matrix_apply_fs(sim, x); };
  } else {
    if (!a.product_commutative())
      throw Error("modular_data: σ on an infinite noncommutative carrier is not supported");
    md.sigma = identity_map();
    for (Elem u : small)
      for (Elem v : small) {
        Scalar lhs = phi(a.product(fs_basis(u), fs_basis(v)));
        Scalar rhs = phi(a.product(fs_basis(v), fs_basis(u)));
        if (lhs != rhs) throw NotIntegral("modular_data: φ(ab) ≠ φ(ba) on commutative carrier");
      }
  }

  auto sig = md.sigma;
  md.sigma_prime.fwd = [&a, sig](const FinSupp& x) {
    return a.antipode_inv(sig.inv(a.antipode(x)));
  };
  md.sigma_prime.inv = [&a, sig](const FinSupp& x) {
    return a.antipode_inv(sig.fwd(a.antipode(x)));
  };
  return md;
}

AxiomReport verify_modular_properties(const MhcAlgebra& a, const ModularData& md,
                                      const Integral& phi, const Integral& psi, const FinSupp* xi,
                                      const std::vector<Elem>* sample) {
  AxiomReport rep;
  std::vector<Elem> elems = test_elems(a, sample);
  rep.sampled = is_sampled(a, sample);
  std::vector<Elem> small = capped(elems, 12);

  Scalar tau_inv = md.tau.inverse();

  for (Elem u : elems) {
    FinSupp da = fs_basis(u);

    // Prop 3.5 (2): φ(S(a)) = φ(aδ)
    check_scalar(rep, "phi_antipode_delta", {u}, phi(a.antipode(da)), phi(md.delta.right(da)));

    // ε(δa) = ε(a), i.e. ε(δ) = 1
    check_scalar(rep, "epsilon_delta", {u}, a.counit(md.delta.left(da)), a.counit(da));

    // Prop 3.6: invariance
    check_scalar(rep, "sigma_invariance", {u}, phi(md.sigma.fwd(da)), phi(da));
    check_scalar(rep, "sigma_prime_invariance", {u}, psi(md.sigma_prime.fwd(da)), psi(da));

    // Prop 3.7 (1): σ′(a) = δσ(a)δ⁻¹
    check_fs(rep, a, "sigma_prime_conjugation", {u}, md.sigma_prime.fwd(da),
             md.delta_inv.right(md.delta.left(md.sigma.fwd(da))));

    // Prop 3.7 (3): σσ′ = σ′σ
    check_fs(rep, a, "sigma_commute", {u}, md.sigma.fwd(md.sigma_prime.fwd(da)),
             md.sigma_prime.fwd(md.sigma.fwd(da)));

    // Prop 3.7 (4): both commute with S²
    FinSupp s2 = a.antipode(a.antipode(da));
    check_fs(rep, a, "sigma_s2_commute", {u}, md.sigma.fwd(s2), a.antipode(a.antipode(md.sigma.fwd(da))));
    check_fs(rep, a, "sigma_prime_s2_commute", {u}, md.sigma_prime.fwd(s2),
             a.antipode(a.antipode(md.sigma_prime.fwd(da))));

    // remark after Prop 3.5: φ(δ⁻¹aδ) = τφ(a)
    check_scalar(rep, "tau_conjugation", {u}, phi(md.delta.right(md.delta_inv.left(da))),
                 md.tau * phi(da));

    // Lemma 3.2 reconstruction through the cointegral: a = (id⊗φ)(Δ(a)(1⊗e))
    if (xi) {
      Scalar v = phi(*xi);
      if (!v.is_zero()) {
        FinSupp e = fs_scale(v.inverse(), *xi);
        FinSupp rec;
        for (const auto& term : a.t1(da, e))
          fs_accumulate(rec, term.first, term.coef * phi(fs_basis(term.second)));
        check_fs(rep, a, "reconstruction", {u}, rec, da);
      }
    }
  }

  // Prop 3.5 (1) right half: (id⊗ψ)Δ(a) = ψ(a)δ⁻¹, as left multipliers.
  for (Elem u : small)
    for (Elem x : small) {
      FinSupp lhs;
      for (const auto& term : a.t2_rightmul(fs_basis(x), fs_basis(u)))
        fs_accumulate(lhs, term.first, term.coef * psi(fs_basis(term.second)));
      // lhs = Σ a₍₁₎x·ψ(a₍₂₎) = [(id⊗ψ)Δ(a)]·x with the multiplier acting on
      // the right of x; the matching multiplier action is x·(ψ(a)δ⁻¹).
      check_fs(rep, a, "psi_delta_inverse", {u, x}, lhs,
               fs_scale(psi.at(u), md.delta_inv.right(fs_basis(x))));
    }

  // Prop 3.6 defining equations and homomorphism property
  for (Elem u : elems)
    for (Elem v : elems) {
      FinSupp da = fs_basis(u), db = fs_basis(v);
      check_scalar(rep, "sigma_defining", {u, v}, phi(a.product(da, db)),
                   phi(a.product(db, md.sigma.fwd(da))));
      check_scalar(rep, "sigma_prime_defining", {u, v}, psi(a.product(da, db)),
                   psi(a.product(db, md.sigma_prime.fwd(da))));
      check_fs(rep, a, "sigma_homomorphism", {u, v}, md.sigma.fwd(a.product(da, db)),
               a.product(md.sigma.fwd(da), md.sigma.fwd(db)));
    }

  // Prop 3.7 (2): σ(δ) = δ/τ and σ′(δ) = δ/τ, as multiplier actions.
  for (Elem x : small) {
    FinSupp b = fs_basis(x);
    check_fs(rep, a, "sigma_delta", {x}, md.sigma.fwd(md.delta.left(md.sigma.inv(b))),
             fs_scale(tau_inv, md.delta.left(b)));
    check_fs(rep, a, "sigma_prime_delta", {x},
             md.sigma_prime.fwd(md.delta.left(md.sigma_prime.inv(b))),
             fs_scale(tau_inv, md.delta.left(b)));
  }

  // Prop 3.7 (5): Δ(σ(a)) = (S²⊗σ)Δ(a) and Δ(σ′(a)) = (σ′⊗S⁻²)Δ(a)
  if (a.finite()) {
    for (Elem u : elems) {
      FinSupp da = fs_basis(u);
      PairMap lhs = pair_map(a.coproduct_full(md.sigma.fwd(da)));
      PairMap rhs;
      for (const auto& term : a.coproduct_full(da))
        pair_accumulate(rhs, a.antipode(a.antipode(fs_basis(term.first))),
                        md.sigma.fwd(fs_basis(term.second)), term.coef);
      check_pm(rep, a, "coproduct_sigma", {u}, lhs, rhs);

      PairMap lhs2 = pair_map(a.coproduct_full(md.sigma_prime.fwd(da)));
      PairMap rhs2;
      for (const auto& term : a.coproduct_full(da))
        pair_accumulate(rhs2, md.sigma_prime.fwd(fs_basis(term.first)),
                        a.antipode_inv(a.antipode_inv(fs_basis(term.second))), term.coef);
      check_pm(rep, a, "coproduct_sigma_prime", {u}, lhs2, rhs2);
    }
  } else {
    for (Elem u : small)
      for (Elem x : small)
        for (Elem y : small) {
          FinSupp da = fs_basis(u);
          PairMap lhs;
          for (const auto& term : a.t1(md.sigma.fwd(da), fs_basis(y)))
            pair_accumulate(lhs, a.product(fs_basis(term.first), fs_basis(x)),
                            fs_basis(term.second), term.coef);
          PairMap rhs;
          auto seconds = a.candidates_mul(fs_support(md.sigma.inv(fs_basis(y))));
          for (const auto& term : a.coproduct_second_in(da, seconds))
            pair_accumulate(rhs,
                            a.product(a.antipode(a.antipode(fs_basis(term.first))), fs_basis(x)),
                            a.product(md.sigma.fwd(fs_basis(term.second)), fs_basis(y)),
                            term.coef);
          check_pm(rep, a, "coproduct_sigma", {u, x, y}, lhs, rhs);

          PairMap lhs2;
          for (const auto& term : a.t1(md.sigma_prime.fwd(da), fs_basis(y)))
            pair_accumulate(lhs2, a.product(fs_basis(term.first), fs_basis(x)),
                            fs_basis(term.second), term.coef);
          PairMap rhs2;
          auto sec2 = a.candidates_antipode_inv_hits(
              a.candidates_antipode_inv_hits(a.candidates_mul({y})));
          for (const auto& term : a.coproduct_second_in(da, sec2))
            pair_accumulate(rhs2,
                            a.product(md.sigma_prime.fwd(fs_basis(term.first)), fs_basis(x)),
                            a.product(a.antipode_inv(a.antipode_inv(fs_basis(term.second))),
                                      fs_basis(y)),
                            term.coef);
          check_pm(rep, a, "coproduct_sigma_prime", {u, x, y}, lhs2, rhs2);
        }
  }

  return rep;
}

}  // namespace qhopf
