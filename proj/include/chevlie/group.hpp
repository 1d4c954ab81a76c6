#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chevlie/chevalley.hpp"
#include "chevlie/fields.hpp"
#include "chevlie/linalg.hpp"
#include "chevlie/rootsystem.hpp"

namespace chevlie {

struct GroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Adjoint matrix plus a human-readable generator word for reports.
template <class F>
struct GroupElement {
  Mat<F> m;
  std::string word;
};

// kappa_gamma(a) = sum_n a^n X_{gamma,n} acting on the Lie algebra.
template <class F>
Mat<F> root_element(const LieAlgebra<F>& L, uint32_t root,
                    typename F::Elem a) {
  const F& f = L.field();
  const auto& xs = L.divided_powers(root);
  Mat<F> r(f, L.dim(), L.dim());
  for (uint32_t n = 0; n < xs.size(); ++n)
    r = r.add(xs[n].scale(f.pow(a, (long long)n)));
  return r;
}

// lam(a) for a cocharacter lam = sum n_i alpha_i^vee: acts on u_gamma by
// a^<gamma,lam> and trivially on the Cartan part.
template <class F>
Mat<F> torus_element(const LieAlgebra<F>& L, const Cochar& lam,
                     typename F::Elem a) {
  const F& f = L.field();
  if (f.is_zero(a)) throw GroupError("torus parameter must be nonzero");
  const RootSystem& rs = L.form().roots();
  Mat<F> r = Mat<F>::identity(f, L.dim());
  for (uint32_t g = 0; g < rs.n_roots(); ++g) {
    uint32_t i = L.form().e_index(g);
    r.at(i, i) = f.pow(a, rs.cochar_pairing(g, lam));
  }
  return r;
}

// s_gamma = kappa_gamma(1) kappa_{-gamma}(-1) kappa_gamma(1)
template <class F>
Mat<F> weyl_rep(const LieAlgebra<F>& L, uint32_t root) {
  const F& f = L.field();
  typename F::Elem one = f.one();
  return root_element(L, root, one)
      .mul(root_element(L, L.form().roots().neg(root), f.neg(one)))
      .mul(root_element(L, root, one));
}

template <class F>
Mat<F> conj_by(const Mat<F>& g, const Mat<F>& x) {
  return g.mul(x).mul(g.inverse());
}

template <class F>
Mat<F> commutator(const Mat<F>& g, const Mat<F>& h) {
  return g.mul(h).mul(g.inverse()).mul(h.inverse());
}

template <class F>
bool is_unipotent(const Mat<F>& g) {
  if (g.rows != g.cols) throw GroupError("unipotence needs a square matrix");
  Mat<F> n = g.sub(Mat<F>::identity(*g.f, g.rows));
  Mat<F> p = Mat<F>::identity(*g.f, g.rows);
  for (uint32_t k = 0; k < g.rows; ++k) p = p.mul(n);
  return p.is_zero_matrix();
}

// Weight grading of the adjoint module under a cocharacter: conjugation by
// lam(a) scales the (i, j) matrix block by a^(w_i - w_j).
struct ParabolicDatum {
  Cochar lambda;
  std::vector<long long> weights;     // per basis index, 0 on the Cartan part
  std::vector<uint32_t> graded_order; // basis indices sorted by weight

  static ParabolicDatum make(const ChevalleyForm& cf, Cochar lam) {
    const RootSystem& rs = cf.roots();
    if (lam.size() != rs.rank())
      throw GroupError("cocharacter rank mismatch");
    ParabolicDatum d;
    d.lambda = std::move(lam);
    d.weights.assign(cf.dim(), 0);
    for (uint32_t g = 0; g < rs.n_roots(); ++g)
      d.weights[cf.e_index(g)] = rs.cochar_pairing(g, d.lambda);
    d.graded_order.resize(cf.dim());
    std::iota(d.graded_order.begin(), d.graded_order.end(), 0u);
    std::stable_sort(
        d.graded_order.begin(), d.graded_order.end(),
        [&](uint32_t x, uint32_t y) { return d.weights[x] < d.weights[y]; });
    return d;
  }
};

namespace detail {
template <class F>
void check_graded(const ParabolicDatum& d, const Mat<F>& g) {
  if (g.rows != g.cols || g.rows != d.weights.size())
    throw GroupError("matrix does not match the grading");
}
}  // namespace detail

// g lies in P_lambda iff conjugation by lam(a) has a limit at a = 0, i.e.
// every block from lower to strictly higher weight vanishes.
template <class F>
bool in_parabolic(const ParabolicDatum& d, const Mat<F>& g) {
  detail::check_graded(d, g);
  for (uint32_t i = 0; i < g.rows; ++i)
    for (uint32_t j = 0; j < g.cols; ++j)
      if (d.weights[i] < d.weights[j] && !g.f->is_zero(g.at(i, j)))
        return false;
  return true;
}

// c_lambda: the block-diagonal part in the weight grading (the projection
// P_lambda -> L_lambda; only a homomorphism on P_lambda).
template <class F>
Mat<F> levi_project(const ParabolicDatum& d, const Mat<F>& g) {
  detail::check_graded(d, g);
  Mat<F> r(*g.f, g.rows, g.cols);
  for (uint32_t i = 0; i < g.rows; ++i)
    for (uint32_t j = 0; j < g.cols; ++j)
      if (d.weights[i] == d.weights[j]) r.at(i, j) = g.at(i, j);
  return r;
}

template <class F>
bool in_levi(const ParabolicDatum& d, const Mat<F>& g) {
  detail::check_graded(d, g);
  for (uint32_t i = 0; i < g.rows; ++i)
    for (uint32_t j = 0; j < g.cols; ++j)
      if (d.weights[i] != d.weights[j] && !g.f->is_zero(g.at(i, j)))
        return false;
  return true;
}

template <class F>
struct ParabolicSplit {
  bool in_P = false;
  std::optional<Mat<F>> levi_part;  // set only when in_P
  bool unipotent_ok = false;        // in_P with identity Levi part
};

template <class F>
ParabolicSplit<F> parabolic_split(const ParabolicDatum& d, const Mat<F>& g) {
  ParabolicSplit<F> s;
  s.in_P = in_parabolic(d, g);
  if (s.in_P) {
    s.levi_part = levi_project(d, g);
    s.unipotent_ok = s.levi_part->is_identity();
  }
  return s;
}

}  // namespace chevlie
