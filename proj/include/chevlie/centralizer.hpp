#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "chevlie/chevalley.hpp"
#include "chevlie/linalg.hpp"

namespace chevlie {

struct CentralizerError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fixed space of a set of adjoint matrices: the intersection of
// ker(Ad g - 1) over the generators. Empty input gives the whole algebra.
template <class F>
Subspace<F> lie_fixed_space(const LieAlgebra<F>& L,
                            const std::vector<Mat<F>>& gens) {
  const F& f = L.field();
  Subspace<F> cur = Subspace<F>::whole(f, L.dim());
  Mat<F> id = Mat<F>::identity(f, L.dim());
  for (const auto& g : gens) {
    if (g.f != &f) throw CentralizerError("generator over the wrong field");
    if (g.rows != L.dim() || g.cols != L.dim())
      throw CentralizerError("generator of the wrong dimension");
    cur = cur.intersect(kernel(g.sub(id)));
  }
  return cur;
}

// Centralizer of a set of Lie algebra elements: intersection of ker(ad x).
template <class F>
Subspace<F> lie_centralizer(
    const LieAlgebra<F>& L,
    const std::vector<std::vector<typename F::Elem>>& xs) {
  Subspace<F> cur = Subspace<F>::whole(L.field(), L.dim());
  for (const auto& x : xs) cur = cur.intersect(kernel(L.ad(x)));
  return cur;
}

// Outcome of comparing a computed fixed space against the declared tangent
// space of a known centralizer subgroup. The witnesses span a canonical
// complement of the declared space inside the computed one; they are the
// fixed vectors that the declared centralizer cannot account for.
template <class F>
struct SeparabilityReport {
  Subspace<F> computed;
  uint32_t dim_computed = 0;
  uint32_t dim_declared = 0;
  bool separable = false;
  std::vector<std::vector<typename F::Elem>> witnesses;

  explicit SeparabilityReport(Subspace<F> c) : computed(std::move(c)) {}
};

// `within` restricts the comparison to a subalgebra (for probing H inside a
// subgroup whose Lie algebra is a proper subspace); defaults to everything.
template <class F>
SeparabilityReport<F> separability_probe(const LieAlgebra<F>& L,
                                         const std::vector<Mat<F>>& gens,
                                         const Subspace<F>& declared,
                                         const Subspace<F>* within = nullptr) {
  SeparabilityReport<F> r(lie_fixed_space(L, gens));
  if (within) r.computed = r.computed.intersect(*within);
  if (!r.computed.contains(declared))
    throw CentralizerError(
        "declared tangent space is not contained in the computed fixed space");
  r.dim_computed = r.computed.dim();
  r.dim_declared = declared.dim();
  r.separable = r.dim_computed == r.dim_declared;
  // rows of the computed space whose pivot is not a declared pivot span a
  // complement of the declared space (pivots of a subspace are always a
  // subset of the pivots of any containing space in reduced form)
  std::vector<uint32_t> dp = declared.pivots();
  for (uint32_t i = 0; i < r.computed.dim(); ++i) {
    uint32_t p = r.computed.pivots()[i];
    bool is_declared = false;
    for (uint32_t d : dp) is_declared = is_declared || d == p;
    if (!is_declared) r.witnesses.push_back(r.computed.basis_row(i));
  }
  if (r.witnesses.size() != r.dim_computed - r.dim_declared)
    throw CentralizerError("witness extraction lost a complement vector");
  return r;
}

// Complement stability check: hSpan plus the span of the standard basis
// vectors away from its pivots decomposes the algebra; returns true iff
// every generator maps that complement into itself.
template <class F>
bool reductive_pair_check(const LieAlgebra<F>& L,
                          const std::vector<Mat<F>>& gens,
                          const Subspace<F>& hSpan) {
  const F& f = L.field();
  if (hSpan.ambient_dim() != L.dim())
    throw CentralizerError("subalgebra span has the wrong ambient dimension");
  std::vector<uint32_t> piv = hSpan.pivots();
  std::vector<uint32_t> rest;
  for (uint32_t j = 0; j < L.dim(); ++j) {
    bool is_piv = false;
    for (uint32_t p : piv) is_piv = is_piv || p == j;
    if (!is_piv) rest.push_back(j);
  }
  Subspace<F> comp = Subspace<F>::from_basis_indices(f, L.dim(), rest);
  if (hSpan.sum(comp).dim() != L.dim())
    throw CentralizerError("complement does not fill the algebra");
  for (const auto& g : gens) {
    if (g.f != &f) throw CentralizerError("generator over the wrong field");
    for (uint32_t j : rest)
      if (!comp.contains(g.apply(L.basis_vec(j)))) return false;
  }
  return true;
}

}  // namespace chevlie
