#pragma once

#include <cassert>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "chevlie/linalg.hpp"
#include "chevlie/rootsystem.hpp"

namespace chevlie {

struct ChevError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dense integer matrix for the Z-form.
struct MatZ {
  uint32_t rows = 0, cols = 0;
  std::vector<long long> a;

  MatZ() = default;
  MatZ(uint32_t r, uint32_t c) : rows(r), cols(c), a((size_t)r * c, 0) {}
  static MatZ identity(uint32_t n) {
    MatZ m(n, n);
    for (uint32_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  long long& at(uint32_t i, uint32_t j) { return a[(size_t)i * cols + j]; }
  long long at(uint32_t i, uint32_t j) const {
    return a[(size_t)i * cols + j];
  }
  MatZ mul(const MatZ& o) const {
    assert(cols == o.rows);
    MatZ r(rows, o.cols);
    for (uint32_t i = 0; i < rows; ++i)
      for (uint32_t k = 0; k < cols; ++k) {
        long long x = at(i, k);
        if (x == 0) continue;
        for (uint32_t j = 0; j < o.cols; ++j) r.at(i, j) += x * o.at(k, j);
      }
    return r;
  }
  std::vector<long long> apply(const std::vector<long long>& v) const {
    assert(v.size() == cols);
    std::vector<long long> r(rows, 0);
    for (uint32_t i = 0; i < rows; ++i)
      for (uint32_t j = 0; j < cols; ++j) r[i] += at(i, j) * v[j];
    return r;
  }
  bool is_zero() const {
    for (long long x : a)
      if (x != 0) return false;
    return true;
  }
  bool operator==(const MatZ& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
  // Entrywise exact division; throws if any entry is not divisible.
  MatZ divexact(long long n) const {
    MatZ r = *this;
    for (auto& x : r.a) {
      if (x % n != 0)
        throw ChevError("inexact division by " + std::to_string(n) +
                        " in divided power");
      x /= n;
    }
    return r;
  }
  MatZ scale(long long n) const {
    MatZ r = *this;
    for (auto& x : r.a) x *= n;
    return r;
  }
};

// The Chevalley Z-form of the simple Lie algebra attached to a root system.
// Basis: h_1..h_r (simple coroots), then e_gamma for every root in root
// order.  Structure constants are built inductively from extraspecial pairs
// (pinned sign convention: every extraspecial pair gets a positive constant)
// and verified by an exhaustive Jacobi check over Z at construction time.
class ChevalleyForm {
public:
  static ChevalleyForm build(const RootSystem& rs);

  const RootSystem& roots() const { return rs_; }
  uint32_t rank() const { return rs_.rank(); }
  uint32_t dim() const { return rs_.rank() + rs_.n_roots(); }

  uint32_t h_index(uint32_t i) const { return i; }
  uint32_t e_index(uint32_t root_i) const { return rs_.rank() + root_i; }
  bool is_cartan_index(uint32_t b) const { return b < rs_.rank(); }
  uint32_t root_of_index(uint32_t b) const {
    if (b < rs_.rank() || b >= dim()) throw ChevError("not a root basis index");
    return b - rs_.rank();
  }
  std::string basis_name(uint32_t b) const;

  // N_{gamma,delta}: coefficient in [e_gamma, e_delta] = N e_{gamma+delta};
  // zero when gamma+delta is not a root.
  long long structure_N(uint32_t gi, uint32_t di) const {
    return n_[(size_t)gi * rs_.n_roots() + di];
  }
  // h_gamma = gamma^vee expanded over h_1..h_r.
  const Cochar& coroot_coeffs(uint32_t gi) const { return coroots_[gi]; }

  // [basis_i, basis_j] as a coefficient vector over the basis.
  std::vector<long long> bracket_basis(uint32_t bi, uint32_t bj) const;
  std::vector<long long> bracket(const std::vector<long long>& x,
                                 const std::vector<long long>& y) const;
  MatZ ad_basis(uint32_t bi) const;
  MatZ ad(const std::vector<long long>& v) const;

  // X_0 = I, X_n = (ad e_gamma)^n / n! while nonzero.  The nilpotency bound
  // (least n with (ad e_gamma)^n = 0) equals the returned list's size.
  std::vector<MatZ> divided_powers(uint32_t root_i) const;
  uint32_t nilpotency_bound(uint32_t root_i) const {
    return (uint32_t)divided_powers(root_i).size();
  }

  std::string structure_constants_json() const;

private:
  explicit ChevalleyForm(RootSystem rs) : rs_(std::move(rs)) {}
  void jacobi_check() const;

  RootSystem rs_;
  std::vector<long long> n_;  // n_roots x n_roots
  std::vector<Cochar> coroots_;
};

// The Lie algebra over a field: structure constants reduced, with cached
// divided-power matrices for building unipotent group elements.
template <class F>
class LieAlgebra {
public:
  using Elem = typename F::Elem;
  using Vec = std::vector<Elem>;

  LieAlgebra(const ChevalleyForm& cf, const F& f) : cf_(&cf), f_(&f) {
    xcache_.resize(cf.roots().n_roots());
    for (uint32_t g = 0; g < cf.roots().n_roots(); ++g) {
      auto xs = cf.divided_powers(g);
      for (const auto& xz : xs) xcache_[g].push_back(reduce_matrix(xz));
    }
  }

  const ChevalleyForm& form() const { return *cf_; }
  const F& field() const { return *f_; }
  uint32_t dim() const { return cf_->dim(); }

  Vec zero_vec() const { return Vec(dim(), f_->zero()); }
  Vec basis_vec(uint32_t b) const {
    Vec v = zero_vec();
    v.at(b) = f_->one();
    return v;
  }

  Mat<F> reduce_matrix(const MatZ& m) const {
    Mat<F> r(*f_, m.rows, m.cols);
    for (uint32_t i = 0; i < m.rows; ++i)
      for (uint32_t j = 0; j < m.cols; ++j)
        r.at(i, j) = f_->from_int(m.at(i, j));
    return r;
  }

  Vec bracket_basis(uint32_t bi, uint32_t bj) const {
    auto bz = cf_->bracket_basis(bi, bj);
    Vec v(dim());
    for (uint32_t k = 0; k < dim(); ++k) v[k] = f_->from_int(bz[k]);
    return v;
  }

  Vec bracket(const Vec& x, const Vec& y) const {
    if (x.size() != dim() || y.size() != dim())
      throw ChevError("vector dimension mismatch");
    Vec r = zero_vec();
    for (uint32_t i = 0; i < dim(); ++i) {
      if (f_->is_zero(x[i])) continue;
      for (uint32_t j = 0; j < dim(); ++j) {
        if (f_->is_zero(y[j])) continue;
        Elem c = f_->mul(x[i], y[j]);
        Vec bb = bracket_basis(i, j);
        for (uint32_t k = 0; k < dim(); ++k)
          r[k] = f_->add(r[k], f_->mul(c, bb[k]));
      }
    }
    return r;
  }

  Mat<F> ad_basis(uint32_t bi) const {
    Mat<F> m(*f_, dim(), dim());
    for (uint32_t j = 0; j < dim(); ++j) {
      Vec col = bracket_basis(bi, j);
      for (uint32_t i = 0; i < dim(); ++i) m.at(i, j) = col[i];
    }
    return m;
  }

  Mat<F> ad(const Vec& v) const {
    if (v.size() != dim()) throw ChevError("vector dimension mismatch");
    Mat<F> m(*f_, dim(), dim());
    for (uint32_t b = 0; b < dim(); ++b) {
      if (f_->is_zero(v[b])) continue;
      Mat<F> mb = ad_basis(b).scale(v[b]);
      m = m.add(mb);
    }
    return m;
  }

  // Divided powers of ad e_gamma over the field, X_0 = I first.
  const std::vector<Mat<F>>& divided_powers(uint32_t root_i) const {
    return xcache_.at(root_i);
  }

  // Tangent vector d lambda(1) = sum n_i h_i of a cocharacter, reduced.
  Vec cochar_tangent(const Cochar& lam) const {
    if (lam.size() != cf_->rank()) throw ChevError("cocharacter rank mismatch");
    Vec v = zero_vec();
    for (uint32_t i = 0; i < cf_->rank(); ++i) v[i] = f_->from_int(lam[i]);
    return v;
  }

  std::string vec_to_string(const Vec& v) const {
    std::string s;
    for (uint32_t b = 0; b < dim(); ++b) {
      if (f_->is_zero(v[b])) continue;
      if (!s.empty()) s += " + ";
      std::string c = f_->to_string(v[b]);
      if (c != "1") s += "(" + c + ")*";
      s += cf_->basis_name(b);
    }
    return s.empty() ? "0" : s;
  }

private:
  const ChevalleyForm* cf_;
  const F* f_;
  std::vector<std::vector<Mat<F>>> xcache_;
};

}  // namespace chevlie
