#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace chevlie {

struct LinalgError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dense row-major matrix over a field abstraction F (Fq or RatFuncField).
// All operations go through the field object; mixing matrices over different
// field objects is a checked error.
template <class F>
struct Mat {
  using Elem = typename F::Elem;
  using Vec = std::vector<Elem>;

  const F* f = nullptr;
  uint32_t rows = 0, cols = 0;
  std::vector<Elem> a;

  Mat() = default;
  Mat(const F& fld, uint32_t r, uint32_t c)
      : f(&fld), rows(r), cols(c), a((size_t)r * c, fld.zero()) {}

  static Mat identity(const F& fld, uint32_t n) {
    Mat m(fld, n, n);
    for (uint32_t i = 0; i < n; ++i) m.at(i, i) = fld.one();
    return m;
  }

  static Mat from_rows(const F& fld, const std::vector<Vec>& rws,
                       uint32_t ncols) {
    Mat m(fld, (uint32_t)rws.size(), ncols);
    for (uint32_t i = 0; i < rws.size(); ++i) {
      if (rws[i].size() != ncols) throw LinalgError("row length mismatch");
      for (uint32_t j = 0; j < ncols; ++j) m.at(i, j) = rws[i][j];
    }
    return m;
  }

  Elem& at(uint32_t i, uint32_t j) { return a[(size_t)i * cols + j]; }
  const Elem& at(uint32_t i, uint32_t j) const {
    return a[(size_t)i * cols + j];
  }

  Vec row(uint32_t i) const {
    return Vec(a.begin() + (size_t)i * cols, a.begin() + (size_t)(i + 1) * cols);
  }

  void check_compat(const Mat& o) const {
    if (f != o.f) throw LinalgError("matrices over different fields");
  }

  Mat mul(const Mat& o) const {
    check_compat(o);
    if (cols != o.rows) throw LinalgError("dimension mismatch in product");
    Mat r(*f, rows, o.cols);
    for (uint32_t i = 0; i < rows; ++i)
      for (uint32_t k = 0; k < cols; ++k) {
        const Elem& x = at(i, k);
        if (f->is_zero(x)) continue;
        for (uint32_t j = 0; j < o.cols; ++j)
          r.at(i, j) = f->add(r.at(i, j), f->mul(x, o.at(k, j)));
      }
    return r;
  }

  Vec apply(const Vec& v) const {
    if (v.size() != cols) throw LinalgError("dimension mismatch in apply");
    Vec r(rows, f->zero());
    for (uint32_t i = 0; i < rows; ++i)
      for (uint32_t j = 0; j < cols; ++j) {
        if (f->is_zero(at(i, j))) continue;
        r[i] = f->add(r[i], f->mul(at(i, j), v[j]));
      }
    return r;
  }

  Mat add(const Mat& o) const {
    check_compat(o);
    if (rows != o.rows || cols != o.cols)
      throw LinalgError("dimension mismatch in sum");
    Mat r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = f->add(a[i], o.a[i]);
    return r;
  }

  Mat sub(const Mat& o) const {
    check_compat(o);
    if (rows != o.rows || cols != o.cols)
      throw LinalgError("dimension mismatch in difference");
    Mat r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = f->sub(a[i], o.a[i]);
    return r;
  }

  Mat scale(const Elem& c) const {
    Mat r = *this;
    for (auto& x : r.a) x = f->mul(x, c);
    return r;
  }

  Mat transpose() const {
    Mat r(*f, cols, rows);
    for (uint32_t i = 0; i < rows; ++i)
      for (uint32_t j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  bool operator==(const Mat& o) const {
    if (f != o.f || rows != o.rows || cols != o.cols) return false;
    for (size_t i = 0; i < a.size(); ++i)
      if (!f->eq(a[i], o.a[i])) return false;
    return true;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  bool is_identity() const {
    if (rows != cols) return false;
    for (uint32_t i = 0; i < rows; ++i)
      for (uint32_t j = 0; j < cols; ++j) {
        const Elem& want = i == j ? f->one() : f->zero();
        if (!f->eq(at(i, j), want)) return false;
      }
    return true;
  }

  bool is_zero_matrix() const {
    for (const auto& x : a)
      if (!f->is_zero(x)) return false;
    return true;
  }

  // Gauss-Jordan inverse; throws on a singular matrix.
  Mat inverse() const {
    if (rows != cols) throw LinalgError("inverse of non-square matrix");
    Mat m = *this, inv = identity(*f, rows);
    for (uint32_t c = 0; c < cols; ++c) {
      uint32_t sel = c;
      while (sel < rows && f->is_zero(m.at(sel, c))) ++sel;
      if (sel == rows) throw LinalgError("matrix is singular");
      if (sel != c) {
        for (uint32_t j = 0; j < cols; ++j) {
          std::swap(m.at(sel, j), m.at(c, j));
          std::swap(inv.at(sel, j), inv.at(c, j));
        }
      }
      Elem d = f->inv(m.at(c, c));
      for (uint32_t j = 0; j < cols; ++j) {
        m.at(c, j) = f->mul(m.at(c, j), d);
        inv.at(c, j) = f->mul(inv.at(c, j), d);
      }
      for (uint32_t i = 0; i < rows; ++i) {
        if (i == c || f->is_zero(m.at(i, c))) continue;
        Elem t = m.at(i, c);
        for (uint32_t j = 0; j < cols; ++j) {
          m.at(i, j) = f->sub(m.at(i, j), f->mul(t, m.at(c, j)));
          inv.at(i, j) = f->sub(inv.at(i, j), f->mul(t, inv.at(c, j)));
        }
      }
    }
    return inv;
  }

  Mat pow(long long e) const {
    if (rows != cols) throw LinalgError("power of non-square matrix");
    if (e < 0) return inverse().pow(-e);
    Mat r = identity(*f, rows), b = *this;
    unsigned long long u = (unsigned long long)e;
    while (u > 0) {
      if (u & 1) r = r.mul(b);
      u >>= 1;
      if (u > 0) b = b.mul(b);
    }
    return r;
  }
};

// In-place reduced row echelon form; returns the pivot column indices.
template <class F>
std::vector<uint32_t> rref(Mat<F>& m) {
  const F* f = m.f;
  std::vector<uint32_t> piv;
  uint32_t r = 0;
  for (uint32_t c = 0; c < m.cols && r < m.rows; ++c) {
    uint32_t sel = r;
    while (sel < m.rows && f->is_zero(m.at(sel, c))) ++sel;
    if (sel == m.rows) continue;
    if (sel != r)
      for (uint32_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
    typename F::Elem d = f->inv(m.at(r, c));
    for (uint32_t j = 0; j < m.cols; ++j) m.at(r, j) = f->mul(m.at(r, j), d);
    for (uint32_t i = 0; i < m.rows; ++i) {
      if (i == r || f->is_zero(m.at(i, c))) continue;
      typename F::Elem t = m.at(i, c);
      for (uint32_t j = 0; j < m.cols; ++j)
        m.at(i, j) = f->sub(m.at(i, j), f->mul(t, m.at(r, j)));
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

// A subspace of F^n held as a canonical reduced-row-echelon basis.  Equal
// subspaces compare equal componentwise.
template <class F>
class Subspace {
public:
  using Elem = typename F::Elem;
  using Vec = std::vector<Elem>;

  Subspace(const F& fld, uint32_t n) : f_(&fld), n_(n), basis_(fld, 0, n) {}

  static Subspace span(const F& fld, uint32_t n,
                       const std::vector<Vec>& gens) {
    Mat<F> m = Mat<F>::from_rows(fld, gens, n);
    auto piv = rref(m);
    Subspace s(fld, n);
    s.basis_ = Mat<F>(fld, (uint32_t)piv.size(), n);
    for (uint32_t i = 0; i < piv.size(); ++i)
      for (uint32_t j = 0; j < n; ++j) s.basis_.at(i, j) = m.at(i, j);
    s.pivots_ = std::move(piv);
    return s;
  }

  static Subspace whole(const F& fld, uint32_t n) {
    Subspace s(fld, n);
    s.basis_ = Mat<F>::identity(fld, n);
    s.pivots_.resize(n);
    for (uint32_t i = 0; i < n; ++i) s.pivots_[i] = i;
    return s;
  }

  static Subspace zero_space(const F& fld, uint32_t n) {
    return Subspace(fld, n);
  }

  // Span of the given standard basis vectors.
  static Subspace from_basis_indices(const F& fld, uint32_t n,
                                     std::vector<uint32_t> idxs) {
    std::sort(idxs.begin(), idxs.end());
    idxs.erase(std::unique(idxs.begin(), idxs.end()), idxs.end());
    Subspace s(fld, n);
    s.basis_ = Mat<F>(fld, (uint32_t)idxs.size(), n);
    for (uint32_t i = 0; i < idxs.size(); ++i) {
      if (idxs[i] >= n) throw LinalgError("basis index out of range");
      s.basis_.at(i, idxs[i]) = fld.one();
    }
    s.pivots_ = std::move(idxs);
    return s;
  }

  const F& field() const { return *f_; }
  uint32_t ambient_dim() const { return n_; }
  uint32_t dim() const { return basis_.rows; }
  const Mat<F>& basis() const { return basis_; }
  const std::vector<uint32_t>& pivots() const { return pivots_; }

  Vec basis_row(uint32_t i) const { return basis_.row(i); }

  bool contains(const Vec& v) const {
    if (v.size() != n_) throw LinalgError("vector dimension mismatch");
    Vec w = v;
    for (uint32_t i = 0; i < basis_.rows; ++i) {
      const Elem& c = w[pivots_[i]];
      if (f_->is_zero(c)) continue;
      Elem t = c;
      for (uint32_t j = 0; j < n_; ++j)
        w[j] = f_->sub(w[j], f_->mul(t, basis_.at(i, j)));
    }
    for (const auto& x : w)
      if (!f_->is_zero(x)) return false;
    return true;
  }

  bool contains(const Subspace& o) const {
    if (f_ != o.f_ || n_ != o.n_)
      throw LinalgError("subspaces of different spaces");
    for (uint32_t i = 0; i < o.basis_.rows; ++i)
      if (!contains(o.basis_.row(i))) return false;
    return true;
  }

  bool operator==(const Subspace& o) const {
    return f_ == o.f_ && n_ == o.n_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  Subspace sum(const Subspace& o) const {
    if (f_ != o.f_ || n_ != o.n_)
      throw LinalgError("subspaces of different spaces");
    std::vector<Vec> rows;
    for (uint32_t i = 0; i < basis_.rows; ++i) rows.push_back(basis_.row(i));
    for (uint32_t i = 0; i < o.basis_.rows; ++i)
      rows.push_back(o.basis_.row(i));
    return span(*f_, n_, rows);
  }

  // Zassenhaus: row reduce [u|u] over this and [w|0] over o; rows with zero
  // left half carry a basis of the intersection in the right half.
  Subspace intersect(const Subspace& o) const {
    if (f_ != o.f_ || n_ != o.n_)
      throw LinalgError("subspaces of different spaces");
    uint32_t n = n_;
    Mat<F> big(*f_, basis_.rows + o.basis_.rows, 2 * n);
    for (uint32_t i = 0; i < basis_.rows; ++i)
      for (uint32_t j = 0; j < n; ++j) {
        big.at(i, j) = basis_.at(i, j);
        big.at(i, n + j) = basis_.at(i, j);
      }
    for (uint32_t i = 0; i < o.basis_.rows; ++i)
      for (uint32_t j = 0; j < n; ++j)
        big.at(basis_.rows + i, j) = o.basis_.at(i, j);
    rref(big);
    std::vector<Vec> inter;
    for (uint32_t i = 0; i < big.rows; ++i) {
      bool left_zero = true;
      for (uint32_t j = 0; j < n && left_zero; ++j)
        if (!f_->is_zero(big.at(i, j))) left_zero = false;
      if (!left_zero) continue;
      Vec right(n);
      bool right_zero = true;
      for (uint32_t j = 0; j < n; ++j) {
        right[j] = big.at(i, n + j);
        if (!f_->is_zero(right[j])) right_zero = false;
      }
      if (!right_zero) inter.push_back(std::move(right));
    }
    return span(*f_, n, inter);
  }

private:
  const F* f_;
  uint32_t n_;
  Mat<F> basis_;
  std::vector<uint32_t> pivots_;
};

// Null space of m as a subspace of F^cols, canonical basis.
template <class F>
Subspace<F> kernel(const Mat<F>& m) {
  Mat<F> r = m;
  auto piv = rref(r);
  std::vector<bool> is_piv(m.cols, false);
  for (uint32_t c : piv) is_piv[c] = true;
  std::vector<typename Mat<F>::Vec> gens;
  for (uint32_t j = 0; j < m.cols; ++j) {
    if (is_piv[j]) continue;
    typename Mat<F>::Vec v(m.cols, m.f->zero());
    v[j] = m.f->one();
    for (uint32_t i = 0; i < piv.size(); ++i)
      v[piv[i]] = m.f->neg(r.at(i, j));
    gens.push_back(std::move(v));
  }
  return Subspace<F>::span(*m.f, m.cols, gens);
}

}  // namespace chevlie
