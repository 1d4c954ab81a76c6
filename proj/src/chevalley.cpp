#include "chevlie/chevalley.hpp"

#include <functional>

#include "json.hpp"

namespace chevlie {

namespace {

RootVec vec_sub(const RootVec& x, const RootVec& y) {
  RootVec r = x;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
  return r;
}

// Longest k with s - k r still a root (the "down" part of the r-string
// through s); the structure constant magnitude is k+1.
long long chain_down(const RootSystem& rs, uint32_t r, uint32_t s) {
  long long p = 0;
  RootVec v = vec_sub(rs.root(s), rs.root(r));
  while (rs.is_root(v)) {
    ++p;
    v = vec_sub(v, rs.root(r));
  }
  return p;
}

}  // namespace

ChevalleyForm ChevalleyForm::build(const RootSystem& rsin) {
  ChevalleyForm cf(rsin);
  const RootSystem& rs = cf.rs_;
  uint32_t nr = rs.n_roots();

  cf.coroots_.resize(nr);
  for (uint32_t i = 0; i < nr; ++i) cf.coroots_[i] = rs.coroot(i);

  cf.n_.assign((size_t)nr * nr, 0);
  std::vector<char> known((size_t)nr * nr, 0);
  auto setN = [&](uint32_t x, uint32_t y, long long v) {
    cf.n_[(size_t)x * nr + y] = v;
    known[(size_t)x * nr + y] = 1;
  };

  // Recursive evaluator extending the special-pair table to arbitrary pairs
  // through antisymmetry, the negation rule, and the Jacobi identity with
  // [e_c, e_{-c}] = h_c.  Only consults positive-pair constants whose sum
  // has smaller height, so the outer fill order makes it well founded.
  std::function<long long(uint32_t, uint32_t)> NV = [&](uint32_t x,
                                                        uint32_t y) {
    auto sum = rs.sum(x, y);
    if (!sum) throw ChevError("structure constant of a non-root sum");
    if (known[(size_t)x * nr + y]) return cf.n_[(size_t)x * nr + y];
    long long v;
    bool xp = rs.is_positive(x), yp = rs.is_positive(y);
    if (xp && yp) {
      if (!known[(size_t)y * nr + x])
        throw ChevError("positive pair out of order");
      v = -NV(y, x);
    } else if (!xp && !yp) {
      v = -NV(rs.neg(x), rs.neg(y));
    } else if (!xp) {
      v = -NV(y, x);
    } else if (!rs.is_positive(*sum)) {
      v = -NV(rs.neg(x), rs.neg(y));
    } else {
      // x positive, y negative, s = x + y positive:
      // 0 = N(s,c) N(x,y) + <s,c^vee> + [s-c in Psi] N(-c,s) N(s-c,c)
      // with c = -y, from the Jacobi identity of (e_s, e_c, e_y).
      uint32_t s = *sum, c = rs.neg(y);
      long long val = rs.pairing(s, c);
      RootVec smc = vec_sub(rs.root(s), rs.root(c));
      if (rs.is_root(smc))
        val += NV(rs.neg(c), s) * NV(rs.index_of(smc), c);
      long long den = NV(s, c);
      if (den == 0 || val % den != 0)
        throw ChevError("inconsistent mixed structure constant");
      v = -val / den;
    }
    setN(x, y, v);
    return v;
  };

  // Fill special pairs (positive r < s in index order) by increasing height
  // of the sum; the extraspecial pair of each sum gets a positive constant,
  // the rest are solved from the Jacobi identity with e_{-r1}.
  for (uint32_t t = 0; t < rs.n_pos(); ++t) {
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    for (uint32_t r = 0; r < rs.n_pos(); ++r) {
      RootVec d = vec_sub(rs.root(t), rs.root(r));
      if (!rs.is_root(d)) continue;
      uint32_t s = rs.index_of(d);
      if (rs.is_positive(s) && r < s) pairs.push_back({r, s});
    }
    if (pairs.empty()) continue;
    auto [r1, s1] = pairs[0];  // minimal r: the extraspecial pair
    setN(r1, s1, chain_down(rs, r1, s1) + 1);
    for (size_t k = 1; k < pairs.size(); ++k) {
      auto [r, s] = pairs[k];
      long long term1 = 0, term3 = 0;
      RootVec rr1 = vec_sub(rs.root(r), rs.root(r1));
      if (rs.is_root(rr1))
        term1 = NV(rs.neg(r1), r) * NV(rs.index_of(rr1), s);
      RootVec sr1 = vec_sub(rs.root(s), rs.root(r1));
      if (rs.is_root(sr1))
        term3 = NV(s, rs.neg(r1)) * NV(rs.index_of(sr1), r);
      long long den = NV(t, rs.neg(r1));
      if (den == 0 || (term1 + term3) % den != 0)
        throw ChevError("inconsistent special pair solve");
      setN(r, s, -(term1 + term3) / den);
    }
  }

  // Complete the table for every pair whose sum is a root.
  for (uint32_t x = 0; x < nr; ++x)
    for (uint32_t y = 0; y < nr; ++y)
      if (rs.sum(x, y)) NV(x, y);

  // Magnitude law: |N(x,y)| = (chain down length) + 1, for every pair.
  for (uint32_t x = 0; x < nr; ++x)
    for (uint32_t y = 0; y < nr; ++y) {
      if (!rs.sum(x, y)) {
        if (cf.n_[(size_t)x * nr + y] != 0)
          throw ChevError("nonzero constant for non-root sum");
        continue;
      }
      long long n = cf.n_[(size_t)x * nr + y];
      if (std::abs(n) != chain_down(rs, x, y) + 1)
        throw ChevError("structure constant magnitude violates chain law at " +
                        rs.root_name(x) + ", " + rs.root_name(y));
      if (n != -cf.n_[(size_t)y * nr + x])
        throw ChevError("antisymmetry violated at " + rs.root_name(x) + ", " +
                        rs.root_name(y));
      if (n != -cf.n_[(size_t)rs.neg(x) * nr + rs.neg(y)])
        throw ChevError("negation rule violated at " + rs.root_name(x) + ", " +
                        rs.root_name(y));
    }

  cf.jacobi_check();
  return cf;
}

std::vector<long long> ChevalleyForm::bracket_basis(uint32_t bi,
                                                    uint32_t bj) const {
  uint32_t r = rank();
  std::vector<long long> v(dim(), 0);
  if (bi >= dim() || bj >= dim()) throw ChevError("basis index out of range");
  if (bi < r && bj < r) return v;
  if (bi < r) {
    // [h_i, e_d] = <d, alpha_i^vee> e_d
    uint32_t dj = bj - r;
    long long p = 0;
    for (uint32_t k = 0; k < r; ++k)
      p += (long long)rs_.cartan(bi, k) * rs_.root(dj)[k];
    v[bj] = p;
    return v;
  }
  if (bj < r) {
    v = bracket_basis(bj, bi);
    for (auto& x : v) x = -x;
    return v;
  }
  uint32_t gi = bi - r, gj = bj - r;
  if (gj == rs_.neg(gi)) {
    const Cochar& c = coroots_[gi];
    for (uint32_t k = 0; k < r; ++k) v[k] = c[k];
    return v;
  }
  auto s = rs_.sum(gi, gj);
  if (s) v[r + *s] = structure_N(gi, gj);
  return v;
}

std::vector<long long> ChevalleyForm::bracket(
    const std::vector<long long>& x, const std::vector<long long>& y) const {
  if (x.size() != dim() || y.size() != dim())
    throw ChevError("vector dimension mismatch");
  std::vector<long long> v(dim(), 0);
  for (uint32_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (uint32_t j = 0; j < dim(); ++j) {
      if (y[j] == 0) continue;
      auto b = bracket_basis(i, j);
      long long c = x[i] * y[j];
      for (uint32_t k = 0; k < dim(); ++k) v[k] += c * b[k];
    }
  }
  return v;
}

MatZ ChevalleyForm::ad_basis(uint32_t bi) const {
  MatZ m(dim(), dim());
  for (uint32_t j = 0; j < dim(); ++j) {
    auto col = bracket_basis(bi, j);
    for (uint32_t i = 0; i < dim(); ++i) m.at(i, j) = col[i];
  }
  return m;
}

MatZ ChevalleyForm::ad(const std::vector<long long>& v) const {
  if (v.size() != dim()) throw ChevError("vector dimension mismatch");
  MatZ m(dim(), dim());
  for (uint32_t b = 0; b < dim(); ++b) {
    if (v[b] == 0) continue;
    MatZ mb = ad_basis(b).scale(v[b]);
    for (size_t k = 0; k < m.a.size(); ++k) m.a[k] += mb.a[k];
  }
  return m;
}

std::vector<MatZ> ChevalleyForm::divided_powers(uint32_t root_i) const {
  MatZ A = ad_basis(e_index(root_i));
  std::vector<MatZ> xs = {MatZ::identity(dim())};
  MatZ cur = xs[0];
  for (long long n = 1; n <= 16; ++n) {
    cur = A.mul(cur).divexact(n);
    if (cur.is_zero()) return xs;
    xs.push_back(cur);
  }
  throw ChevError("nilpotency bound exceeded for " + rs_.root_name(root_i));
}

void ChevalleyForm::jacobi_check() const {
  uint32_t n = dim();
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) {
      auto bij = bracket_basis(i, j);
      auto bji = bracket_basis(j, i);
      for (uint32_t k = 0; k < n; ++k)
        if (bij[k] != -bji[k])
          throw ChevError("bracket antisymmetry failed at " + basis_name(i) +
                          ", " + basis_name(j));
    }
  std::vector<long long> ei(n, 0), ej(n, 0), ek(n, 0);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = i + 1; j < n; ++j) {
      auto bij = bracket_basis(i, j);
      for (uint32_t k = j + 1; k < n; ++k) {
        ei.assign(n, 0);
        ei[i] = 1;
        ej.assign(n, 0);
        ej[j] = 1;
        ek.assign(n, 0);
        ek[k] = 1;
        auto t1 = bracket(bij, ek);
        auto t2 = bracket(bracket_basis(j, k), ei);
        auto t3 = bracket(bracket_basis(k, i), ej);
        for (uint32_t m = 0; m < n; ++m)
          if (t1[m] + t2[m] + t3[m] != 0)
            throw ChevError("Jacobi identity failed at (" + basis_name(i) +
                            ", " + basis_name(j) + ", " + basis_name(k) + ")");
      }
    }
}

std::string ChevalleyForm::basis_name(uint32_t b) const {
  if (b < rank()) return "h_" + std::string(1, (char)('a' + b));
  return "e_" + rs_.root_name(b - rank());
}

std::string ChevalleyForm::structure_constants_json() const {
  nlohmann::ordered_json j;
  j["type"] = rs_.label();
  j["dim"] = dim();
  j["sign_convention"] = "extraspecial pairs positive";
  j["coroots"] = nlohmann::ordered_json::array();
  for (uint32_t i = 0; i < rs_.n_pos(); ++i) {
    nlohmann::ordered_json c;
    c["root"] = rs_.root_name(i);
    c["coeffs"] = coroots_[i];
    j["coroots"].push_back(c);
  }
  j["pairs"] = nlohmann::ordered_json::array();
  for (uint32_t x = 0; x < rs_.n_roots(); ++x)
    for (uint32_t y = x + 1; y < rs_.n_roots(); ++y) {
      auto s = rs_.sum(x, y);
      if (!s) continue;
      nlohmann::ordered_json p;
      p["x"] = rs_.root_name(x);
      p["y"] = rs_.root_name(y);
      p["sum"] = rs_.root_name(*s);
      p["n"] = structure_N(x, y);
      j["pairs"].push_back(p);
    }
  return j.dump(2) + "\n";
}

}  // namespace chevlie
