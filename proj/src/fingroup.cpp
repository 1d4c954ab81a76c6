#include "chevlie/fingroup.hpp"

#include <algorithm>
#include <cstring>

namespace chevlie {

namespace {

uint64_t fnv1a(const uint8_t* p, size_t n) {
  uint64_t h = 1469598103934665603ull;
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

// c = a * b on byte-encoded n x n matrices; mt is the q x q product table,
// at the q x q sum table (null means characteristic 2, where add is xor)
void byte_mul(const uint8_t* a, const uint8_t* b, uint8_t* c, uint32_t n,
              const uint8_t* mt, const uint8_t* at, uint32_t q) {
  std::memset(c, 0, (size_t)n * n);
  for (uint32_t i = 0; i < n; ++i) {
    const uint8_t* arow = a + (size_t)i * n;
    uint8_t* crow = c + (size_t)i * n;
    for (uint32_t k = 0; k < n; ++k) {
      uint8_t x = arow[k];
      if (!x) continue;
      const uint8_t* mrow = mt + (size_t)x * q;
      const uint8_t* brow = b + (size_t)k * n;
      if (!at) {
        for (uint32_t j = 0; j < n; ++j) crow[j] ^= mrow[brow[j]];
      } else {
        for (uint32_t j = 0; j < n; ++j)
          crow[j] = at[(size_t)crow[j] * q + mrow[brow[j]]];
      }
    }
  }
}

// row r of x*y into out
void byte_mul_row(const uint8_t* x, const uint8_t* y, uint32_t r, uint8_t* out,
                  uint32_t n, const uint8_t* mt, const uint8_t* at,
                  uint32_t q) {
  std::memset(out, 0, n);
  const uint8_t* xrow = x + (size_t)r * n;
  for (uint32_t k = 0; k < n; ++k) {
    uint8_t v = xrow[k];
    if (!v) continue;
    const uint8_t* mrow = mt + (size_t)v * q;
    const uint8_t* yrow = y + (size_t)k * n;
    if (!at) {
      for (uint32_t j = 0; j < n; ++j) out[j] ^= mrow[yrow[j]];
    } else {
      for (uint32_t j = 0; j < n; ++j)
        out[j] = at[(size_t)out[j] * q + mrow[yrow[j]]];
    }
  }
}

// g*a == b*g, rows compared lazily so mismatches exit early
bool intertwines(const uint8_t* g, const uint8_t* a, const uint8_t* b,
                 uint32_t n, const uint8_t* mt, const uint8_t* at, uint32_t q,
                 uint8_t* scratch) {
  uint8_t* lhs = scratch;
  uint8_t* rhs = scratch + n;
  for (uint32_t r = 0; r < n; ++r) {
    byte_mul_row(g, a, r, lhs, n, mt, at, q);
    byte_mul_row(b, g, r, rhs, n, mt, at, q);
    if (std::memcmp(lhs, rhs, n) != 0) return false;
  }
  return true;
}

}  // namespace

FiniteSubgroup::FiniteSubgroup(const Fq& f, std::vector<GroupElement<Fq>> gens,
                               uint64_t cap) {
  f_ = &f;
  if (f.q() > 256)
    throw GroupError("finite closure supports q <= 256, got q = " +
                     std::to_string(f.q()));
  if (gens.empty()) throw GroupError("closure needs at least one generator");
  dim_ = gens.front().m.rows;
  sz_ = dim_ * dim_;
  for (const auto& g : gens) {
    if (g.m.f != f_) throw GroupError("generator over the wrong field");
    if (g.m.rows != dim_ || g.m.cols != dim_)
      throw GroupError("generators of mixed dimensions");
    try {
      (void)g.m.inverse();
    } catch (const LinalgError&) {
      throw GroupError("generator is not invertible: " + g.word);
    }
  }
  gens_ = std::move(gens);
  label_ = "closure";
  slots_.assign(1024, 0);
  mask_ = slots_.size() - 1;

  const uint8_t* mt = f.mul_table();
  const uint8_t* at = f.p() == 2 ? nullptr : f.add_table();
  uint32_t q = f.q();

  std::vector<uint8_t> genb((size_t)gens_.size() * sz_);
  for (size_t i = 0; i < gens_.size(); ++i)
    encode_into(gens_[i].m, genb.data() + i * sz_);

  std::vector<uint8_t> idb(sz_, 0);
  encode_into(Mat<Fq>::identity(f, dim_), idb.data());
  bool was_new = false;
  insert(idb.data(), &was_new);
  prov_.emplace_back(UINT32_MAX, UINT32_MAX);

  std::vector<uint8_t> cur(sz_), prod(sz_);
  for (uint64_t head = 0; head < n_; ++head) {
    std::memcpy(cur.data(), elem_bytes(head), sz_);
    for (size_t gi = 0; gi < gens_.size(); ++gi) {
      byte_mul(cur.data(), genb.data() + gi * sz_, prod.data(), dim_, mt, at,
               q);
      uint64_t idx = insert(prod.data(), &was_new);
      if (was_new) {
        prov_.emplace_back((uint32_t)head, (uint32_t)gi);
        if (n_ > cap)
          throw GroupError("closure cap " + std::to_string(cap) +
                           " exceeded; partial size " + std::to_string(n_));
      }
      (void)idx;
    }
  }
}

FiniteSubgroup FiniteSubgroup::from_elements(const Fq& f, uint32_t dim,
                                             const std::vector<Mat<Fq>>& elems,
                                             std::string label) {
  if (f.q() > 256)
    throw GroupError("finite closure supports q <= 256, got q = " +
                     std::to_string(f.q()));
  FiniteSubgroup s;
  s.f_ = &f;
  s.dim_ = dim;
  s.sz_ = dim * dim;
  s.label_ = std::move(label);
  s.slots_.assign(1024, 0);
  s.mask_ = s.slots_.size() - 1;
  std::vector<uint8_t> buf(s.sz_);
  bool was_new = false;
  for (const auto& m : elems) {
    if (m.f != &f) throw GroupError("element over the wrong field");
    if (m.rows != dim || m.cols != dim)
      throw GroupError("element of the wrong dimension");
    s.encode_into(m, buf.data());
    s.insert(buf.data(), &was_new);
  }
  s.encode_into(Mat<Fq>::identity(f, dim), buf.data());
  if (s.find(buf.data()) < 0)
    throw GroupError("element set does not contain the identity");
  return s;
}

void FiniteSubgroup::grow_table() {
  std::vector<uint64_t> ns(slots_.size() * 2, 0);
  uint64_t nm = ns.size() - 1;
  for (uint64_t i = 0; i < n_; ++i) {
    uint64_t h = fnv1a(elem_bytes(i), sz_) & nm;
    while (ns[h]) h = (h + 1) & nm;
    ns[h] = i + 1;
  }
  slots_ = std::move(ns);
  mask_ = nm;
}

uint64_t FiniteSubgroup::insert(const uint8_t* bytes, bool* was_new) {
  if (2 * (n_ + 1) > slots_.size()) grow_table();
  uint64_t h = fnv1a(bytes, sz_) & mask_;
  while (slots_[h]) {
    uint64_t i = slots_[h] - 1;
    if (std::memcmp(elem_bytes(i), bytes, sz_) == 0) {
      *was_new = false;
      return i;
    }
    h = (h + 1) & mask_;
  }
  pool_.insert(pool_.end(), bytes, bytes + sz_);
  slots_[h] = ++n_;
  *was_new = true;
  return n_ - 1;
}

int64_t FiniteSubgroup::find(const uint8_t* bytes) const {
  uint64_t h = fnv1a(bytes, sz_) & mask_;
  while (slots_[h]) {
    uint64_t i = slots_[h] - 1;
    if (std::memcmp(elem_bytes(i), bytes, sz_) == 0) return (int64_t)i;
    h = (h + 1) & mask_;
  }
  return -1;
}

void FiniteSubgroup::encode_into(const Mat<Fq>& m, uint8_t* out) const {
  for (uint32_t i = 0; i < sz_; ++i) out[i] = (uint8_t)m.a[i];
}

Mat<Fq> FiniteSubgroup::decode(const uint8_t* b) const {
  Mat<Fq> m(*f_, dim_, dim_);
  for (uint32_t i = 0; i < sz_; ++i) m.a[i] = b[i];
  return m;
}

std::string FiniteSubgroup::encode(const Mat<Fq>& m) {
  std::string s((size_t)m.rows * m.cols, '\0');
  for (size_t i = 0; i < s.size(); ++i) s[i] = (char)(uint8_t)m.a[i];
  return s;
}

Mat<Fq> FiniteSubgroup::element(uint64_t i) const {
  if (i >= n_) throw GroupError("element index out of range");
  return decode(elem_bytes(i));
}

std::string FiniteSubgroup::word(uint64_t i) const {
  if (i >= n_) throw GroupError("element index out of range");
  if (prov_.empty()) return label_ + "[" + std::to_string(i) + "]";
  std::vector<uint32_t> gs;
  uint64_t cur = i;
  while (prov_[cur].first != UINT32_MAX) {
    gs.push_back(prov_[cur].second);
    cur = prov_[cur].first;
  }
  if (gs.empty()) return "1";
  std::string w;
  for (auto it = gs.rbegin(); it != gs.rend(); ++it) {
    if (!w.empty()) w += "*";
    w += gens_[*it].word;
  }
  return w;
}

bool FiniteSubgroup::contains(const Mat<Fq>& m) const {
  return index_of(m).has_value();
}

std::optional<uint64_t> FiniteSubgroup::index_of(const Mat<Fq>& m) const {
  if (m.f != f_ || m.rows != dim_ || m.cols != dim_) return std::nullopt;
  std::vector<uint8_t> buf(sz_);
  encode_into(m, buf.data());
  int64_t i = find(buf.data());
  if (i < 0) return std::nullopt;
  return (uint64_t)i;
}

bool FiniteSubgroup::subset_of(const FiniteSubgroup& o) const {
  if (f_ != o.f_ || dim_ != o.dim_) return false;
  if (n_ > o.n_) return false;
  for (uint64_t i = 0; i < n_; ++i)
    if (o.find(elem_bytes(i)) < 0) return false;
  return true;
}

bool FiniteSubgroup::same_set(const FiniteSubgroup& o) const {
  return n_ == o.n_ && subset_of(o);
}

bool FiniteSubgroup::is_abelian() const {
  const uint8_t* mt = f_->mul_table();
  const uint8_t* at = f_->p() == 2 ? nullptr : f_->add_table();
  std::vector<uint8_t> scratch(2 * dim_);
  for (uint64_t i = 0; i < n_; ++i)
    for (uint64_t j = i + 1; j < n_; ++j)
      if (!intertwines(elem_bytes(i), elem_bytes(j), elem_bytes(j), dim_, mt,
                       at, f_->q(), scratch.data()))
        return false;
  return true;
}

FiniteSubgroup FiniteSubgroup::wrap_subset(const std::vector<uint64_t>& idx,
                                           const std::string& label) const {
  FiniteSubgroup s;
  s.f_ = f_;
  s.dim_ = dim_;
  s.sz_ = sz_;
  s.label_ = label;
  s.slots_.assign(1024, 0);
  s.mask_ = s.slots_.size() - 1;
  bool was_new = false;
  for (uint64_t i : idx) s.insert(elem_bytes(i), &was_new);
  return s;
}

FiniteSubgroup FiniteSubgroup::centralizer_of(
    const std::vector<Mat<Fq>>& targets) const {
  const uint8_t* mt = f_->mul_table();
  const uint8_t* at = f_->p() == 2 ? nullptr : f_->add_table();
  std::vector<uint8_t> tb((size_t)targets.size() * sz_);
  for (size_t t = 0; t < targets.size(); ++t) {
    if (targets[t].f != f_) throw GroupError("target over the wrong field");
    encode_into(targets[t], tb.data() + t * sz_);
  }
  std::vector<uint8_t> scratch(2 * dim_);
  std::vector<uint64_t> keep;
  for (uint64_t i = 0; i < n_; ++i) {
    bool ok = true;
    for (size_t t = 0; t < targets.size() && ok; ++t)
      ok = intertwines(elem_bytes(i), tb.data() + t * sz_, tb.data() + t * sz_,
                       dim_, mt, at, f_->q(), scratch.data());
    if (ok) keep.push_back(i);
  }
  return wrap_subset(keep, "centralizer");
}

FiniteSubgroup FiniteSubgroup::centralizer_of_vectors(
    const std::vector<std::vector<Fq::Elem>>& targets) const {
  for (const auto& v : targets)
    if (v.size() != dim_) throw GroupError("vector of the wrong dimension");
  std::vector<uint64_t> keep;
  for (uint64_t i = 0; i < n_; ++i) {
    Mat<Fq> g = element(i);
    bool ok = true;
    for (const auto& v : targets) {
      if (g.apply(v) != v) {
        ok = false;
        break;
      }
    }
    if (ok) keep.push_back(i);
  }
  return wrap_subset(keep, "fixer");
}

FiniteSubgroup FiniteSubgroup::normalizer_of(const FiniteSubgroup& T) const {
  if (!T.subset_of(*this))
    throw GroupError("normalizer target is not a subset");
  const uint8_t* mt = f_->mul_table();
  const uint8_t* at = f_->p() == 2 ? nullptr : f_->add_table();
  std::vector<uint8_t> gb(sz_), prod(sz_), conj(sz_);
  std::vector<uint64_t> keep;
  for (uint64_t i = 0; i < n_; ++i) {
    Mat<Fq> ginv = element(i).inverse();
    encode_into(ginv, gb.data());
    bool ok = true;
    for (uint64_t t = 0; t < T.order() && ok; ++t) {
      byte_mul(elem_bytes(i), T.elem_bytes(t), prod.data(), dim_, mt, at,
               f_->q());
      byte_mul(prod.data(), gb.data(), conj.data(), dim_, mt, at, f_->q());
      ok = T.find(conj.data()) >= 0;
    }
    if (ok) keep.push_back(i);
  }
  return wrap_subset(keep, "normalizer");
}

std::optional<GroupElement<Fq>> FiniteSubgroup::conjugator(
    const std::vector<Mat<Fq>>& A, const std::vector<Mat<Fq>>& B) const {
  if (A.size() != B.size())
    throw GroupError("conjugacy tuples of different lengths");
  const uint8_t* mt = f_->mul_table();
  const uint8_t* at = f_->p() == 2 ? nullptr : f_->add_table();
  std::vector<uint8_t> ab((size_t)A.size() * sz_), bb((size_t)B.size() * sz_);
  for (size_t t = 0; t < A.size(); ++t) {
    if (A[t].f != f_ || B[t].f != f_)
      throw GroupError("tuple over the wrong field");
    encode_into(A[t], ab.data() + t * sz_);
    encode_into(B[t], bb.data() + t * sz_);
  }
  std::vector<uint8_t> scratch(2 * dim_);
  for (uint64_t i = 0; i < n_; ++i) {
    bool ok = true;
    for (size_t t = 0; t < A.size() && ok; ++t)
      ok = intertwines(elem_bytes(i), ab.data() + t * sz_, bb.data() + t * sz_,
                       dim_, mt, at, f_->q(), scratch.data());
    if (ok) return GroupElement<Fq>{element(i), word(i)};
  }
  return std::nullopt;
}

bool same_matrix_set(const std::vector<Mat<Fq>>& A,
                     const std::vector<Mat<Fq>>& B) {
  std::vector<std::string> ea, eb;
  ea.reserve(A.size());
  eb.reserve(B.size());
  for (const auto& m : A) ea.push_back(FiniteSubgroup::encode(m));
  for (const auto& m : B) eb.push_back(FiniteSubgroup::encode(m));
  std::sort(ea.begin(), ea.end());
  ea.erase(std::unique(ea.begin(), ea.end()), ea.end());
  std::sort(eb.begin(), eb.end());
  eb.erase(std::unique(eb.begin(), eb.end()), eb.end());
  return ea == eb;
}

}  // namespace chevlie
