#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chevlie/group.hpp"

namespace chevlie {

// A finite matrix group over GF(q), q <= 256, stored as a deduplicated pool
// of byte-encoded matrices with a deterministic (discovery-order) indexing.
class FiniteSubgroup {
 public:
  // Breadth-first closure of <gens> under multiplication; for finite matrix
  // groups this is the generated group. Throws GroupError if the element
  // count would exceed cap (the message reports the partial size).
  FiniteSubgroup(const Fq& f, std::vector<GroupElement<Fq>> gens,
                 uint64_t cap);

  // Wraps an explicit element list (deduplicated, order preserved). The
  // identity must be present; no closure computation is performed.
  static FiniteSubgroup from_elements(const Fq& f, uint32_t dim,
                                      const std::vector<Mat<Fq>>& elems,
                                      std::string label);

  uint64_t order() const { return n_; }
  uint32_t dim() const { return dim_; }
  const Fq& field() const { return *f_; }
  const std::vector<GroupElement<Fq>>& generators() const { return gens_; }

  Mat<Fq> element(uint64_t i) const;
  std::string word(uint64_t i) const;
  bool contains(const Mat<Fq>& m) const;
  std::optional<uint64_t> index_of(const Mat<Fq>& m) const;
  bool subset_of(const FiniteSubgroup& o) const;
  bool same_set(const FiniteSubgroup& o) const;
  bool is_abelian() const;

  // {g : g t = t g for every target}
  FiniteSubgroup centralizer_of(const std::vector<Mat<Fq>>& targets) const;
  // {g : (Ad g) v = v for every target vector}
  FiniteSubgroup centralizer_of_vectors(
      const std::vector<std::vector<Fq::Elem>>& targets) const;
  // {g : g T g^-1 = T}; requires T to be contained in this group
  FiniteSubgroup normalizer_of(const FiniteSubgroup& T) const;
  // first element g (in index order) with g A_i g^-1 = B_i for all i
  std::optional<GroupElement<Fq>> conjugator(
      const std::vector<Mat<Fq>>& A, const std::vector<Mat<Fq>>& B) const;

  static std::string encode(const Mat<Fq>& m);

 private:
  FiniteSubgroup() = default;
  void grow_table();
  // returns the element's index, inserting if new
  uint64_t insert(const uint8_t* bytes, bool* was_new);
  int64_t find(const uint8_t* bytes) const;
  const uint8_t* elem_bytes(uint64_t i) const {
    return pool_.data() + i * sz_;
  }
  Mat<Fq> decode(const uint8_t* b) const;
  void encode_into(const Mat<Fq>& m, uint8_t* out) const;
  FiniteSubgroup wrap_subset(const std::vector<uint64_t>& idx,
                             const std::string& label) const;

  const Fq* f_ = nullptr;
  uint32_t dim_ = 0;
  uint32_t sz_ = 0;  // bytes per element
  uint64_t n_ = 0;
  std::vector<GroupElement<Fq>> gens_;
  std::string label_;
  std::vector<uint8_t> pool_;
  std::vector<uint64_t> slots_;  // open addressing; stored value = index + 1
  uint64_t mask_ = 0;
  std::vector<std::pair<uint32_t, uint32_t>> prov_;  // (parent, generator)
};

// set equality of matrix lists (duplicates collapsed)
bool same_matrix_set(const std::vector<Mat<Fq>>& A,
                     const std::vector<Mat<Fq>>& B);

}  // namespace chevlie
