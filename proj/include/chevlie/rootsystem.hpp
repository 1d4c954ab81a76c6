#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chevlie {

struct RootSystemError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Root coordinates over the simple roots (integer coefficient vectors).
using RootVec = std::vector<int>;
// Cocharacter: integer coefficient vector over the simple coroots.
using Cochar = std::vector<long long>;

struct PrimeClassification {
  char type;
  uint32_t rank;
  std::vector<uint32_t> bad;  // primes dividing some root coefficient
  bool good(uint32_t p) const;
  // good, and for type A_n additionally p does not divide n+1
  bool very_good(uint32_t p) const;
  // the finitely many additional primes excluded by very_good beyond bad
  std::vector<uint32_t> extra_non_very_good() const;
};

// An irreducible reduced root system of rank <= 8, built by closing the
// simple roots under simple reflections.  Roots are indexed with all
// positive roots first, sorted by (height, then descending lex on
// coordinates); root(n_pos + i) = -root(i).
class RootSystem {
public:
  static RootSystem build(char type, uint32_t rank);
  static RootSystem build(const std::string& label);  // e.g. "G2"

  char type() const { return type_; }
  uint32_t rank() const { return rank_; }
  std::string label() const { return std::string(1, type_) + std::to_string(rank_); }

  uint32_t n_roots() const { return (uint32_t)roots_.size(); }
  uint32_t n_pos() const { return n_pos_; }
  const RootVec& root(uint32_t i) const { return roots_[i]; }
  const std::vector<RootVec>& roots() const { return roots_; }
  bool is_positive(uint32_t i) const { return i < n_pos_; }
  uint32_t neg(uint32_t i) const {
    return i < n_pos_ ? i + n_pos_ : i - n_pos_;
  }
  int height(uint32_t i) const;

  bool is_root(const RootVec& v) const { return index_.count(v) != 0; }
  uint32_t index_of(const RootVec& v) const;
  // index of root(i) + root(j) when that is a root
  std::optional<uint32_t> sum(uint32_t i, uint32_t j) const;

  // Cartan matrix C[i][j] = <alpha_j, alpha_i^vee>.
  int cartan(uint32_t i, uint32_t j) const { return cartan_[i][j]; }
  // Symmetrizer d_i = (alpha_i, alpha_i)/2, normalized so short roots have
  // squared length 2.
  int sym_d(uint32_t i) const { return d_[i]; }
  // Invariant form on the root lattice, short roots normalized to (x,x) = 2.
  long long form(const RootVec& x, const RootVec& y) const;
  long long length2(uint32_t i) const { return form(roots_[i], roots_[i]); }

  // <gamma, delta^vee> = 2(gamma,delta)/(delta,delta).
  int pairing(uint32_t gamma, uint32_t delta) const;
  int pairing(const RootVec& gamma, uint32_t delta) const;

  // s_delta(gamma) = gamma - <gamma, delta^vee> delta, as a root index.
  uint32_t reflect(uint32_t delta, uint32_t gamma) const;

  // gamma^vee expanded over the simple coroots.
  Cochar coroot(uint32_t gamma) const;
  // <gamma, lambda> for a cocharacter lambda = sum n_i alpha_i^vee.
  long long cochar_pairing(uint32_t gamma, const Cochar& lam) const;
  long long cochar_pairing(const RootVec& gamma, const Cochar& lam) const;
  // s_delta(lambda) = lambda - <delta, lambda> delta^vee.
  Cochar coroot_reflect(uint32_t delta, const Cochar& lam) const;
  // <gamma, lambda> for every root, indexed like roots().
  std::vector<long long> cochar_weights(const Cochar& lam) const;

  PrimeClassification classify_primes() const;

  // S given by root indices; throws unless S = -S; true iff S is closed
  // under root addition within the ambient system.
  bool is_closed_subsystem(const std::vector<uint32_t>& subset) const;

  // "a", "3a+2b", "-(3a+2b)": simple roots named a, b, c, ... in order.
  std::string root_name(uint32_t i) const;
  std::string root_name(const RootVec& v) const;

private:
  RootSystem() = default;
  char type_ = 0;
  uint32_t rank_ = 0, n_pos_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> d_;
  std::vector<std::vector<long long>> gram_;  // (alpha_i, alpha_j) normalized
  std::vector<RootVec> roots_;
  std::map<RootVec, uint32_t> index_;
};

// CLI renderings (stable formats, golden-filed in the test suite).
std::string rootsys_text(const RootSystem& rs);
std::string rootsys_json(const RootSystem& rs);
std::string primes_text(const RootSystem& rs);

}  // namespace chevlie
