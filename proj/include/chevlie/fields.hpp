#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace chevlie {

struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// GF(p^m), p^m <= 2^20.  Elements are packed indices: the element
// sum c_i x^i (0 <= c_i < p) has index sum c_i p^i, where x is the class of
// the indeterminate modulo the lexicographically least irreducible monic
// polynomial of degree m over GF(p).  Index 0 is zero, index 1 is one.
class Fq {
public:
  using Elem = uint32_t;

  Fq(uint32_t p, uint32_t m);

  uint32_t p() const { return p_; }
  uint32_t m() const { return m_; }
  uint32_t q() const { return q_; }
  // Coefficients of the modulus, constant term first, length m+1, monic.
  const std::vector<uint32_t>& modulus() const { return mod_; }
  std::string name() const;  // "gf4"

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }

  Elem add(Elem a, Elem b) const {
    return p_ == 2 ? (a ^ b) : add_slow(a, b);
  }
  Elem neg(Elem a) const { return p_ == 2 ? a : neg_slow(a); }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (!mul_tab_.empty()) return mul_tab_[a * q_ + b];
    if (a == 0 || b == 0) return 0;
    uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  Elem inv(Elem a) const {
    if (a == 0) throw FieldError("division by zero in " + name());
    if (a == 1) return 1;
    return exp_[(q_ - 1) - log_[a]];
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long long e) const;
  // The image of the integer n (i.e. n times one).
  Elem from_int(long long n) const;

  // Least primitive element (by packed index).
  Elem generator() const { return gen_; }
  // Least element of exact multiplicative order n; requires n | q-1.
  Elem element_of_order(uint32_t n) const;
  // Multiplicative order of a nonzero element.
  uint32_t order(Elem a) const;

  // All q elements in index order (starts 0, 1).
  std::vector<Elem> elements() const;
  // The subfield {x : x^qs = x}; requires qs = p^d with d | m.  Sorted by
  // index; always contains 0 and 1.
  std::vector<Elem> subfield(uint32_t qs) const;

  std::string to_string(Elem a) const;

  // Raw table access for hot loops (empty unless q <= 256).
  const uint8_t* mul_table() const {
    return mul_tab_.empty() ? nullptr : mul_tab_.data();
  }
  const uint8_t* add_table() const {
    return add_tab_.empty() ? nullptr : add_tab_.data();
  }

private:
  uint32_t p_ = 0, m_ = 0, q_ = 0;
  std::vector<uint32_t> mod_;
  std::vector<uint32_t> exp_, log_;
  std::vector<uint8_t> mul_tab_, add_tab_;  // q*q, only when q <= 256
  Elem gen_ = 0;

  Elem add_digits(Elem a, Elem b) const;
  Elem add_slow(Elem a, Elem b) const;
  Elem neg_slow(Elem a) const;
};

// F_q(x): reduced fractions of polynomials over a finite field.
// Canonical form: numerator and denominator coprime, denominator monic,
// zero is 0/1.  Polynomials are coefficient vectors, constant term first,
// no trailing zero coefficients (zero polynomial = empty vector).
class RatFuncField {
public:
  using Poly = std::vector<Fq::Elem>;
  struct Elem {
    Poly num;
    Poly den;
    bool operator==(const Elem&) const = default;
  };

  explicit RatFuncField(const Fq& base, uint32_t degree_cap = 64);

  const Fq& base() const { return *base_; }
  uint32_t degree_cap() const { return cap_; }
  std::string name() const;  // "gf4(x)"

  Elem zero() const { return Elem{{}, {1}}; }
  Elem one() const { return Elem{{1}, {1}}; }
  Elem x() const { return Elem{{0, 1}, {1}}; }
  Elem from_base(Fq::Elem a) const {
    return a == 0 ? zero() : Elem{{a}, {1}};
  }
  Elem from_int(long long n) const { return from_base(base_->from_int(n)); }
  Elem from_poly(Poly p) const;

  bool is_zero(const Elem& a) const { return a.num.empty(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  Elem add(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const;
  Elem pow(const Elem& a, long long e) const;

  // Formal derivative d/dx, reduced: (g/h)' = (g'h - gh')/h^2.
  Elem derivative(const Elem& a) const;

  long long num_degree(const Elem& a) const {
    return a.num.empty() ? -1 : (long long)a.num.size() - 1;
  }
  long long den_degree(const Elem& a) const {
    return (long long)a.den.size() - 1;
  }

  std::string to_string(const Elem& a) const;

  // Polynomial helpers (exposed for tests).
  Poly poly_add(const Poly& a, const Poly& b) const;
  Poly poly_sub(const Poly& a, const Poly& b) const;
  Poly poly_mul(const Poly& a, const Poly& b) const;
  // Division with remainder: returns {quotient, remainder}.
  std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) const;
  Poly poly_gcd(Poly a, Poly b) const;  // monic gcd
  Poly poly_derivative(const Poly& a) const;
  std::string poly_to_string(const Poly& a) const;

private:
  const Fq* base_;
  uint32_t cap_;

  Elem reduce(Poly num, Poly den) const;
  void check_cap(const Elem& e) const;
};

// A field element tagged with its field; arithmetic across distinct fields
// is a checked error.  Convenience layer; hot paths use the raw field APIs.
class FieldElement {
public:
  FieldElement(const Fq& f, Fq::Elem v) : v_(std::pair{&f, v}) {}
  FieldElement(const RatFuncField& f, RatFuncField::Elem v)
      : v_(std::pair{&f, std::move(v)}) {}

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  FieldElement pow(long long e) const;
  FieldElement inverse() const;
  bool is_zero() const;
  std::string str() const;

private:
  using FqVal = std::pair<const Fq*, Fq::Elem>;
  using RfVal = std::pair<const RatFuncField*, RatFuncField::Elem>;
  std::variant<FqVal, RfVal> v_;
};

}  // namespace chevlie
