#include "chevlie/fields.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace chevlie {

namespace {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<uint32_t> prime_factors(uint32_t n) {
  std::vector<uint32_t> fs;
  for (uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

// Dense polynomials over the prime field GF(p): coefficient vectors,
// constant term first, trimmed.
using PPoly = std::vector<uint32_t>;

void ptrim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (uint32_t)((c[i + j] + (uint64_t)a[i] * b[j]) % p);
  ptrim(c);
  return c;
}

// Remainder of a modulo monic b.
PPoly pmod(PPoly a, const PPoly& b, uint32_t p) {
  assert(!b.empty() && b.back() == 1);
  while (a.size() >= b.size()) {
    uint32_t c = a.back();
    size_t shift = a.size() - b.size();
    if (c != 0) {
      uint64_t negc = (uint64_t)(p - 1) * c % p;
      for (size_t i = 0; i < b.size(); ++i)
        a[shift + i] = (uint32_t)((a[shift + i] + negc * b[i]) % p);
    }
    assert(a.back() == 0);
    a.pop_back();
    ptrim(a);
    if (a.size() < b.size()) break;
  }
  return a;
}

PPoly digits_of(uint32_t idx, uint32_t p) {
  PPoly d;
  while (idx > 0) {
    d.push_back(idx % p);
    idx /= p;
  }
  return d;
}

uint32_t index_of(const PPoly& d, uint32_t p) {
  uint32_t idx = 0;
  for (size_t i = d.size(); i-- > 0;) idx = idx * p + d[i];
  return idx;
}

// Monic degree-m candidate with non-leading coefficients given by low.
PPoly candidate(uint32_t low, uint32_t m, uint32_t p) {
  PPoly f = digits_of(low, p);
  f.resize(m, 0);
  f.push_back(1);
  return f;
}

bool is_irreducible(const PPoly& f, uint32_t p) {
  uint32_t m = (uint32_t)f.size() - 1;
  if (m == 1) return true;
  if (f[0] == 0) return false;  // divisible by x
  // Trial division by every monic polynomial of degree 1..m/2.
  for (uint32_t d = 1; 2 * d <= m; ++d) {
    uint32_t count = 1;
    for (uint32_t i = 0; i < d; ++i) count *= p;
    for (uint32_t low = 0; low < count; ++low) {
      PPoly g = candidate(low, d, p);
      if (pmod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

Fq::Fq(uint32_t p, uint32_t m) : p_(p), m_(m) {
  if (!is_prime(p)) throw FieldError("field characteristic must be prime");
  if (m < 1) throw FieldError("field degree must be positive");
  uint64_t q = 1;
  for (uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > (1u << 20)) throw FieldError("field size exceeds 2^20");
  }
  q_ = (uint32_t)q;

  // Lexicographically least irreducible monic modulus of degree m: scan
  // candidates by ascending packed index of the non-leading coefficients.
  if (m == 1) {
    mod_ = {0, 1};
  } else {
    for (uint32_t low = 1; low < q_; ++low) {
      PPoly f = candidate(low, m, p);
      if (is_irreducible(f, p)) {
        mod_ = f;
        break;
      }
    }
    if (mod_.empty()) throw FieldError("no irreducible modulus found");
  }

  // Raw product in the extension, before any tables exist.
  auto raw_mul = [&](Elem a, Elem b) -> Elem {
    PPoly pa = digits_of(a, p_), pb = digits_of(b, p_);
    PPoly c = pmul(pa, pb, p_);
    if (m_ > 1) c = pmod(c, mod_, p_);
    return index_of(c, p_);
  };
  auto raw_pow = [&](Elem a, uint32_t e) -> Elem {
    Elem r = 1;
    while (e > 0) {
      if (e & 1) r = raw_mul(r, a);
      a = raw_mul(a, a);
      e >>= 1;
    }
    return r;
  };

  // Least primitive element.
  uint32_t L = q_ - 1;
  std::vector<uint32_t> rs = prime_factors(L);
  for (Elem g = 1; g < q_; ++g) {
    bool ok = true;
    for (uint32_t r : rs)
      if (raw_pow(g, L / r) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      gen_ = g;
      break;
    }
  }
  assert(gen_ != 0);

  exp_.assign(L, 0);
  log_.assign(q_, 0xFFFFFFFFu);
  Elem cur = 1;
  for (uint32_t i = 0; i < L; ++i) {
    exp_[i] = cur;
    log_[cur] = i;
    cur = raw_mul(cur, gen_);
  }
  assert(cur == 1);

  if (q_ <= 256) {
    mul_tab_.assign((size_t)q_ * q_, 0);
    for (uint32_t a = 1; a < q_; ++a)
      for (uint32_t b = 1; b < q_; ++b) {
        uint32_t s = log_[a] + log_[b];
        if (s >= L) s -= L;
        mul_tab_[a * q_ + b] = (uint8_t)exp_[s];
      }
    if (p_ != 2) {
      add_tab_.assign((size_t)q_ * q_, 0);
      for (uint32_t a = 0; a < q_; ++a)
        for (uint32_t b = 0; b < q_; ++b)
          add_tab_[a * q_ + b] = (uint8_t)add_digits(a, b);
    }
  }
}

Fq::Elem Fq::add_digits(Elem a, Elem b) const {
  Elem r = 0, mult = 1;
  while (a > 0 || b > 0) {
    r += (a % p_ + b % p_) % p_ * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return r;
}

Fq::Elem Fq::add_slow(Elem a, Elem b) const {
  if (!add_tab_.empty()) return add_tab_[a * q_ + b];
  return add_digits(a, b);
}

Fq::Elem Fq::neg_slow(Elem a) const {
  Elem r = 0, mult = 1;
  while (a > 0) {
    r += (p_ - a % p_) % p_ * mult;
    a /= p_;
    mult *= p_;
  }
  return r;
}

Fq::Elem Fq::pow(Elem a, long long e) const {
  if (a == 0) {
    if (e == 0) return 1;
    if (e < 0) throw FieldError("division by zero in " + name());
    return 0;
  }
  long long L = q_ - 1;
  if (L == 0) return 1;
  long long em = ((e % L) + L) % L;
  return exp_[(uint32_t)(((long long)log_[a] * em) % L)];
}

Fq::Elem Fq::from_int(long long n) const {
  long long r = ((n % p_) + p_) % p_;
  return (Elem)r;
}

uint32_t Fq::order(Elem a) const {
  if (a == 0) throw FieldError("zero has no multiplicative order");
  uint32_t L = q_ - 1;
  if (L == 0) return 1;
  return L / std::gcd(L, log_[a]);
}

Fq::Elem Fq::element_of_order(uint32_t n) const {
  uint32_t L = q_ - 1;
  if (n == 0 || (L == 0 ? n != 1 : L % n != 0))
    throw FieldError("no element of order " + std::to_string(n) + " in " +
                     name());
  for (Elem a = 1; a < q_; ++a)
    if (order(a) == n) return a;
  throw FieldError("no element of order " + std::to_string(n) + " in " +
                   name());
}

std::vector<Fq::Elem> Fq::elements() const {
  std::vector<Elem> es(q_);
  for (uint32_t i = 0; i < q_; ++i) es[i] = i;
  return es;
}

std::vector<Fq::Elem> Fq::subfield(uint32_t qs) const {
  // qs must be p^d with d | m.
  uint64_t t = qs;
  uint32_t d = 0;
  while (t > 1 && t % p_ == 0) {
    t /= p_;
    ++d;
  }
  if (t != 1 || d == 0 || m_ % d != 0)
    throw FieldError("not a subfield size: " + std::to_string(qs));
  std::vector<Elem> s;
  for (Elem a = 0; a < q_; ++a)
    if (pow(a, (long long)qs) == a) s.push_back(a);
  assert(s.size() == qs);
  return s;
}

std::string Fq::name() const { return "gf" + std::to_string(q_); }

std::string Fq::to_string(Elem a) const {
  if (m_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  PPoly d = digits_of(a, p_);
  std::string s;
  for (size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(d[i]);
    } else {
      if (d[i] != 1) s += std::to_string(d[i]);
      s += "x";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------

RatFuncField::RatFuncField(const Fq& base, uint32_t degree_cap)
    : base_(&base), cap_(degree_cap) {}

std::string RatFuncField::name() const { return base_->name() + "(x)"; }

RatFuncField::Poly RatFuncField::poly_add(const Poly& a, const Poly& b) const {
  Poly c(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] = base_->add(c[i], b[i]);
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

RatFuncField::Poly RatFuncField::poly_sub(const Poly& a, const Poly& b) const {
  Poly nb(b.size());
  for (size_t i = 0; i < b.size(); ++i) nb[i] = base_->neg(b[i]);
  return poly_add(a, nb);
}

RatFuncField::Poly RatFuncField::poly_mul(const Poly& a, const Poly& b) const {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = base_->add(c[i + j], base_->mul(a[i], b[j]));
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

std::pair<RatFuncField::Poly, RatFuncField::Poly> RatFuncField::poly_divmod(
    const Poly& a, const Poly& b) const {
  if (b.empty()) throw FieldError("polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  Poly r = a, qout(a.size() - b.size() + 1, 0);
  Fq::Elem linv = base_->inv(b.back());
  while (r.size() >= b.size()) {
    Fq::Elem c = base_->mul(r.back(), linv);
    size_t shift = r.size() - b.size();
    qout[shift] = c;
    for (size_t i = 0; i < b.size(); ++i)
      r[shift + i] = base_->sub(r[shift + i], base_->mul(c, b[i]));
    assert(r.back() == 0);
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (r.size() < b.size()) break;
  }
  while (!qout.empty() && qout.back() == 0) qout.pop_back();
  return {qout, r};
}

RatFuncField::Poly RatFuncField::poly_gcd(Poly a, Poly b) const {
  while (!b.empty()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    Fq::Elem linv = base_->inv(a.back());
    for (auto& c : a) c = base_->mul(c, linv);
  }
  return a;
}

RatFuncField::Poly RatFuncField::poly_derivative(const Poly& a) const {
  if (a.size() <= 1) return {};
  Poly d(a.size() - 1, 0);
  for (size_t i = 1; i < a.size(); ++i)
    d[i - 1] = base_->mul(base_->from_int((long long)i), a[i]);
  while (!d.empty() && d.back() == 0) d.pop_back();
  return d;
}

RatFuncField::Elem RatFuncField::reduce(Poly num, Poly den) const {
  while (!num.empty() && num.back() == 0) num.pop_back();
  while (!den.empty() && den.back() == 0) den.pop_back();
  if (den.empty()) throw FieldError("zero denominator in " + name());
  if (num.empty()) return zero();
  Poly g = poly_gcd(num, den);
  if (g.size() > 1 || (g.size() == 1 && g[0] != 1)) {
    auto [qn, rn] = poly_divmod(num, g);
    auto [qd, rd] = poly_divmod(den, g);
    assert(rn.empty() && rd.empty());
    num = std::move(qn);
    den = std::move(qd);
  }
  if (den.back() != 1) {
    Fq::Elem linv = base_->inv(den.back());
    for (auto& c : num) c = base_->mul(c, linv);
    for (auto& c : den) c = base_->mul(c, linv);
  }
  Elem e{std::move(num), std::move(den)};
  check_cap(e);
  return e;
}

void RatFuncField::check_cap(const Elem& e) const {
  if (e.num.size() > cap_ + 1 || e.den.size() > cap_ + 1)
    throw FieldError("degree cap " + std::to_string(cap_) + " exceeded in " +
                     name());
}

RatFuncField::Elem RatFuncField::from_poly(Poly p) const {
  return reduce(std::move(p), {1});
}

RatFuncField::Elem RatFuncField::add(const Elem& a, const Elem& b) const {
  return reduce(poly_add(poly_mul(a.num, b.den), poly_mul(b.num, a.den)),
                poly_mul(a.den, b.den));
}

RatFuncField::Elem RatFuncField::neg(const Elem& a) const {
  Poly n(a.num.size());
  for (size_t i = 0; i < a.num.size(); ++i) n[i] = base_->neg(a.num[i]);
  return Elem{std::move(n), a.den};
}

RatFuncField::Elem RatFuncField::sub(const Elem& a, const Elem& b) const {
  return add(a, neg(b));
}

RatFuncField::Elem RatFuncField::mul(const Elem& a, const Elem& b) const {
  return reduce(poly_mul(a.num, b.num), poly_mul(a.den, b.den));
}

RatFuncField::Elem RatFuncField::inv(const Elem& a) const {
  if (a.num.empty()) throw FieldError("division by zero in " + name());
  return reduce(a.den, a.num);
}

RatFuncField::Elem RatFuncField::div(const Elem& a, const Elem& b) const {
  return mul(a, inv(b));
}

RatFuncField::Elem RatFuncField::pow(const Elem& a, long long e) const {
  if (e < 0) return pow(inv(a), -e);
  Elem r = one(), base = a;
  unsigned long long u = (unsigned long long)e;
  while (u > 0) {
    if (u & 1) r = mul(r, base);
    u >>= 1;
    if (u > 0) base = mul(base, base);
  }
  return r;
}

RatFuncField::Elem RatFuncField::derivative(const Elem& a) const {
  Poly gp = poly_derivative(a.num), hp = poly_derivative(a.den);
  Poly num = poly_sub(poly_mul(gp, a.den), poly_mul(a.num, hp));
  return reduce(std::move(num), poly_mul(a.den, a.den));
}

std::string RatFuncField::poly_to_string(const Poly& a) const {
  if (a.empty()) return "0";
  std::string s;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(a[i]);
    } else {
      if (a[i] != 1) s += std::to_string(a[i]) + "*";
      s += "x";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

std::string RatFuncField::to_string(const Elem& a) const {
  if (a.den.size() == 1 && a.den[0] == 1) return poly_to_string(a.num);
  return "(" + poly_to_string(a.num) + ")/(" + poly_to_string(a.den) + ")";
}

// ---------------------------------------------------------------------------

namespace {
[[noreturn]] void field_mismatch() {
  throw FieldError("arithmetic between elements of different fields");
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  if (auto* a = std::get_if<FqVal>(&v_)) {
    auto* b = std::get_if<FqVal>(&o.v_);
    if (!b || a->first != b->first) field_mismatch();
    return FieldElement(*a->first, a->first->add(a->second, b->second));
  }
  auto& a = std::get<RfVal>(v_);
  auto* b = std::get_if<RfVal>(&o.v_);
  if (!b || a.first != b->first) field_mismatch();
  return FieldElement(*a.first, a.first->add(a.second, b->second));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  if (auto* a = std::get_if<FqVal>(&v_)) {
    auto* b = std::get_if<FqVal>(&o.v_);
    if (!b || a->first != b->first) field_mismatch();
    return FieldElement(*a->first, a->first->mul(a->second, b->second));
  }
  auto& a = std::get<RfVal>(v_);
  auto* b = std::get_if<RfVal>(&o.v_);
  if (!b || a.first != b->first) field_mismatch();
  return FieldElement(*a.first, a.first->mul(a.second, b->second));
}

FieldElement FieldElement::operator-() const {
  if (auto* a = std::get_if<FqVal>(&v_))
    return FieldElement(*a->first, a->first->neg(a->second));
  auto& a = std::get<RfVal>(v_);
  return FieldElement(*a.first, a.first->neg(a.second));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  return *this + (-o);
}

FieldElement FieldElement::inverse() const {
  if (auto* a = std::get_if<FqVal>(&v_))
    return FieldElement(*a->first, a->first->inv(a->second));
  auto& a = std::get<RfVal>(v_);
  return FieldElement(*a.first, a.first->inv(a.second));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  return *this * o.inverse();
}

FieldElement FieldElement::pow(long long e) const {
  if (auto* a = std::get_if<FqVal>(&v_))
    return FieldElement(*a->first, a->first->pow(a->second, e));
  auto& a = std::get<RfVal>(v_);
  return FieldElement(*a.first, a.first->pow(a.second, e));
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (auto* a = std::get_if<FqVal>(&v_)) {
    auto* b = std::get_if<FqVal>(&o.v_);
    if (!b || a->first != b->first) field_mismatch();
    return a->second == b->second;
  }
  auto& a = std::get<RfVal>(v_);
  auto* b = std::get_if<RfVal>(&o.v_);
  if (!b || a.first != b->first) field_mismatch();
  return a.second == b->second;
}

bool FieldElement::is_zero() const {
  if (auto* a = std::get_if<FqVal>(&v_)) return a->second == 0;
  return std::get<RfVal>(v_).second.num.empty();
}

std::string FieldElement::str() const {
  if (auto* a = std::get_if<FqVal>(&v_)) return a->first->to_string(a->second);
  auto& a = std::get<RfVal>(v_);
  return a.first->to_string(a.second);
}

}  // namespace chevlie
