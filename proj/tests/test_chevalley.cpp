#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "chevlie/chevalley.hpp"
#include "chevlie/fields.hpp"
#include "chevlie/linalg.hpp"
#include "chevlie/rootsystem.hpp"

using namespace chevlie;

namespace {

long long binom(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

struct XorShift {
  uint64_t s = 0x2545f4914f6cdd1dull;
  uint32_t next(uint32_t bound) {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return (uint32_t)(s % bound);
  }
};

}  // namespace

TEST_CASE("A1 gives the standard sl2 relations") {
  auto cf = ChevalleyForm::build(RootSystem::build("A1"));
  REQUIRE(cf.dim() == 3);
  uint32_t h = cf.h_index(0), e = cf.e_index(0), f = cf.e_index(1);
  auto he = cf.bracket_basis(h, e);
  CHECK(he[e] == 2);
  auto hf = cf.bracket_basis(h, f);
  CHECK(hf[f] == -2);
  auto ef = cf.bracket_basis(e, f);
  CHECK(ef[h] == 1);
  CHECK(ef[e] == 0);
  CHECK(ef[f] == 0);
}

TEST_CASE("dimensions are rank plus root count") {
  CHECK(ChevalleyForm::build(RootSystem::build("A2")).dim() == 8);
  CHECK(ChevalleyForm::build(RootSystem::build("B2")).dim() == 10);
  CHECK(ChevalleyForm::build(RootSystem::build("G2")).dim() == 14);
  CHECK(ChevalleyForm::build(RootSystem::build("A4")).dim() == 24);
  CHECK(ChevalleyForm::build(RootSystem::build("C3")).dim() == 21);
}

TEST_CASE("construction passes its internal checks on larger types") {
  // the build itself runs exhaustive Jacobi over Z plus the chain-magnitude,
  // antisymmetry and negation laws; reaching here means they all held
  CHECK(ChevalleyForm::build(RootSystem::build("D4")).dim() == 28);
  CHECK(ChevalleyForm::build(RootSystem::build("F4")).dim() == 52);
}

TEST_CASE("structure constant magnitudes follow root strings") {
  auto rs = RootSystem::build("G2");
  auto cf = ChevalleyForm::build(rs);
  uint32_t a = 0, b = 1, ab = 2, a2b = 3, a3b = 4, t = 5;
  // chains: b, a+b, 2a+b, 3a+b is an a-string of length 3
  CHECK(cf.structure_N(a, b) == 1);
  CHECK(std::abs(cf.structure_N(a, ab)) == 2);
  CHECK(std::abs(cf.structure_N(a, a2b)) == 3);
  CHECK(cf.structure_N(a, a3b) == 0);  // 4a+b is not a root
  CHECK(std::abs(cf.structure_N(b, a3b)) == 1);
  CHECK(std::abs(cf.structure_N(ab, a2b)) == 3);
  CHECK(cf.structure_N(a, t) == 0);
  // a magnitude-3 constant exists in G2 but not in B2 or A2
  auto maxN = [](const ChevalleyForm& c) {
    long long m = 0;
    for (uint32_t x = 0; x < c.roots().n_roots(); ++x)
      for (uint32_t y = 0; y < c.roots().n_roots(); ++y)
        m = std::max(m, std::abs(c.structure_N(x, y)));
    return m;
  };
  CHECK(maxN(cf) == 3);
  CHECK(maxN(ChevalleyForm::build(RootSystem::build("B2"))) == 2);
  CHECK(maxN(ChevalleyForm::build(RootSystem::build("A2"))) == 1);
}

TEST_CASE("sl2 triples sit inside the form for every root") {
  for (const char* lbl : {"G2", "B2", "A2"}) {
    auto rs = RootSystem::build(lbl);
    auto cf = ChevalleyForm::build(rs);
    for (uint32_t g = 0; g < rs.n_roots(); ++g) {
      uint32_t e = cf.e_index(g), f = cf.e_index(rs.neg(g));
      // [e_g, e_-g] = h_g
      auto ef = cf.bracket_basis(e, f);
      const Cochar& hv = cf.coroot_coeffs(g);
      for (uint32_t i = 0; i < rs.rank(); ++i) CHECK(ef[i] == hv[i]);
      for (uint32_t k = rs.rank(); k < cf.dim(); ++k) CHECK(ef[k] == 0);
      // [h_g, e_g] = 2 e_g
      std::vector<long long> h(cf.dim(), 0);
      for (uint32_t i = 0; i < rs.rank(); ++i) h[i] = hv[i];
      std::vector<long long> ev(cf.dim(), 0);
      ev[e] = 1;
      auto he = cf.bracket(h, ev);
      CHECK(he[e] == 2);
    }
  }
}

TEST_CASE("ad matrices realize stated pairings") {
  auto rs = RootSystem::build("G2");
  auto cf = ChevalleyForm::build(rs);
  // ad h_a multiplies e_b by <b, a^vee> = -3
  MatZ adha = cf.ad_basis(cf.h_index(0));
  CHECK(adha.at(cf.e_index(1), cf.e_index(1)) == -3);
  CHECK(adha.at(cf.e_index(0), cf.e_index(0)) == 2);
  CHECK(adha.at(cf.e_index(5), cf.e_index(5)) == 0);
  // ad e_g kills e_g
  for (uint32_t g = 0; g < rs.n_roots(); ++g) {
    MatZ ade = cf.ad_basis(cf.e_index(g));
    for (uint32_t i = 0; i < cf.dim(); ++i) CHECK(ade.at(i, cf.e_index(g)) == 0);
  }
  // linearity: ad(x + y) = ad x + ad y on a sample
  std::vector<long long> x(cf.dim(), 0), y(cf.dim(), 0), s(cf.dim(), 0);
  x[0] = 2;
  x[5] = -1;
  y[3] = 1;
  y[13] = 4;
  for (uint32_t i = 0; i < cf.dim(); ++i) s[i] = x[i] + y[i];
  MatZ lhs = cf.ad(s);
  MatZ r1 = cf.ad(x), r2 = cf.ad(y);
  for (size_t k = 0; k < lhs.a.size(); ++k)
    CHECK(lhs.a[k] == r1.a[k] + r2.a[k]);
}

TEST_CASE("divided powers are exactly integral with the right bounds") {
  auto rs = RootSystem::build("G2");
  auto cf = ChevalleyForm::build(rs);
  long long fact[6] = {1, 1, 2, 6, 24, 120};
  for (uint32_t g = 0; g < rs.n_roots(); ++g) {
    auto xs = cf.divided_powers(g);
    uint32_t bound = (uint32_t)xs.size();
    // short roots have bound 4, long roots bound 3
    if (rs.length2(g) == 2) CHECK(bound == 4);
    if (rs.length2(g) == 6) CHECK(bound == 3);
    CHECK(xs[0] == MatZ::identity(cf.dim()));
    // (ad e)^n = n! X_n, and (ad e)^bound = 0
    MatZ A = cf.ad_basis(cf.e_index(g));
    MatZ pw = MatZ::identity(cf.dim());
    for (uint32_t n = 1; n < bound; ++n) {
      pw = A.mul(pw);
      CHECK(pw == xs[n].scale(fact[n]));
    }
    CHECK(A.mul(pw).is_zero());
    // binomial law X_n X_m = C(n+m, n) X_{n+m}
    for (uint32_t n = 0; n < bound; ++n)
      for (uint32_t m = 0; m < bound; ++m) {
        MatZ prod = xs[n].mul(xs[m]);
        if (n + m < bound)
          CHECK(prod == xs[n + m].scale(binom((int)(n + m), (int)n)));
        else
          CHECK(prod.is_zero());
      }
  }
}

TEST_CASE("reduction mod p keeps dimension and alternation") {
  auto cf = ChevalleyForm::build(RootSystem::build("G2"));
  Fq F4(2, 2);
  LieAlgebra<Fq> L(cf, F4);
  CHECK(L.dim() == 14);
  // [e_a, e_b] = N e_{a+b} with N reduced mod 2
  auto v = L.bracket_basis(cf.e_index(0), cf.e_index(1));
  CHECK(v[cf.e_index(2)] == F4.from_int(cf.structure_N(0, 1)));
  // [x,x] = 0 for 100 sampled x
  XorShift rng;
  for (int trial = 0; trial < 100; ++trial) {
    auto x = L.zero_vec();
    for (uint32_t i = 0; i < L.dim(); ++i) x[i] = rng.next(4);
    auto xx = L.bracket(x, x);
    for (const auto& c : xx) CHECK(F4.is_zero(c));
  }
}

TEST_CASE("coroot of the highest root reduces to h_a mod 2") {
  auto rs = RootSystem::build("G2");
  auto cf = ChevalleyForm::build(rs);
  // (3a+2b)^vee = a^vee + 2 b^vee over Z
  CHECK(cf.coroot_coeffs(5) == Cochar{1, 2});
  Fq F2(2, 1);
  LieAlgebra<Fq> L(cf, F2);
  auto h_top = L.bracket_basis(cf.e_index(5), cf.e_index(11));
  auto h_a = L.basis_vec(cf.h_index(0));
  CHECK(h_top == h_a);
  // so over GF(2) the lines g_a-Cartan and g_{3a+2b}-Cartan intersect in z
  auto z = L.cochar_tangent(Cochar{1, 0});
  CHECK(z == h_a);
}

TEST_CASE("Jacobi identity survives reduction mod 2, 3 and 5") {
  auto cf = ChevalleyForm::build(RootSystem::build("G2"));
  for (uint32_t p : {2u, 3u, 5u}) {
    Fq F(p, 1);
    LieAlgebra<Fq> L(cf, F);
    for (uint32_t i = 0; i < L.dim(); ++i)
      for (uint32_t j = i + 1; j < L.dim(); ++j)
        for (uint32_t k = j + 1; k < L.dim(); ++k) {
          auto t1 = L.bracket(L.bracket_basis(i, j), L.basis_vec(k));
          auto t2 = L.bracket(L.bracket_basis(j, k), L.basis_vec(i));
          auto t3 = L.bracket(L.bracket_basis(k, i), L.basis_vec(j));
          for (uint32_t m = 0; m < L.dim(); ++m)
            CHECK(F.add(t1[m], F.add(t2[m], t3[m])) == 0);
        }
  }
}

TEST_CASE("mod 2 kernel of ad z is the six dimensional subalgebra") {
  auto rs = RootSystem::build("G2");
  auto cf = ChevalleyForm::build(rs);
  Fq F2(2, 1);
  LieAlgebra<Fq> L(cf, F2);
  auto z = L.cochar_tangent(Cochar{1, 0});  // z = h_a
  Mat<Fq> adz = L.ad(z);
  Subspace<Fq> K = kernel(adz);
  CHECK(K.dim() == 6);
  // exactly t + u_{±a} + u_{±(3a+2b)}:
  // basis indices h_a=0, h_b=1, e_a=2, e_{3a+2b}=7, e_{-a}=8, e_{-(3a+2b)}=13
  CHECK(K == Subspace<Fq>::from_basis_indices(F2, 14, {0, 1, 2, 7, 8, 13}));
  CHECK(K.pivots() == std::vector<uint32_t>{0, 1, 2, 7, 8, 13});
  // over GF(4) the same statement holds (kernel is defined over GF(2))
  Fq F4(2, 2);
  LieAlgebra<Fq> L4(cf, F4);
  auto z4 = L4.cochar_tangent(Cochar{1, 0});
  Subspace<Fq> K4 = kernel(L4.ad(z4));
  CHECK(K4.dim() == 6);
  CHECK(K4 == Subspace<Fq>::from_basis_indices(F4, 14, {0, 1, 2, 7, 8, 13}));
}

TEST_CASE("exponential matrices are unipotent over small fields") {
  auto rs = RootSystem::build("G2");
  auto cf = ChevalleyForm::build(rs);
  for (auto [p, m] : {std::pair{2u, 1u}, {2u, 2u}, {3u, 1u}, {5u, 1u}}) {
    Fq F(p, m);
    LieAlgebra<Fq> L(cf, F);
    for (uint32_t g = 0; g < rs.n_roots(); ++g) {
      const auto& xs = L.divided_powers(g);
      for (uint32_t a = 0; a < F.q(); ++a) {
        Mat<Fq> kap(F, L.dim(), L.dim());
        for (uint32_t n = 0; n < xs.size(); ++n)
          kap = kap.add(xs[n].scale(F.pow(a, n)));
        Mat<Fq> N = kap.sub(Mat<Fq>::identity(F, L.dim()));
        CHECK(N.pow(4).is_zero_matrix());
        CHECK_NOTHROW(kap.inverse());
      }
    }
  }
}

TEST_CASE("basis names are readable") {
  auto cf = ChevalleyForm::build(RootSystem::build("G2"));
  CHECK(cf.basis_name(0) == "h_a");
  CHECK(cf.basis_name(1) == "h_b");
  CHECK(cf.basis_name(2) == "e_a");
  CHECK(cf.basis_name(7) == "e_3a+2b");
  CHECK(cf.basis_name(13) == "e_-(3a+2b)");
  Fq F2(2, 1);
  LieAlgebra<Fq> L(cf, F2);
  auto v = L.zero_vec();
  v[3] = 1;
  v[6] = 1;
  CHECK(L.vec_to_string(v) == "e_b + e_3a+b");
  CHECK(L.vec_to_string(L.zero_vec()) == "0");
}

TEST_CASE("structure constants dump matches the golden file") {
  auto cf = ChevalleyForm::build(RootSystem::build("G2"));
  std::string got = cf.structure_constants_json();
  std::ifstream in(std::string(GOLDEN_DIR) + "/structconsts_g2.json",
                   std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing golden file structconsts_g2.json");
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(got == ss.str());
}
