#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chevlie/centralizer.hpp"
#include "chevlie/fingroup.hpp"
#include "chevlie/group.hpp"

using namespace chevlie;

namespace {

struct Setup {
  RootSystem rs = RootSystem::build("G2");
  ChevalleyForm cf = ChevalleyForm::build(rs);
  Fq f;
  LieAlgebra<Fq> L;
  Setup(uint32_t p, uint32_t m) : f(p, m), L(cf, f) {}

  std::vector<Mat<Fq>> h_gens() const {
    Fq::Elem w = f.element_of_order(3);
    return {weyl_rep(L, 0), torus_element(L, Cochar{1, 0}, w)};
  }
  // basis vector sums like e_b + e_3a+b by root index
  std::vector<Fq::Elem> root_sum(std::vector<uint32_t> roots) const {
    auto v = L.zero_vec();
    for (uint32_t r : roots) v[cf.e_index(r)] = f.one();
    return v;
  }
};

}  // namespace

TEST_CASE("fixed space of nothing is everything") {
  Setup s(2, 2);
  Subspace<Fq> W = lie_fixed_space(s.L, {});
  CHECK(W.dim() == 14);
  CHECK(W == Subspace<Fq>::whole(s.f, 14));
  CHECK(lie_centralizer(s.L, {}).dim() == 14);
}

TEST_CASE("fixed space of the order six subgroup matches the hand basis") {
  Setup s(2, 2);
  Subspace<Fq> W = lie_fixed_space(s.L, s.h_gens());
  CHECK(W.dim() == 5);
  // hand derivation: the torus part fixes the Cartan pointwise and kills
  // every root space with pairing not divisible by 3; the reflection then
  // pairs up b with 3a+b and fixes the highest root spaces, leaving
  // h_a, e_b + e_3a+b, e_-b + e_-(3a+b), e_3a+2b, e_-(3a+2b)
  std::vector<std::vector<Fq::Elem>> rows;
  rows.push_back(s.L.cochar_tangent(Cochar{1, 0}));
  rows.push_back(s.root_sum({1, 4}));
  rows.push_back(s.root_sum({7, 10}));
  rows.push_back(s.root_sum({5}));
  rows.push_back(s.root_sum({11}));
  Subspace<Fq> hand = Subspace<Fq>::span(s.f, 14, rows);
  CHECK(W == hand);
  CHECK(W.pivots() == std::vector<uint32_t>{0, 3, 7, 9, 13});
  CHECK(W.contains(s.L.cochar_tangent(Cochar{1, 0})));
  CHECK(W.contains(s.root_sum({1, 4})));
  CHECK_FALSE(W.contains(s.L.basis_vec(s.cf.e_index(1))));
}

TEST_CASE("generators and the full closure give the same fixed space") {
  Setup s(2, 2);
  Fq::Elem w = s.f.element_of_order(3);
  FiniteSubgroup H(
      s.f,
      {{weyl_rep(s.L, 0), "s_a"}, {torus_element(s.L, Cochar{1, 0}, w), "t"}},
      100);
  REQUIRE(H.order() == 6);
  std::vector<Mat<Fq>> all;
  for (uint64_t i = 0; i < H.order(); ++i) all.push_back(H.element(i));
  Subspace<Fq> from_gens = lie_fixed_space(s.L, s.h_gens());
  Subspace<Fq> from_all = lie_fixed_space(s.L, all);
  CHECK(from_gens == from_all);
  // every fixed vector is genuinely fixed by every element
  for (uint32_t i = 0; i < from_gens.dim(); ++i) {
    auto v = from_gens.basis_row(i);
    for (const auto& g : all) CHECK(g.apply(v) == v);
  }
}

TEST_CASE("lie centralizer of z is the six dimensional subalgebra") {
  Setup s(2, 1);
  auto z = s.L.cochar_tangent(Cochar{1, 0});
  Subspace<Fq> C = lie_centralizer(s.L, {z});
  CHECK(C.dim() == 6);
  CHECK(C == Subspace<Fq>::from_basis_indices(s.f, 14, {0, 1, 2, 7, 8, 13}));
}

TEST_CASE("the algebra has trivial center in characteristic two") {
  Setup s(2, 1);
  std::vector<std::vector<Fq::Elem>> basis;
  for (uint32_t i = 0; i < 14; ++i) basis.push_back(s.L.basis_vec(i));
  Subspace<Fq> Z = lie_centralizer(s.L, basis);
  CHECK(Z.dim() == 0);
  // cross-check through the bracket rather than ad: no single basis vector
  // kills all brackets
  for (uint32_t i = 0; i < 14; ++i) {
    bool central = true;
    for (uint32_t j = 0; j < 14; ++j) {
      auto br = s.L.bracket(s.L.basis_vec(i), s.L.basis_vec(j));
      for (const auto& c : br) central = central && s.f.is_zero(c);
    }
    CHECK_FALSE(central);
  }
}

TEST_CASE("declared root subgroup tangent space separates z from the witness") {
  Setup s(2, 2);
  Subspace<Fq> decl = Subspace<Fq>::from_basis_indices(s.f, 14, {0, 7, 13});
  CHECK(decl.contains(s.L.cochar_tangent(Cochar{1, 0})));
  CHECK_FALSE(decl.contains(s.root_sum({1, 4})));
}

TEST_CASE("the rank one levi meets the fixed space in a line") {
  Setup s(2, 2);
  Subspace<Fq> l = Subspace<Fq>::from_basis_indices(s.f, 14, {0, 1, 2, 8});
  Subspace<Fq> W = lie_fixed_space(s.L, s.h_gens());
  Subspace<Fq> meet = l.intersect(W);
  CHECK(meet.dim() == 1);
  CHECK(meet.contains(s.L.cochar_tangent(Cochar{1, 0})));
}

TEST_CASE("probe inside the full group detects non separability") {
  Setup s(2, 2);
  Subspace<Fq> decl = Subspace<Fq>::from_basis_indices(s.f, 14, {0, 7, 13});
  auto r = separability_probe(s.L, s.h_gens(), decl);
  CHECK(r.dim_computed == 5);
  CHECK(r.dim_declared == 3);
  CHECK_FALSE(r.separable);
  REQUIRE(r.witnesses.size() == 2);
  CHECK(r.witnesses[0] == s.root_sum({1, 4}));
  CHECK(r.witnesses[1] == s.root_sum({7, 10}));
  // witnesses stay fixed under the whole closure of the subgroup
  Fq::Elem w = s.f.element_of_order(3);
  FiniteSubgroup H(
      s.f,
      {{weyl_rep(s.L, 0), "s_a"}, {torus_element(s.L, Cochar{1, 0}, w), "t"}},
      100);
  for (const auto& wit : r.witnesses)
    for (uint64_t i = 0; i < H.order(); ++i)
      CHECK(H.element(i).apply(wit) == wit);
}

TEST_CASE("probe inside the levi reports separability") {
  Setup s(2, 2);
  Subspace<Fq> l = Subspace<Fq>::from_basis_indices(s.f, 14, {0, 1, 2, 8});
  Subspace<Fq> decl =
      Subspace<Fq>::span(s.f, 14, {s.L.cochar_tangent(Cochar{1, 0})});
  auto r = separability_probe(s.L, s.h_gens(), decl, &l);
  CHECK(r.dim_computed == 1);
  CHECK(r.dim_declared == 1);
  CHECK(r.separable);
  CHECK(r.witnesses.empty());
}

TEST_CASE("probe of the trivial subgroup against everything is separable") {
  Setup s(2, 2);
  auto r = separability_probe(s.L, {}, Subspace<Fq>::whole(s.f, 14));
  CHECK(r.separable);
  CHECK(r.dim_computed == 14);
  CHECK(r.dim_declared == 14);
}

TEST_CASE("probe rejects a declaration that is not fixed") {
  Setup s(2, 2);
  Subspace<Fq> bad = Subspace<Fq>::from_basis_indices(s.f, 14, {2});
  CHECK_THROWS_AS(separability_probe(s.L, s.h_gens(), bad), CentralizerError);
}

TEST_CASE("reductive pair check holds for the standard subgroups") {
  Setup s(2, 2);
  std::vector<Mat<Fq>> mGens, lGens;
  for (Fq::Elem x : s.f.elements()) {
    for (uint32_t r : {0u, 5u, 6u, 11u})
      mGens.push_back(root_element(s.L, r, x));
    for (uint32_t r : {0u, 6u}) lGens.push_back(root_element(s.L, r, x));
    if (!s.f.is_zero(x)) {
      lGens.push_back(torus_element(s.L, Cochar{1, 0}, x));
      lGens.push_back(torus_element(s.L, Cochar{0, 1}, x));
    }
  }
  Subspace<Fq> lieM =
      Subspace<Fq>::from_basis_indices(s.f, 14, {0, 1, 2, 7, 8, 13});
  Subspace<Fq> lieL = Subspace<Fq>::from_basis_indices(s.f, 14, {0, 1, 2, 8});
  CHECK(reductive_pair_check(s.L, mGens, lieM));
  CHECK(reductive_pair_check(s.L, lGens, lieL));
  CHECK(reductive_pair_check(s.L, {}, Subspace<Fq>::whole(s.f, 14)));
  // a span that is not Ad-stable fails: the line through e_a under the
  // opposite root group
  Subspace<Fq> line = Subspace<Fq>::from_basis_indices(s.f, 14, {2});
  std::vector<Mat<Fq>> aGens = {root_element(s.L, 0, s.f.one()),
                                root_element(s.L, 6, s.f.one())};
  CHECK_FALSE(reductive_pair_check(s.L, aGens, line));
}
