#include <gtest/gtest.h>

#include <map>

#include "injres/dhm.hpp"
#include "injres/errors.hpp"
#include "support.hpp"

using namespace injres;
using injres::testing::P;
using M = DHMModule;

namespace {

const DHMHom& named(const std::string& name) {
  static const std::vector<DHMHom> basis = dhm_dual_basis();
  for (const DHMHom& phi : basis)
    if (phi.name == name) return phi;
  throw std::out_of_range(name);
}

}  // namespace

TEST(Dhm, ModuleTable) {
  const DHMModule& m = dhm_module();
  for (const auto& [name, ok] : m.checks) EXPECT_TRUE(ok) << name;
  EXPECT_EQ(m.act(M::Var4::X, M::basis(M::w(5))), M::basis(M::u(4)));
  SparseVec zw6 = M::basis(M::u(3));
  zw6[M::v(4)] = FieldElement(1);
  EXPECT_EQ(m.act(M::Var4::Z, M::basis(M::w(6))), zw6);
  EXPECT_EQ(m.labels[M::w(1)], "w1");
  // XW w1 = YZ w1 = 0
  EXPECT_TRUE(m.act({1, 0, 0, 1}, M::basis(M::w(1))).empty());
  EXPECT_TRUE(m.act({0, 1, 1, 0}, M::basis(M::w(1))).empty());
  EXPECT_EQ(m.act({2, 0, 0, 0}, M::basis(M::w(1))), M::basis(M::u(1)));
  EXPECT_EQ(m.act({0, 0, 2, 0}, M::basis(M::w(6))), M::basis(M::u(2)));
  for (int b = 0; b < M::u(5) + 1; ++b)
    for (auto x : {M::Var4::X, M::Var4::Y, M::Var4::Z, M::Var4::W}) EXPECT_TRUE(m.act(x, M::basis(b)).empty());
}

TEST(Dhm, NamedBasisSatisfiesConditions) {
  const auto basis = dhm_dual_basis();
  ASSERT_EQ(basis.size(), 15u);
  for (const DHMHom& phi : basis) {
    for (const auto& [name, ok] : dhm_conditions(phi)) EXPECT_TRUE(ok) << phi.name << ": " << name;
    for (const auto& [name, ok] : dhm_displayed_conditions(phi)) EXPECT_TRUE(ok) << phi.name << ": " << name;
  }
  EXPECT_EQ(named("Phi1").values[0], HullElement(EZWElement::omega(0, 0, 0)));
  EXPECT_EQ(named("Phi13").values[0], HullElement(EZWElement::omega(1, 0, 1)));
  EXPECT_EQ(named("Phi13").values[2], HullElement(EZWElement::omega(0, -1, 0)));
}

TEST(Dhm, DisplayedConditionsAgreeWithModule) {
  // a value set that breaks one relation fails both lists
  DHMHom bad = named("Phi14");
  bad.values[3] = HullElement(EZWElement::omega(0, 0, 0));
  bool generic = true, displayed = true;
  for (const auto& [name, ok] : dhm_conditions(bad)) generic = generic && ok;
  for (const auto& [name, ok] : dhm_displayed_conditions(bad)) displayed = displayed && ok;
  EXPECT_FALSE(generic);
  EXPECT_FALSE(displayed);

  DHMHom lone = named("Phi1");
  lone.values[0] = HullElement(EZWElement::omega(0, -1, 0));  // Z Phi(w1) != 0
  int seen = 0;
  for (const auto& [name, ok] : dhm_displayed_conditions(lone))
    if (name == "ZPhi(w1) = 0") {
      EXPECT_FALSE(ok);
      ++seen;
    }
  EXPECT_EQ(seen, 1);
}

TEST(Dhm, HomIntoMaximalHull) {
  const auto space = dhm_hom_space(Prime::maximal(), 3);
  EXPECT_EQ(space.size(), 15u);
  EXPECT_EQ(dhm_hom_dimension(Prime::maximal(), 3), 15);
  EXPECT_EQ(dhm_hom_dimension(Prime::maximal(), 2), 15);
  Echelon e;
  for (const DHMHom& phi : space) EXPECT_TRUE(e.insert(dhm_coords(phi))) << phi.name;
}

TEST(Dhm, SmallTruncationMissesSolutions) {
  // Phi135 needs X^-2, which leaves the n <= 1 window
  EXPECT_LT(dhm_hom_dimension(Prime::maximal(), 1), 15);
  EXPECT_THROW(dhm_hom_space(Prime::maximal(), 1), TruncationTooSmall);
}

TEST(Dhm, HomIntoPrincipalHullsVanishes) {
  EXPECT_TRUE(dhm_hom_space(Prime::axis(Var::Z), 2).empty());
  EXPECT_TRUE(dhm_hom_space(Prime::axis(Var::W), 2).empty());
  EXPECT_TRUE(dhm_hom_space(Prime::principal(P("Z+W")), 2).empty());
  EXPECT_TRUE(dhm_hom_space(Prime::principal(P("W-Z^2")), 2).empty());
  EXPECT_THROW(dhm_hom_space(Prime::zero(), 2), BadLocus);
}

TEST(Dhm, MinimalGenerators) {
  const DHMGenerators g = dhm_generator_report();
  EXPECT_EQ(g.count, 5);
  EXPECT_EQ(dhm_min_generators(), 5);
  for (const auto& [name, ok] : g.checks) EXPECT_TRUE(ok) << name;
  EXPECT_EQ(g.complement, (std::vector<std::string>{"Phi14", "Phi25", "Phi36", "Phi135", "Phi246"}));
}

TEST(Dhm, ExtDimensions) {
  const std::vector<int> expected = {0, 0, 6, 7, 0, 0, 0, 0, 0, 0};
  for (int i = 0; i < static_cast<int>(expected.size()); ++i) EXPECT_EQ(dhm_ext(i), expected[static_cast<size_t>(i)]) << i;
  EXPECT_THROW(dhm_ext(-1), UnsupportedIndex);
}

TEST(Dhm, ExtClasses) {
  EXPECT_EQ(dhm_ext_report(2).classes, (std::vector<std::string>{"(1,0)", "(2,0)", "(3,0)", "(4,0)", "(5,0)", "(6,0)"}));
  EXPECT_EQ(dhm_ext_report(3).classes,
            (std::vector<std::string>{"(0,2)", "(0,3)", "(0,4)", "(0,5)", "(0,6)", "(35,0)", "(46,0)"}));
}
