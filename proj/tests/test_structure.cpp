#include "powmon/structure.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace powmon;

namespace {

GroupElement el(const SignaturePtr& sig, std::vector<Integer> free, std::vector<Integer> torsion = {}) {
  return GroupElement::make(sig, std::move(free), std::move(torsion));
}

MonoidPtr rank4_composite(const SignaturePtr& sig) {
  auto e = [&](std::size_t i) { return unit_vector(sig, i); };
  return MonoidSpec::composite(MonoidSpec::half_plane_lex(sig, 0, 1, "H~"), ComplementSpec{{e(0), e(1)}, {e(2), e(3)}},
                               "H");
}

// Brute-force pseudo-unit test: a witness b among 0..bound.
std::optional<long> brute_pseudo_witness(const MonoidSpec& h, long a, long bound) {
  auto sig = h.signature();
  for (long b = 0; b <= bound; ++b) {
    auto be = el(sig, {b});
    if (h.contains(be) && !h.contains(el(sig, {a - b})) && !h.contains(el(sig, {b - a}))) return b;
  }
  return std::nullopt;
}

}  // namespace

TEST(Structure, IndependenceExamples) {
  auto z2 = make_signature(2);
  EXPECT_TRUE(is_independent(el(z2, {1, 0}), el(z2, {0, 1})));
  EXPECT_FALSE(is_independent(el(z2, {2, 4}), el(z2, {3, 6})));
  auto t = make_signature(2, {4});
  EXPECT_FALSE(is_independent(el(t, {1, 0}, {0}), el(t, {0, 0}, {1})));
  EXPECT_FALSE(is_independent(el(t, {3, 5}, {2}), el(t, {3, 5}, {2})));

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> c(-4, 4);
  for (int i = 0; i < 300; ++i) {
    auto a = el(z2, {c(rng), c(rng)}), b = el(z2, {c(rng), c(rng)});
    EXPECT_EQ(is_independent(a, b), is_independent(b, a));
    if (!a.is_identity()) EXPECT_FALSE(is_independent(a, a));
    // Over Z^2, independence is a nonzero determinant.
    Integer det = a.free_part()[0] * b.free_part()[1] - a.free_part()[1] * b.free_part()[0];
    EXPECT_EQ(is_independent(a, b), det != 0);
  }
}

TEST(Structure, IrreducibleExamples) {
  auto z2 = make_signature(2);
  Window w{8};
  auto half = MonoidSpec::half_plane_lex(z2, 0, 1);
  EXPECT_EQ(is_irreducible(*half, el(z2, {1, 0}), w).status, IrreducibleStatus::IrreducibleAnalytic);
  auto r = is_irreducible(*half, el(z2, {3, 0}), w);
  ASSERT_EQ(r.status, IrreducibleStatus::Reducible);
  EXPECT_EQ(r.factors->first, el(z2, {2, 0}));

  auto cone = MonoidSpec::irrational_cone(z2, 0, 1, QuadraticSurd::sqrt(2));
  auto c = is_irreducible(*cone, el(z2, {1, 1}), w);
  ASSERT_EQ(c.status, IrreducibleStatus::Reducible);
  EXPECT_EQ(c.factors->first, el(z2, {3, 4}));
  EXPECT_EQ(c.factors->second, el(z2, {-2, -3}));

  auto n23 = MonoidSpec::numerical({2, 3});
  auto z = n23->signature();
  EXPECT_EQ(is_irreducible(*n23, el(z, {2}), w).status, IrreducibleStatus::IrreducibleUpToWindow);
  EXPECT_EQ(is_irreducible(*n23, el(z, {3}), w).status, IrreducibleStatus::IrreducibleUpToWindow);
  EXPECT_EQ(is_irreducible(*n23, el(z, {5}), w).status, IrreducibleStatus::Reducible);
  EXPECT_THROW(is_irreducible(*n23, el(z, {1}), w), MembershipViolation);
  EXPECT_THROW(is_irreducible(*n23, el(z, {0}), w), InvalidArgument);
}

TEST(Structure, ReducibleWitnessesRecompose) {
  auto z2 = make_signature(2);
  std::vector<MonoidPtr> specs = {
      MonoidSpec::half_plane_lex(z2, 0, 1), MonoidSpec::irrational_cone(z2, 0, 1, QuadraticSurd::sqrt(2)),
      MonoidSpec::irrational_cone(z2, 1, 0, QuadraticSurd::make(1, 1, 2, 5)), MonoidSpec::numerical({3, 5, 7}),
      MonoidSpec::free_generated(z2, {el(z2, {1, 0}), el(z2, {1, 2}), el(z2, {2, -1})}),
      rank4_composite(make_signature(4))};
  for (const auto& spec : specs) {
    Window w{spec->signature()->free_rank > 2 ? 2 : 5};
    for (const auto& u : members_in_window(*spec, w)) {
      if (spec->contains(inverse(u))) continue;
      auto v = is_irreducible(*spec, u, w);
      if (v.status != IrreducibleStatus::Reducible) continue;
      const auto& [a, b] = *v.factors;
      EXPECT_EQ(a + b, u);
      EXPECT_TRUE(spec->contains(a) && spec->contains(b));
      EXPECT_FALSE(spec->contains(inverse(a)) || spec->contains(inverse(b)));
    }
  }
}

TEST(Structure, ConeHasNoIrreduciblesInWindow) {
  auto z2 = make_signature(2);
  auto cone = MonoidSpec::irrational_cone(z2, 0, 1, QuadraticSurd::sqrt(2));
  for (const auto& u : members_in_window(*cone, Window{6}))
    if (!u.is_identity()) EXPECT_EQ(is_irreducible(*cone, u, Window{6}).status, IrreducibleStatus::Reducible);
}

TEST(Structure, NumericalIrreduciblesAreMinimalGenerators) {
  auto h = MonoidSpec::numerical({6, 9, 20});
  auto z = h->signature();
  for (long x = 1; x <= 32; ++x) {
    if (!h->contains(el(z, {x}))) continue;
    bool irreducible = is_irreducible(*h, el(z, {x}), Window{8}).status != IrreducibleStatus::Reducible;
    EXPECT_EQ(irreducible, x == 6 || x == 9 || x == 20) << x;
  }
}

TEST(Structure, PseudoUnitExamples) {
  Window w{20};
  auto n23 = MonoidSpec::numerical({2, 3});
  auto z = n23->signature();
  auto v = pseudo_unit(*n23, el(z, {2}), w);
  ASSERT_EQ(v.status, PseudoUnitStatus::NotPseudoUnit);
  EXPECT_EQ(*v.witness, el(z, {3}));
  EXPECT_EQ(brute_pseudo_witness(*n23, 2, 20), 3);
  EXPECT_EQ(pseudo_unit(*n23, el(z, {0}), w).status, PseudoUnitStatus::PseudoUnitAnalytic);
  EXPECT_THROW(pseudo_unit(*n23, el(z, {1}), w), MembershipViolation);

  auto z2 = make_signature(2);
  for (const auto& spec : {MonoidSpec::half_plane_lex(z2, 0, 1),
                           MonoidSpec::irrational_cone(z2, 0, 1, QuadraticSurd::sqrt(3))})
    for (const auto& a : members_in_window(*spec, Window{3}))
      EXPECT_EQ(pseudo_unit(*spec, a, w).status, PseudoUnitStatus::PseudoUnitAnalytic);

  auto sig = make_signature(4);
  auto h = rank4_composite(sig);
  for (const auto& a : {el(sig, {0, 0, 1, 0}), el(sig, {-3, -9, 0, 2}), el(sig, {4, 1, 5, 5})}) {
    auto pv = pseudo_unit(*h, a, Window{4});
    ASSERT_EQ(pv.status, PseudoUnitStatus::NotPseudoUnit) << format_element(a);
    EXPECT_TRUE(is_pseudo_unit_witness(*h, a, *pv.witness));
  }
  EXPECT_EQ(pseudo_unit(*h, el(sig, {-3, 2, 0, 0}), Window{4}).status, PseudoUnitStatus::PseudoUnitAnalytic);
}

TEST(Structure, NumericalPseudoUnitRuleMatchesBruteForce) {
  // The Frobenius-shift certificate against a direct search for b <= 40.
  for (const auto& gens : std::vector<std::vector<Integer>>{{2, 3}, {3, 5}, {4, 6, 9}, {5, 7, 11}, {3, 4}, {6, 10, 15}}) {
    auto h = MonoidSpec::numerical(gens);
    auto z = h->signature();
    for (long a = 1; a <= 20; ++a) {
      if (!h->contains(el(z, {a}))) continue;
      auto v = pseudo_unit(*h, el(z, {a}), Window{40});
      ASSERT_EQ(v.status, PseudoUnitStatus::NotPseudoUnit);
      EXPECT_TRUE(is_pseudo_unit_witness(*h, el(z, {a}), *v.witness));
      EXPECT_TRUE(brute_pseudo_witness(*h, a, 40).has_value()) << h->label() << " a=" << a;
    }
  }
  // N0 = <1, 2>: every element is a pseudo-unit, and no witness exists.
  auto n0 = MonoidSpec::numerical({1, 2});
  for (long a = 0; a <= 20; ++a) {
    EXPECT_EQ(pseudo_unit(*n0, el(n0->signature(), {a}), Window{40}).status, PseudoUnitStatus::PseudoUnitAnalytic);
    EXPECT_FALSE(brute_pseudo_witness(*n0, a, 40).has_value());
  }
}

TEST(Structure, DecomposeExamples) {
  auto n23 = MonoidSpec::numerical({2, 3});
  auto r = decompose(*n23, Window{20});
  ASSERT_EQ(r.pseudo_units.size(), 1u);
  EXPECT_TRUE(r.pseudo_units[0].is_identity());
  EXPECT_EQ(r.complement.size(), members_in_window(*n23, Window{20}).size() - 1);
  EXPECT_TRUE(r.undetermined.empty());

  auto z2 = make_signature(2);
  auto half = MonoidSpec::half_plane_lex(z2, 0, 1);
  auto rh = decompose(*half, Window{6});
  EXPECT_EQ(rh.pseudo_units, members_in_window(*half, Window{6}));
  EXPECT_TRUE(rh.complement.empty());

  auto sig = make_signature(4);
  auto h = rank4_composite(sig);
  auto valuation = h->as<family::Composite>()->valuation_part;
  auto rc = decompose(*h, Window{3});
  EXPECT_EQ(rc.pseudo_units, members_in_window(*valuation, Window{3}));
  EXPECT_TRUE(rc.undetermined.empty());
  for (const auto& u : rc.complement) EXPECT_TRUE(h->complement_coefficients(u).has_value());
}

TEST(Structure, FreeGeneratedDecomposition) {
  auto z2 = make_signature(2);
  auto h = MonoidSpec::free_generated(z2, {el(z2, {1, 0}), el(z2, {0, 1})});
  auto r = decompose(*h, Window{5});
  ASSERT_EQ(r.pseudo_units.size(), 1u);
  // Every b in the window is comparable with the corner (5,5), so only it stays open.
  ASSERT_EQ(r.undetermined.size(), 1u);
  EXPECT_EQ(r.undetermined[0], el(z2, {5, 5}));
  EXPECT_EQ(pseudo_unit(*h, el(z2, {5, 5}), Window{6}).status, PseudoUnitStatus::NotPseudoUnit);
  // A chain inside a free monoid of rank 1 is totally ordered.
  auto line = MonoidSpec::free_generated(z2, {el(z2, {1, 1})});
  auto rl = decompose(*line, Window{5});
  EXPECT_TRUE(rl.complement.empty());
  EXPECT_EQ(rl.undetermined.size(), rl.verdicts.size() - 1);
}

TEST(Structure, ClosurePropertiesHoldOnWindows) {
  auto z2 = make_signature(2);
  std::vector<std::pair<MonoidPtr, Window>> cases = {
      {MonoidSpec::numerical({3, 5}), Window{30}},
      {MonoidSpec::half_plane_lex(z2, 0, 1), Window{6}},
      {MonoidSpec::free_generated(z2, {el(z2, {1, 0}), el(z2, {1, 2}), el(z2, {2, -1})}), Window{5}},
      {rank4_composite(make_signature(4)), Window{2}}};
  for (const auto& [spec, w] : cases) {
    auto r = decompose(*spec, w);
    for (const auto& check : validate_decomposition(*spec, r, 300, 17)) {
      EXPECT_TRUE(check.failures.empty()) << spec->label() << " " << check.property << " " << check.failures.front();
      EXPECT_EQ(check.passed + check.inconclusive + check.failures.size() >= check.checked, true);
    }
  }
}

TEST(Structure, VerdictsStableUnderWindowGrowth) {
  auto z2 = make_signature(2);
  std::vector<MonoidPtr> specs = {MonoidSpec::numerical({4, 7}),
                                  MonoidSpec::free_generated(z2, {el(z2, {1, 0}), el(z2, {1, 2}), el(z2, {2, -1})}),
                                  rank4_composite(make_signature(4))};
  for (const auto& spec : specs) {
    Window small{spec->signature()->free_rank > 2 ? 1 : 3};
    for (const auto& u : members_in_window(*spec, small)) {
      auto a = pseudo_unit(*spec, u, small).status;
      auto b = pseudo_unit(*spec, u, small.scaled(2)).status;
      if (a != PseudoUnitStatus::UnknownUpToWindow) EXPECT_EQ(a, b) << format_element(u);
    }
  }
}

TEST(Structure, ReportJson) {
  auto r = decompose(*MonoidSpec::numerical({2, 3}), Window{4});
  auto j = to_json(r);
  EXPECT_EQ(j["pseudo_units"].size(), 1u);
  EXPECT_EQ(j["verdicts"][1]["status"], "NOT_PSEUDO_UNIT");
  EXPECT_EQ(j["verdicts"][1]["witness"], "3");
}
