#include "powmon/suites.hpp"

#include <gtest/gtest.h>

using namespace powmon;
using namespace powmon::suites;

namespace {

struct PlanarPair {
  SignaturePtr sig = make_signature(2);
  MonoidPtr h = MonoidSpec::half_plane_lex(sig, 0, 1, "H~");
  MonoidPtr k = MonoidSpec::irrational_cone(sig, 0, 1, QuadraticSurd::sqrt(2), "K~");
  TranslationIso f = build_translation_iso(h, k);
};

SuiteConfig small(std::size_t samples = 200, std::int64_t window = 6) {
  SuiteConfig c;
  c.sample_count = samples;
  c.window_bound = window;
  return c;
}

const CheckTally* tally(const SuiteReport& r, const std::string& name) {
  for (const auto& t : r.checks)
    if (t.name == name) return &t;
  return nullptr;
}

}  // namespace

TEST(Suites, OneReversedSeesBothClasses) {
  PlanarPair p;
  auto r = run_suite("onereversed", p.f, SuiteConfig{});
  EXPECT_EQ(r.verdict, Verdict::Pass) << to_json(r).dump(2);
  EXPECT_GT(r.details["reversed_draws"].get<std::size_t>(), 0u);
  EXPECT_GT(r.details["not_reversed_draws"].get<std::size_t>(), 0u);
  ASSERT_NE(tally(r, "unequal_value"), nullptr);
  EXPECT_GT(tally(r, "unequal_value")->passed, 0u);
}

TEST(Suites, TwoSetsExhaustiveAndSampled) {
  PlanarPair p;
  auto exhaustive = run_suite("two_sets", p.f, small(10, 6));
  EXPECT_EQ(exhaustive.verdict, Verdict::Pass);
  EXPECT_EQ(exhaustive.cases, members_in_window(*p.h, Window{6}).size() - 1);
  auto sampled = run_suite("two_sets", p.f, SuiteConfig{});
  EXPECT_EQ(sampled.verdict, Verdict::Pass);
  EXPECT_EQ(sampled.cases, 1000u);
}

TEST(Suites, IdentityIso) {
  PlanarPair p;
  auto id = build_translation_iso(p.h, p.h);
  EXPECT_EQ(run_suite("pullback_powers", id, small()).verdict, Verdict::Pass);
  // Nothing is reversed under the identity.
  EXPECT_EQ(run_suite("onereversed", id, small()).verdict, Verdict::Inconclusive);
}

TEST(Suites, EverySuiteOnThePlanarIso) {
  PlanarPair p;
  auto reports = run_suites({}, p.f, small());
  ASSERT_EQ(reports.size(), suite_names().size());
  for (const auto& r : reports) {
    bool vacuous = r.suite == "pullback_inverse" || r.suite == "torsion" || r.suite == "nonreducedpositive" ||
                   r.suite == "unitsnotrev" || r.suite == "nothingreversed";
    EXPECT_EQ(r.verdict, vacuous ? Verdict::NotApplicable : Verdict::Pass) << to_json(r).dump(2);
    if (!vacuous) EXPECT_GT(r.cases, 0u) << r.suite;
    EXPECT_EQ(r.failure_count, 0u);
  }
}

TEST(Suites, NonReducedIdentityIso) {
  auto z2 = make_signature(2);
  auto group = MonoidSpec::free_generated(
      z2, {GroupElement::make(z2, {1, 0}), GroupElement::make(z2, {0, 1}), GroupElement::make(z2, {-1, -1})}, "Z2");
  auto id = build_translation_iso(group, group);
  for (const char* name : {"pullback_inverse", "nonreducedpositive", "unitsnotrev", "nothingreversed"}) {
    auto r = run_suite(name, id, small(100, 3));
    EXPECT_EQ(r.verdict, Verdict::Pass) << name;
  }
}

TEST(Suites, TorsionIdentityIso) {
  auto sig = make_signature(1, {2});
  // Z x Z/2, generated as a monoid by (1;0), (-1;0), (0;1).
  auto m = MonoidSpec::free_generated(
      sig, {GroupElement::make(sig, {1}, {0}), GroupElement::make(sig, {-1}, {0}), GroupElement::make(sig, {0}, {1})});
  auto id = build_translation_iso(m, m);
  auto t = run_suite("torsion", id, small(100, 4));
  EXPECT_EQ(t.verdict, Verdict::Pass);
  auto c = run_suite("core", id, small(100, 4));
  EXPECT_EQ(c.verdict, Verdict::Pass);
  ASSERT_NE(tally(c, "order_two"), nullptr);
}

TEST(Suites, Determinism) {
  PlanarPair p;
  for (const char* name : {"homomorphism", "onereversed", "quotients", "pseudo"}) {
    auto a = to_json(run_suite(name, p.f, small(150))).dump();
    PlanarPair q;
    auto b = to_json(run_suite(name, q.f, small(150))).dump();
    EXPECT_EQ(a, b) << name;
  }
  auto other = small(150);
  other.seed = 7;
  EXPECT_NE(to_json(run_suite("onereversed", p.f, other)).dump(),
            to_json(run_suite("onereversed", p.f, small(150))).dump());
}

TEST(Suites, UnknownSuiteAndBadConfig) {
  PlanarPair p;
  EXPECT_THROW(run_suite("nope", p.f, small()), InvalidArgument);
  SuiteConfig bad;
  bad.window_bound = 0;
  EXPECT_THROW(run_suite("core", p.f, bad), InvalidArgument);
}

TEST(Suites, Rank4Scenario) {
  auto small_run = run_example_rank4(small(100, 2));
  EXPECT_EQ(small_run.verdict, Verdict::Pass) << to_json(small_run).dump(2);
  for (const char* check : {"(i) H_v = H~", "(ii) (1,0) irreducible in H", "(iii) K~ has no irreducibles",
                            "(iv) iso and homomorphism"})
    EXPECT_NE(tally(small_run, check), nullptr) << check;
}

TEST(Suites, Rank4TamperedSlopeFailsAtIso) {
  auto r = run_example_rank4(small(100, 3), QuadraticSurd::rational(3, 2));
  EXPECT_EQ(r.verdict, Verdict::Fail);
  ASSERT_NE(tally(r, "(iv) iso and homomorphism"), nullptr);
  EXPECT_EQ(tally(r, "(iv) iso and homomorphism")->failed, 1u);
  ASSERT_FALSE(r.failures.empty());
  const auto& w = r.failures.back()["witness"];
  EXPECT_EQ(w["condition"], "codomain-reduced");
  ASSERT_TRUE(w.contains("translations"));
  EXPECT_GE(w["translations"].size(), 2u);
}

TEST(Suites, HumanTable) {
  PlanarPair p;
  auto text = render_human(run_suites({"core", "torsion"}, p.f, small(50)));
  EXPECT_NE(text.find("core"), std::string::npos);
  EXPECT_NE(text.find("NOT_APPLICABLE"), std::string::npos);
  EXPECT_NE(text.find("PASS"), std::string::npos);
}
