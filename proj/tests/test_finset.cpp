#include "powmon/finset.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace powmon;

namespace {

MonoidPtr n0() {
  static const MonoidPtr m = MonoidSpec::full_n0();
  return m;
}

FinSubset1 nset(std::initializer_list<int> xs) {
  std::vector<GroupElement> v;
  for (int x : xs) v.push_back(GroupElement::make(n0()->signature(), {x}));
  return FinSubset1::make(n0(), v);
}

// All subsets of {0..top} containing 0.
std::vector<FinSubset1> subsets_with_zero(int top) {
  std::vector<FinSubset1> out;
  for (unsigned mask = 0; mask < (1U << top); ++mask) {
    std::vector<GroupElement> v{GroupElement::make(n0()->signature(), {0})};
    for (int i = 0; i < top; ++i)
      if (mask >> i & 1U) v.push_back(GroupElement::make(n0()->signature(), {i + 1}));
    out.push_back(FinSubset1::make(n0(), v));
  }
  return out;
}

// Direct search over every identity-containing subset of Y.
bool brute_divides(const FinSubset1& x, const FinSubset1& y) {
  const auto& ys = y.elements();
  const std::size_t n = ys.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<GroupElement> z{x.monoid()->identity()};
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) z.push_back(ys[i]);
    if (set_product(x, FinSubset1::make(x.monoid(), z)) == y) return true;
  }
  return false;
}

}  // namespace

TEST(FinSubset, ValidationAndLiterals) {
  EXPECT_THROW(nset({1, 2}), MembershipViolation);
  EXPECT_THROW(FinSubset1::parse(n0(), "{0,-1}"), MembershipViolation);
  EXPECT_THROW(FinSubset1::parse(n0(), "{0,1"), ParseError);
  EXPECT_EQ(FinSubset1::parse(n0(), "{3, 0, 1, 3}").to_string(), "{0,1,3}");

  auto z2 = make_signature(2);
  auto h = MonoidSpec::half_plane_lex(z2, 0, 1);
  auto x = FinSubset1::parse(h, "{(0,0),(1,1),(2,3)}");
  EXPECT_EQ(x.size(), 3u);
  EXPECT_EQ(x.to_string(), "{(0,0),(1,1),(2,3)}");
  EXPECT_THROW(FinSubset1::parse(h, "{(0,0),(1)}"), ParseError);

  auto t = make_signature(1, {3});
  auto tm = MonoidSpec::free_generated(t, {GroupElement::make(t, {1}, {1})});
  EXPECT_EQ(FinSubset1::parse(tm, "{(0;0),(2;5)}").to_string(), "{(0;0),(2;2)}");
}

TEST(FinSubset, ProductExamples) {
  EXPECT_EQ(set_product(nset({0, 1}), nset({0, 2})), nset({0, 1, 2, 3}));
  auto x = nset({0, 4, 7});
  EXPECT_EQ(set_product(FinSubset1::unit(n0()), x), x);

  auto z2 = make_signature(2);
  auto h = MonoidSpec::half_plane_lex(z2, 0, 1);
  auto a = GroupElement::make(z2, {3, 0}), b = GroupElement::make(z2, {-1, 2});
  auto prod = set_product(FinSubset1::pair(h, a), FinSubset1::pair(h, b));
  EXPECT_EQ(prod, FinSubset1::make(h, {h->identity(), a, b, a + b}));

  auto other = MonoidSpec::numerical({2, 3});
  EXPECT_THROW(set_product(nset({0}), FinSubset1::unit(other)), SignatureMismatch);
}

TEST(FinSubset, PowerExamples) {
  EXPECT_EQ(set_power(nset({0, 1}), 3), nset({0, 1, 2, 3}));
  EXPECT_TRUE(set_power(nset({0, 5}), 0).is_unit());
  auto t = make_signature(0, {3});
  auto g = MonoidSpec::free_generated(t, {GroupElement::make(t, {}, {1})});
  auto a = GroupElement::make(t, {}, {1});
  auto cyclic = set_power(FinSubset1::pair(g, a), 3);
  EXPECT_EQ(cyclic.to_string(), "{(;0),(;1),(;2)}");
  EXPECT_EQ(set_power(FinSubset1::pair(g, a), 1000000), cyclic);
}

TEST(FinSubset, DividesExamples) {
  auto r = divides(nset({0, 1}), nset({0, 1, 2}));
  ASSERT_TRUE(r.divides());
  EXPECT_EQ(*r.cofactor, nset({0, 1}));
  auto r2 = divides(nset({0, 2}), nset({0, 1, 2, 3}));
  ASSERT_TRUE(r2.divides());
  EXPECT_EQ(*r2.cofactor, nset({0, 1}));
  EXPECT_FALSE(divides(nset({0, 5}), nset({0, 1, 2})).divides());
  EXPECT_FALSE(divides(nset({0, 1}), nset({0, 1, 3})).divides());
  EXPECT_THROW(divides(nset({0}), set_power(nset({0, 1}), 20)), CapExceeded);
  EXPECT_TRUE(divides(nset({0}), set_power(nset({0, 1}), 20), 32).divides());
}

TEST(FinSubset, DividesAgreesWithSubsetSearch) {
  auto all = subsets_with_zero(5);
  for (const auto& x : all)
    for (const auto& y : all) {
      auto r = divides(x, y);
      ASSERT_EQ(r.divides(), brute_divides(x, y)) << x.to_string() << " | " << y.to_string();
      if (r.divides()) EXPECT_EQ(set_product(x, *r.cofactor), y);
    }
}

TEST(FinSubset, ProductLawsExhaustive) {
  auto all = subsets_with_zero(5);
  auto one = FinSubset1::unit(n0());
  for (const auto& x : all) {
    EXPECT_EQ(set_product(x, one), x);
    for (const auto& y : all) {
      auto xy = set_product(x, y);
      ASSERT_EQ(xy, set_product(y, x));
      EXPECT_LE(xy.size(), x.size() * y.size());
      EXPECT_TRUE(x.is_subset_of(xy) && y.is_subset_of(xy));
    }
  }
  // Associativity over all triples (32^3).
  for (const auto& x : all)
    for (const auto& y : all) {
      auto xy = set_product(x, y);
      for (const auto& z : all) ASSERT_EQ(set_product(xy, z), set_product(x, set_product(y, z)));
    }
}

TEST(FinSubset, QuotientExamples) {
  auto q = quotients(nset({0, 1, 3}));
  ASSERT_EQ(q.entries.size(), 3u);
  for (int a : {1, 2, 3}) EXPECT_EQ(q.entries.at(GroupElement::make(n0()->signature(), {a})), 1u);
  EXPECT_TRUE(quotients(nset({0})).entries.empty());
  EXPECT_EQ(set_product(nset({0, 2}), nset({0, 1, 3})).size(), 5u);
  EXPECT_EQ(quotients(nset({0, 1, 2})).entries.at(GroupElement::make(n0()->signature(), {1})), 2u);
}

TEST(FinSubset, QuotientMultiplicityMatchesCardinalityExhaustive) {
  for (const auto& x : subsets_with_zero(6)) {
    auto q = quotients(x);
    for (const auto& a : x.elements())
      if (!a.is_identity()) EXPECT_TRUE(q.entries.count(a)) << x.to_string();
    for (int a = 1; a <= 6; ++a) {
      auto ae = GroupElement::make(n0()->signature(), {a});
      std::size_t direct = 0;
      for (const auto& b : x.elements()) direct += x.contains(ae + b);
      auto card = 2 * x.size() - set_product(FinSubset1::pair(n0(), ae), x).size();
      EXPECT_EQ(direct, card);
      EXPECT_EQ(q.entries.count(ae) ? q.entries.at(ae) : 0u, direct);
    }
  }
}

TEST(FinSubset, QuotientsStayInsideH) {
  // In <2,3>, 1 = 3 - 2 is a difference but not an element of H.
  auto h = MonoidSpec::numerical({2, 3});
  auto x = FinSubset1::parse(h, "{0,2,3}");
  auto q = quotients(x);
  EXPECT_FALSE(q.entries.count(GroupElement::make(h->signature(), {1})));
  EXPECT_EQ(q.entries.size(), 2u);
}

TEST(FinSubset, ReversionExamples) {
  EXPECT_EQ(reversion(nset({0, 1, 3})), nset({0, 2, 3}));
  EXPECT_EQ(reversion(nset({0})), nset({0}));
  EXPECT_EQ(reversion(reversion(nset({0, 2, 5, 6}))), nset({0, 2, 5, 6}));
  EXPECT_THROW(reversion(FinSubset1::parse(MonoidSpec::numerical({2, 3}), "{0,2}")), InvalidArgument);
}

TEST(FinSubset, ReversionIsAutomorphismExhaustive) {
  auto all = subsets_with_zero(8);
  for (const auto& x : all) {
    auto rx = reversion(x);
    for (const auto& y : all) ASSERT_EQ(reversion(set_product(x, y)), set_product(rx, reversion(y)));
  }
}

TEST(FinSubset, RandomProductsInTheHalfPlane) {
  auto z2 = make_signature(2);
  auto h = MonoidSpec::half_plane_lex(z2, 0, 1);
  auto members = members_in_window(*h, Window{5});
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
  auto draw = [&] {
    std::vector<GroupElement> v{h->identity()};
    for (int i = 0; i < 3; ++i) v.push_back(members[pick(rng)]);
    return FinSubset1::make(h, v);
  };
  for (int i = 0; i < 500; ++i) {
    auto x = draw(), y = draw(), z = draw();
    auto xy = set_product(x, y);
    for (const auto& u : xy.elements()) ASSERT_TRUE(h->contains(u));
    ASSERT_EQ(set_product(xy, z), set_product(x, set_product(y, z)));
    auto d = divides(x, xy);
    ASSERT_TRUE(d.divides());
    EXPECT_EQ(set_product(x, *d.cofactor), xy);
  }
}
