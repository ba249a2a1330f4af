#pragma once

// P_fin,1(H): finite subsets of H containing the identity, under setwise
// multiplication.

#include "powmon/literal.hpp"
#include "powmon/monoid.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace powmon {

class FinSubset1 {
 public:
  /// Validated construction: every element must lie in `monoid` and the
  /// identity must be present.
  static FinSubset1 make(MonoidPtr monoid, std::vector<GroupElement> elements) {
    if (!monoid) throw InvalidArgument("FinSubset1 needs a monoid");
    canonicalize(elements);
    for (const auto& u : elements)
      if (!monoid->contains(u))
        throw MembershipViolation(format_element(u) + " is not in " + monoid->label());
    if (!std::binary_search(elements.begin(), elements.end(), monoid->identity()))
      throw MembershipViolation("finite subset must contain the identity");
    return FinSubset1(std::move(monoid), std::move(elements));
  }

  static FinSubset1 parse(MonoidPtr monoid, std::string_view text) {
    auto elements = literal::parse_element_list(text, monoid->signature());
    return make(std::move(monoid), std::move(elements));
  }

  static FinSubset1 unit(MonoidPtr monoid) {
    auto id = monoid->identity();
    return FinSubset1(std::move(monoid), {std::move(id)});
  }

  /// {identity, a}.
  static FinSubset1 pair(MonoidPtr monoid, const GroupElement& a) {
    auto id = monoid->identity();
    return make(std::move(monoid), {std::move(id), a});
  }

  const MonoidPtr& monoid() const noexcept { return monoid_; }
  const std::vector<GroupElement>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(const GroupElement& u) const { return std::binary_search(elements_.begin(), elements_.end(), u); }
  bool is_unit() const noexcept { return elements_.size() == 1; }

  bool is_subset_of(const FinSubset1& other) const {
    return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
  }

  std::string to_string() const { return literal::format_elements(elements_); }

  friend bool operator==(const FinSubset1& a, const FinSubset1& b) { return a.elements_ == b.elements_; }
  friend bool operator<(const FinSubset1& a, const FinSubset1& b) {
    if (a.elements_.size() != b.elements_.size()) return a.elements_.size() < b.elements_.size();
    return a.elements_ < b.elements_;
  }

  /// Construction from elements already known to be a canonical subset of H.
  static FinSubset1 trusted(MonoidPtr monoid, std::vector<GroupElement> elements) {
    canonicalize(elements);
    return FinSubset1(std::move(monoid), std::move(elements));
  }

 private:
  FinSubset1(MonoidPtr monoid, std::vector<GroupElement> elements)
      : monoid_(std::move(monoid)), elements_(std::move(elements)) {}

  static void canonicalize(std::vector<GroupElement>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  MonoidPtr monoid_;
  std::vector<GroupElement> elements_;
};

inline void require_same_monoid(const FinSubset1& x, const FinSubset1& y) {
  if (x.monoid() != y.monoid() && !(*x.monoid() == *y.monoid()))
    throw SignatureMismatch("finite subsets of different monoids");
}

inline FinSubset1 set_product(const FinSubset1& x, const FinSubset1& y) {
  require_same_monoid(x, y);
  std::vector<GroupElement> out;
  out.reserve(x.size() * y.size());
  for (const auto& a : x.elements())
    for (const auto& b : y.elements()) out.push_back(a + b);
  return FinSubset1::trusted(x.monoid(), std::move(out));
}

inline FinSubset1 set_power(const FinSubset1& x, std::uint64_t n) {
  FinSubset1 result = FinSubset1::unit(x.monoid());
  for (std::uint64_t i = 0; i < n; ++i) {
    FinSubset1 next = set_product(x, result);
    if (next == result) break;  // powers of X are increasing; a repeat is a fixed point
    result = std::move(next);
  }
  return result;
}

/// Answer of divides(X, Y): the largest cofactor Z with X * Z = Y, or none.
struct DivisionResult {
  std::optional<FinSubset1> cofactor;
  bool divides() const noexcept { return cofactor.has_value(); }
};

inline constexpr std::size_t kDefaultDivisionCap = 16;

inline DivisionResult divides(const FinSubset1& x, const FinSubset1& y, std::size_t cap = kDefaultDivisionCap) {
  require_same_monoid(x, y);
  if (y.size() > cap)
    throw CapExceeded("divides: |Y| = " + std::to_string(y.size()) + " exceeds the cap " + std::to_string(cap));
  if (!x.is_subset_of(y)) return {};
  // Any cofactor lies in Z_max = {z in Y : X z in Y}, and X * Z_max is inside Y,
  // so a cofactor exists iff Z_max itself is one. Z_max is the reported witness.
  std::vector<GroupElement> zmax;
  for (const auto& z : y.elements())
    if (std::all_of(x.elements().begin(), x.elements().end(), [&](const GroupElement& a) { return y.contains(a + z); }))
      zmax.push_back(z);
  auto cofactor = FinSubset1::trusted(x.monoid(), std::move(zmax));
  if (!(set_product(x, cofactor) == y)) return {};
  return {std::move(cofactor)};
}

/// Quotients a of X (a in H, a != identity, a*b in X for some b in X) with
/// their multiplicities #{b in X : a*b in X}.
struct QuotientReport {
  std::map<GroupElement, std::size_t> entries;
  bool operator==(const QuotientReport&) const = default;
};

inline QuotientReport quotients(const FinSubset1& x) {
  const auto& h = *x.monoid();
  std::set<GroupElement> candidates;
  for (const auto& u : x.elements())
    for (const auto& v : x.elements())
      if (!(u == v)) candidates.insert(u - v);
  QuotientReport report;
  for (const auto& a : candidates) {
    if (!h.contains(a)) continue;
    std::size_t n = 0;
    for (const auto& b : x.elements())
      if (x.contains(a + b)) ++n;
    if (n == 0) continue;
    // |{1, a} X| = 2|X| - n
    auto expanded = set_product(FinSubset1::trusted(x.monoid(), {h.identity(), a}), x);
    if (expanded.size() != 2 * x.size() - n)
      throw InternalError("quotient multiplicity disagrees with |{1,a}X| for a = " + format_element(a));
    report.entries.emplace(a, n);
  }
  return report;
}

/// rev(X) = max X - X, for X in P_fin,0(N0).
inline FinSubset1 reversion(const FinSubset1& x) {
  if (!x.monoid()->as<family::FullN0>()) throw InvalidArgument("reversion is defined on P_fin,0(N0) only");
  const auto& top = x.elements().back();
  std::vector<GroupElement> out;
  for (const auto& u : x.elements()) out.push_back(top - u);
  return FinSubset1::trusted(x.monoid(), std::move(out));
}

/// a * X as a list of ambient elements (not necessarily inside H).
inline std::vector<GroupElement> translate(const std::vector<GroupElement>& x, const GroupElement& a) {
  std::vector<GroupElement> out;
  out.reserve(x.size());
  for (const auto& u : x) out.push_back(a + u);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace powmon
