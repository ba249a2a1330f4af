#pragma once

// Translation isomorphisms f(X) = aX between P_fin,1(H) and P_fin,1(K), their
// pullbacks g, and the reversed / not-reversed split of H.

#include "powmon/finset.hpp"
#include "powmon/monoid.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace powmon {

/// The unique m in S with s - m in K for every s in S (minimum of the valuation order).
inline GroupElement valuation_min(const MonoidSpec& k, const std::vector<GroupElement>& s) {
  if (!is_valuation_family(k)) throw InvalidArgument("valuation_min needs a valuation monoid, got " + k.label());
  if (s.empty()) throw InvalidArgument("valuation_min of an empty set");
  GroupElement m = s.front();
  for (const auto& x : s)
    if (k.contains(m - x)) m = x;
  for (const auto& x : s)
    if (!k.contains(x - m))
      throw InvalidArgument("valuation_min: " + format_element(x) + " and " + format_element(m) +
                            " are not comparable in " + k.label());
  return m;
}

enum class IsoKind { Valuation, Composite, Identity };

inline std::string to_string(IsoKind k) {
  switch (k) {
    case IsoKind::Valuation: return "valuation";
    case IsoKind::Composite: return "composite";
    case IsoKind::Identity: return "identity";
  }
  return "?";
}

enum class Reversal { Reversed, NotReversed };

inline std::string to_string(Reversal r) { return r == Reversal::Reversed ? "REVERSED" : "NOT_REVERSED"; }

class TranslationIso {
 public:
  const MonoidPtr& domain() const noexcept { return h_; }
  const MonoidPtr& codomain() const noexcept { return k_; }
  IsoKind kind() const noexcept { return kind_; }
  /// Conditions verified when the iso was built, in order.
  const std::vector<std::string>& certificate() const noexcept { return certificate_; }
  /// H_v and K_v, the parts on which the translation element is computed.
  const MonoidPtr& domain_valuation() const noexcept { return hv_; }
  const MonoidPtr& codomain_valuation() const noexcept { return kv_; }

  /// The translation element a for X (so f(X) = aX).
  GroupElement translation_for(const FinSubset1& x) const {
    if (kind_ == IsoKind::Identity) return h_->identity();
    std::vector<GroupElement> part;
    for (const auto& u : x.elements())
      if (hv_->contains(u)) part.push_back(u);
    return inverse(valuation_min(*kv_, part));
  }

  FinSubset1 apply(const FinSubset1& x) const {
    if (x.monoid() != h_ && !(*x.monoid() == *h_)) throw SignatureMismatch("apply_iso: set is not over the domain");
    auto a = translation_for(x);
    auto image = translate(x.elements(), a);
    if (!std::binary_search(image.begin(), image.end(), k_->identity()))
      throw InternalError("apply_iso: identity missing from aX for X = " + x.to_string());
    for (const auto& u : image)
      if (!k_->contains(u))
        throw InternalError("apply_iso: " + format_element(u) + " of aX is outside " + k_->label() +
                            " for X = " + x.to_string());
    return FinSubset1::trusted(k_, std::move(image));
  }

  /// g(a): f({1, a}) = {1, g(a)}.
  GroupElement pullback(const GroupElement& a) const {
    if (a.is_identity()) return a;
    {
      std::lock_guard lock(cache_->mutex);
      if (auto it = cache_->table.find(a); it != cache_->table.end()) return it->second;
    }
    auto image = apply(FinSubset1::pair(h_, a));
    if (image.size() != 2) throw InternalError("pullback: f({1,a}) is not a 2-element set");
    GroupElement g = image.elements()[0].is_identity() ? image.elements()[1] : image.elements()[0];
    std::lock_guard lock(cache_->mutex);
    cache_->table.emplace(a, g);
    return g;
  }

  std::size_t cached_pullbacks() const {
    std::lock_guard lock(cache_->mutex);
    return cache_->table.size();
  }

  /// Compare f({1, a, a^3}) with {1, x, x^3} and {1, x^2, x^3}, x = g(a).
  Reversal classify_reversed(const GroupElement& a) const {
    if (!h_->contains(a)) throw MembershipViolation(format_element(a) + " is not in " + h_->label());
    if (a.is_identity()) throw InvalidArgument("classify_reversed: identity has no reversal status");
    if (element_order(a)) throw InvalidArgument("classify_reversed: " + format_element(a) + " has finite order");
    auto image = apply(FinSubset1::make(h_, {h_->identity(), a, scale(a, 3)}));
    auto x = pullback(a);
    auto plain = FinSubset1::trusted(k_, {k_->identity(), x, scale(x, 3)});
    auto reversed = FinSubset1::trusted(k_, {k_->identity(), scale(x, 2), scale(x, 3)});
    if (image == plain) return Reversal::NotReversed;
    if (image == reversed) return Reversal::Reversed;
    throw DichotomyViolation("f({1,a,a^3}) = " + image.to_string() + " matches neither pattern for a = " +
                             format_element(a));
  }

  /// h(u) = g(u) on H_N, h(u) = g(u^-1) on H_R^-1.
  GroupElement decomposition_map(const GroupElement& u) const {
    if (u.is_identity()) return u;
    if (h_->contains(u)) {
      if (element_order(u) || classify_reversed(u) == Reversal::NotReversed) return pullback(u);
    }
    auto inv = inverse(u);
    if (h_->contains(inv) && !element_order(inv) && classify_reversed(inv) == Reversal::Reversed)
      return pullback(inv);
    throw InvalidArgument("decomposition_map: " + format_element(u) + " lies in neither H_N nor H_R^-1");
  }

 private:
  friend TranslationIso build_translation_iso(MonoidPtr h, MonoidPtr k);

  struct Cache {
    mutable std::mutex mutex;
    std::map<GroupElement, GroupElement> table;
  };

  MonoidPtr h_, k_, hv_, kv_;
  IsoKind kind_ = IsoKind::Identity;
  std::vector<std::string> certificate_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Checks the structural conditions under which X -> aX is an isomorphism and
/// returns the iso; throws ApplicabilityFailed naming the first violated one.
inline TranslationIso build_translation_iso(MonoidPtr h, MonoidPtr k) {
  if (!h || !k) throw InvalidArgument("build_translation_iso needs two monoids");
  TranslationIso f;
  f.h_ = h;
  f.k_ = k;
  if (!(*h->signature() == *k->signature()))
    throw ApplicabilityFailed("signature", "domain and codomain live in different ambient groups");
  f.certificate_.push_back("signature");
  if (*h == *k) {
    // f = identity, an isomorphism whether or not H is reduced.
    f.kind_ = IsoKind::Identity;
    f.hv_ = h;
    f.kv_ = k;
    f.certificate_.push_back("equal-monoids");
    return f;
  }
  if (!is_reduced(*h)) throw ApplicabilityFailed("domain-reduced", h->label() + " has nontrivial units");
  if (!is_reduced(*k)) throw ApplicabilityFailed("codomain-reduced", k->label() + " has nontrivial units");
  f.certificate_.push_back("reduced");

  if (is_valuation_family(*h) && is_valuation_family(*k)) {
    if (!(quotient_group(*h) == quotient_group(*k)))
      throw ApplicabilityFailed("quotient-groups", "q(" + h->label() + ") != q(" + k->label() + ")");
    f.kind_ = IsoKind::Valuation;
    f.hv_ = h;
    f.kv_ = k;
    f.certificate_.push_back("valuation-pair");
    f.certificate_.push_back("quotient-groups");
    return f;
  }
  const auto* ch = h->as<family::Composite>();
  const auto* ck = k->as<family::Composite>();
  if (ch && ck) {
    if (!(ch->complement_part == ck->complement_part))
      throw ApplicabilityFailed("shared-complement", "the composites have different complement parts");
    f.certificate_.push_back("shared-complement");
    if (!(quotient_group(*ch->valuation_part) == quotient_group(*ck->valuation_part)))
      throw ApplicabilityFailed("quotient-groups", "valuation parts generate different subgroups");
    f.certificate_.push_back("quotient-groups");
    f.kind_ = IsoKind::Composite;
    f.hv_ = ch->valuation_part;
    f.kv_ = ck->valuation_part;
    return f;
  }
  throw ApplicabilityFailed("valuation-or-composite",
                            "need two valuation monoids, two composites sharing a complement, or H = K (got " +
                                h->family_name() + " and " + k->family_name() + ")");
}

inline FinSubset1 apply_iso(const TranslationIso& f, const FinSubset1& x) { return f.apply(x); }
inline GroupElement pullback(const TranslationIso& f, const GroupElement& a) { return f.pullback(a); }
inline Reversal classify_reversed(const TranslationIso& f, const GroupElement& a) { return f.classify_reversed(a); }
inline GroupElement decomposition_map(const TranslationIso& f, const GroupElement& u) {
  return f.decomposition_map(u);
}

/// Elements a in q(H) with aX in P_fin,1(K); the candidates are the -x, x in X.
inline std::vector<GroupElement> admissible_translations(const MonoidSpec& k, const FinSubset1& x) {
  std::vector<GroupElement> out;
  for (const auto& u : x.elements()) {
    auto a = inverse(u);
    bool inside = true;
    for (const auto& v : x.elements())
      if (!k.contains(a + v)) {
        inside = false;
        break;
      }
    if (inside) out.push_back(a);
  }
  return out;
}

inline nlohmann::ordered_json to_json(const TranslationIso& f) {
  return {{"domain", f.domain()->label()},
          {"codomain", f.codomain()->label()},
          {"kind", to_string(f.kind())},
          {"certificate", f.certificate()}};
}

}  // namespace powmon
