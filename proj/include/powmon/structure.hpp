#pragma once

// Element structure: independence, irreducibility, pseudo-units and the
// decomposition H = H_v^c + H_v (disjoint).

#include "powmon/literal.hpp"
#include "powmon/monoid.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <exception>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace powmon {

/// No nontrivial relation n*a + m*b = 0.
inline bool is_independent(const GroupElement& a, const GroupElement& b) { return solve_relations(a, b).is_trivial(); }

// ---------------------------------------------------------------------------
// Irreducibility

enum class IrreducibleStatus { IrreducibleAnalytic, IrreducibleUpToWindow, Reducible };

inline std::string to_string(IrreducibleStatus s) {
  switch (s) {
    case IrreducibleStatus::IrreducibleAnalytic: return "IRREDUCIBLE_ANALYTIC";
    case IrreducibleStatus::IrreducibleUpToWindow: return "IRREDUCIBLE_UP_TO_WINDOW";
    case IrreducibleStatus::Reducible: return "REDUCIBLE";
  }
  return "?";
}

struct IrreducibleVerdict {
  IrreducibleStatus status;
  std::optional<std::pair<GroupElement, GroupElement>> factors;  // set iff Reducible
};

inline constexpr std::int64_t kIrreducibleEnlargement = 4;

namespace detail {

inline IrreducibleVerdict reducible(GroupElement v, GroupElement w) {
  if (v < w) std::swap(v, w);
  return {IrreducibleStatus::Reducible, std::make_pair(std::move(v), std::move(w))};
}

/// Candidate first factors for u: the part of the ambient group the family
/// lives on, inside `window`, in norm-then-lex order. The window is shrunk
/// when the box would exceed `budget` points.
inline std::vector<GroupElement> factor_candidates(const MonoidSpec& spec, Window window, std::size_t budget = 2'000'000) {
  if (spec.as<family::FullN0>() || spec.as<family::Numerical>() || spec.as<family::HalfPlaneLex>() ||
      spec.as<family::IrrationalCone>())
    return members_in_window(spec, window);
  const auto& sig = *spec.signature();
  auto box_size = [&](std::int64_t b) {
    double n = 1;
    for (std::size_t i = 0; i < sig.free_rank; ++i) n *= static_cast<double>(2 * b + 1);
    for (const auto& t : sig.torsion_orders) n *= static_cast<double>(t);
    return n;
  };
  while (window.bound > 1 && box_size(window.bound) > static_cast<double>(budget)) window.bound /= 2;
  return members_in_window(spec, window);
}

inline GroupElement some_nonunit(const MonoidSpec& spec) {
  for (std::int64_t b = 1; b <= 64; b *= 2)
    for (const auto& u : members_in_window(spec, Window{b}))
      if (!spec.contains(inverse(u))) return u;
  throw InternalError("no non-unit found in " + spec.label());
}

}  // namespace detail

/// Is u a non-unit that cannot be written as a sum of two non-units?
/// The half-plane and composites are decided analytically; other families
/// search factor pairs in a window enlarged by kIrreducibleEnlargement.
inline IrreducibleVerdict is_irreducible(const MonoidSpec& spec, const GroupElement& u, const Window& window) {
  if (!spec.contains(u)) throw MembershipViolation(format_element(u) + " is not in " + spec.label());
  if (spec.contains(inverse(u))) throw InvalidArgument(format_element(u) + " is a unit");

  if (const auto* h = spec.as<family::HalfPlaneLex>()) {
    // Only (1,0) is irreducible: (x,0) = (x-1,0) + (1,0), and y >= 1 gives (x-1,y) + (1,0).
    const auto& x = u.free_part()[h->x_index];
    const auto& y = u.free_part()[h->y_index];
    auto e = unit_vector(spec.signature(), h->x_index);
    if (y == 0 && x == 1) return {IrreducibleStatus::IrreducibleAnalytic, std::nullopt};
    return detail::reducible(u - e, e);
  }
  if (const auto* c = spec.as<family::Composite>()) {
    const auto& v = *c->valuation_part;
    // Grades add and the complement has positive grade, so factors of a
    // grade-0 element stay in the valuation part.
    if (v.contains(u)) return is_irreducible(v, u, window);
    // A complement element absorbs any non-unit h of the valuation part:
    // u - h is again in the complement because q(valuation part) <= G~.
    auto h = detail::some_nonunit(v);
    return detail::reducible(u - h, h);
  }

  for (const auto& v : detail::factor_candidates(spec, window.scaled(kIrreducibleEnlargement))) {
    if (v.is_identity() || v == u || spec.contains(inverse(v))) continue;
    auto w = u - v;
    if (spec.contains(w) && !spec.contains(inverse(w))) return detail::reducible(v, w);
  }
  return {IrreducibleStatus::IrreducibleUpToWindow, std::nullopt};
}

// ---------------------------------------------------------------------------
// Pseudo-units

enum class PseudoUnitStatus { PseudoUnitAnalytic, NotPseudoUnit, UnknownUpToWindow };

inline std::string to_string(PseudoUnitStatus s) {
  switch (s) {
    case PseudoUnitStatus::PseudoUnitAnalytic: return "PSEUDO_UNIT_ANALYTIC";
    case PseudoUnitStatus::NotPseudoUnit: return "NOT_PSEUDO_UNIT";
    case PseudoUnitStatus::UnknownUpToWindow: return "UNKNOWN_UP_TO_WINDOW";
  }
  return "?";
}

struct PseudoUnitVerdict {
  GroupElement element;
  PseudoUnitStatus status;
  std::optional<GroupElement> witness;  // b in H with a - b, b - a outside H
};

/// b certifies that a is not a pseudo-unit.
inline bool is_pseudo_unit_witness(const MonoidSpec& spec, const GroupElement& a, const GroupElement& b) {
  return spec.contains(b) && !spec.contains(a - b) && !spec.contains(b - a);
}

namespace detail {

inline std::optional<GroupElement> search_pseudo_witness(const MonoidSpec& spec, const GroupElement& a,
                                                         const Window& window) {
  for (const auto& b : members_in_window(spec, window))
    if (is_pseudo_unit_witness(spec, a, b)) return b;
  return std::nullopt;
}

}  // namespace detail

inline PseudoUnitVerdict pseudo_unit(const MonoidSpec& spec, const GroupElement& a, const Window& window) {
  if (!spec.contains(a)) throw MembershipViolation(format_element(a) + " is not in " + spec.label());
  auto analytic = PseudoUnitVerdict{a, PseudoUnitStatus::PseudoUnitAnalytic, std::nullopt};
  auto not_pseudo = [&](GroupElement b) {
    if (!is_pseudo_unit_witness(spec, a, b))
      throw InternalError("pseudo-unit witness " + format_element(b) + " fails for " + format_element(a));
    return PseudoUnitVerdict{a, PseudoUnitStatus::NotPseudoUnit, std::move(b)};
  };

  if (a.is_identity() || is_valuation_family(spec) || (spec.as<family::FreeGenerated>() && spec.is_group()))
    return analytic;

  if (spec.as<family::Numerical>()) {
    // b = a + F: b > F lies in H, b - a = F is a gap and a - b < 0.
    return not_pseudo(a + unit_vector(spec.signature(), 0, spec.frobenius_number()));
  }

  if (const auto* c = spec.as<family::Composite>()) {
    // Valuation-part elements compare with the valuation part by the total
    // order and with the complement because it is closed under q(valuation part).
    if (c->valuation_part->contains(a)) return analytic;
    const auto& gens = c->complement_part.positive_generators;
    auto lambda = spec.complement_coefficients(a);
    if (!lambda) throw InternalError("complement element without coefficients");
    // Trade one copy of a used generator m_j for another generator m_i.
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if ((*lambda)[j] < 1) continue;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i == j) continue;
        auto b = a - gens[j] + gens[i];
        if (is_pseudo_unit_witness(spec, a, b)) return not_pseudo(std::move(b));
      }
    }
  }

  if (auto b = detail::search_pseudo_witness(spec, a, window)) return not_pseudo(std::move(*b));
  return {a, PseudoUnitStatus::UnknownUpToWindow, std::nullopt};
}

// ---------------------------------------------------------------------------
// Decomposition

struct DecompositionReport {
  std::string monoid_label;
  Window window;
  std::vector<GroupElement> pseudo_units;  // H_v in the window
  std::vector<GroupElement> complement;    // H_v^c in the window
  std::vector<GroupElement> undetermined;  // no verdict within the window
  std::vector<PseudoUnitVerdict> verdicts;
};

/// Maps fn over items on up to hardware_concurrency threads; the result
/// order follows the input order.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, F fn) -> std::vector<decltype(fn(items.front()))> {
  using R = decltype(fn(items.front()));
  std::vector<std::optional<R>> slots(items.size());
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), items.size() / 64));
  auto run = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < items.size(); i += step) slots[i].emplace(fn(items[i]));
  };
  if (workers == 1) {
    run(0, 1);
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          run(w, workers);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }
  std::vector<R> out;
  out.reserve(items.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

inline DecompositionReport decompose(const MonoidSpec& spec, const Window& window) {
  DecompositionReport r;
  r.monoid_label = spec.label();
  r.window = window;
  auto members = members_in_window(spec, window);
  r.verdicts = parallel_map(members, [&](const GroupElement& u) { return pseudo_unit(spec, u, window); });
  for (const auto& v : r.verdicts) {
    switch (v.status) {
      case PseudoUnitStatus::PseudoUnitAnalytic: r.pseudo_units.push_back(v.element); break;
      case PseudoUnitStatus::NotPseudoUnit: r.complement.push_back(v.element); break;
      case PseudoUnitStatus::UnknownUpToWindow: r.undetermined.push_back(v.element); break;
    }
  }
  return r;
}

/// Sampled checks of the decomposition's closure properties:
///   H_v^c + H_v^c inside H_v^c, H_v^c + q(H_v) inside H_v^c, H_v totally ordered.
struct ClosureCheck {
  std::string property;
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::size_t inconclusive = 0;
  std::vector<std::string> failures{};
};

inline std::vector<ClosureCheck> validate_decomposition(const MonoidSpec& spec, const DecompositionReport& r,
                                                        std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](const std::vector<GroupElement>& v) -> const GroupElement& {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  };
  auto status_of = [&](const GroupElement& u) -> std::optional<PseudoUnitStatus> {
    if (!spec.contains(u)) return std::nullopt;
    return pseudo_unit(spec, u, r.window).status;
  };
  auto record = [](ClosureCheck& c, std::optional<bool> ok, const std::string& witness) {
    ++c.checked;
    if (!ok) {
      ++c.inconclusive;
    } else if (*ok) {
      ++c.passed;
    } else if (c.failures.size() < 8) {
      c.failures.push_back(witness);
    }
  };
  auto in_complement = [&](const GroupElement& u) -> std::optional<bool> {
    auto s = status_of(u);
    if (!s) return false;
    if (*s == PseudoUnitStatus::UnknownUpToWindow) return std::nullopt;
    return *s == PseudoUnitStatus::NotPseudoUnit;
  };
  auto in_hv = [&](const GroupElement& u) -> std::optional<bool> {
    auto s = status_of(u);
    if (!s) return false;
    if (*s == PseudoUnitStatus::UnknownUpToWindow) return std::nullopt;
    return *s == PseudoUnitStatus::PseudoUnitAnalytic;
  };

  ClosureCheck semigroup{"complement_is_subsemigroup"}, absorbs{"complement_absorbs_q_Hv"},
      valuation{"Hv_is_valuation"};
  if (!r.complement.empty()) {
    for (std::size_t i = 0; i < samples; ++i) {
      const auto& a = pick(r.complement);
      const auto& b = pick(r.complement);
      record(semigroup, in_complement(a + b), format_element(a) + " + " + format_element(b));
    }
    if (!r.pseudo_units.empty())
      for (std::size_t i = 0; i < samples; ++i) {
        const auto& a = pick(r.complement);
        auto q = pick(r.pseudo_units) - pick(r.pseudo_units);
        record(absorbs, in_complement(a + q), format_element(a) + " + " + format_element(q));
      }
  }
  for (std::size_t i = 0; i < samples && !r.pseudo_units.empty(); ++i) {
    const auto& a = pick(r.pseudo_units);
    const auto& b = pick(r.pseudo_units);
    auto d = a - b;
    std::optional<bool> ok;
    auto fwd = in_hv(d), back = in_hv(inverse(d));
    if ((fwd && *fwd) || (back && *back))
      ok = true;
    else if (fwd && back)
      ok = false;
    record(valuation, ok, format_element(a) + " - " + format_element(b));
  }
  return {semigroup, absorbs, valuation};
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::ordered_json element_json(const GroupElement& u) { return format_element(u); }

inline nlohmann::ordered_json elements_json(const std::vector<GroupElement>& v) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& u : v) arr.push_back(format_element(u));
  return arr;
}

inline nlohmann::ordered_json to_json(const IrreducibleVerdict& v) {
  nlohmann::ordered_json j{{"status", to_string(v.status)}};
  if (v.factors) j["factors"] = {format_element(v.factors->first), format_element(v.factors->second)};
  return j;
}

inline nlohmann::ordered_json to_json(const PseudoUnitVerdict& v) {
  nlohmann::ordered_json j{{"element", format_element(v.element)}, {"status", to_string(v.status)}};
  if (v.witness) j["witness"] = format_element(*v.witness);
  return j;
}

inline nlohmann::ordered_json to_json(const DecompositionReport& r) {
  nlohmann::ordered_json j;
  j["monoid"] = r.monoid_label;
  j["window"] = r.window.bound;
  j["pseudo_units"] = elements_json(r.pseudo_units);
  j["complement"] = elements_json(r.complement);
  j["undetermined"] = elements_json(r.undetermined);
  auto verdicts = nlohmann::ordered_json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
  j["verdicts"] = verdicts;
  return j;
}

inline nlohmann::ordered_json to_json(const ClosureCheck& c) {
  return {{"property", c.property},       {"checked", c.checked},    {"passed", c.passed},
          {"inconclusive", c.inconclusive}, {"failures", c.failures}};
}

}  // namespace powmon
