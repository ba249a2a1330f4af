#pragma once

// Membership-decidable descriptions of submonoids of the ambient group.

#include "powmon/ambient.hpp"
#include "powmon/errors.hpp"
#include "powmon/integer.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <queue>
#include <string>
#include <variant>
#include <vector>

namespace powmon {

/// alpha = (p + q*sqrt(n)) / r with r > 0.
///
/// Irrational surds (q != 0, n not a perfect square) are the normal case.
/// `rational()` builds q = 0 values; cones over them are only accepted when a
/// caller explicitly asks for a degenerate cone.
struct QuadraticSurd {
  Integer p = 0, q = 1, r = 1, n = 2;

  static QuadraticSurd make(Integer p, Integer q, Integer r, Integer n) {
    if (r <= 0) throw InvalidArgument("quadratic surd needs r > 0");
    if (n <= 0) throw InvalidArgument("quadratic surd needs n > 0");
    if (q == 0) throw InvalidArgument("quadratic surd needs q != 0");
    if (is_perfect_square(n)) throw InvalidArgument("quadratic surd needs non-square n, got " + n.str());
    return QuadraticSurd{std::move(p), std::move(q), std::move(r), std::move(n)};
  }

  static QuadraticSurd sqrt(const Integer& n) { return make(0, 1, 1, n); }

  static QuadraticSurd rational(Integer numerator, Integer denominator) {
    if (denominator <= 0) throw InvalidArgument("rational slope needs a positive denominator");
    return QuadraticSurd{std::move(numerator), 0, std::move(denominator), 1};
  }

  bool is_irrational() const { return q != 0 && !is_perfect_square(n); }

  /// Exact sign of y - alpha*x.
  int sign_of_offset(const Integer& x, const Integer& y) const {
    // r(y - alpha x) = A - B sqrt(n)
    Integer a = r * y - p * x;
    Integer b = q * x;
    if (b == 0) return powmon::sign(a);
    if (a >= 0 && b < 0) return 1;
    if (a <= 0 && b > 0) return -1;
    Integer lhs = a * a, rhs = n * b * b;
    // Same signs: compare |A| with |B| sqrt(n).
    int cmp = lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
    return a > 0 ? cmp : -cmp;
  }

  bool operator==(const QuadraticSurd&) const = default;
};

class MonoidSpec;
bool is_valuation_family(const MonoidSpec& spec);
using MonoidPtr = std::shared_ptr<const MonoidSpec>;

/// The complement part G~ * M of a composite: base subgroup G~ times the
/// subsemigroup M generated by `positive_generators`.
struct ComplementSpec {
  std::vector<GroupElement> base_subgroup;
  std::vector<GroupElement> positive_generators;
  bool operator==(const ComplementSpec&) const = default;
};

namespace family {
struct FullN0 {
  bool operator==(const FullN0&) const = default;
};
struct Numerical {
  std::vector<Integer> generators;
  bool operator==(const Numerical&) const = default;
};
struct HalfPlaneLex {
  std::size_t x_index = 0, y_index = 1;
  bool operator==(const HalfPlaneLex&) const = default;
};
struct IrrationalCone {
  std::size_t x_index = 0, y_index = 1;
  QuadraticSurd alpha;
  bool operator==(const IrrationalCone&) const = default;
};
struct FreeGenerated {
  std::vector<GroupElement> generators;
  bool operator==(const FreeGenerated&) const = default;
};
struct Composite {
  MonoidPtr valuation_part;
  ComplementSpec complement_part;
};
}  // namespace family

using Family = std::variant<family::FullN0, family::Numerical, family::HalfPlaneLex,
                            family::IrrationalCone, family::FreeGenerated, family::Composite>;

std::string family_name(const Family& f);

/// Three-valued answer for questions quantified over an infinite monoid.
enum class ValuationStatus { TrueAnalytic, FalseWitness, UnknownUpToWindow };

struct ValuationVerdict {
  ValuationStatus status;
  std::optional<GroupElement> witness;
};

inline std::string to_string(ValuationStatus s) {
  switch (s) {
    case ValuationStatus::TrueAnalytic: return "TRUE_ANALYTIC";
    case ValuationStatus::FalseWitness: return "FALSE_WITNESS";
    case ValuationStatus::UnknownUpToWindow: return "UNKNOWN_UP_TO_WINDOW";
  }
  return "?";
}

namespace detail {

inline Integer dot(const std::vector<Integer>& w, const GroupElement& u) {
  Integer s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * u.free_part()[i];
  return s;
}

/// Smallest-norm integer functional on the free part (coefficients within
/// [-bound, bound]) that is >= 1 on every `positive` and 0 on every `zero`.
inline std::optional<std::vector<Integer>> find_grading(std::size_t rank,
                                                        const std::vector<GroupElement>& positive,
                                                        const std::vector<GroupElement>& zero,
                                                        std::int64_t bound = 4) {
  for (std::int64_t radius = 0; radius <= bound; ++radius) {
    std::optional<std::vector<Integer>> found;
    std::vector<std::int64_t> lo(rank, -radius), hi(rank, radius);
    powmon::detail::for_each_tuple(lo, hi, [&](const std::vector<std::int64_t>& t) {
      if (found) return;
      std::int64_t norm = 0;
      for (auto c : t) norm = std::max<std::int64_t>(norm, c < 0 ? -c : c);
      if (norm != radius) return;
      std::vector<Integer> w(t.begin(), t.end());
      for (const auto& g : positive)
        if (dot(w, g) < 1) return;
      for (const auto& g : zero)
        if (dot(w, g) != 0) return;
      found = std::move(w);
    });
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace detail

class MonoidSpec {
 public:
  // ---- constructors (validate and precompute decision data) ----

  static MonoidPtr full_n0(std::string label = "N0") {
    auto m = std::shared_ptr<MonoidSpec>(new MonoidSpec(make_signature(1), std::move(label), family::FullN0{}));
    return m;
  }

  static MonoidPtr numerical(std::vector<Integer> generators, std::string label = "") {
    if (generators.empty()) throw InvalidArgument("NUMERICAL needs at least one generator");
    for (const auto& g : generators)
      if (g <= 0) throw InvalidArgument("NUMERICAL generators must be positive, got " + g.str());
    if (label.empty()) {
      label = "<";
      for (std::size_t i = 0; i < generators.size(); ++i) label += (i ? "," : "") + generators[i].str();
      label += ">";
    }
    auto m = std::shared_ptr<MonoidSpec>(
        new MonoidSpec(make_signature(1), std::move(label), family::Numerical{std::move(generators)}));
    m->prepare_numerical();
    return m;
  }

  static MonoidPtr half_plane_lex(SignaturePtr sig, std::size_t x_index, std::size_t y_index,
                                  std::string label = "half-plane") {
    check_embedding(*sig, x_index, y_index);
    return std::shared_ptr<MonoidSpec>(
        new MonoidSpec(std::move(sig), std::move(label), family::HalfPlaneLex{x_index, y_index}));
  }

  /// {(x, y) : y <= alpha x}. A rational alpha gives a cone containing a line
  /// (not reduced) and is only accepted with `allow_rational_slope`.
  static MonoidPtr irrational_cone(SignaturePtr sig, std::size_t x_index, std::size_t y_index,
                                   QuadraticSurd alpha, std::string label = "cone",
                                   bool allow_rational_slope = false) {
    check_embedding(*sig, x_index, y_index);
    if (alpha.r <= 0) throw InvalidArgument("cone slope needs r > 0");
    if (!alpha.is_irrational() && !allow_rational_slope)
      throw InvalidArgument("IRRATIONAL_CONE needs an irrational slope");
    return std::shared_ptr<MonoidSpec>(new MonoidSpec(
        std::move(sig), std::move(label), family::IrrationalCone{x_index, y_index, std::move(alpha)}));
  }

  static MonoidPtr free_generated(SignaturePtr sig, std::vector<GroupElement> generators,
                                  std::string label = "free-generated") {
    for (const auto& g : generators)
      if (!same_signature(g.signature(), sig)) throw SignatureMismatch("FREE_GENERATED generator signature");
    auto m = std::shared_ptr<MonoidSpec>(
        new MonoidSpec(sig, std::move(label), family::FreeGenerated{std::move(generators)}));
    m->prepare_free_generated();
    return m;
  }

  static MonoidPtr composite(MonoidPtr valuation_part, ComplementSpec complement,
                             std::string label = "composite") {
    if (!valuation_part) throw InvalidArgument("COMPOSITE needs a valuation part");
    auto sig = valuation_part->signature();
    auto m = std::shared_ptr<MonoidSpec>(new MonoidSpec(
        sig, std::move(label), family::Composite{std::move(valuation_part), std::move(complement)}));
    m->prepare_composite();
    return m;
  }

  // ---- accessors ----

  const SignaturePtr& signature() const noexcept { return sig_; }
  const std::string& label() const noexcept { return label_; }
  const Family& family() const noexcept { return family_; }
  std::string family_name() const { return powmon::family_name(family_); }

  template <class T>
  const T* as() const noexcept {
    return std::get_if<T>(&family_);
  }

  GroupElement identity() const { return GroupElement::identity(sig_); }

  /// Frobenius number of a numerical monoid, in ambient units (-1 for N0).
  Integer frobenius_number() const {
    if (!as<family::Numerical>()) throw InvalidArgument("frobenius_number needs a NUMERICAL monoid");
    return frobenius_ < 0 ? Integer(-1) : Integer(frobenius_ * gcd_);
  }
  const Integer& numerical_gcd() const { return gcd_; }

  /// Grading positive on the complement (COMPOSITE) or on all generators
  /// (graded FREE_GENERATED).
  const std::vector<Integer>& grading() const noexcept { return grading_; }
  bool is_group() const noexcept { return is_group_; }

  // ---- membership ----

  bool contains(const GroupElement& u) const {
    if (!same_signature(u.signature(), sig_)) throw SignatureMismatch("contains: signature mismatch");
    return std::visit([&](const auto& f) { return contains_impl(f, u); }, family_);
  }

  /// Coefficients lambda with u - sum lambda_j m_j in G~ (COMPOSITE only);
  /// nullopt if u is not in the complement part.
  std::optional<std::vector<Integer>> complement_coefficients(const GroupElement& u) const {
    const auto* c = as<family::Composite>();
    if (!c) throw InvalidArgument("complement_coefficients needs a COMPOSITE monoid");
    Integer k = detail::dot(grading_, u);
    if (k < 1) return std::nullopt;
    const auto& gens = c->complement_part.positive_generators;
    std::vector<Integer> weights;
    for (const auto& g : gens) weights.push_back(detail::dot(grading_, g));
    std::vector<Integer> lambda(gens.size(), 0);
    std::optional<std::vector<Integer>> found;
    // Enumerate lambda >= 0 with sum lambda_j w_j = k.
    auto rec = [&](auto&& self, std::size_t j, const Integer& remaining, const GroupElement& rest) -> void {
      if (found) return;
      if (j == gens.size()) {
        if (remaining == 0 && base_.contains(rest)) found = lambda;
        return;
      }
      GroupElement cur = rest;
      for (Integer l = 0; l * weights[j] <= remaining; ++l) {
        lambda[j] = l;
        self(self, j + 1, remaining - l * weights[j], cur);
        if (found) return;
        cur = cur - gens[j];
      }
      lambda[j] = 0;
    };
    rec(rec, 0, k, u);
    return found;
  }

  const Subgroup& base_subgroup() const noexcept { return base_; }

  // ---- equality: structural, except numerical monoids compare as sets;
  //      labels are not part of the monoid ----

  friend bool operator==(const MonoidSpec& a, const MonoidSpec& b) {
    if (!same_signature(a.sig_, b.sig_)) return false;
    if (a.family_.index() != b.family_.index()) return false;
    if (a.as<family::Numerical>()) return a.gcd_ == b.gcd_ && a.apery_ == b.apery_;
    if (const auto* ca = a.as<family::Composite>()) {
      const auto* cb = b.as<family::Composite>();
      return *ca->valuation_part == *cb->valuation_part && ca->complement_part == cb->complement_part;
    }
    return std::visit(
        [&](const auto& fa) {
          using T = std::decay_t<decltype(fa)>;
          if constexpr (std::is_same_v<T, family::Composite>) {
            return false;
          } else {
            return fa == std::get<T>(b.family_);
          }
        },
        a.family_);
  }

 private:
  MonoidSpec(SignaturePtr sig, std::string label, Family f)
      : sig_(std::move(sig)), label_(std::move(label)), family_(std::move(f)) {}

  static void check_embedding(const GroupSignature& sig, std::size_t x, std::size_t y) {
    if (x == y || x >= sig.free_rank || y >= sig.free_rank)
      throw InvalidArgument("planar embedding needs two distinct free coordinates");
  }

  static bool off_plane_zero(const GroupElement& u, std::size_t x, std::size_t y) {
    const auto& f = u.free_part();
    for (std::size_t i = 0; i < f.size(); ++i)
      if (i != x && i != y && f[i] != 0) return false;
    for (const auto& t : u.torsion_part())
      if (t != 0) return false;
    return true;
  }

  bool contains_impl(const family::FullN0&, const GroupElement& u) const { return u.free_part()[0] >= 0; }

  bool contains_impl(const family::Numerical&, const GroupElement& u) const {
    const Integer& x = u.free_part()[0];
    if (x < 0 || x % gcd_ != 0) return false;
    Integer y = x / gcd_;
    const auto residue = static_cast<std::size_t>(Integer(y % apery_.size()));
    return y >= apery_[residue];
  }

  bool contains_impl(const family::HalfPlaneLex& f, const GroupElement& u) const {
    if (!off_plane_zero(u, f.x_index, f.y_index)) return false;
    const Integer& x = u.free_part()[f.x_index];
    const Integer& y = u.free_part()[f.y_index];
    return y > 0 || (y == 0 && x >= 0);
  }

  bool contains_impl(const family::IrrationalCone& f, const GroupElement& u) const {
    if (!off_plane_zero(u, f.x_index, f.y_index)) return false;
    return f.alpha.sign_of_offset(u.free_part()[f.x_index], u.free_part()[f.y_index]) <= 0;
  }

  bool contains_impl(const family::FreeGenerated& f, const GroupElement& u) const {
    if (is_group_) return base_.contains(u);
    std::map<GroupElement, bool> memo;
    return reachable(f.generators, u, memo);
  }

  bool contains_impl(const family::Composite& f, const GroupElement& u) const {
    return f.valuation_part->contains(u) || complement_coefficients(u).has_value();
  }

  bool reachable(const std::vector<GroupElement>& gens, const GroupElement& u,
                 std::map<GroupElement, bool>& memo) const {
    Integer grade = detail::dot(grading_, u);
    if (grade < 0) return false;
    if (u.is_identity()) return true;
    if (grade == 0) return false;
    if (auto it = memo.find(u); it != memo.end()) return it->second;
    bool ok = false;
    for (const auto& g : gens) {
      if (reachable(gens, u - g, memo)) {
        ok = true;
        break;
      }
    }
    memo.emplace(u, ok);
    return ok;
  }

  void prepare_numerical() {
    const auto& gens = std::get<family::Numerical>(family_).generators;
    gcd_ = 0;
    for (const auto& g : gens) gcd_ = gcd(gcd_, g);
    std::vector<Integer> norm;
    for (const auto& g : gens) norm.push_back(g / gcd_);
    Integer m = *std::min_element(norm.begin(), norm.end());
    if (m > 1'000'000) throw InvalidArgument("NUMERICAL smallest generator too large for an Apery table");
    const auto modulus = static_cast<std::size_t>(m);
    // Dijkstra over residues mod m: apery[r] = least element congruent to r.
    std::vector<Integer> dist(modulus, -1);
    using Item = std::pair<Integer, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[0] = 0;
    pq.emplace(0, 0);
    while (!pq.empty()) {
      auto [d, r] = pq.top();
      pq.pop();
      if (d != dist[r]) continue;
      for (const auto& g : norm) {
        Integer nd = d + g;
        const auto nr = static_cast<std::size_t>(Integer(nd % m));
        if (dist[nr] < 0 || nd < dist[nr]) {
          dist[nr] = nd;
          pq.emplace(nd, nr);
        }
      }
    }
    apery_ = std::move(dist);
    frobenius_ = *std::max_element(apery_.begin(), apery_.end()) - m;
  }

  void prepare_free_generated() {
    auto& gens = std::get<family::FreeGenerated>(family_).generators;
    gens.erase(std::remove_if(gens.begin(), gens.end(), [](const GroupElement& g) { return g.is_identity(); }),
               gens.end());
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (auto w = detail::find_grading(sig_->free_rank, gens, {})) {
      grading_ = std::move(*w);
      return;
    }
    // No positive grading: accept only if a strictly positive relation
    // sum lambda_i g_i = 0 exists, in which case the monoid is the group <gens>.
    const std::size_t n = gens.size(), d = sig_->free_rank, k = sig_->torsion_rank();
    lattice::Matrix m(d + k, lattice::Row(n + k, 0));
    for (std::size_t j = 0; j < n; ++j) {
      auto c = gens[j].coordinates();
      for (std::size_t i = 0; i < d + k; ++i) m[i][j] = c[i];
    }
    for (std::size_t i = 0; i < k; ++i) m[d + i][n + i] = sig_->torsion_orders[i];
    auto kernel = lattice::integer_kernel(m, n + k);
    bool positive = false;
    if (!kernel.empty()) {
      std::vector<std::int64_t> lo(kernel.size(), -3), hi(kernel.size(), 3);
      powmon::detail::for_each_tuple(lo, hi, [&](const std::vector<std::int64_t>& c) {
        if (positive) return;
        for (std::size_t j = 0; j < n; ++j) {
          Integer s = 0;
          for (std::size_t r = 0; r < kernel.size(); ++r) s += c[r] * kernel[r][j];
          if (s < 1) return;
        }
        positive = true;
      });
    }
    if (!positive)
      throw InvalidArgument("FREE_GENERATED needs a positive grading (or generators spanning a group)");
    is_group_ = true;
    base_ = Subgroup(sig_, gens);
  }

  void prepare_composite() {
    auto& c = std::get<family::Composite>(family_);
    const auto& v = *c.valuation_part;
    if (!is_valuation_family(v)) throw InvalidArgument("COMPOSITE valuation part must be a valuation family");
    const auto& comp = c.complement_part;
    if (comp.positive_generators.empty()) throw InvalidArgument("COMPOSITE complement needs positive generators");
    for (const auto* list : {&comp.base_subgroup, &comp.positive_generators})
      for (const auto& g : *list)
        if (!same_signature(g.signature(), sig_)) throw SignatureMismatch("COMPOSITE complement signature");
    base_ = Subgroup(sig_, comp.base_subgroup);
    auto w = detail::find_grading(sig_->free_rank, comp.positive_generators, comp.base_subgroup);
    if (!w) throw InvalidArgument("COMPOSITE complement needs a grading vanishing on G~ and positive on M");
    grading_ = std::move(*w);
    // Closure of the complement under q(valuation part) and disjointness
    // both follow from q(valuation part) <= G~ (the grading vanishes there).
    for (const auto& g : valuation_generators(v))
      if (!base_.contains(g))
        throw InvalidArgument("COMPOSITE needs q(valuation part) inside the base subgroup; " +
                              format_element(g) + " is outside");
  }

  static std::vector<GroupElement> valuation_generators(const MonoidSpec& v);

  SignaturePtr sig_;
  std::string label_;
  Family family_;

  // Numerical
  Integer gcd_ = 1;
  std::vector<Integer> apery_;
  Integer frobenius_ = -1;
  // FreeGenerated / Composite
  std::vector<Integer> grading_;
  bool is_group_ = false;
  Subgroup base_;
};

inline std::string family_name(const Family& f) {
  static const char* names[] = {"FULL_N0", "NUMERICAL", "HALF_PLANE_LEX", "IRRATIONAL_CONE", "FREE_GENERATED",
                                "COMPOSITE"};
  return names[f.index()];
}

inline GroupElement unit_vector(const SignaturePtr& sig, std::size_t i, const Integer& scale_by = 1) {
  std::vector<Integer> f(sig->free_rank, 0), t(sig->torsion_rank(), 0);
  f[i] = scale_by;
  return GroupElement::make(sig, std::move(f), std::move(t));
}

/// Generators of q(spec) inside the ambient group.
inline Subgroup quotient_group(const MonoidSpec& spec) {
  const auto& sig = spec.signature();
  std::vector<GroupElement> gens;
  if (spec.as<family::FullN0>()) {
    gens.push_back(unit_vector(sig, 0));
  } else if (spec.as<family::Numerical>()) {
    gens.push_back(unit_vector(sig, 0, spec.numerical_gcd()));
  } else if (const auto* h = spec.as<family::HalfPlaneLex>()) {
    gens = {unit_vector(sig, h->x_index), unit_vector(sig, h->y_index)};
  } else if (const auto* c = spec.as<family::IrrationalCone>()) {
    gens = {unit_vector(sig, c->x_index), unit_vector(sig, c->y_index)};
  } else if (const auto* f = spec.as<family::FreeGenerated>()) {
    gens = f->generators;
  } else if (const auto* c = spec.as<family::Composite>()) {
    gens = quotient_group(*c->valuation_part).generators();
    for (const auto& g : c->complement_part.base_subgroup) gens.push_back(g);
    for (const auto& g : c->complement_part.positive_generators) gens.push_back(g);
  }
  return Subgroup(sig, std::move(gens));
}

inline std::vector<GroupElement> MonoidSpec::valuation_generators(const MonoidSpec& v) {
  return quotient_group(v).generators();
}

/// Valuation families whose total order is known by construction.
inline bool is_valuation_family(const MonoidSpec& spec) {
  if (spec.as<family::FullN0>() || spec.as<family::HalfPlaneLex>() || spec.as<family::IrrationalCone>())
    return true;
  if (spec.as<family::Numerical>()) return spec.frobenius_number() < 0;
  return false;
}

/// Reducedness, decided from the family's structure.
inline bool is_reduced(const MonoidSpec& spec) {
  if (const auto* c = spec.as<family::IrrationalCone>()) return c->alpha.is_irrational();
  if (const auto* f = spec.as<family::FreeGenerated>()) return !spec.is_group() || f->generators.empty();
  if (const auto* c = spec.as<family::Composite>()) return is_reduced(*c->valuation_part);
  return true;
}

/// Elements of spec inside the window, in norm-then-lex order.
inline std::vector<GroupElement> members_in_window(const MonoidSpec& spec, const Window& window) {
  const auto& sig = spec.signature();
  std::vector<GroupElement> out;
  auto planar = [&](std::size_t xi, std::size_t yi) {
    for (std::int64_t x = -window.bound; x <= window.bound; ++x)
      for (std::int64_t y = -window.bound; y <= window.bound; ++y) {
        std::vector<Integer> f(sig->free_rank, 0), t(sig->torsion_rank(), 0);
        f[xi] = x;
        f[yi] = y;
        auto u = GroupElement::make(sig, std::move(f), std::move(t));
        if (spec.contains(u)) out.push_back(std::move(u));
      }
  };
  if (spec.as<family::FullN0>() || spec.as<family::Numerical>()) {
    for (std::int64_t x = 0; x <= window.bound; ++x) {
      auto u = GroupElement::make(sig, {Integer(x)});
      if (spec.contains(u)) out.push_back(std::move(u));
    }
  } else if (const auto* h = spec.as<family::HalfPlaneLex>()) {
    planar(h->x_index, h->y_index);
  } else if (const auto* c = spec.as<family::IrrationalCone>()) {
    planar(c->x_index, c->y_index);
  } else {
    for (auto& u : window_elements(sig, window))
      if (spec.contains(u)) out.push_back(std::move(u));
  }
  std::sort(out.begin(), out.end(), norm_then_lex);
  return out;
}

/// Units of spec inside the window.
inline std::vector<GroupElement> units(const MonoidSpec& spec, const Window& window) {
  std::vector<GroupElement> out;
  for (const auto& u : members_in_window(spec, window))
    if (spec.contains(inverse(u))) out.push_back(u);
  return out;
}

/// Is every x in q(H) in H or its inverse in H? Analytic for the families that
/// are totally ordered by construction; a window search otherwise.
inline ValuationVerdict is_valuation(const MonoidSpec& spec, const Window& window) {
  if (is_valuation_family(spec)) return {ValuationStatus::TrueAnalytic, std::nullopt};
  if (spec.as<family::Numerical>()) {
    // The generator g of q(H) = gZ is a gap of a proper numerical monoid.
    return {ValuationStatus::FalseWitness, unit_vector(spec.signature(), 0, spec.numerical_gcd())};
  }
  if (spec.as<family::FreeGenerated>() && spec.is_group()) return {ValuationStatus::TrueAnalytic, std::nullopt};
  Subgroup q = quotient_group(spec);
  for (const auto& x : window_elements(spec.signature(), window)) {
    if (!q.contains(x)) continue;
    auto inv = inverse(x);
    if (!spec.contains(x) && !spec.contains(inv)) return {ValuationStatus::FalseWitness, std::max(x, inv)};
  }
  return {ValuationStatus::UnknownUpToWindow, std::nullopt};
}

/// Order of a valuation family: u <= v iff v - u in spec.
inline bool valuation_less_equal(const MonoidSpec& spec, const GroupElement& u, const GroupElement& v) {
  return spec.contains(v - u);
}

}  // namespace powmon
