#pragma once

// The ambient abelian group Z^d + Z/n_1 + ... + Z/n_k, written additively.
// Every monoid, quotient group and translation element lives in one of these.

#include "powmon/errors.hpp"
#include "powmon/integer.hpp"
#include "powmon/lattice.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace powmon {

struct GroupSignature {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion_orders;

  std::size_t torsion_rank() const noexcept { return torsion_orders.size(); }
  std::size_t width() const noexcept { return free_rank + torsion_orders.size(); }
  bool operator==(const GroupSignature&) const = default;
};

using SignaturePtr = std::shared_ptr<const GroupSignature>;

inline SignaturePtr make_signature(std::size_t free_rank, std::vector<Integer> torsion_orders = {}) {
  for (const auto& n : torsion_orders)
    if (n < 2) throw InvalidArgument("torsion orders must be >= 2, got " + n.str());
  return std::make_shared<const GroupSignature>(GroupSignature{free_rank, std::move(torsion_orders)});
}

inline bool same_signature(const SignaturePtr& a, const SignaturePtr& b) {
  return a == b || (a && b && *a == *b);
}

/// Element of the ambient group. Torsion coordinates are kept in [0, n_i),
/// so structural equality is group equality.
class GroupElement {
 public:
  GroupElement() = default;

  static GroupElement identity(SignaturePtr sig) {
    GroupElement e;
    e.free_.assign(sig->free_rank, 0);
    e.torsion_.assign(sig->torsion_rank(), 0);
    e.sig_ = std::move(sig);
    return e;
  }

  static GroupElement make(SignaturePtr sig, std::vector<Integer> free_part,
                           std::vector<Integer> torsion_part = {}) {
    if (!sig) throw InvalidArgument("group element without signature");
    if (free_part.size() != sig->free_rank || torsion_part.size() != sig->torsion_rank())
      throw InvalidArgument("group element arity does not match signature");
    for (std::size_t i = 0; i < torsion_part.size(); ++i)
      torsion_part[i] = mod_floor(torsion_part[i], sig->torsion_orders[i]);
    GroupElement e;
    e.sig_ = std::move(sig);
    e.free_ = std::move(free_part);
    e.torsion_ = std::move(torsion_part);
    return e;
  }

  /// Free coordinates followed by torsion residues.
  static GroupElement from_coordinates(SignaturePtr sig, const std::vector<Integer>& coords) {
    if (!sig || coords.size() != sig->width())
      throw InvalidArgument("coordinate vector does not match signature width");
    std::vector<Integer> f(coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(sig->free_rank));
    std::vector<Integer> t(coords.begin() + static_cast<std::ptrdiff_t>(sig->free_rank), coords.end());
    return make(std::move(sig), std::move(f), std::move(t));
  }

  const SignaturePtr& signature() const noexcept { return sig_; }
  const std::vector<Integer>& free_part() const noexcept { return free_; }
  const std::vector<Integer>& torsion_part() const noexcept { return torsion_; }

  std::vector<Integer> coordinates() const {
    std::vector<Integer> c = free_;
    c.insert(c.end(), torsion_.begin(), torsion_.end());
    return c;
  }

  bool is_identity() const {
    auto zero = [](const Integer& x) { return x == 0; };
    return std::all_of(free_.begin(), free_.end(), zero) &&
           std::all_of(torsion_.begin(), torsion_.end(), zero);
  }

  /// Max-norm of the free part; the window coordinate.
  Integer norm() const {
    Integer n = 0;
    for (const auto& x : free_) n = std::max(n, powmon::abs(x));
    return n;
  }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.free_ == b.free_ && a.torsion_ == b.torsion_ && same_signature(a.sig_, b.sig_);
  }

  /// Lexicographic on the free part, then on the torsion part.
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    if (a.free_ != b.free_) return a.free_ < b.free_;
    return a.torsion_ < b.torsion_;
  }
  friend bool operator>(const GroupElement& a, const GroupElement& b) { return b < a; }

 private:
  SignaturePtr sig_;
  std::vector<Integer> free_;
  std::vector<Integer> torsion_;
};

inline void require_same_signature(const GroupElement& u, const GroupElement& v) {
  if (!same_signature(u.signature(), v.signature())) throw SignatureMismatch();
}

inline GroupElement compose(const GroupElement& u, const GroupElement& v) {
  require_same_signature(u, v);
  const auto& sig = *u.signature();
  std::vector<Integer> f(sig.free_rank), t(sig.torsion_rank());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = u.free_part()[i] + v.free_part()[i];
  for (std::size_t i = 0; i < t.size(); ++i) {
    t[i] = u.torsion_part()[i] + v.torsion_part()[i];
    if (t[i] >= sig.torsion_orders[i]) t[i] -= sig.torsion_orders[i];
  }
  return GroupElement::make(u.signature(), std::move(f), std::move(t));
}

inline GroupElement inverse(const GroupElement& u) {
  std::vector<Integer> f = u.free_part();
  for (auto& x : f) x = -x;
  std::vector<Integer> t = u.torsion_part();
  for (auto& x : t) x = -x;
  return GroupElement::make(u.signature(), std::move(f), std::move(t));
}

/// n-fold composition; negative n composes the inverse.
inline GroupElement scale(const GroupElement& u, const Integer& n) {
  std::vector<Integer> f = u.free_part();
  for (auto& x : f) x *= n;
  std::vector<Integer> t = u.torsion_part();
  for (auto& x : t) x *= n;
  return GroupElement::make(u.signature(), std::move(f), std::move(t));
}

inline GroupElement operator+(const GroupElement& u, const GroupElement& v) { return compose(u, v); }
inline GroupElement operator-(const GroupElement& u) { return inverse(u); }
inline GroupElement operator-(const GroupElement& u, const GroupElement& v) { return compose(u, inverse(v)); }

/// Order of an element; `std::nullopt` means infinite.
using ElementOrder = std::optional<Integer>;

inline ElementOrder element_order(const GroupElement& u) {
  for (const auto& x : u.free_part())
    if (x != 0) return std::nullopt;
  Integer order = 1;
  const auto& sig = *u.signature();
  for (std::size_t i = 0; i < sig.torsion_rank(); ++i) {
    const Integer& n = sig.torsion_orders[i];
    order = lcm(order, n / gcd(u.torsion_part()[i], n));
  }
  return order;
}

/// Subgroup of the ambient group given by generators, with a canonical
/// Hermite basis of its preimage in Z^(d+k) so that equal subgroups compare equal.
class Subgroup {
 public:
  Subgroup() = default;

  Subgroup(SignaturePtr sig, std::vector<GroupElement> generators)
      : sig_(std::move(sig)), generators_(std::move(generators)) {
    const std::size_t d = sig_->free_rank;
    const std::size_t w = sig_->width();
    lattice::Matrix rows;
    for (const auto& g : generators_) {
      if (!same_signature(g.signature(), sig_)) throw SignatureMismatch();
      rows.push_back(g.coordinates());
    }
    for (std::size_t i = 0; i < sig_->torsion_rank(); ++i) {
      lattice::Row r(w, 0);
      r[d + i] = sig_->torsion_orders[i];
      rows.push_back(std::move(r));
    }
    basis_ = lattice::hermite_normal_form(rows, w);
  }

  const SignaturePtr& signature() const noexcept { return sig_; }
  const std::vector<GroupElement>& generators() const noexcept { return generators_; }
  const lattice::Matrix& hermite_basis() const noexcept { return basis_; }

  bool contains(const GroupElement& u) const {
    if (!same_signature(u.signature(), sig_)) throw SignatureMismatch();
    return lattice::lattice_contains(basis_, u.coordinates());
  }

  bool is_subgroup_of(const Subgroup& other) const {
    return std::all_of(generators_.begin(), generators_.end(),
                       [&](const GroupElement& g) { return other.contains(g); });
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return same_signature(a.sig_, b.sig_) && a.basis_ == b.basis_;
  }

 private:
  SignaturePtr sig_;
  std::vector<GroupElement> generators_;
  lattice::Matrix basis_;
};

/// {(n, m) in Z^2 : n*a + m*b = 0}, canonicalized in Hermite normal form.
struct RelationLattice {
  std::vector<std::pair<Integer, Integer>> generators;
  bool is_trivial() const noexcept { return generators.empty(); }
  bool operator==(const RelationLattice&) const = default;
};

inline RelationLattice solve_relations(const GroupElement& a, const GroupElement& b) {
  require_same_signature(a, b);
  const auto& sig = *a.signature();
  const std::size_t d = sig.free_rank;
  const std::size_t k = sig.torsion_rank();
  // Kernel of the (d+k) x (2+k) map (n, m, t) -> n*a + m*b + sum t_i n_i e_(d+i).
  lattice::Matrix m(d + k, lattice::Row(2 + k, 0));
  const auto ca = a.coordinates();
  const auto cb = b.coordinates();
  for (std::size_t i = 0; i < d + k; ++i) {
    m[i][0] = ca[i];
    m[i][1] = cb[i];
  }
  for (std::size_t i = 0; i < k; ++i) m[d + i][2 + i] = sig.torsion_orders[i];
  lattice::Matrix kernel = lattice::integer_kernel(m, 2 + k);
  lattice::Matrix projected;
  for (const auto& row : kernel) projected.push_back({row[0], row[1]});
  RelationLattice out;
  for (const auto& row : lattice::hermite_normal_form(projected, 2))
    out.generators.emplace_back(row[0], row[1]);
  return out;
}

/// Axis-aligned truncation {u : |free coordinate| <= bound} x (all torsion).
struct Window {
  std::int64_t bound = 8;

  bool contains(const GroupElement& u) const { return u.norm() <= bound; }
  Window scaled(std::int64_t factor) const { return Window{bound * factor}; }
};

/// Orders elements by window norm, then lexicographically. Used wherever a
/// search must return the same first witness regardless of the window size.
inline bool norm_then_lex(const GroupElement& a, const GroupElement& b) {
  Integer na = a.norm(), nb = b.norm();
  if (na != nb) return na < nb;
  return a < b;
}

namespace detail {

inline void for_each_tuple(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi,
                           const std::function<void(const std::vector<std::int64_t>&)>& fn) {
  std::vector<std::int64_t> cur = lo;
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i]) return;
  for (;;) {
    fn(cur);
    std::size_t i = cur.size();
    while (i > 0) {
      --i;
      if (cur[i] < hi[i]) {
        ++cur[i];
        break;
      }
      cur[i] = lo[i];
      if (i == 0) return;
    }
    if (cur.empty()) return;
  }
}

}  // namespace detail

/// Every element of the ambient group inside the window, in norm-then-lex order.
inline std::vector<GroupElement> window_elements(const SignaturePtr& sig, const Window& window) {
  const std::size_t d = sig->free_rank, k = sig->torsion_rank();
  std::vector<std::int64_t> lo(d + k), hi(d + k);
  for (std::size_t i = 0; i < d; ++i) {
    lo[i] = -window.bound;
    hi[i] = window.bound;
  }
  for (std::size_t i = 0; i < k; ++i) {
    lo[d + i] = 0;
    hi[d + i] = static_cast<std::int64_t>(sig->torsion_orders[i]) - 1;
  }
  std::vector<GroupElement> out;
  detail::for_each_tuple(lo, hi, [&](const std::vector<std::int64_t>& t) {
    std::vector<Integer> coords(t.begin(), t.end());
    out.push_back(GroupElement::from_coordinates(sig, coords));
  });
  std::sort(out.begin(), out.end(), norm_then_lex);
  return out;
}

/// Tuple form "(x,y;t)". Rank-one torsion-free elements print as a bare integer.
inline std::string format_element(const GroupElement& u) {
  const auto& sig = *u.signature();
  if (sig.free_rank == 1 && sig.torsion_rank() == 0) return u.free_part()[0].str();
  std::string s = "(";
  for (std::size_t i = 0; i < u.free_part().size(); ++i) {
    if (i) s += ",";
    s += u.free_part()[i].str();
  }
  if (sig.torsion_rank() > 0) {
    s += ";";
    for (std::size_t i = 0; i < u.torsion_part().size(); ++i) {
      if (i) s += ",";
      s += u.torsion_part()[i].str();
    }
  }
  return s + ")";
}

}  // namespace powmon
