#pragma once

// Finite / affine / indefinite classification from exact principal minors,
// plus the hyperbolic and compact hyperbolic subdiagram tests.
//
// An indecomposable GCM is finite iff every principal minor is positive, and
// affine iff det A = 0 while every proper principal minor is positive.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dynkin/determinant.hpp"
#include "dynkin/gcm.hpp"

namespace dynkin {

/// Largest rank accepted by the exhaustive principal-minor scan.
inline constexpr std::size_t kMaxMinorRank = 12;

enum class CartanKind { Finite, Affine, Indefinite };

inline const char* to_string(CartanKind k) {
  switch (k) {
    case CartanKind::Finite: return "finite";
    case CartanKind::Affine: return "affine";
    case CartanKind::Indefinite: return "indefinite";
  }
  return "indefinite";
}

struct CartanType {
  CartanKind kind = CartanKind::Finite;
  bool hyperbolic = false;
  bool compact_hyperbolic = false;

  bool operator==(const CartanType&) const = default;
};

/// Determinants of all 2^n - 1 nonempty principal submatrices, keyed by subset.
class PrincipalMinors {
 public:
  explicit PrincipalMinors(const Gcm& a) : rank_(a.rank()) {
    if (rank_ > kMaxMinorRank)
      throw std::invalid_argument("principal_minors: rank " + std::to_string(rank_) +
                                  " exceeds supported bound " + std::to_string(kMaxMinorRank));
    const std::uint32_t count = std::uint32_t{1} << rank_;
    minors_.assign(count, 1);
    std::vector<std::size_t> idx;
    for (std::uint32_t bits = 1; bits < count; ++bits) {
      idx = VertexSet(bits).members();
      minors_[bits] = principal_determinant(a.entries(), rank_, idx);
    }
  }

  std::size_t rank() const { return rank_; }
  std::int64_t at(VertexSet s) const { return minors_.at(s.bits()); }
  std::int64_t determinant() const { return minors_.back(); }

 private:
  std::size_t rank_;
  std::vector<std::int64_t> minors_;
};

inline PrincipalMinors principal_minors(const Gcm& a) { return PrincipalMinors(a); }

/// Every subset's kind, computed once from the minor table. kind_of() is only
/// meaningful for connected subsets.
class SubdiagramTypes {
 public:
  explicit SubdiagramTypes(const Gcm& a) : minors_(a), adjacency_(adjacency_masks(a)) {
    const std::uint32_t count = std::uint32_t{1} << a.rank();
    // all_positive[S]: every nonempty principal minor inside S is positive.
    all_positive_.assign(count, 0);
    proper_positive_.assign(count, 0);
    all_positive_[0] = 1;
    proper_positive_[0] = 1;
    for (std::uint32_t bits = 1; bits < count; ++bits) {
      bool proper = true;
      for (std::uint32_t b = bits; b != 0; b &= b - 1) {
        if (!all_positive_[bits & ~(b & (~b + 1))]) {
          proper = false;
          break;
        }
      }
      proper_positive_[bits] = proper;
      all_positive_[bits] = proper && minors_.at(VertexSet(bits)) > 0;
    }
  }

  std::size_t rank() const { return minors_.rank(); }
  const PrincipalMinors& minors() const { return minors_; }
  bool connected(VertexSet s) const { return is_connected(adjacency_, s); }

  CartanKind kind_of(VertexSet s) const {
    if (proper_positive_[s.bits()]) {
      const auto det = minors_.at(s);
      if (det > 0) return CartanKind::Finite;
      if (det == 0) return CartanKind::Affine;
    }
    return CartanKind::Indefinite;
  }

  CartanKind kind() const { return kind_of(VertexSet::full(rank())); }

  /// Visits proper connected subsets by increasing size, then bitmask; stops
  /// as soon as fn returns false.
  template <typename Fn>
  void for_each_proper_connected(Fn&& fn) const {
    const std::uint32_t full = VertexSet::full(rank()).bits();
    for (std::size_t size = 1; size < rank(); ++size) {
      for (std::uint32_t bits = 1; bits < full; ++bits) {
        const VertexSet s(bits);
        if (s.size() != size || !connected(s)) continue;
        if (!fn(s)) return;
      }
    }
  }

  bool hyperbolic() const {
    if (!connected(VertexSet::full(rank())) || kind() != CartanKind::Indefinite) return false;
    bool ok = true;
    for_each_proper_connected([&](VertexSet s) {
      ok = kind_of(s) != CartanKind::Indefinite;
      return ok;
    });
    return ok;
  }

  bool compact_hyperbolic() const {
    if (!hyperbolic()) return false;
    bool ok = true;
    for_each_proper_connected([&](VertexSet s) {
      ok = kind_of(s) == CartanKind::Finite;
      return ok;
    });
    return ok;
  }

  CartanType type() const {
    CartanType t;
    t.kind = kind();
    t.hyperbolic = hyperbolic();
    t.compact_hyperbolic = t.hyperbolic && compact_hyperbolic();
    return t;
  }

 private:
  PrincipalMinors minors_;
  std::vector<VertexSet> adjacency_;
  std::vector<std::uint8_t> all_positive_;
  std::vector<std::uint8_t> proper_positive_;
};

namespace detail {
inline void require_indecomposable(const Gcm& a, const char* op) {
  if (!is_indecomposable(a))
    throw std::invalid_argument(std::string(op) + ": matrix is decomposable");
}
}  // namespace detail

/// Kind plus hyperbolic flags for an indecomposable matrix.
inline CartanType classify_indecomposable(const Gcm& a) {
  detail::require_indecomposable(a, "classify_indecomposable");
  return SubdiagramTypes(a).type();
}

inline bool is_hyperbolic(const Gcm& a) {
  detail::require_indecomposable(a, "is_hyperbolic");
  return SubdiagramTypes(a).hyperbolic();
}

inline bool is_compact_hyperbolic(const Gcm& a) {
  detail::require_indecomposable(a, "is_compact_hyperbolic");
  return SubdiagramTypes(a).compact_hyperbolic();
}

/// Kind of an indecomposable matrix without the hyperbolic scan.
inline CartanKind kind_of(const Gcm& a) {
  detail::require_indecomposable(a, "kind_of");
  return SubdiagramTypes(a).kind();
}

struct HyperbolicityWitness {
  /// Smallest proper connected indefinite subset (lowest bitmask among ties).
  std::optional<std::vector<std::size_t>> subset;
  /// Set when subset is absent: "finite" or "affine".
  std::string reason;
};

/// Why an indecomposable, non-hyperbolic matrix fails to be hyperbolic.
inline HyperbolicityWitness hyperbolicity_witness(const Gcm& a) {
  detail::require_indecomposable(a, "hyperbolicity_witness");
  const SubdiagramTypes types(a);
  const auto kind = types.kind();
  if (kind != CartanKind::Indefinite) return {std::nullopt, to_string(kind)};
  std::optional<VertexSet> found;
  types.for_each_proper_connected([&](VertexSet s) {
    if (types.kind_of(s) == CartanKind::Indefinite) found = s;
    return !found;
  });
  if (!found) throw std::invalid_argument("hyperbolicity_witness: matrix is hyperbolic");
  return {found->members(), {}};
}

struct ComponentType {
  std::vector<std::size_t> vertices;
  CartanType type;
};

/// Per-component classification, components ordered by smallest vertex.
inline std::vector<ComponentType> classify(const Gcm& a) {
  std::vector<ComponentType> out;
  for (auto& comp : connected_components(a)) {
    const auto sub = induced_subdiagram(a, comp);
    out.push_back({std::move(comp), SubdiagramTypes(sub).type()});
  }
  return out;
}

}  // namespace dynkin
