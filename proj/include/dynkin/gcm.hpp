#pragma once

// Generalized Cartan matrices and their Dynkin diagrams.
//
// Indices are 0-based throughout the C++ API. Every serialized form
// (text output, JSON, catalog files) is 1-based and says so.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace dynkin {

using Rational = boost::rational<std::int64_t>;

/// Largest rank for which vertex subsets fit in a VertexSet.
inline constexpr std::size_t kMaxSubsetRank = 31;

/// A subset of {0..n-1}, n <= kMaxSubsetRank, stored as a bitmask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint32_t bits) : bits_(bits) {}

  static VertexSet of(std::initializer_list<std::size_t> vertices) {
    VertexSet s;
    for (auto v : vertices) s.insert(v);
    return s;
  }
  static constexpr VertexSet full(std::size_t n) {
    return VertexSet(n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(std::size_t v) const { return (bits_ >> v) & 1u; }
  constexpr void insert(std::size_t v) { bits_ |= std::uint32_t{1} << v; }
  constexpr void erase(std::size_t v) { bits_ &= ~(std::uint32_t{1} << v); }
  constexpr VertexSet without(std::size_t v) const {
    return VertexSet(bits_ & ~(std::uint32_t{1} << v));
  }
  std::size_t size() const { return static_cast<std::size_t>(__builtin_popcount(bits_)); }
  /// Smallest member; undefined on the empty set.
  std::size_t front() const { return static_cast<std::size_t>(__builtin_ctz(bits_)); }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1)
      out.push_back(static_cast<std::size_t>(__builtin_ctz(b)));
    return out;
  }

  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }

  constexpr auto operator<=>(const VertexSet&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Which GCM axiom an input violates.
enum class GcmAxiom { Shape, Diagonal, OffDiagonalSign, ZeroSymmetry };

class GcmError : public std::invalid_argument {
 public:
  GcmError(GcmAxiom axiom, std::size_t row, std::size_t col, const std::string& what)
      : std::invalid_argument(what), axiom_(axiom), row_(row), col_(col) {}

  GcmAxiom axiom() const { return axiom_; }
  /// 0-based offending position.
  std::size_t row() const { return row_; }
  std::size_t col() const { return col_; }

 private:
  GcmAxiom axiom_;
  std::size_t row_;
  std::size_t col_;
};

/// Square integer matrix with a[i][i] = 2, a[i][j] <= 0 off the diagonal and
/// a[i][j] = 0 exactly when a[j][i] = 0. Immutable once built.
class GeneralizedCartanMatrix {
 public:
  /// Validates the axioms and throws GcmError on the first violation, scanning
  /// row-major.
  static GeneralizedCartanMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    const std::size_t n = rows.size();
    if (n == 0) throw GcmError(GcmAxiom::Shape, 0, 0, "matrix is empty");
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n)
        throw GcmError(GcmAxiom::Shape, i, 0,
                       "row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                           " entries, expected " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const int a = rows[i][j];
        const std::string at = " at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
        if (i == j) {
          if (a != 2)
            throw GcmError(GcmAxiom::Diagonal, i, j,
                           "diagonal entry " + std::to_string(a) + at + ", expected 2");
        } else if (a > 0) {
          throw GcmError(GcmAxiom::OffDiagonalSign, i, j,
                         "positive off-diagonal entry " + std::to_string(a) + at);
        } else if ((a == 0) != (rows[j][i] == 0)) {
          // report the zero entry; its mirror is the nonzero one
          const std::size_t zr = a == 0 ? i : j, zc = a == 0 ? j : i;
          throw GcmError(GcmAxiom::ZeroSymmetry, zr, zc,
                         "zero-symmetry axiom violated at (" + std::to_string(zr + 1) + "," +
                             std::to_string(zc + 1) + "): entry is 0 but the entry at (" + std::to_string(zc + 1) +
                             "," + std::to_string(zr + 1) + ") is " + std::to_string(rows[zc][zr]));
        }
      }
    }
    GeneralizedCartanMatrix m;
    m.rank_ = n;
    m.entries_.reserve(n * n);
    for (const auto& r : rows) m.entries_.insert(m.entries_.end(), r.begin(), r.end());
    return m;
  }

  /// Row-major entries; validated the same way as from_rows.
  static GeneralizedCartanMatrix from_entries(std::size_t rank, std::span<const int> entries) {
    if (entries.size() != rank * rank)
      throw GcmError(GcmAxiom::Shape, 0, 0, "entry count does not match rank");
    std::vector<std::vector<int>> rows(rank);
    for (std::size_t i = 0; i < rank; ++i)
      rows[i].assign(entries.begin() + static_cast<std::ptrdiff_t>(i * rank),
                     entries.begin() + static_cast<std::ptrdiff_t>((i + 1) * rank));
    return from_rows(rows);
  }

  /// The rank-n matrix 2·I (n isolated vertices).
  static GeneralizedCartanMatrix identity(std::size_t n) {
    GeneralizedCartanMatrix m;
    m.rank_ = n;
    m.entries_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 2;
    return m;
  }

  std::size_t rank() const { return rank_; }
  int operator()(std::size_t i, std::size_t j) const { return entries_[i * rank_ + j]; }
  std::span<const int> entries() const { return entries_; }
  std::span<const int> row(std::size_t i) const {
    return std::span<const int>(entries_).subspan(i * rank_, rank_);
  }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out(rank_);
    for (std::size_t i = 0; i < rank_; ++i) out[i].assign(row(i).begin(), row(i).end());
    return out;
  }

  bool adjacent(std::size_t i, std::size_t j) const { return i != j && (*this)(i, j) != 0; }

  /// Neighbours of vertex i as a bitmask; rank must not exceed kMaxSubsetRank.
  VertexSet neighbours(std::size_t i) const {
    VertexSet s;
    for (std::size_t j = 0; j < rank_; ++j)
      if (adjacent(i, j)) s.insert(j);
    return s;
  }

  /// Orders by rank, then row-major entries.
  auto operator<=>(const GeneralizedCartanMatrix& o) const {
    if (auto c = rank_ <=> o.rank_; c != 0) return c;
    return entries_ <=> o.entries_;
  }
  bool operator==(const GeneralizedCartanMatrix&) const = default;

 private:
  GeneralizedCartanMatrix() = default;

  std::size_t rank_ = 0;
  std::vector<int> entries_;
};

using Gcm = GeneralizedCartanMatrix;

inline Gcm validate_gcm(const std::vector<std::vector<int>>& rows) { return Gcm::from_rows(rows); }

enum class RenderClass { Single, Arrow2, Arrow3, Arrow4, DoubleHeaded, Labeled };

inline const char* to_string(RenderClass c) {
  switch (c) {
    case RenderClass::Single: return "single";
    case RenderClass::Arrow2: return "arrow2";
    case RenderClass::Arrow3: return "arrow3";
    case RenderClass::Arrow4: return "arrow4";
    case RenderClass::DoubleHeaded: return "double_headed";
    case RenderClass::Labeled: return "labeled";
  }
  return "labeled";
}

/// Label of the edge {i,j}, i < j: p = -a[i][j], q = -a[j][i].
struct EdgeLabel {
  int p = 1;
  int q = 1;

  bool symmetric() const { return p == q; }

  RenderClass render_class() const {
    if (p == 1 && q == 1) return RenderClass::Single;
    if (p == 2 && q == 2) return RenderClass::DoubleHeaded;
    const int lo = std::min(p, q), hi = std::max(p, q);
    if (lo == 1 && hi == 2) return RenderClass::Arrow2;
    if (lo == 1 && hi == 3) return RenderClass::Arrow3;
    if (lo == 1 && hi == 4) return RenderClass::Arrow4;
    return RenderClass::Labeled;
  }

  auto operator<=>(const EdgeLabel&) const = default;
};

struct DiagramEdge {
  std::size_t i = 0;  // i < j
  std::size_t j = 0;
  EdgeLabel label;

  auto operator<=>(const DiagramEdge&) const = default;
};

/// Vertex count plus labelled edges, sorted by (i, j). Orientation lives only in
/// the ordered label pair; arrows are a rendering concern.
class DynkinDiagram {
 public:
  DynkinDiagram(std::size_t vertices, std::vector<DiagramEdge> edges)
      : vertices_(vertices), edges_(std::move(edges)) {
    for (auto& e : edges_) {
      if (e.i == e.j) throw std::invalid_argument("Dynkin diagram self-loop");
      if (e.i >= vertices_ || e.j >= vertices_)
        throw std::invalid_argument("Dynkin diagram edge endpoint out of range");
      if (e.label.p <= 0 || e.label.q <= 0)
        throw std::invalid_argument("Dynkin diagram edge labels must be positive");
      if (e.i > e.j) {
        std::swap(e.i, e.j);
        std::swap(e.label.p, e.label.q);
      }
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t k = 1; k < edges_.size(); ++k) {
      if (edges_[k].i == edges_[k - 1].i && edges_[k].j == edges_[k - 1].j)
        throw std::invalid_argument("Dynkin diagram has two edges on one vertex pair");
    }
  }

  std::size_t vertex_count() const { return vertices_; }
  const std::vector<DiagramEdge>& edges() const { return edges_; }

  bool operator==(const DynkinDiagram&) const = default;

 private:
  std::size_t vertices_;
  std::vector<DiagramEdge> edges_;
};

inline DynkinDiagram matrix_to_diagram(const Gcm& a) {
  std::vector<DiagramEdge> edges;
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = i + 1; j < a.rank(); ++j)
      if (a(i, j) != 0) edges.push_back({i, j, {-a(i, j), -a(j, i)}});
  return DynkinDiagram(a.rank(), std::move(edges));
}

inline Gcm diagram_to_matrix(const DynkinDiagram& d) {
  std::vector<std::vector<int>> rows(d.vertex_count(), std::vector<int>(d.vertex_count(), 0));
  for (std::size_t i = 0; i < d.vertex_count(); ++i) rows[i][i] = 2;
  for (const auto& e : d.edges()) {
    rows[e.i][e.j] = -e.label.p;
    rows[e.j][e.i] = -e.label.q;
  }
  return Gcm::from_rows(rows);
}

/// mult(v_i, v_j) = a[j][i] / a[i][j].
inline Rational edge_multiplicity(const Gcm& a, std::size_t i, std::size_t j) {
  if (i >= a.rank() || j >= a.rank() || !a.adjacent(i, j))
    throw std::invalid_argument("edge_multiplicity: vertices " + std::to_string(i + 1) + " and " +
                                std::to_string(j + 1) + " are not adjacent");
  return Rational(a(j, i), a(i, j));
}

/// Transpose: reverses every arrow.
inline Gcm dual(const Gcm& a) {
  const std::size_t n = a.rank();
  std::vector<int> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[j * n + i] = a(i, j);
  return Gcm::from_entries(n, t);
}

/// Principal submatrix on `indices`, taken in the given order.
inline Gcm induced_subdiagram(const Gcm& a, std::span<const std::size_t> indices) {
  if (indices.empty()) throw std::invalid_argument("induced_subdiagram: empty index set");
  for (auto i : indices)
    if (i >= a.rank()) throw std::out_of_range("induced_subdiagram: index out of range");
  const std::size_t k = indices.size();
  std::vector<int> e(k * k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) e[r * k + c] = a(indices[r], indices[c]);
  return Gcm::from_entries(k, e);
}

inline Gcm induced_subdiagram(const Gcm& a, VertexSet s) {
  const auto m = s.members();
  return induced_subdiagram(a, std::span<const std::size_t>(m));
}

/// Simultaneous row/column relabelling: result(i, j) = a(perm[i], perm[j]).
inline Gcm permuted(const Gcm& a, std::span<const std::size_t> perm) {
  if (perm.size() != a.rank()) throw std::invalid_argument("permuted: wrong permutation length");
  return induced_subdiagram(a, perm);
}

/// Connected components of the diagram, each sorted, ordered by smallest vertex.
inline std::vector<std::vector<std::size_t>> connected_components(const Gcm& a) {
  const std::size_t n = a.rank();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<std::size_t> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      out.back().push_back(u);
      for (std::size_t v = 0; v < n; ++v) {
        if (comp[v] < 0 && a.adjacent(u, v)) {
          comp[v] = id;
          stack.push_back(v);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

inline bool is_indecomposable(const Gcm& a) { return connected_components(a).size() == 1; }

/// Adjacency bitmasks; requires rank <= kMaxSubsetRank.
inline std::vector<VertexSet> adjacency_masks(const Gcm& a) {
  if (a.rank() > kMaxSubsetRank) throw std::invalid_argument("rank too large for subset operations");
  std::vector<VertexSet> adj(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) adj[i] = a.neighbours(i);
  return adj;
}

/// Whether the subdiagram induced on a nonempty set is connected.
inline bool is_connected(std::span<const VertexSet> adjacency, VertexSet s) {
  if (s.empty()) return false;
  VertexSet seen = VertexSet::of({s.front()});
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (auto v : frontier.members()) next = next | (adjacency[v] & s);
    frontier = VertexSet(next.bits() & ~seen.bits());
    seen = seen | frontier;
  }
  return seen == s;
}

}  // namespace dynkin
