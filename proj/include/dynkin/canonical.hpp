#pragma once

// Canonical form of a GCM under simultaneous row/column relabelling: the
// relabelling whose row-major entry sequence is lexicographically smallest.
//
// Search: positions are filled in order. Unplaced vertices sit in an ordered
// partition whose cells agree on every row fixed so far, so row t is
// determined by the vertex chosen for position t. Only vertices of the cell
// covering position t can go there without changing earlier rows; among them
// only those giving the smallest row t survive. Ties branch, and twin
// vertices (interchangeable by a transposition) are branched on once.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dynkin/gcm.hpp"

namespace dynkin {

struct CanonicalForm {
  Gcm matrix;
  /// matrix(i, j) = input(permutation[i], permutation[j]).
  std::vector<std::size_t> permutation;
};

namespace detail {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Gcm& a) : a_(a), n_(a.rank()) {}

  CanonicalForm run() {
    std::vector<std::size_t> all(n_);
    for (std::size_t i = 0; i < n_; ++i) all[i] = i;
    std::vector<std::size_t> perm;
    std::vector<int> seq;
    search(perm, {all}, seq);
    return {permuted(a_, best_perm_), best_perm_};
  }

 private:
  using Cells = std::vector<std::vector<std::size_t>>;

  bool twins(std::size_t u, std::size_t v) const {
    if (a_(u, v) != a_(v, u)) return false;
    for (std::size_t w = 0; w < n_; ++w) {
      if (w == u || w == v) continue;
      if (a_(u, w) != a_(v, w) || a_(w, u) != a_(w, v)) return false;
    }
    return true;
  }

  /// Row t for candidate v and the refined cells it induces.
  void place(std::size_t v, const std::vector<std::size_t>& perm, const Cells& cells,
             std::vector<int>& row, Cells& refined) const {
    row.clear();
    for (auto p : perm) row.push_back(a_(v, p));
    row.push_back(a_(v, v));
    refined.clear();
    for (std::size_t c = 0; c < cells.size(); ++c) {
      std::vector<std::size_t> cell;
      for (auto u : cells[c])
        if (u != v) cell.push_back(u);
      std::stable_sort(cell.begin(), cell.end(),
                       [&](std::size_t x, std::size_t y) { return a_(v, x) < a_(v, y); });
      for (std::size_t s = 0; s < cell.size();) {
        std::size_t e = s;
        while (e < cell.size() && a_(v, cell[e]) == a_(v, cell[s])) ++e;
        refined.emplace_back(cell.begin() + static_cast<std::ptrdiff_t>(s),
                             cell.begin() + static_cast<std::ptrdiff_t>(e));
        for (std::size_t k = s; k < e; ++k) row.push_back(a_(v, cell[k]));
        s = e;
      }
    }
  }

  void search(std::vector<std::size_t>& perm, const Cells& cells, std::vector<int>& seq) {
    const std::size_t t = perm.size();
    if (t == n_) {
      if (!best_ || seq < *best_) {
        best_ = seq;
        best_perm_ = perm;
      }
      return;
    }
    const auto& first = cells.front();
    std::vector<std::size_t> reps;
    for (auto v : first) {
      bool dup = false;
      for (auto r : reps)
        if (twins(r, v)) dup = true;
      if (!dup) reps.push_back(v);
    }

    std::vector<int> row, min_row;
    Cells refined;
    std::vector<std::pair<std::size_t, Cells>> chosen;
    for (auto v : reps) {
      place(v, perm, cells, row, refined);
      if (chosen.empty() || row < min_row) {
        chosen.clear();
        min_row = row;
      } else if (row > min_row) {
        continue;
      }
      chosen.emplace_back(v, refined);
    }

    const std::size_t base = seq.size();
    seq.insert(seq.end(), min_row.begin(), min_row.end());
    if (best_ && std::lexicographical_compare(best_->begin(), best_->begin() + static_cast<std::ptrdiff_t>(seq.size()),
                                              seq.begin(), seq.end())) {
      seq.resize(base);
      return;
    }
    for (auto& [v, next] : chosen) {
      perm.push_back(v);
      search(perm, next, seq);
      perm.pop_back();
    }
    seq.resize(base);
  }

  const Gcm& a_;
  std::size_t n_;
  std::optional<std::vector<int>> best_;
  std::vector<std::size_t> best_perm_;
};

}  // namespace detail

inline CanonicalForm canonical_form(const Gcm& a) { return detail::CanonicalSearch(a).run(); }

inline Gcm canonical_matrix(const Gcm& a) { return canonical_form(a).matrix; }

/// Reference implementation over all n! relabellings; for small ranks only.
inline Gcm canonical_matrix_bruteforce(const Gcm& a) {
  if (a.rank() > 9) throw std::invalid_argument("canonical_matrix_bruteforce: rank above 9");
  std::vector<std::size_t> perm(a.rank());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::optional<Gcm> best;
  do {
    auto m = permuted(a, perm);
    if (!best || m < *best) best = std::move(m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

}  // namespace dynkin
