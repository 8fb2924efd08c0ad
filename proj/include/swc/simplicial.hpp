#pragma once
// Finite abstract simplicial complexes over vertices 1..n with exact integer
// reduced homology (Smith normal form over checked 64-bit integers), shelling
// verification, and ridge degree counts.
//
// Dimension indexing used throughout: vectors indexed by k hold data for
// dimension k-1, so index 0 refers to the empty face.

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "swc/base.hpp"

namespace swc::simplicial {

// A complex is stored by its facets (maximal faces) as bit masks over 64
// vertices.  No facets at all is the void complex; the single facet 0 is the
// complex whose only face is the empty set.
struct AbstractComplex {
  int n_vertices = 0;
  std::vector<uint64_t> facets;

  static AbstractComplex from_facets(int n, std::vector<uint64_t> sets) {
    if (n < 0 || n > 64) throw domain_error("vertex count out of range");
    AbstractComplex c;
    c.n_vertices = n;
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    for (uint64_t s : sets) {
      if (n < 64 && s >> n) throw domain_error("facet has vertices beyond range");
      bool maximal = true;
      for (uint64_t t : sets)
        if (t != s && (s & ~t) == 0) { maximal = false; break; }
      if (maximal) c.facets.push_back(s);
    }
    return c;
  }

  bool is_void() const { return facets.empty(); }

  bool is_pure() const {
    if (facets.empty()) return true;
    for (uint64_t f : facets)
      if (__builtin_popcountll(f) != __builtin_popcountll(facets.front())) return false;
    return true;
  }

  int dim() const {  // -2 for the void complex, -1 for {empty}
    if (is_void()) return -2;
    int d = -1;
    for (uint64_t f : facets) d = std::max(d, __builtin_popcountll(f) - 1);
    return d;
  }

  // Every face including the empty one (void complex: no faces at all).
  std::vector<uint64_t> all_faces(int64_t cap = 1'000'000) const {
    std::unordered_set<uint64_t> seen;
    for (uint64_t f : facets) {
      uint64_t sub = f;
      while (true) {
        if (seen.insert(sub).second && static_cast<int64_t>(seen.size()) > cap)
          throw size_cap_error("face enumeration exceeds cap");
        if (sub == 0) break;
        sub = (sub - 1) & f;
      }
    }
    std::vector<uint64_t> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
  }
};

// f[k] = number of faces of dimension k-1; f[0] = 1 unless void.
inline std::vector<int64_t> f_vector(const AbstractComplex& c) {
  std::vector<int64_t> f(static_cast<size_t>(std::max(c.dim() + 2, 0)), 0);
  for (uint64_t face : c.all_faces()) f[__builtin_popcountll(face)]++;
  return f;
}

// Unreduced Euler characteristic: alternating sum over nonempty faces.
inline int64_t euler_characteristic(const AbstractComplex& c) {
  int64_t chi = 0;
  auto f = f_vector(c);
  for (size_t k = 1; k < f.size(); ++k)
    chi = checked::add(chi, (k % 2 ? f[k] : checked::neg(f[k])));
  return chi;
}

// ---------------------------------------------------------------------------
// Smith normal form and reduced homology
// ---------------------------------------------------------------------------

namespace detail {

// Invariant factors (nonzero diagonal, each dividing the next) of an integer
// matrix; destructive, exact, overflow-checked.
inline std::vector<int64_t> smith_invariants(std::vector<std::vector<int64_t>> a) {
  std::vector<int64_t> out;
  const size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  size_t t = 0;
  while (t < rows && t < cols) {
    // pick the smallest nonzero entry in the remaining block as pivot
    size_t pr = t, pc = t;
    int64_t best = 0;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (best == 0 || std::abs(a[i][j]) < std::abs(best))) {
          best = a[i][j];
          pr = i;
          pc = j;
        }
    if (best == 0) break;
    std::swap(a[t], a[pr]);
    for (size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        int64_t q = a[i][t] / a[t][t];
        for (size_t j = t; j < cols; ++j)
          a[i][j] = checked::sub(a[i][j], checked::mul(q, a[t][j]));
        if (a[i][t] != 0) {  // remainder smaller than pivot: promote it
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        int64_t q = a[t][j] / a[t][t];
        for (size_t i = t; i < rows; ++i)
          a[i][j] = checked::sub(a[i][j], checked::mul(q, a[i][t]));
        if (a[t][j] != 0) {
          for (size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // enforce divisibility of the remaining block by the pivot
      for (size_t i = t + 1; i < rows && clean; ++i)
        for (size_t j = t + 1; j < cols && clean; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (size_t jj = t; jj < cols; ++jj)
              a[t][jj] = checked::add(a[t][jj], a[i][jj]);
            clean = false;
          }
    }
    out.push_back(std::abs(a[t][t]));
    ++t;
  }
  return out;
}

}  // namespace detail

struct HomologyGroup {
  int64_t free_rank = 0;
  std::vector<int64_t> torsion;  // invariant factors > 1, each dividing the next

  bool operator==(const HomologyGroup&) const = default;
  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
};

// Reduced integer homology; index k holds dimension k-1.  The void complex
// yields an empty vector; {empty} yields one Z in dimension -1.
inline std::vector<HomologyGroup> reduced_homology(const AbstractComplex& c) {
  if (c.is_void()) return {};
  const int top = c.dim();

  // faces grouped by dimension, with ranks for boundary columns
  std::vector<std::vector<uint64_t>> faces(static_cast<size_t>(top + 2));
  std::vector<std::unordered_map<uint64_t, int>> index(static_cast<size_t>(top + 2));
  for (uint64_t f : c.all_faces()) {
    int k = __builtin_popcountll(f);
    index[k].emplace(f, static_cast<int>(faces[k].size()));
    faces[k].push_back(f);
  }

  // boundary maps by set size: columns are size-k faces, rows size k-1
  std::vector<int64_t> rank(static_cast<size_t>(top + 3), 0);
  std::vector<std::vector<int64_t>> torsion_below(static_cast<size_t>(top + 3));
  for (int k = 1; k <= top + 1; ++k) {
    std::vector<std::vector<int64_t>> mat(
        faces[k - 1].size(), std::vector<int64_t>(faces[k].size(), 0));
    for (size_t j = 0; j < faces[k].size(); ++j) {
      uint64_t f = faces[k][j];
      int sign = 1;
      for (uint64_t b = f; b; b &= b - 1) {
        uint64_t bit = b & ~(b - 1);
        mat[index[k - 1].at(f ^ bit)][j] = sign;
        sign = -sign;
      }
    }
    auto inv = detail::smith_invariants(std::move(mat));
    rank[k] = static_cast<int64_t>(inv.size());
    for (int64_t d : inv)
      if (d > 1) torsion_below[k].push_back(d);
  }

  std::vector<HomologyGroup> h(static_cast<size_t>(top + 2));
  for (int k = 0; k <= top + 1; ++k) {
    int64_t n_k = static_cast<int64_t>(faces[k].size());
    h[k].free_rank = n_k - rank[k] - rank[k + 1];
    h[k].torsion = torsion_below[k + 1];
    if (h[k].free_rank < 0) throw arithmetic_error("negative homology rank");
  }
  while (h.size() > 1 && h.back().is_zero()) h.pop_back();
  return h;
}

// Dimension of reduced homology over a field: the rationals for
// characteristic 0, otherwise the prime field of the given characteristic.
inline int64_t field_betti(const std::vector<HomologyGroup>& h, int k, int characteristic) {
  auto count_p = [&](int idx) {
    if (idx < 0 || idx >= static_cast<int>(h.size())) return int64_t{0};
    int64_t c = 0;
    for (int64_t d : h[idx].torsion)
      if (d % characteristic == 0) ++c;
    return c;
  };
  int64_t base = (k >= 0 && k < static_cast<int>(h.size())) ? h[k].free_rank : 0;
  if (characteristic == 0) return base;
  return base + count_p(k) + count_p(k - 1);
}

// ---------------------------------------------------------------------------
// Shelling and ridges
// ---------------------------------------------------------------------------

struct ShellingCheck {
  bool ok = true;
  std::string reason;
  int fail_i = -1, fail_j = -1;  // 0-based order indices when a pair fails
};

// Pairwise shelling criterion for a pure complex: for every j < i some k < i
// has |F_i \ F_k| = 1 and F_i cap F_j inside F_k.
inline ShellingCheck verify_shelling(const AbstractComplex& c,
                                     const std::vector<uint64_t>& order) {
  auto sorted_facets = c.facets;
  std::sort(sorted_facets.begin(), sorted_facets.end());
  auto sorted_order = order;
  std::sort(sorted_order.begin(), sorted_order.end());
  if (sorted_facets != sorted_order)
    return {false, "order is not a permutation of the facets", -1, -1};
  if (!c.is_pure()) return {false, "complex is not pure", -1, -1};
  for (size_t i = 1; i < order.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      bool found = false;
      for (size_t k = 0; k < i && !found; ++k) {
        if (__builtin_popcountll(order[i] & ~order[k]) == 1 &&
            (order[i] & order[j] & ~order[k]) == 0)
          found = true;
      }
      if (!found)
        return {false, "no earlier facet covers the intersection",
                static_cast<int>(i), static_cast<int>(j)};
    }
  }
  return {};
}

// Number of facets containing each ridge (codimension-1 subset of a facet).
inline std::unordered_map<uint64_t, int> ridge_degrees(const AbstractComplex& c) {
  std::unordered_map<uint64_t, int> deg;
  for (uint64_t f : c.facets)
    for (uint64_t b = f; b; b &= b - 1) deg[f ^ (b & ~(b - 1))]++;
  return deg;
}

inline bool ridge_degree_at_most_two(const AbstractComplex& c) {
  for (const auto& [ridge, d] : ridge_degrees(c)) {
    (void)ridge;
    if (d > 2) return false;
  }
  return true;
}

}  // namespace swc::simplicial
