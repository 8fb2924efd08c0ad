#pragma once
// Square words on the n-by-n grid, pipe dreams, and Grothendieck polynomials
// computed two independent ways: recursively by divided differences down from
// the longest element, and as K-polynomials of the grid subword complex with
// grid variables specialized to x (single) or x,y (double).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "swc/base.hpp"
#include "swc/complex.hpp"
#include "swc/coxeter.hpp"
#include "swc/kpolynomial.hpp"
#include "swc/polynomial.hpp"

namespace swc::groth {

using coxeter::Permutation;
using coxeter::Side;
using coxeter::SymmetricGroup;
using coxeter::Word;
using kpoly::SparsePolynomial;
using kpoly::VariableName;
using subword::Face;
using subword::SubwordComplex;

// ---------------------------------------------------------------------------
// The grid: cell (r,c) carries generator r+c-1; the word reads row 1
// right-to-left, then row 2, and so on.
// ---------------------------------------------------------------------------

struct Grid {
  int n;

  explicit Grid(int n) : n(n) {
    if (n < 1 || 2 * n > Permutation::kMaxN)
      throw domain_error("grid size out of range");
  }

  int letter(int r, int c) const { return r + c - 1; }

  int position(int r, int c) const { return (r - 1) * n + (n - c) + 1; }

  std::pair<int, int> cell(int position) const {
    const int r = (position - 1) / n + 1;
    const int c = n - (position - 1) % n;
    return {r, c};
  }

  Word word() const {
    Word q;
    for (int r = 1; r <= n; ++r)
      for (int c = n; c >= 1; --c) q.push_back(letter(r, c));
    return q;
  }

  // one variable z[r,c] per position, in position order
  kpoly::PositionVars variables() const {
    kpoly::PositionVars vars(n * n, VariableName::z(0));
    for (int r = 1; r <= n; ++r)
      for (int c = 1; c <= n; ++c)
        vars[position(r, c) - 1] = VariableName::z2(r, c);
    return vars;
  }
};

inline Word square_word(int n) { return Grid(n).word(); }

// w acting on 1..n, extended to fix n+1..big_n
inline Permutation embed_permutation(const Permutation& w, int n, int big_n) {
  Permutation out = Permutation::identity(big_n);
  for (int j = 1; j <= n; ++j) out.set(j, w(j));
  return out;
}

// ---------------------------------------------------------------------------
// Recursive route: seed the longest element, walk down by divided differences
// ---------------------------------------------------------------------------

inline SparsePolynomial grothendieck_top(int n, bool use_y) {
  SparsePolynomial g = SparsePolynomial::constant(1);
  if (use_y) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; i + j <= n; ++j)
        g = g * (SparsePolynomial::constant(1) -
                 SparsePolynomial::variable(VariableName::x(i)) *
                     SparsePolynomial::variable(VariableName::y(j)));
  } else {
    for (int i = 1; i < n; ++i)
      for (int k = 0; k < n - i; ++k)
        g = g * (SparsePolynomial::constant(1) -
                 SparsePolynomial::variable(VariableName::x(i)));
  }
  return g;
}

// Polynomials for every element of S_n at once; every edge of the weak order
// is applied, so agreement along different paths is checked as a side effect.
inline std::map<Permutation, SparsePolynomial> grothendieck_table(int n, bool use_y) {
  SymmetricGroup sys(n);
  auto elements = all_elements(sys);
  std::sort(elements.begin(), elements.end(),
            [&](const Permutation& a, const Permutation& b) {
              return sys.length(a) > sys.length(b);
            });

  std::map<Permutation, SparsePolynomial> table;
  table[longest_element(sys)] = grothendieck_top(n, use_y);
  for (const auto& w : elements) {
    auto here = table.find(w);
    if (here == table.end())
      throw arithmetic_error("walk down from the longest element missed an element");
    for (int i = 1; i <= sys.rank(); ++i) {
      auto v = sys.apply_gen(w, i, Side::Right);
      if (sys.length(v) >= sys.length(w)) continue;
      auto cand = kpoly::demazure_operator(here->second, i);
      auto [it, inserted] = table.emplace(v, cand);
      if (!inserted && it->second != cand)
        throw arithmetic_error("divided-difference recursion is path dependent");
    }
  }
  return table;
}

inline SparsePolynomial grothendieck_recursive(int n, const Permutation& w, bool use_y) {
  auto table = grothendieck_table(n, use_y);
  auto it = table.find(w);
  if (it == table.end()) throw domain_error("permutation not in the stated group");
  return it->second;
}

// ---------------------------------------------------------------------------
// Subword-complex route: grid K-polynomial, then z[r,c] -> x_r (y_c)
// ---------------------------------------------------------------------------

enum class KMethod { Demazure, Absorbable };

inline std::map<VariableName, SparsePolynomial> grid_specialization(int n, bool use_y) {
  std::map<VariableName, SparsePolynomial> images;
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) {
      SparsePolynomial img = SparsePolynomial::variable(VariableName::x(r));
      if (use_y) img = img * SparsePolynomial::variable(VariableName::y(c));
      images[VariableName::z2(r, c)] = img;
    }
  return images;
}

inline SparsePolynomial grothendieck_from_complex(int n, const Permutation& w,
                                                  bool use_y, KMethod method) {
  Grid grid(n);
  SymmetricGroup sys(2 * n);
  const Permutation target = embed_permutation(w, n, 2 * n);
  const Word q = grid.word();
  const auto vars = grid.variables();
  SparsePolynomial k;
  if (method == KMethod::Demazure) {
    k = kpoly::kpoly_demazure(sys, q, target, vars);
  } else {
    k = kpoly::kpoly_shelling(subword::build_complex(sys, q, target), vars);
  }
  return k.substitute(grid_specialization(n, use_y));
}

// ---------------------------------------------------------------------------
// Signed sum over grid subsets with a fixed greedy product, with each chosen
// cell contributing x_i + y_j - x_i y_j
// ---------------------------------------------------------------------------

inline SparsePolynomial fomin_kirillov_expand(int n, const Permutation& w) {
  Grid grid(n);
  SymmetricGroup sys(2 * n);
  const Permutation target = embed_permutation(w, n, 2 * n);
  auto dual = kpoly::kpoly_dual(sys, grid.word(), target, grid.variables());
  std::map<VariableName, SparsePolynomial> images;
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) {
      auto xr = SparsePolynomial::variable(VariableName::x(r));
      auto yc = SparsePolynomial::variable(VariableName::y(c));
      images[VariableName::z2(r, c)] = xr + yc - xr * yc;
    }
  return dual.substitute(images);
}

// ---------------------------------------------------------------------------
// Pipe dreams: crossing tiles go straight, elbow tiles turn; strands move
// only north and east, entering from the left edge
// ---------------------------------------------------------------------------

struct PipeDream {
  int n;
  uint64_t crossings;  // position mask over the grid word

  bool is_crossing(int r, int c) const {
    return crossings >> (Grid(n).position(r, c) - 1) & 1;
  }
};

namespace detail {

// Tiles visited from a starting tile and heading ('E' or 'N') until the
// strand leaves the grid, as position masks split by tile kind.
struct StrandPath {
  uint64_t crossing_tiles = 0;
  uint64_t elbow_tiles = 0;
};

inline StrandPath trace_strand(const PipeDream& pd, int r, int c, char heading) {
  Grid grid(pd.n);
  StrandPath path;
  while (r >= 1 && r <= pd.n && c >= 1 && c <= pd.n) {
    const uint64_t bit = uint64_t{1} << (grid.position(r, c) - 1);
    if (pd.is_crossing(r, c)) {
      path.crossing_tiles |= bit;
    } else {
      path.elbow_tiles |= bit;
      heading = heading == 'E' ? 'N' : 'E';
    }
    if (heading == 'E') ++c;
    else --r;
  }
  return path;
}

}  // namespace detail

// The two strands through an elbow meet again at a crossing tile (necessarily
// strictly northeast) iff their forward traces share a crossing.
inline bool elbow_pipes_cross(const PipeDream& pd, int r, int c) {
  if (pd.is_crossing(r, c)) throw domain_error("cell is a crossing, not an elbow");
  auto east = detail::trace_strand(pd, r, c + 1, 'E');
  auto north = detail::trace_strand(pd, r - 1, c, 'N');
  return (east.crossing_tiles & north.crossing_tiles) != 0;
}

// Facet-by-facet comparison of the absorbable positions of each reduced pipe
// dream against the northeast-crossing rule.
inline bool pipe_dream_absorbable_check(int n, const Permutation& w) {
  Grid grid(n);
  SymmetricGroup sys(2 * n);
  const Word q = grid.word();
  auto cplx = subword::build_complex(sys, q, embed_permutation(w, n, 2 * n));
  const uint64_t full = Face::full(n * n).mask();
  for (const Face& facet : cplx.facets) {
    const uint64_t dmask = full & ~facet.mask();
    const uint64_t actual = subword::absorbable_set(sys, q, Face(dmask)).mask();
    PipeDream pd{n, dmask};
    uint64_t expected = 0;
    for (int p = 1; p <= n * n; ++p) {
      if (dmask >> (p - 1) & 1) continue;
      auto [r, c] = grid.cell(p);
      if (elbow_pipes_cross(pd, r, c)) expected |= uint64_t{1} << (p - 1);
    }
    if (actual != expected) return false;
  }
  return true;
}

inline std::string render_pipe_dream(const PipeDream& pd) {
  std::string out;
  for (int r = 1; r <= pd.n; ++r) {
    for (int c = 1; c <= pd.n; ++c)
      out += pd.is_crossing(r, c) ? "+" : "·";
    out += '\n';
  }
  return out;
}

// All reduced pipe dreams for w: the facet complements of the grid complex.
inline std::vector<PipeDream> pipe_dreams(int n, const Permutation& w) {
  Grid grid(n);
  SymmetricGroup sys(2 * n);
  auto cplx = subword::build_complex(sys, grid.word(), embed_permutation(w, n, 2 * n));
  const uint64_t full = Face::full(n * n).mask();
  std::vector<PipeDream> out;
  for (const Face& facet : cplx.facets) out.push_back(PipeDream{n, full & ~facet.mask()});
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive scan: every grid subset P shows up, with sign, in the dual
// K-polynomial of exactly one target -- its own greedy product.  The
// coefficients come from the face-expansion route, the products from a
// direct scan, so the two sides are independent.
// ---------------------------------------------------------------------------

inline bool porism_scan(int n) {
  if (n < 1 || n > 3) throw domain_error("exhaustive scan supported for n up to 3");
  Grid grid(n);
  SymmetricGroup sys(2 * n);
  const Word q = grid.word();
  const int m = n * n;
  const uint64_t total = uint64_t{1} << m;

  std::vector<Permutation> delta(total, sys.identity());
  std::vector<int64_t> sign(total, 0);
  for (uint64_t mask = 0; mask < total; ++mask) {
    auto rho = demazure_product(sys, subword::word_at(q, Face(mask)));
    delta[mask] = rho;
    const int excess = std::popcount(mask) - sys.length(rho);
    sign[mask] = excess % 2 == 0 ? 1 : -1;
  }

  std::vector<int> hits(total, 0);
  std::vector<char> good(total, 0);
  for (const auto& w : all_elements(sys)) {
    auto poly = kpoly::kpoly_dual_faces(subword::build_complex(sys, q, w));
    for (const auto& [mono, coeff] : poly.terms()) {
      uint64_t mask = 0;
      for (const auto& [v, e] : mono) mask |= uint64_t{1} << (v.i - 1);
      ++hits[mask];
      if (w == delta[mask] && coeff == sign[mask]) good[mask] = 1;
    }
  }
  for (uint64_t mask = 0; mask < total; ++mask)
    if (hits[mask] != 1 || !good[mask]) return false;
  return true;
}

}  // namespace swc::groth
