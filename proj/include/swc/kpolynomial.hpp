#pragma once
// K-polynomial routes for subword complexes: the face-expansion sum, the
// signed Hecke-fiber sum, the shelling/absorption sum, the dual (interior)
// variants, Alexander inversion, Hochster-style homological Betti numbers,
// and the divided-difference (Demazure) operator on x-polynomials.
//
// All routes over one word accumulate into a dense array indexed by position
// subsets, so words are capped at 20 positions here (2^20 slots).

#include <bit>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "swc/base.hpp"
#include "swc/complex.hpp"
#include "swc/coxeter.hpp"
#include "swc/polynomial.hpp"
#include "swc/simplicial.hpp"

namespace swc::kpoly {

using coxeter::Side;
using coxeter::Word;
using subword::Face;
using subword::SubwordComplex;

inline constexpr int kMaxPositions = 20;

using PositionVars = std::vector<VariableName>;

inline PositionVars default_position_vars(int word_size) {
  PositionVars vars;
  for (int p = 1; p <= word_size; ++p) vars.push_back(VariableName::z(p));
  return vars;
}

namespace detail {

inline void check_positions(int m) {
  if (m > kMaxPositions)
    throw size_cap_error("k-polynomial computation limited to words of 20 letters");
}

inline void check_vars(const PositionVars& vars, int m) {
  if (static_cast<int>(vars.size()) != m)
    throw domain_error("need one variable per word position");
}

// Dense coefficient-by-subset-mask array into a sparse polynomial.
inline SparsePolynomial from_dense(const std::vector<int64_t>& coeff,
                                   const PositionVars& vars) {
  SparsePolynomial out;
  for (uint64_t mask = 0; mask < coeff.size(); ++mask) {
    if (coeff[mask] == 0) continue;
    Monomial mono;
    for (size_t p = 0; p < vars.size(); ++p)
      if (mask >> p & 1) mono.emplace_back(vars[p], 1);
    std::sort(mono.begin(), mono.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.add_term(mono, coeff[mask]);
  }
  return out;
}

// face[mask] = true iff the position set is a face (down-closure of facets).
inline std::vector<char> face_table(const std::vector<Face>& facets, int m) {
  std::vector<char> face(size_t{1} << m, 0);
  for (const Face& f : facets) face[f.mask()] = 1;
  for (uint64_t mask = (uint64_t{1} << m); mask-- > 0;) {
    if (!face[mask]) continue;
    for (int b = 0; b < m; ++b)
      if (mask >> b & 1) face[mask ^ (uint64_t{1} << b)] = 1;
  }
  return face;
}

// Signed fiber indicator: g[P] = (-1)^(|P| - length(target)) when the greedy
// product of positions P equals the target, else 0.  Depth-first over
// positions, pruning by order monotonicity in both directions.
template <typename S>
std::vector<int64_t> signed_fiber_table(const S& sys, const Word& q,
                                        const typename S::Element& target) {
  const int m = static_cast<int>(q.size());
  check_positions(m);
  validate_word(sys, q);
  const int len = sys.length(target);
  std::vector<int64_t> g(size_t{1} << m, 0);

  auto reach_all = [&](typename S::Element rho, int from) {
    for (int k = from; k < m; ++k) rho = demazure_step(sys, rho, q[k], Side::Right);
    return rho;
  };

  auto rec = [&](auto&& self, int k, typename S::Element rho, uint64_t mask,
                 int taken) -> void {
    if (!bruhat_leq(sys, rho, target)) return;
    if (k == m) {
      if (rho == target) g[mask] = ((taken - len) % 2 == 0) ? 1 : -1;
      return;
    }
    if (!bruhat_leq(sys, target, reach_all(rho, k))) return;
    self(self, k + 1, rho, mask, taken);
    self(self, k + 1, demazure_step(sys, rho, q[k], Side::Right),
         mask | (uint64_t{1} << k), taken + 1);
  };
  rec(rec, 0, sys.identity(), 0, 0);
  return g;
}

// In-place sum over supersets: g[T] <- sum of g[P] for P containing T.
inline void superset_sums(std::vector<int64_t>& g, int m) {
  for (int b = 0; b < m; ++b)
    for (uint64_t mask = 0; mask < g.size(); ++mask)
      if (!(mask >> b & 1)) g[mask] += g[mask | (uint64_t{1} << b)];
}

// In-place sum over subsets.
inline void subset_sums(std::vector<int64_t>& g, int m) {
  for (int b = 0; b < m; ++b)
    for (uint64_t mask = 0; mask < g.size(); ++mask)
      if (mask >> b & 1) g[mask] += g[mask ^ (uint64_t{1} << b)];
}

inline int parity_sign(uint64_t mask) {
  return (std::popcount(mask) % 2 == 0) ? 1 : -1;
}

}  // namespace detail

// Sum over faces D of prod_{p in D} z_p * prod_{p not in D} (1 - z_p).
template <typename S>
SparsePolynomial kpoly_faces(const SubwordComplex<S>& cplx, const PositionVars& vars) {
  const int m = cplx.word_size();
  detail::check_positions(m);
  detail::check_vars(vars, m);
  auto face = detail::face_table(cplx.facets, m);
  std::vector<int64_t> h(face.size());
  for (uint64_t mask = 0; mask < face.size(); ++mask)
    h[mask] = face[mask] ? detail::parity_sign(mask) : 0;
  detail::subset_sums(h, m);
  for (uint64_t mask = 0; mask < h.size(); ++mask)
    h[mask] = detail::parity_sign(mask) * h[mask];
  return detail::from_dense(h, vars);
}

template <typename S>
SparsePolynomial kpoly_faces(const SubwordComplex<S>& cplx) {
  return kpoly_faces(cplx, default_position_vars(cplx.word_size()));
}

// Sum over subsets P with greedy product equal to the target of
// (-1)^(|P| - length) * prod_{p in P} (1 - z_p).
template <typename S>
SparsePolynomial kpoly_demazure(const S& sys, const Word& q,
                                const typename S::Element& target,
                                const PositionVars& vars) {
  const int m = static_cast<int>(q.size());
  detail::check_vars(vars, m);
  auto g = detail::signed_fiber_table(sys, q, target);
  detail::superset_sums(g, m);
  for (uint64_t mask = 0; mask < g.size(); ++mask)
    g[mask] = detail::parity_sign(mask) * g[mask];
  return detail::from_dense(g, vars);
}

template <typename S>
SparsePolynomial kpoly_demazure(const S& sys, const Word& q,
                                const typename S::Element& target) {
  return kpoly_demazure(sys, q, target,
                        default_position_vars(static_cast<int>(q.size())));
}

// Sum over facets of (1-z)^(complement) * z^(absorbable set).
template <typename S>
SparsePolynomial kpoly_shelling(const SubwordComplex<S>& cplx, const PositionVars& vars) {
  const int m = cplx.word_size();
  detail::check_positions(m);
  detail::check_vars(vars, m);
  std::vector<int64_t> coeff(size_t{1} << m, 0);
  const uint64_t full = (m == 64) ? ~uint64_t{0} : (uint64_t{1} << m) - 1;
  for (const Face& f : cplx.facets) {
    const uint64_t dmask = full & ~f.mask();
    const Face d = Face{dmask};
    const uint64_t absmask = absorbable_set(cplx.sys, cplx.word, d).mask();
    // walk the submasks of the complement word
    uint64_t sub = dmask;
    while (true) {
      coeff[sub | absmask] += detail::parity_sign(sub);
      if (sub == 0) break;
      sub = (sub - 1) & dmask;
    }
  }
  return detail::from_dense(coeff, vars);
}

template <typename S>
SparsePolynomial kpoly_shelling(const SubwordComplex<S>& cplx) {
  return kpoly_shelling(cplx, default_position_vars(cplx.word_size()));
}

// Dual route: sum over subsets P with greedy product equal to the target of
// (-1)^(|P| - length) * z^P.
template <typename S>
SparsePolynomial kpoly_dual(const S& sys, const Word& q,
                            const typename S::Element& target,
                            const PositionVars& vars) {
  const int m = static_cast<int>(q.size());
  detail::check_vars(vars, m);
  auto g = detail::signed_fiber_table(sys, q, target);
  return detail::from_dense(g, vars);
}

template <typename S>
SparsePolynomial kpoly_dual(const S& sys, const Word& q,
                            const typename S::Element& target) {
  return kpoly_dual(sys, q, target,
                    default_position_vars(static_cast<int>(q.size())));
}

// Same polynomial computed from the face list instead: sum over faces D of
// prod_{p not in D} z_p * prod_{p in D} (1 - z_p).
template <typename S>
SparsePolynomial kpoly_dual_faces(const SubwordComplex<S>& cplx, const PositionVars& vars) {
  const int m = cplx.word_size();
  detail::check_positions(m);
  detail::check_vars(vars, m);
  auto face = detail::face_table(cplx.facets, m);
  const uint64_t full = (uint64_t{1} << m) - 1;
  std::vector<int64_t> h(face.size());
  for (uint64_t mask = 0; mask < h.size(); ++mask)
    h[mask] = face[full & ~mask] ? detail::parity_sign(mask) : 0;
  detail::subset_sums(h, m);
  for (uint64_t mask = 0; mask < h.size(); ++mask)
    h[mask] = detail::parity_sign(mask) * h[mask];
  return detail::from_dense(h, vars);
}

template <typename S>
SparsePolynomial kpoly_dual_faces(const SubwordComplex<S>& cplx) {
  return kpoly_dual_faces(cplx, default_position_vars(cplx.word_size()));
}

// Substituting 1 - z_p for every z_p in the dual polynomial must recover the
// plain one.
template <typename S>
bool alexander_inversion_check(const S& sys, const Word& q,
                               const typename S::Element& target) {
  const auto vars = default_position_vars(static_cast<int>(q.size()));
  std::map<VariableName, SparsePolynomial> flip;
  for (const auto& v : vars) flip[v] = one_minus(v);
  return kpoly_dual(sys, q, target, vars).substitute(flip) ==
         kpoly_demazure(sys, q, target, vars);
}

// Homological Betti numbers: entry {j, P} holds the dimension of the reduced
// homology of the link of the complementary face in degree j - 1, over the
// rationals (characteristic 0) or a prime field.  Subsets whose complement is
// not a face contribute nothing; only nonzero entries are returned.
template <typename S>
std::map<std::pair<int, uint64_t>, int64_t> hochster_betti(
    const SubwordComplex<S>& cplx, int characteristic = 0) {
  const int m = cplx.word_size();
  detail::check_positions(m);
  auto face = detail::face_table(cplx.facets, m);
  const uint64_t full = (uint64_t{1} << m) - 1;
  std::map<std::pair<int, uint64_t>, int64_t> out;
  for (uint64_t pmask = 0; pmask <= full; ++pmask) {
    const uint64_t cmask = full & ~pmask;
    if (!face[cmask]) continue;
    std::vector<uint64_t> link_facets;
    for (const Face& f : cplx.facets)
      if ((f.mask() & cmask) == cmask) link_facets.push_back(f.mask() & ~cmask);
    auto link = simplicial::AbstractComplex::from_facets(m, link_facets);
    auto h = simplicial::reduced_homology(link);
    for (int j = 0; j < static_cast<int>(h.size()); ++j) {
      int64_t b = simplicial::field_betti(h, j, characteristic);
      if (b != 0) out[{j, pmask}] = b;
    }
  }
  return out;
}

// Divided-difference operator on polynomials in the x (and y) variables:
// (x_{i+1} f - x_i (f with x_i and x_{i+1} swapped)) / (x_{i+1} - x_i),
// carried out by synthetic division in x_i; a nonzero remainder means the
// input was not a polynomial identity and is a hard failure.
inline SparsePolynomial demazure_operator(const SparsePolynomial& f, int i) {
  if (i < 1) throw domain_error("operator index must be positive");
  for (const auto& [mono, c] : f.terms())
    for (const auto& [v, e] : mono)
      if (v.family == 'z')
        throw domain_error("divided differences act on x,y polynomials only");

  const auto xi = VariableName::x(i);
  const auto xi1 = VariableName::x(i + 1);
  std::map<VariableName, SparsePolynomial> swap_map{
      {xi, SparsePolynomial::variable(xi1)}, {xi1, SparsePolynomial::variable(xi)}};
  SparsePolynomial numer = SparsePolynomial::variable(xi1) * f -
                           SparsePolynomial::variable(xi) * f.substitute(swap_map);
  if (numer.is_zero()) return {};

  auto a = numer.by_powers(xi);
  const int d = a.rbegin()->first;
  const SparsePolynomial c = SparsePolynomial::variable(xi1);
  auto at = [&](int k) -> SparsePolynomial {
    auto it = a.find(k);
    return it == a.end() ? SparsePolynomial{} : it->second;
  };

  std::map<int, SparsePolynomial> b;
  if (d > 0) {
    b[d - 1] = -at(d);
    for (int k = d - 1; k >= 1; --k) b[k - 1] = c * b[k] - at(k);
  }
  SparsePolynomial remainder = at(0) - (d > 0 ? c * b[0] : SparsePolynomial{});
  if (!remainder.is_zero())
    throw arithmetic_error("divided difference left a nonzero remainder");

  SparsePolynomial out;
  for (const auto& [k, bk] : b)
    out += bk * SparsePolynomial::variable(xi, k);
  return out;
}

}  // namespace swc::kpoly
