#pragma once
// Subword complexes: for a word Q and target element pi, the faces are the
// complements Q \ P of position sets P that still contain pi; facets are the
// complements of the reduced position sets representing pi.  Faces live on
// the stable positions 1..|Q| and are stored as 64-bit sets.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <unordered_set>
#include <utility>
#include <vector>

#include "swc/base.hpp"
#include "swc/coxeter.hpp"

namespace swc::subword {

using coxeter::Side;
using coxeter::Word;

inline constexpr int64_t kDefaultFaceCap = 1'000'000;

// ---------------------------------------------------------------------------
// Face: a set of 1-based positions, at most 64 of them
// ---------------------------------------------------------------------------

class Face {
 public:
  Face() : bits_(0) {}
  explicit Face(uint64_t bits) : bits_(bits) {}

  static Face from_positions(const std::vector<int>& ps) {
    Face f;
    for (int p : ps) f = f.with(p);
    return f;
  }

  static Face full(int m) { return Face(m == 64 ? ~uint64_t{0} : (uint64_t{1} << m) - 1); }

  bool contains(int p) const { return bits_ >> (p - 1) & 1; }
  Face with(int p) const {
    if (p < 1 || p > 64) throw domain_error("face position out of range");
    return Face(bits_ | uint64_t{1} << (p - 1));
  }
  Face without(int p) const { return Face(bits_ & ~(uint64_t{1} << (p - 1))); }

  int size() const { return __builtin_popcountll(bits_); }
  bool empty() const { return bits_ == 0; }
  uint64_t mask() const { return bits_; }

  bool subset_of(const Face& o) const { return (bits_ & ~o.bits_) == 0; }
  bool disjoint(const Face& o) const { return (bits_ & o.bits_) == 0; }
  Face unite(const Face& o) const { return Face(bits_ | o.bits_); }
  Face intersect(const Face& o) const { return Face(bits_ & o.bits_); }
  Face minus(const Face& o) const { return Face(bits_ & ~o.bits_); }
  Face shifted(int delta) const {  // move every position up by delta
    return Face(delta >= 0 ? bits_ << delta : bits_ >> -delta);
  }

  std::vector<int> positions() const {
    std::vector<int> out;
    for (uint64_t b = bits_; b; b &= b - 1) out.push_back(__builtin_ctzll(b) + 1);
    return out;
  }

  bool operator==(const Face& o) const { return bits_ == o.bits_; }
  bool operator!=(const Face& o) const { return bits_ != o.bits_; }

 private:
  uint64_t bits_;
};

// Canonical order: compare sorted position sequences lexicographically.
struct FaceLess {
  bool operator()(const Face& a, const Face& b) const {
    auto pa = a.positions(), pb = b.positions();
    return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
  }
};

// Letters of Q at the positions of F, in position order.
inline Word word_at(const Word& q, const Face& f) {
  Word out;
  for (int p : f.positions()) {
    if (p > static_cast<int>(q.size())) throw domain_error("position beyond word end");
    out.push_back(q[p - 1]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// SubwordComplex
// ---------------------------------------------------------------------------

template <class S>
struct SubwordComplex {
  S sys;
  Word word;
  typename S::Element target;
  int target_length = 0;
  std::vector<Face> facets;  // lex-sorted complements of reduced representatives

  bool is_void() const { return facets.empty(); }
  int word_size() const { return static_cast<int>(word.size()); }
  int dim() const { return word_size() - target_length - 1; }
  Face ground() const { return Face::full(word_size()); }
};

struct BuildOptions {
  bool brute_force = false;  // independent all-subsets route, for cross-checks
};

namespace detail {

template <class S>
void facet_dfs(const S& sys, const Word& q, const typename S::Element& pi, int ell,
               const std::vector<typename S::Element>& suffix_delta, int k,
               typename S::Element rho, int rho_len, uint64_t chosen,
               std::vector<Face>& out) {
  const int m = static_cast<int>(q.size());
  if (rho == pi) {  // chosen is reduced and represents pi; deeper letters only repeat
    out.push_back(Face(Face::full(m).mask() & ~chosen));
    return;
  }
  if (k > m) return;
  if (m - k + 1 < ell - rho_len) return;  // not enough letters remain
  // the completion must be available inside the suffix
  auto needed = sys.multiply(sys.inverse(rho), pi);
  if (!coxeter::bruhat_leq(sys, needed, suffix_delta[k])) return;
  if (sys.longer(rho, q[k - 1], Side::Right)) {
    facet_dfs(sys, q, pi, ell, suffix_delta, k + 1,
              sys.apply_gen(rho, q[k - 1], Side::Right), rho_len + 1,
              chosen | uint64_t{1} << (k - 1), out);
  }
  facet_dfs(sys, q, pi, ell, suffix_delta, k + 1, rho, rho_len, chosen, out);
}

}  // namespace detail

template <class S>
SubwordComplex<S> build_complex(const S& sys, const Word& q,
                                const typename S::Element& pi,
                                const BuildOptions& opts = {}) {
  if (q.size() > 64) throw domain_error("word longer than 64 positions");
  coxeter::validate_word(sys, q);
  const int m = static_cast<int>(q.size());
  const int ell = sys.length(pi);

  SubwordComplex<S> cplx{sys, q, pi, ell, {}};
  if (opts.brute_force) {
    if (m > 24) throw domain_error("brute-force facet enumeration capped at 24 positions");
    for (uint64_t sub = 0; sub < (uint64_t{1} << m); ++sub) {
      if (__builtin_popcountll(sub) != ell) continue;
      Word d = word_at(q, Face(sub));
      if (coxeter::is_reduced(sys, d) && coxeter::evaluate_word(sys, d) == pi)
        cplx.facets.push_back(Face(Face::full(m).mask() & ~sub));
    }
  } else {
    // suffix_delta[k] = greedy product of the tail starting at position k
    std::vector<typename S::Element> suffix_delta(m + 2, sys.identity());
    for (int k = m; k >= 1; --k)
      suffix_delta[k] = coxeter::demazure_step(sys, suffix_delta[k + 1], q[k - 1], Side::Left);
    detail::facet_dfs(sys, q, pi, ell, suffix_delta, 1, sys.identity(), 0, 0, cplx.facets);
  }
  std::sort(cplx.facets.begin(), cplx.facets.end(), FaceLess{});
  cplx.facets.erase(std::unique(cplx.facets.begin(), cplx.facets.end()), cplx.facets.end());
  return cplx;
}

template <class S>
bool is_face(const SubwordComplex<S>& cplx, const Face& f) {
  if (!f.subset_of(cplx.ground())) throw domain_error("face has positions beyond the word");
  Word complement = word_at(cplx.word, cplx.ground().minus(f));
  return coxeter::contains_target(cplx.sys, complement, cplx.target);
}

namespace detail {

// Deduplicated submask expansion of the given generators, lex-sorted.
inline std::vector<Face> expand_faces(const std::vector<Face>& generators, int64_t cap) {
  std::unordered_set<uint64_t> seen;
  for (const Face& g : generators) {
    uint64_t mask = g.mask(), sub = mask;
    while (true) {
      if (seen.insert(sub).second &&
          static_cast<int64_t>(seen.size()) > cap)
        throw size_cap_error("face enumeration exceeds cap");
      if (sub == 0) break;
      sub = (sub - 1) & mask;
    }
  }
  std::vector<Face> out;
  out.reserve(seen.size());
  for (uint64_t bits : seen) out.push_back(Face(bits));
  std::sort(out.begin(), out.end(), FaceLess{});
  return out;
}

}  // namespace detail

// Every face of the complex (the void complex has none, not even the empty set).
template <class S>
std::vector<Face> all_faces(const SubwordComplex<S>& cplx, int64_t cap = kDefaultFaceCap) {
  return detail::expand_faces(cplx.facets, cap);
}

// link(F) = { G : G disjoint from F, G union F a face }, as a full face list.
template <class S>
std::vector<Face> link(const SubwordComplex<S>& cplx, const Face& f,
                       int64_t cap = kDefaultFaceCap) {
  if (!is_face(cplx, f)) throw domain_error("link of a non-face");
  std::vector<Face> generators;
  for (const Face& facet : cplx.facets)
    if (f.subset_of(facet)) generators.push_back(facet.minus(f));
  return detail::expand_faces(generators, cap);
}

// deletion(F) = { G in the complex : G disjoint from F }.
template <class S>
std::vector<Face> deletion(const SubwordComplex<S>& cplx, const Face& f,
                           int64_t cap = kDefaultFaceCap) {
  if (!f.subset_of(cplx.ground())) throw domain_error("face has positions beyond the word");
  std::vector<Face> generators;
  for (const Face& facet : cplx.facets) generators.push_back(facet.minus(f));
  return detail::expand_faces(generators, cap);
}

// ---------------------------------------------------------------------------
// Classification and boundary
// ---------------------------------------------------------------------------

struct Classification {
  enum Kind { Void, Ball, Sphere } kind = Void;
  int dim = -2;  // meaningful for balls and spheres only

  bool operator==(const Classification&) const = default;
};

inline const char* to_string(Classification::Kind k) {
  switch (k) {
    case Classification::Void: return "void";
    case Classification::Ball: return "ball";
    default: return "sphere";
  }
}

template <class S>
Classification classify(const SubwordComplex<S>& cplx) {
  if (cplx.is_void()) return {Classification::Void, -2};
  bool sphere = coxeter::demazure_product(cplx.sys, cplx.word) == cplx.target;
  return {sphere ? Classification::Sphere : Classification::Ball, cplx.dim()};
}

// Faces Q \ P whose P has greedy product different from the target; these are
// exactly the boundary faces, and spheres have none.
template <class S>
std::vector<Face> boundary_faces(const SubwordComplex<S>& cplx,
                                 int64_t cap = kDefaultFaceCap) {
  std::vector<Face> out;
  for (const Face& f : all_faces(cplx, cap)) {
    Word p = word_at(cplx.word, cplx.ground().minus(f));
    if (coxeter::demazure_product(cplx.sys, p) != cplx.target) out.push_back(f);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Vertex decomposition
// ---------------------------------------------------------------------------

template <class S>
struct DecompositionNode {
  SubwordComplex<S> complex;
  bool is_leaf = false;        // complex is a single simplex
  bool cone = false;           // first letter lengthens the target: deletion = link
  bool link_void = false;      // first position is in no facet: complex = deletion
  std::unique_ptr<DecompositionNode<S>> link_child;
  std::unique_ptr<DecompositionNode<S>> deletion_child;

  explicit DecompositionNode(SubwordComplex<S> c) : complex(std::move(c)) {}
};

template <class S>
std::unique_ptr<DecompositionNode<S>> vertex_decompose_node(const S& sys, const Word& q,
                                                            const typename S::Element& pi) {
  auto node = std::make_unique<DecompositionNode<S>>(build_complex(sys, q, pi));
  if (node->complex.is_void()) throw domain_error("vertex decomposition of a void complex");
  if (node->complex.facets.size() == 1) {  // a single simplex needs no split
    node->is_leaf = true;
    return node;
  }
  Word rest(q.begin() + 1, q.end());
  if (sys.longer(pi, q[0], Side::Left)) {
    // no representative uses position 1, so it sits in every facet
    node->cone = true;
    node->link_child = vertex_decompose_node(sys, rest, pi);
  } else {
    auto shorter = sys.apply_gen(pi, q[0], Side::Left);
    node->deletion_child = vertex_decompose_node(sys, rest, shorter);
    if (coxeter::contains_target(sys, rest, pi))
      node->link_child = vertex_decompose_node(sys, rest, pi);
    else
      node->link_void = true;
  }
  return node;
}

template <class S>
std::unique_ptr<DecompositionNode<S>> vertex_decompose(const SubwordComplex<S>& cplx) {
  return vertex_decompose_node(cplx.sys, cplx.word, cplx.target);
}

// Facets of the node's complex in the decomposition order: deletion facets
// first, then the split vertex joined onto each link facet.  This order is a
// shelling of the complex.
template <class S>
std::vector<Face> shelling_order(const DecompositionNode<S>& node) {
  if (node.is_leaf) return {node.complex.facets.front()};
  std::vector<Face> out;
  if (node.cone) {
    for (const Face& f : shelling_order(*node.link_child))
      out.push_back(f.shifted(1).with(1));
    return out;
  }
  for (const Face& f : shelling_order(*node.deletion_child)) out.push_back(f.shifted(1));
  if (!node.link_void)
    for (const Face& f : shelling_order(*node.link_child))
      out.push_back(f.shifted(1).with(1));
  return out;
}

// ---------------------------------------------------------------------------
// Simplification and absorbable positions
// ---------------------------------------------------------------------------

// Left-to-right scan keeping exactly the letters that grow the greedy
// product: the lexicographically earliest subword with the same product.
template <class S>
Face simplify(const S& sys, const Word& q, const Face& p) {
  Face kept;
  auto rho = sys.identity();
  for (int pos : p.positions()) {
    if (pos > static_cast<int>(q.size())) throw domain_error("position beyond word end");
    int letter = q[pos - 1];
    if (sys.longer(rho, letter, Side::Right)) {
      rho = sys.apply_gen(rho, letter, Side::Right);
      kept = kept.with(pos);
    }
  }
  return kept;
}

// Positions i outside a reduced set D that D can absorb: adding i keeps the
// greedy product, and the unique removable position of D sits before i.
template <class S>
Face absorbable_set(const S& sys, const Word& q, const Face& d) {
  Word dword = word_at(q, d);
  if (!coxeter::is_reduced(sys, dword))
    throw domain_error("absorbable set requires a reduced position set");
  auto delta = coxeter::evaluate_word(sys, dword);
  Face abs;
  for (int i = 1; i <= static_cast<int>(q.size()); ++i) {
    if (d.contains(i)) continue;
    Face t = d.with(i);
    if (coxeter::demazure_product(sys, word_at(q, t)) != delta) continue;
    int removable = 0, count = 0;
    for (int j : d.positions()) {
      if (coxeter::demazure_product(sys, word_at(q, t.without(j))) == delta) {
        removable = j;
        ++count;
      }
    }
    if (count != 1)
      throw arithmetic_error("expected a unique removable position after absorption");
    if (removable < i) abs = abs.with(i);
  }
  return abs;
}

// ---------------------------------------------------------------------------
// Facet adjacency graph
// ---------------------------------------------------------------------------

struct FacetGraph {
  std::vector<Face> facets;                  // canonical facet order
  std::vector<std::pair<int, int>> edges;    // (from, to), one per interior ridge

  bool is_acyclic() const {
    std::vector<int> indeg(facets.size(), 0);
    for (auto [from, to] : edges) indeg[to]++, (void)from;
    std::vector<int> ready;
    for (size_t v = 0; v < facets.size(); ++v)
      if (indeg[v] == 0) ready.push_back(static_cast<int>(v));
    size_t seen = 0;
    while (!ready.empty()) {
      int v = ready.back();
      ready.pop_back();
      ++seen;
      for (auto [from, to] : edges)
        if (from == v && --indeg[to] == 0) ready.push_back(to);
    }
    return seen == facets.size();
  }
};

// One edge per pair of facets sharing a ridge, oriented toward the facet whose
// reduced complement the union of the two complements simplifies to.
template <class S>
FacetGraph facet_adjacency_graph(const SubwordComplex<S>& cplx) {
  if (cplx.is_void()) throw domain_error("adjacency graph of a void complex");
  FacetGraph g;
  g.facets = cplx.facets;
  const Face ground = cplx.ground();
  for (size_t a = 0; a < g.facets.size(); ++a) {
    for (size_t b = a + 1; b < g.facets.size(); ++b) {
      if (g.facets[a].minus(g.facets[b]).size() != 1 ||
          g.facets[b].minus(g.facets[a]).size() != 1)
        continue;
      Face da = ground.minus(g.facets[a]), db = ground.minus(g.facets[b]);
      Face winner = simplify(cplx.sys, cplx.word, da.unite(db));
      int from, to;
      if (winner == da) {
        from = static_cast<int>(b), to = static_cast<int>(a);
      } else if (winner == db) {
        from = static_cast<int>(a), to = static_cast<int>(b);
      } else {
        throw arithmetic_error("ridge union must simplify to one of its two facets");
      }
      g.edges.emplace_back(from, to);
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

}  // namespace swc::subword
