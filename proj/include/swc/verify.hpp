#pragma once
// Verification sweeps shared by the command-line verify driver and the
// acceptance runner: worked-example reproductions plus exhaustive and seeded
// randomized property suites over small symmetric groups.  Each check returns
// a pass flag, the number of instances covered, and on failure a description
// of the smallest offending input encountered.

#include <bit>
#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "swc/complex.hpp"
#include "swc/coxeter.hpp"
#include "swc/grothendieck.hpp"
#include "swc/kpolynomial.hpp"
#include "swc/polynomial.hpp"
#include "swc/simplicial.hpp"

namespace swc::verify {

using coxeter::Permutation;
using coxeter::Side;
using coxeter::SymmetricGroup;
using coxeter::Word;
using subword::Face;
using subword::SubwordComplex;

struct CheckResult {
  std::string name;
  bool pass = true;
  int64_t checked = 0;
  std::string detail;  // counterexample description when failing

  std::string line() const {
    std::string out = pass ? "[PASS] " : "[FAIL] ";
    out += name + " (" + std::to_string(checked) + " instances)";
    if (!detail.empty()) out += ": " + detail;
    return out;
  }
};

namespace detail {

template <class F>
void for_each_word(int rank, int size, F fn) {
  Word w(size, 1);
  if (size == 0) {
    fn(w);
    return;
  }
  while (true) {
    fn(w);
    int k = size - 1;
    while (k >= 0 && w[k] == rank) w[k--] = 1;
    if (k < 0) break;
    ++w[k];
  }
}

inline uint64_t pack_word(const Word& w) {
  uint64_t key = static_cast<uint64_t>(w.size()) << 56;
  for (size_t i = 0; i < w.size(); ++i)
    key |= static_cast<uint64_t>(w[i]) << (4 * i);
  return key;
}

struct PairKey {
  uint64_t a, b;
  bool operator==(const PairKey&) const = default;
};

struct PairKeyHash {
  size_t operator()(const PairKey& k) const {
    return std::hash<uint64_t>{}(k.a * 0x9e3779b97f4a7c15ull ^ k.b);
  }
};

inline std::string describe(const SymmetricGroup& sys, const Word& q,
                            const Permutation& pi) {
  return "word=(" + coxeter::word_to_string(q) + ") target=" + sys.to_string(pi);
}

inline simplicial::AbstractComplex as_abstract(
    const SubwordComplex<SymmetricGroup>& cplx) {
  std::vector<uint64_t> masks;
  for (const Face& f : cplx.facets) masks.push_back(f.mask());
  return simplicial::AbstractComplex::from_facets(cplx.word_size(), masks);
}

}  // namespace detail

class Checker {
 public:
  // Pentagon circle: five facets, five cyclically adjacent vertex pairs,
  // a one-sphere with a single integral homology class.
  CheckResult pentagon() {
    CheckResult r{"pentagon reproduction"};
    SymmetricGroup s4(4);
    const Word q{3, 2, 3, 2, 3};
    auto pi = s4.parse("1432");
    auto cplx = subword::build_complex(s4, q, pi);
    r.checked = 1;

    std::vector<Face> expect;
    for (auto pair : {std::vector<int>{1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}})
      expect.push_back(Face::from_positions(pair));
    std::sort(expect.begin(), expect.end(), subword::FaceLess{});
    if (cplx.facets != expect) {
      r.pass = false;
      r.detail = "facet list differs";
      return r;
    }
    auto cls = subword::classify(cplx);
    if (!(cls == subword::Classification{subword::Classification::Sphere, 1})) {
      r.pass = false;
      r.detail = "classification is not a 1-sphere";
      return r;
    }
    auto h = simplicial::reduced_homology(detail::as_abstract(cplx));
    bool circle = h.size() == 3 && h[0].is_zero() && h[1].is_zero() &&
                  h[2].free_rank == 1 && h[2].torsion.empty();
    if (!circle) {
      r.pass = false;
      r.detail = "homology is not a single class in degree one";
    }
    return r;
  }

  // The ten-letter word whose feasible sets violate the exchange axiom.
  CheckResult greedoid_counterexample() {
    CheckResult r{"feasible-set exchange failure"};
    SymmetricGroup s5(5);
    const Word q{4, 3, 2, 1, 4, 3, 2, 4, 3, 4};
    auto pi = s5.parse("12543");
    if (!is_reduced(s5, q) || evaluate_word(s5, q) != longest_element(s5)) {
      r.pass = false;
      r.detail = "ambient word is not a reduced word for the longest element";
      return r;
    }
    auto cplx = subword::build_complex(s5, q, pi);
    auto feasible = [&](const Face& y) {
      if (!is_reduced(s5, subword::word_at(q, y))) return false;
      for (const Face& facet : cplx.facets)
        if (y.disjoint(facet)) return true;
      return false;
    };
    Face x = Face::from_positions({2, 5, 6});
    Face y = Face::from_positions({1, 9});
    r.checked = 1;
    if (!feasible(x) || !feasible(y) || x.size() <= y.size()) {
      r.pass = false;
      r.detail = "chosen feasible sets do not have the stated shape";
      return r;
    }
    for (int p : x.minus(y).positions()) {
      ++r.checked;
      if (is_reduced(s5, subword::word_at(q, y.with(p)))) {
        r.pass = false;
        r.detail = "augmenting position " + std::to_string(p) + " stays reduced";
        return r;
      }
    }
    return r;
  }

  // For every word and every contained target: the product-vs-target
  // dichotomy matches the homology profile, and the product-based boundary
  // matches the ridge-degree boundary.
  CheckResult ball_sphere_law(int max_size) {
    CheckResult r{"ball/sphere law and boundary"};
    SymmetricGroup s4(4);
    auto elements = all_elements(s4);
    for (int size = 0; size <= max_size && r.pass; ++size) {
      detail::for_each_word(3, size, [&](const Word& q) {
        if (!r.pass) return;
        auto delta_q = demazure_product(s4, q);
        for (const auto& pi : elements) {
          const bool contained = bruhat_leq(s4, pi, delta_q);
          auto v = verdict(q, pi);
          if ((v.rel == Rel::NotContained) == contained) {
            r.pass = false;
            r.detail = detail::describe(s4, q, pi) + ": containment mismatch";
            return;
          }
          if (v.rel == Rel::NotContained) continue;
          ++r.checked;
          if (!v.homology_ok) {
            r.pass = false;
            r.detail = detail::describe(s4, q, pi) + ": homology profile mismatch";
            return;
          }
          if (!boundary_matches(s4, q, pi)) {
            r.pass = false;
            r.detail = detail::describe(s4, q, pi) + ": boundary mismatch";
            return;
          }
        }
      });
    }
    return r;
  }

  // Face route == signed-fiber route == facet route; the two dual routes
  // agree; substituting 1-z into the dual recovers the plain polynomial.
  CheckResult kpoly_routes(int max_size) {
    CheckResult r{"K-polynomial route agreement"};
    SymmetricGroup s4(4);
    auto elements = all_elements(s4);
    for (int size = 0; size <= max_size && r.pass; ++size) {
      detail::for_each_word(3, size, [&](const Word& q) {
        if (!r.pass) return;
        for (const auto& pi : elements) {
          if (!kpoly_instance_ok(s4, q, pi, r)) return;
        }
      });
    }
    return r;
  }

  CheckResult kpoly_random(int trials, int max_size, uint32_t seed) {
    CheckResult r{"K-polynomial random words"};
    SymmetricGroup s5(5);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> len(0, max_size);
    std::uniform_int_distribution<int> letter(1, 4);
    for (int t = 0; t < trials && r.pass; ++t) {
      Word q;
      const int m = len(rng);
      for (int k = 0; k < m; ++k) q.push_back(letter(rng));
      auto pi = s5.identity();
      for (int k = 0; k < 12; ++k) pi = s5.apply_gen(pi, letter(rng), Side::Right);
      kpoly_instance_ok(s5, q, pi, r);
    }
    return r;
  }

  // Every complement-face link is either acyclic (product above the target)
  // or a single class in the expected degree (product equal), and the
  // alternating sums reproduce the dual K-polynomial computed from faces.
  // The link profile is established on the subword directly (cached across
  // ambient words); up to cross_size the genuine in-complex link Betti
  // numbers are recomputed and must agree entry for entry.
  CheckResult hochster(int max_size, int cross_size = 5) {
    CheckResult r{"link homology vs dual K-polynomial"};
    SymmetricGroup s4(4);
    auto elements = all_elements(s4);
    for (int size = 0; size <= max_size && r.pass; ++size) {
      const uint64_t total = uint64_t{1} << size;
      detail::for_each_word(3, size, [&](const Word& q) {
        if (!r.pass) return;
        auto delta_q = demazure_product(s4, q);
        for (const auto& pi : elements) {
          if (!bruhat_leq(s4, pi, delta_q)) continue;
          const int len = s4.length(pi);
          kpoly::SparsePolynomial expected;
          std::map<std::pair<int, uint64_t>, int64_t> betti;
          for (uint64_t pmask = 0; pmask < total; ++pmask) {
            auto v = verdict(subword::word_at(q, Face(pmask)), pi);
            ++r.checked;
            if (!v.homology_ok) {
              r.pass = false;
              r.detail = detail::describe(s4, q, pi) + ": bad link at subset mask " +
                         std::to_string(pmask);
              return;
            }
            if (v.rel != Rel::Equal) continue;
            kpoly::Monomial mono;
            for (int p = 1; p <= size; ++p)
              if (pmask >> (p - 1) & 1) mono.emplace_back(kpoly::VariableName::z(p), 1);
            const int excess = std::popcount(pmask) - len;
            expected.add_term(mono, excess % 2 == 0 ? 1 : -1);
            betti[{std::popcount(pmask) - len, pmask}] = 1;
          }
          auto cplx = subword::build_complex(s4, q, pi);
          if (expected != kpoly::kpoly_dual_faces(cplx)) {
            r.pass = false;
            r.detail = detail::describe(s4, q, pi) + ": alternating sum disagrees";
            return;
          }
          if (size <= cross_size && kpoly::hochster_betti(cplx) != betti) {
            r.pass = false;
            r.detail = detail::describe(s4, q, pi) + ": in-complex links disagree";
            return;
          }
        }
      });
    }
    return r;
  }

  // Recursive divided-difference polynomials against both subword-complex
  // routes, plus the closed-form top polynomials.
  CheckResult grothendieck_cross() {
    CheckResult r{"Grothendieck cross-validation"};
    auto run = [&](int n, bool use_y) {
      SymmetricGroup sn(n);
      auto table = groth::grothendieck_table(n, use_y);
      if (table.at(longest_element(sn)) != groth::grothendieck_top(n, use_y)) {
        r.pass = false;
        r.detail = "closed form mismatch at the longest element";
        return;
      }
      for (const auto& [w, g] : table) {
        ++r.checked;
        for (auto method : {groth::KMethod::Demazure, groth::KMethod::Absorbable}) {
          if (groth::grothendieck_from_complex(n, w, use_y, method) != g) {
            r.pass = false;
            r.detail = std::string(use_y ? "double" : "single") + " polynomial for " +
                       sn.to_string(w) + " disagrees between routes";
            return;
          }
        }
      }
    };
    run(4, false);
    if (r.pass) run(3, true);
    return r;
  }

  // Every grid subset names exactly one target, with the expected sign.
  CheckResult porism() {
    CheckResult r{"grid subsets name unique targets"};
    for (int n = 1; n <= 3; ++n) {
      r.checked += int64_t{1} << (n * n);
      if (!groth::porism_scan(n)) {
        r.pass = false;
        r.detail = "scan failed at grid size " + std::to_string(n);
        return r;
      }
    }
    return r;
  }

  // Absorbable positions of each reduced pipe dream match the
  // northeast-crossing picture.
  CheckResult pipe_dream_rule(int max_n) {
    CheckResult r{"pipe dream absorbable picture"};
    for (int n = 1; n <= max_n && r.pass; ++n) {
      SymmetricGroup sn(n);
      for (const auto& w : all_elements(sn)) {
        ++r.checked;
        if (!groth::pipe_dream_absorbable_check(n, w)) {
          r.pass = false;
          r.detail = "grid " + std::to_string(n) + ", permutation " + sn.to_string(w);
          return r;
        }
      }
    }
    return r;
  }

  // One-letter deletions from words one longer than the target: never more
  // than two hits; exactly two when the greedy product equals the target;
  // exactly one from a reduced word evaluating to a cover.
  CheckResult exchange_lemma(int max_size) {
    CheckResult r{"one-letter deletion counts"};
    SymmetricGroup s4(4);
    auto elements = all_elements(s4);
    for (int size = 1; size <= max_size && r.pass; ++size) {
      detail::for_each_word(3, size, [&](const Word& t) {
        if (!r.pass) return;
        auto delta_t = demazure_product(s4, t);
        const bool reduced = is_reduced(s4, t);
        auto tau = evaluate_word(s4, t);
        for (const auto& pi : elements) {
          if (s4.length(pi) + 1 != size) continue;
          ++r.checked;
          int hits = 0;
          for (size_t j = 0; j < t.size(); ++j) {
            Word rest;
            for (size_t k = 0; k < t.size(); ++k)
              if (k != j) rest.push_back(t[k]);
            if (evaluate_word(s4, rest) == pi) ++hits;
          }
          std::string fail;
          if (hits > 2) fail = "more than two deletions hit";
          if (delta_t == pi && hits != 2) fail = "product equal but not two hits";
          if (reduced && pi != tau && bruhat_leq(s4, pi, tau) && hits != 1)
            fail = "cover below a reduced word without exactly one hit";
          if (!fail.empty()) {
            r.pass = false;
            r.detail = detail::describe(s4, t, pi) + ": " + fail;
            return;
          }
        }
      });
    }
    return r;
  }

  // Minimal words containing every reduced word of the rank-two longest
  // element: length four, exactly the two alternating patterns.
  CheckResult universal_word() {
    CheckResult r{"minimal universal word"};
    SymmetricGroup s3(3);
    auto pi = s3.parse("321");
    if (!minimal_universal_word(s3, pi, 3).empty()) {
      r.pass = false;
      r.detail = "a word of length three should not suffice";
      return r;
    }
    auto hits = minimal_universal_word(s3, pi, 6);
    r.checked = 1;
    std::vector<Word> expect{{1, 2, 1, 2}, {2, 1, 2, 1}};
    if (hits != expect) {
      r.pass = false;
      r.detail = "witness set is not the two alternating length-four words";
    }
    return r;
  }

  // Facet orientation is acyclic and seeded random linear extensions of it
  // are shellings.  Experimental: failures are reported, not asserted.
  CheckResult shelling_experiments(int max_size, int extensions, uint32_t seed) {
    CheckResult r{"facet-orientation shelling experiments"};
    SymmetricGroup s4(4);
    auto elements = all_elements(s4);
    std::mt19937 rng(seed);
    for (int size = 0; size <= max_size && r.pass; ++size) {
      detail::for_each_word(3, size, [&](const Word& q) {
        if (!r.pass) return;
        auto delta_q = demazure_product(s4, q);
        for (const auto& pi : elements) {
          if (!bruhat_leq(s4, pi, delta_q)) continue;
          auto cplx = subword::build_complex(s4, q, pi);
          auto graph = subword::facet_adjacency_graph(cplx);
          ++r.checked;
          if (!graph.is_acyclic()) {
            r.pass = false;
            r.detail = detail::describe(s4, q, pi) + ": orientation has a cycle";
            return;
          }
          if (graph.facets.size() < 2) continue;
          std::vector<std::vector<int>> out(graph.facets.size());
          std::vector<int> indeg0(graph.facets.size(), 0);
          for (auto [from, to] : graph.edges) {
            out[from].push_back(to);
            ++indeg0[to];
          }
          std::vector<uint64_t> masks;
          for (const Face& f : graph.facets) masks.push_back(f.mask());
          auto abstract = detail::as_abstract(cplx);
          for (int e = 0; e < extensions; ++e) {
            auto order = random_extension(out, indeg0, masks, rng);
            auto check = simplicial::verify_shelling(abstract, order);
            if (!check.ok) {
              r.pass = false;
              std::ostringstream os;
              os << detail::describe(s4, q, pi) << ": extension " << e << " ("
                 << check.reason << ", order positions " << check.fail_j << " and "
                 << check.fail_i << "), order:";
              for (uint64_t mask : order) {
                os << " {";
                bool first = true;
                for (int p : Face(mask).positions())
                  os << (first ? "" : ",") << p, first = false;
                os << "}";
              }
              r.detail = os.str();
              return;
            }
          }
        }
      });
    }
    return r;
  }

 private:
  enum class Rel : uint8_t { NotContained, Equal, Above };
  struct Verdict {
    Rel rel;
    bool homology_ok;
  };

  std::unordered_map<detail::PairKey, Verdict, detail::PairKeyHash> verdicts_;

  // Classification-vs-homology verdict for one (word, target) pair, cached:
  // these recur as links across many ambient words.
  Verdict verdict(const Word& w, const Permutation& pi) {
    detail::PairKey key{detail::pack_word(w), pi.pack()};
    if (auto it = verdicts_.find(key); it != verdicts_.end()) return it->second;
    SymmetricGroup s4(4);
    auto cplx = subword::build_complex(s4, w, pi);
    Verdict v{Rel::NotContained, true};
    if (!cplx.is_void()) {
      auto delta = demazure_product(s4, w);
      v.rel = delta == pi ? Rel::Equal : Rel::Above;
      auto h = simplicial::reduced_homology(detail::as_abstract(cplx));
      const int top = static_cast<int>(w.size()) - s4.length(pi);
      for (int k = 0; k < static_cast<int>(h.size()); ++k) {
        if (v.rel == Rel::Equal && k == top) {
          if (h[k].free_rank != 1 || !h[k].torsion.empty()) v.homology_ok = false;
        } else if (!h[k].is_zero()) {
          v.homology_ok = false;
        }
      }
      if (v.rel == Rel::Equal &&
          (top >= static_cast<int>(h.size()) ||
           h[top].free_rank != 1))  // top class must actually be present
        v.homology_ok = false;
    }
    verdicts_[key] = v;
    return v;
  }

  // Product-based boundary faces against the ridge-degree boundary.
  static bool boundary_matches(const SymmetricGroup& sys, const Word& q,
                               const Permutation& pi) {
    auto cplx = subword::build_complex(sys, q, pi);
    const int m = cplx.word_size();
    auto abstract = detail::as_abstract(cplx);
    std::vector<char> topo(uint64_t{1} << m, 0);
    for (const auto& [ridge, deg] : simplicial::ridge_degrees(abstract))
      if (deg == 1) topo[ridge] = 1;
    for (uint64_t mask = (uint64_t{1} << m); mask-- > 0;) {
      if (!topo[mask]) continue;
      for (int b = 0; b < m; ++b)
        if (mask >> b & 1) topo[mask ^ (uint64_t{1} << b)] = 1;
    }
    std::vector<char> from_delta(uint64_t{1} << m, 0);
    for (const Face& f : subword::boundary_faces(cplx)) from_delta[f.mask()] = 1;
    return topo == from_delta;
  }

  template <class S>
  bool kpoly_instance_ok(const S& sys, const Word& q,
                         const typename S::Element& pi, CheckResult& r) {
    ++r.checked;
    auto cplx = subword::build_complex(sys, q, pi);
    auto faces = kpoly::kpoly_faces(cplx);
    auto dem = kpoly::kpoly_demazure(sys, q, pi);
    auto shell = kpoly::kpoly_shelling(cplx);
    auto dual = kpoly::kpoly_dual(sys, q, pi);
    auto dual2 = kpoly::kpoly_dual_faces(cplx);
    std::string fail;
    if (faces != dem) fail = "face route differs from signed-fiber route";
    else if (faces != shell) fail = "face route differs from facet route";
    else if (dual != dual2) fail = "dual routes differ";
    else if (!kpoly::alexander_inversion_check(sys, q, pi))
      fail = "inversion does not recover the plain polynomial";
    if (!fail.empty()) {
      r.pass = false;
      r.detail = detail::describe(sys, q, pi) + ": " + fail;
      return false;
    }
    return true;
  }

  static std::vector<uint64_t> random_extension(
      const std::vector<std::vector<int>>& out, std::vector<int> indeg,
      const std::vector<uint64_t>& masks, std::mt19937& rng) {
    std::vector<int> ready;
    for (size_t v = 0; v < indeg.size(); ++v)
      if (indeg[v] == 0) ready.push_back(static_cast<int>(v));
    std::vector<uint64_t> order;
    while (!ready.empty()) {
      std::uniform_int_distribution<size_t> pick(0, ready.size() - 1);
      size_t at = pick(rng);
      int v = ready[at];
      ready[at] = ready.back();
      ready.pop_back();
      order.push_back(masks[v]);
      for (int to : out[v])
        if (--indeg[to] == 0) ready.push_back(to);
    }
    return order;
  }

};

}  // namespace swc::verify
