// The pentagon: Delta((s3,s2,s3,s2,s3), 1432) worked end to end — facets,
// classification, homology, boundary, facet orientation, K-polynomial.

#include <iostream>

#include "swc/complex.hpp"
#include "swc/coxeter.hpp"
#include "swc/kpolynomial.hpp"
#include "swc/simplicial.hpp"

using namespace swc;

int main() {
  coxeter::SymmetricGroup s4(4);
  const coxeter::Word q{3, 2, 3, 2, 3};
  const auto pi = s4.parse("1432");

  std::cout << "word Q = " << coxeter::word_to_string(q) << "\n"
            << "target = " << s4.to_string(pi) << "  (length " << s4.length(pi)
            << ")\n"
            << "Demazure product of Q = "
            << s4.to_string(coxeter::demazure_product(s4, q)) << "\n\n";

  auto cplx = subword::build_complex(s4, q, pi);
  std::cout << "facets (complements of reduced subwords for the target):\n";
  for (const auto& f : cplx.facets) {
    std::cout << "  {";
    bool first = true;
    for (int p : f.positions()) std::cout << (first ? "" : ",") << p, first = false;
    auto rest = subword::word_at(q, cplx.ground().minus(f));
    std::cout << "}  complement spells " << coxeter::word_to_string(rest) << "\n";
  }

  auto cls = subword::classify(cplx);
  std::cout << "\nclassification: " << subword::to_string(cls.kind) << "("
            << cls.dim << ")\n";

  std::vector<uint64_t> masks;
  for (const auto& f : cplx.facets) masks.push_back(f.mask());
  auto h = simplicial::reduced_homology(
      simplicial::AbstractComplex::from_facets(cplx.word_size(), masks));
  std::cout << "reduced homology ranks by dimension:";
  for (size_t k = 0; k < h.size(); ++k)
    std::cout << "  dim " << static_cast<int>(k) - 1 << ": " << h[k].free_rank;
  std::cout << "\nboundary faces: " << subword::boundary_faces(cplx).size()
            << " (a sphere has none)\n\n";

  auto graph = subword::facet_adjacency_graph(cplx);
  std::cout << "facet orientation edges (toward the simplification winner):\n";
  for (auto [from, to] : graph.edges)
    std::cout << "  facet " << from + 1 << " -> facet " << to + 1 << "\n";
  std::cout << "acyclic: " << (graph.is_acyclic() ? "yes" : "no") << "\n\n";

  std::cout << "K-polynomial (face expansion):\n  "
            << kpoly::kpoly_faces(cplx).to_text() << "\n"
            << "dual K-polynomial:\n  "
            << kpoly::kpoly_dual(s4, q, pi).to_text() << "\n";
  return 0;
}
