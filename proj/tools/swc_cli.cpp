// Command-line front end: Demazure products, subword complexes,
// K-polynomials, Grothendieck polynomials, pipe dreams, and the verification
// suites, with text or JSON output.
//
// Exit codes: 0 success, 1 verification failure, 2 command-line parse error,
// 3 domain error (bad permutation, letter out of range, size cap, ...).

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "swc/complex.hpp"
#include "swc/coxeter.hpp"
#include "swc/grothendieck.hpp"
#include "swc/kpolynomial.hpp"
#include "swc/polynomial.hpp"
#include "swc/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using swc::coxeter::Word;

struct Request {
  std::string type = "A";
  int rank = 0;  // 0 = infer from the permutation argument where possible
  std::string word, target, method, suite = "all";
  int n = 0, max_len = 8, max_size = 6;
  uint32_t seed = 1;
  bool use_y = false, emit_json = false;
};

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Word parse_word(const std::string& text) {
  Word out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw usage_error("bad word letter: '" + tok + "'");
    }
  }
  return out;
}

int count_tokens(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  int count = 0;
  while (in >> tok) ++count;
  return count;
}

// Degree of the group: explicit --rank, else the length of the one-line
// permutation for types A and B.
int resolve_rank(const Request& rq) {
  if (rq.rank > 0) return rq.rank;
  if (rq.type == "I") throw usage_error("--rank is required for type I");
  if (rq.target.empty()) throw usage_error("--rank is required without a permutation to infer it from");
  if (rq.target.find_first_of(" \t,") != std::string::npos) return count_tokens(rq.target);
  return static_cast<int>(rq.target.size());
}

int64_t face_cap() {
  if (const char* env = std::getenv("COXETER_MAX_FACES")) {
    try {
      return std::stoll(env);
    } catch (const std::exception&) {
      throw usage_error("COXETER_MAX_FACES is not a number");
    }
  }
  return swc::subword::kDefaultFaceCap;
}

std::string face_text(const swc::subword::Face& f) {
  std::string out = "{";
  bool first = true;
  for (int p : f.positions()) {
    if (!first) out += ",";
    out += std::to_string(p);
    first = false;
  }
  return out + "}";
}

json poly_json(const swc::kpoly::SparsePolynomial& p) {
  json terms = json::array();
  for (const auto& [mono, coeff] : p.terms()) {
    json vars = json::array();
    for (const auto& [v, exp] : mono) {
      json entry = json::array();
      entry.push_back(std::string(1, v.family));
      entry.push_back(v.i);
      if (v.j != 0) entry.push_back(v.j);
      for (int k = 0; k < exp; ++k) vars.push_back(entry);
    }
    terms.push_back(json{{"coeff", coeff}, {"monomial", vars}});
  }
  return terms;
}

template <class S>
int cmd_delta(const S& sys, const Request& rq) {
  std::cout << sys.to_string(demazure_product(sys, parse_word(rq.word))) << '\n';
  return 0;
}

template <class S>
int cmd_complex(const S& sys, const Request& rq) {
  const Word q = parse_word(rq.word);
  const auto pi = sys.parse(rq.target);
  auto cplx = swc::subword::build_complex(sys, q, pi);
  if (static_cast<int64_t>(cplx.facets.size()) > face_cap())
    throw swc::size_cap_error("facet count exceeds COXETER_MAX_FACES");
  auto cls = swc::subword::classify(cplx);
  if (rq.emit_json) {
    json doc;
    doc["word"] = q;
    doc["target"] = sys.to_string(pi);
    json facets = json::array();
    for (const auto& f : cplx.facets) facets.push_back(f.positions());
    doc["facets"] = facets;
    doc["classification"] = swc::subword::to_string(cls.kind);
    doc["dim"] = cls.dim;
    std::cout << doc.dump() << '\n';
  } else {
    std::cout << "word: " << swc::coxeter::word_to_string(q) << '\n'
              << "target: " << sys.to_string(pi) << '\n'
              << "facets:";
    for (const auto& f : cplx.facets) std::cout << ' ' << face_text(f);
    std::cout << '\n'
              << "classification: " << swc::subword::to_string(cls.kind) << '\n'
              << "dim: " << cls.dim << '\n';
  }
  return 0;
}

template <class S>
int cmd_kpoly(const S& sys, const Request& rq) {
  const Word q = parse_word(rq.word);
  const auto pi = sys.parse(rq.target);
  swc::kpoly::SparsePolynomial p;
  if (rq.method == "demazure") {
    p = swc::kpoly::kpoly_demazure(sys, q, pi);
  } else if (rq.method == "dual") {
    p = swc::kpoly::kpoly_dual(sys, q, pi);
  } else {
    auto cplx = swc::subword::build_complex(sys, q, pi);
    if (static_cast<int64_t>(cplx.facets.size()) > face_cap())
      throw swc::size_cap_error("facet count exceeds COXETER_MAX_FACES");
    p = rq.method == "shelling" ? swc::kpoly::kpoly_shelling(cplx)
                                : swc::kpoly::kpoly_faces(cplx);
  }
  if (rq.emit_json) std::cout << poly_json(p).dump() << '\n';
  else std::cout << p.to_text() << '\n';
  return 0;
}

template <class S>
int cmd_repnum(const S& sys, const Request& rq) {
  std::cout << repetition_number(sys, parse_word(rq.word), sys.parse(rq.target)) << '\n';
  return 0;
}

template <class S>
int cmd_universal(const S& sys, const Request& rq) {
  auto words = minimal_universal_word(sys, sys.parse(rq.target), rq.max_len);
  if (words.empty()) {
    std::cout << "none within bound " << rq.max_len << '\n';
    return 0;
  }
  std::cout << "length: " << words.front().size() << '\n';
  for (const Word& w : words) std::cout << swc::coxeter::word_to_string(w) << '\n';
  return 0;
}

int cmd_groth(const Request& rq) {
  const int n = rq.n > 0 ? rq.n
                         : (rq.target.find_first_of(" \t,") != std::string::npos
                                ? count_tokens(rq.target)
                                : static_cast<int>(rq.target.size()));
  swc::coxeter::SymmetricGroup sn(n);
  const auto w = sn.parse(rq.target);
  swc::kpoly::SparsePolynomial g;
  if (rq.method == "subword")
    g = swc::groth::grothendieck_from_complex(n, w, rq.use_y, swc::groth::KMethod::Demazure);
  else if (rq.method == "absorbable")
    g = swc::groth::grothendieck_from_complex(n, w, rq.use_y, swc::groth::KMethod::Absorbable);
  else if (rq.method == "fk")
    g = swc::groth::fomin_kirillov_expand(n, w);
  else
    g = swc::groth::grothendieck_recursive(n, w, rq.use_y);
  std::cout << g.to_text() << '\n';
  return 0;
}

int cmd_pipedreams(const Request& rq) {
  const int n = rq.n > 0 ? rq.n
                         : (rq.target.find_first_of(" \t,") != std::string::npos
                                ? count_tokens(rq.target)
                                : static_cast<int>(rq.target.size()));
  swc::coxeter::SymmetricGroup sn(n);
  const auto w = sn.parse(rq.target);
  auto dreams = swc::groth::pipe_dreams(n, w);
  if (static_cast<int64_t>(dreams.size()) > face_cap())
    throw swc::size_cap_error("pipe dream count exceeds COXETER_MAX_FACES");
  if (rq.emit_json) {
    json doc;
    doc["n"] = n;
    doc["perm"] = sn.to_string(w);
    json list = json::array();
    for (const auto& pd : dreams) {
      json cells = json::array();
      for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c)
          if (pd.is_crossing(r, c)) cells.push_back(json::array({r, c}));
      list.push_back(cells);
    }
    doc["pipe_dreams"] = list;
    std::cout << doc.dump() << '\n';
  } else {
    bool first = true;
    for (const auto& pd : dreams) {
      if (!first) std::cout << '\n';
      std::cout << swc::groth::render_pipe_dream(pd);
      first = false;
    }
  }
  return 0;
}

int cmd_verify(const Request& rq) {
  swc::verify::Checker checker;
  std::vector<swc::verify::CheckResult> results;
  const bool all = rq.suite == "all";
  if (all || rq.suite == "lemmas") {
    results.push_back(checker.exchange_lemma(std::min(rq.max_size, 7)));
    results.push_back(checker.greedoid_counterexample());
    results.push_back(checker.universal_word());
  }
  if (all || rq.suite == "topology") {
    results.push_back(checker.pentagon());
    results.push_back(checker.ball_sphere_law(rq.max_size));
    results.push_back(checker.shelling_experiments(rq.max_size, 100, rq.seed));
  }
  if (all || rq.suite == "kpoly") {
    results.push_back(checker.kpoly_routes(rq.max_size));
    results.push_back(checker.kpoly_random(200, rq.max_size, rq.seed));
    results.push_back(checker.hochster(rq.max_size));
  }
  if (all || rq.suite == "groth") {
    results.push_back(checker.grothendieck_cross());
    results.push_back(checker.porism());
    results.push_back(checker.pipe_dream_rule(std::clamp(rq.max_size, 1, 4)));
  }
  int failed = 0;
  for (const auto& r : results) {
    std::cout << r.line() << '\n';
    if (!r.pass) ++failed;
  }
  if (failed == 0) {
    std::cout << "all checks passed\n";
    return 0;
  }
  std::cout << failed << " check(s) failed\n";
  return 1;
}

template <class F>
int with_system(const Request& rq, F fn) {
  const int rank = resolve_rank(rq);
  if (rq.type == "B") return fn(swc::coxeter::SignedPermutations(rank));
  if (rq.type == "I") return fn(swc::coxeter::Dihedral(rank));
  return fn(swc::coxeter::SymmetricGroup(rank));
}

}  // namespace

int main(int argc, char** argv) {
  Request rq;
  CLI::App app{"subword complexes, K-polynomials, and Grothendieck polynomials"};
  app.require_subcommand(1);

  auto add_system = [&rq](CLI::App* cmd) {
    cmd->add_option("--type", rq.type, "Coxeter type: A (S_n), B (signed), I (dihedral)")
        ->check(CLI::IsMember({"A", "B", "I"}));
    cmd->add_option("--rank", rq.rank,
                    "degree: S_rank for A, signed permutations of rank letters for B, "
                    "I_2(rank) for I; inferred from the permutation when omitted");
  };

  auto* delta = app.add_subcommand("delta", "Demazure product of a word");
  add_system(delta);
  delta->add_option("--word", rq.word, "space-separated generator indices")->required();

  auto* complex = app.add_subcommand("complex", "facets and classification of a subword complex");
  add_system(complex);
  complex->add_option("--word", rq.word, "ambient word")->required();
  complex->add_option("--target", rq.target, "target element, one-line notation")->required();
  complex->add_flag("--json", rq.emit_json, "emit JSON");

  auto* kpoly = app.add_subcommand("kpoly", "K-polynomial of a subword complex");
  add_system(kpoly);
  kpoly->add_option("--word", rq.word, "ambient word")->required();
  kpoly->add_option("--target", rq.target, "target element, one-line notation")->required();
  kpoly->add_option("--method", rq.method, "faces|demazure|shelling|dual (default faces)")
      ->check(CLI::IsMember({"faces", "demazure", "shelling", "dual"}));
  kpoly->add_flag("--json", rq.emit_json, "emit JSON term list");

  auto* groth = app.add_subcommand("groth", "Grothendieck polynomial of a permutation");
  groth->add_option("--n", rq.n, "degree of the symmetric group; inferred when omitted");
  groth->add_option("--perm", rq.target, "permutation, one-line notation")->required();
  groth->add_option("--method", rq.method, "recursive|subword|absorbable|fk (default recursive)")
      ->check(CLI::IsMember({"recursive", "subword", "absorbable", "fk"}));
  groth->add_flag("--double", rq.use_y, "double polynomial in x and y");

  auto* pipedreams = app.add_subcommand("pipedreams", "reduced pipe dreams of a permutation");
  pipedreams->add_option("--n", rq.n, "grid size; inferred when omitted");
  pipedreams->add_option("--perm", rq.target, "permutation, one-line notation")->required();
  pipedreams->add_flag("--json", rq.emit_json, "emit JSON crossing lists");

  auto* repnum = app.add_subcommand("repnum", "repetition number of a target in a word");
  add_system(repnum);
  repnum->add_option("--word", rq.word, "ambient word")->required();
  repnum->add_option("--target", rq.target, "target element, one-line notation")->required();

  auto* universal = app.add_subcommand("universal", "minimal words containing every reduced word");
  add_system(universal);
  universal->add_option("--perm", rq.target, "target element, one-line notation")->required();
  universal->add_option("--max-len", rq.max_len, "search bound (default 8)");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", rq.suite, "lemmas|topology|kpoly|groth|all (default all)")
      ->check(CLI::IsMember({"lemmas", "topology", "kpoly", "groth", "all"}));
  verify->add_option("--max-size", rq.max_size, "word-size bound for sweeps (default 6)")
      ->check(CLI::Range(0, 12));
  verify->add_option("--seed", rq.seed, "seed for randomized checks (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (delta->parsed()) return with_system(rq, [&](const auto& s) { return cmd_delta(s, rq); });
    if (complex->parsed()) return with_system(rq, [&](const auto& s) { return cmd_complex(s, rq); });
    if (kpoly->parsed()) return with_system(rq, [&](const auto& s) { return cmd_kpoly(s, rq); });
    if (groth->parsed()) return cmd_groth(rq);
    if (pipedreams->parsed()) return cmd_pipedreams(rq);
    if (repnum->parsed()) return with_system(rq, [&](const auto& s) { return cmd_repnum(s, rq); });
    if (universal->parsed()) return with_system(rq, [&](const auto& s) { return cmd_universal(s, rq); });
    return cmd_verify(rq);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const swc::size_cap_error& e) {
    std::cerr << "size cap: " << e.what() << '\n';
    return 3;
  } catch (const swc::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 3;
  } catch (const swc::arithmetic_error& e) {
    std::cerr << "internal check failed: " << e.what() << '\n';
    return 1;
  }
}
