// Square word geometry, recursive vs subword-complex Grothendieck
// polynomials, the Fomin-Kirillov expansion, pipe dreams, and the
// unique-target coefficient scan.
#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "swc/grothendieck.hpp"

using namespace swc;
using namespace swc::coxeter;
using namespace swc::groth;
namespace kp = swc::kpoly;

namespace {

kp::SparsePolynomial X(int i) {
  return kp::SparsePolynomial::variable(kp::VariableName::x(i));
}
kp::SparsePolynomial Y(int i) {
  return kp::SparsePolynomial::variable(kp::VariableName::y(i));
}
kp::SparsePolynomial C(int64_t c) { return kp::SparsePolynomial::constant(c); }

}  // namespace

TEST_CASE("square word and grid geometry") {
  CHECK(square_word(1) == Word{1});
  CHECK(square_word(2) == Word{2, 1, 3, 2});
  CHECK(square_word(3) == Word{3, 2, 1, 4, 3, 2, 5, 4, 3});
  CHECK(square_word(4).size() == 16);

  Grid g(3);
  CHECK(g.letter(1, 1) == 1);
  CHECK(g.letter(2, 3) == 4);
  CHECK(g.position(1, 3) == 1);  // upper-right cell leads
  CHECK(g.position(1, 1) == 3);
  CHECK(g.position(2, 3) == 4);
  CHECK(g.position(3, 1) == 9);
  for (int p = 1; p <= 9; ++p) {
    auto [r, c] = g.cell(p);
    CHECK(g.position(r, c) == p);
    CHECK(square_word(3)[p - 1] == g.letter(r, c));
  }
  CHECK(g.variables()[0] == kp::VariableName::z2(1, 3));
  CHECK(g.variables()[8] == kp::VariableName::z2(3, 1));

  CHECK_THROWS_AS(Grid(0), domain_error);
  CHECK_THROWS_AS(Grid(9), domain_error);  // would need S_18
}

TEST_CASE("embedding fixes the tail") {
  SymmetricGroup s3(3);
  auto w = s3.parse("132");
  auto big = embed_permutation(w, 3, 6);
  CHECK(big.size() == 6);
  CHECK(big(1) == 1);
  CHECK(big(2) == 3);
  CHECK(big(3) == 2);
  for (int j = 4; j <= 6; ++j) CHECK(big(j) == j);
  CHECK(embed_permutation(s3.identity(), 3, 6) == Permutation::identity(6));
}

TEST_CASE("top polynomials") {
  CHECK(grothendieck_top(1, false) == C(1));
  CHECK(grothendieck_top(1, true) == C(1));
  CHECK(grothendieck_top(2, false) == C(1) - X(1));
  CHECK(grothendieck_top(2, true) == C(1) - X(1) * Y(1));
  CHECK(grothendieck_top(3, false) == (C(1) - X(1)) * (C(1) - X(1)) * (C(1) - X(2)));
  CHECK(grothendieck_top(3, true) ==
        (C(1) - X(1) * Y(1)) * (C(1) - X(1) * Y(2)) * (C(1) - X(2) * Y(1)));
}

TEST_CASE("recursive polynomials for the full rank-two table") {
  SymmetricGroup s3(3);
  auto table = grothendieck_table(3, false);
  REQUIRE(table.size() == 6);
  CHECK(table.at(s3.parse("123")) == C(1));
  CHECK(table.at(s3.parse("213")) == C(1) - X(1));
  CHECK(table.at(s3.parse("132")) == C(1) - X(1) * X(2));
  CHECK(table.at(s3.parse("231")) == (C(1) - X(1)) * (C(1) - X(2)));
  CHECK(table.at(s3.parse("312")) == (C(1) - X(1)) * (C(1) - X(1)));
  CHECK(table.at(s3.parse("321")) == (C(1) - X(1)) * (C(1) - X(1)) * (C(1) - X(2)));

  CHECK(grothendieck_recursive(3, s3.parse("132"), false) == C(1) - X(1) * X(2));
  CHECK_THROWS_AS(grothendieck_recursive(3, Permutation::identity(4), false),
                  domain_error);
}

TEST_CASE("recursion collapses to one at the identity") {
  // building the table exercises every weak-order edge, so any path
  // dependence would throw before we get here
  CHECK(grothendieck_table(4, false).at(Permutation::identity(4)) == C(1));
  CHECK(grothendieck_table(3, true).at(Permutation::identity(3)) == C(1));
  CHECK(grothendieck_table(3, true).at(SymmetricGroup(3).parse("132")) ==
        C(1) - X(1) * X(2) * Y(1) * Y(2));
}

TEST_CASE("grid K-polynomial specializations") {
  SymmetricGroup s3(3);
  auto id = s3.identity();
  auto w = s3.parse("132");

  CHECK(grothendieck_from_complex(3, id, false, KMethod::Demazure) == C(1));
  CHECK(grothendieck_from_complex(3, id, true, KMethod::Absorbable) == C(1));

  auto single = grothendieck_from_complex(3, w, false, KMethod::Demazure);
  CHECK(single == C(1) - X(1) * X(2));
  CHECK(single.to_text() == "1 - x[1]*x[2]");
  CHECK(grothendieck_from_complex(3, w, false, KMethod::Absorbable) == single);

  auto dbl = grothendieck_from_complex(3, w, true, KMethod::Demazure);
  CHECK(dbl == C(1) - X(1) * X(2) * Y(1) * Y(2));
  CHECK(grothendieck_from_complex(3, w, true, KMethod::Absorbable) == dbl);
}

TEST_CASE("recursive and complex routes agree") {
  for (int n = 1; n <= 3; ++n) {
    auto single = grothendieck_table(n, false);
    auto dbl = grothendieck_table(n, true);
    for (const auto& [w, g] : single) {
      CHECK(grothendieck_from_complex(n, w, false, KMethod::Demazure) == g);
      CHECK(grothendieck_from_complex(n, w, false, KMethod::Absorbable) == g);
    }
    for (const auto& [w, g] : dbl) {
      CHECK(grothendieck_from_complex(n, w, true, KMethod::Demazure) == g);
      CHECK(grothendieck_from_complex(n, w, true, KMethod::Absorbable) == g);
    }
  }
}

TEST_CASE("Fomin-Kirillov expansion") {
  SymmetricGroup s3(3);
  CHECK(fomin_kirillov_expand(3, s3.identity()) == C(1));

  auto t12 = X(1) + Y(2) - X(1) * Y(2);
  auto t21 = X(2) + Y(1) - X(2) * Y(1);
  auto fk = fomin_kirillov_expand(3, s3.parse("132"));
  CHECK(fk == t12 + t21 - t12 * t21);

  // killing the y variables leaves the single flavor at 1-x
  std::map<kp::VariableName, kp::SparsePolynomial> kill_y{
      {kp::VariableName::y(1), {}}, {kp::VariableName::y(2), {}},
      {kp::VariableName::y(3), {}}};
  CHECK(fk.substitute(kill_y) == X(1) + X(2) - X(1) * X(2));

  // flipping every variable recovers the double Grothendieck polynomial
  std::map<kp::VariableName, kp::SparsePolynomial> flip;
  for (int i = 1; i <= 3; ++i) {
    flip[kp::VariableName::x(i)] = kp::one_minus(kp::VariableName::x(i));
    flip[kp::VariableName::y(i)] = kp::one_minus(kp::VariableName::y(i));
  }
  auto dbl = grothendieck_table(3, true);
  for (const auto& [w, g] : dbl)
    CHECK(fomin_kirillov_expand(3, w).substitute(flip) == g);
}

TEST_CASE("pipe dream listing and rendering") {
  SymmetricGroup s3(3);
  auto dreams = pipe_dreams(3, s3.parse("132"));
  REQUIRE(dreams.size() == 2);
  std::set<uint64_t> masks;
  for (const auto& pd : dreams) {
    CHECK(pd.n == 3);
    masks.insert(pd.crossings);
  }
  // the two reduced dreams: a single crossing at cell (1,2) or (2,1)
  Grid g(3);
  CHECK(masks == std::set<uint64_t>{uint64_t{1} << (g.position(1, 2) - 1),
                                    uint64_t{1} << (g.position(2, 1) - 1)});

  PipeDream one{3, uint64_t{1} << (g.position(1, 2) - 1)};
  CHECK(render_pipe_dream(one) ==
        "·+·\n"
        "···\n"
        "···\n");

  SymmetricGroup s2(2);
  auto trivial = pipe_dreams(2, s2.identity());
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].crossings == 0);
  CHECK(render_pipe_dream(trivial[0]) == "··\n··\n");
}

TEST_CASE("elbow strands and the northeast crossing rule") {
  Grid g(3);
  PipeDream cross_12{3, uint64_t{1} << (g.position(1, 2) - 1)};
  CHECK(elbow_pipes_cross(cross_12, 2, 1));       // meet at (1,2), northeast
  CHECK_FALSE(elbow_pipes_cross(cross_12, 3, 1));
  CHECK_THROWS_AS(elbow_pipes_cross(cross_12, 1, 2), domain_error);

  PipeDream cross_21{3, uint64_t{1} << (g.position(2, 1) - 1)};
  CHECK_FALSE(elbow_pipes_cross(cross_21, 1, 2));  // crossing sits southwest

  PipeDream empty{2, 0};
  CHECK_FALSE(elbow_pipes_cross(empty, 1, 1));
  CHECK_FALSE(elbow_pipes_cross(empty, 2, 2));
}

TEST_CASE("absorbable positions match the pipe picture") {
  for (int n = 1; n <= 4; ++n) {
    SymmetricGroup sn(n);
    for (const auto& w : all_elements(sn)) {
      INFO("n " << n << " w " << sn.to_string(w));
      CHECK(pipe_dream_absorbable_check(n, w));
    }
  }
}

TEST_CASE("every grid subset points at its own product") {
  CHECK(porism_scan(1));
  CHECK(porism_scan(2));
  CHECK_THROWS_AS(porism_scan(4), domain_error);
}

TEST_CASE("exhaustive three-by-three scan") {
  CHECK(porism_scan(3));
}
