// Core group arithmetic: backends, words, Demazure products, Bruhat order,
// reduced-word enumeration, universal words.

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "swc/coxeter.hpp"

using namespace swc;
using namespace swc::coxeter;

namespace {

Permutation perm(const SymmetricGroup& sys, const std::string& s) { return sys.parse(s); }

template <class S>
typename S::Element random_element(const S& sys, std::mt19937& rng, int steps) {
  auto w = sys.identity();
  std::uniform_int_distribution<int> gen(1, sys.rank());
  for (int k = 0; k < steps; ++k) w = sys.apply_gen(w, gen(rng), Side::Right);
  return w;
}

// Uniform random permutation via Fisher-Yates on one-line values.
Permutation random_permutation(const SymmetricGroup& sys, std::mt19937& rng) {
  int n = sys.degree();
  std::vector<int> vals(n);
  for (int i = 0; i < n; ++i) vals[i] = i + 1;
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> d(0, i);
    std::swap(vals[i], vals[d(rng)]);
  }
  auto w = sys.identity();
  for (int i = 1; i <= n; ++i) w.set(i, vals[i - 1]);
  return w;
}

// All words of exactly the given size over the generators, lex order.
template <class S>
std::vector<Word> all_words_of_size(const S& sys, int size) {
  std::vector<Word> out;
  Word w(size, 1);
  while (true) {
    out.push_back(w);
    int pos = size - 1;
    while (pos >= 0 && w[pos] == sys.rank()) w[pos--] = 1;
    if (pos < 0) break;
    ++w[pos];
  }
  return out;
}

}  // namespace

TEST_CASE("single generator application in one-line notation") {
  SymmetricGroup s4(4);
  CHECK(s4.to_string(s4.apply_gen(s4.identity(), 3, Side::Right)) == "1243");
  CHECK(s4.to_string(s4.apply_gen(perm(s4, "1243"), 3, Side::Right)) == "1234");
  CHECK(s4.to_string(s4.apply_gen(perm(s4, "1243"), 2, Side::Right)) == "1423");
  // left action swaps values instead of positions
  CHECK(s4.to_string(s4.apply_gen(perm(s4, "1243"), 2, Side::Left)) == "1342");
  CHECK_THROWS_AS(s4.apply_gen(s4.identity(), 4, Side::Right), domain_error);
  CHECK_THROWS_AS(s4.apply_gen(s4.identity(), 0, Side::Right), domain_error);
}

TEST_CASE("generators are involutions and shift length by exactly one") {
  SymmetricGroup s4(4);
  SignedPermutations b3(3);
  Dihedral d7(7);
  std::mt19937 rng(42);
  auto check_sys = [&](const auto& sys) {
    for (int trial = 0; trial < 50; ++trial) {
      auto w = random_element(sys, rng, trial % 9);
      for (int g = 1; g <= sys.rank(); ++g) {
        for (Side side : {Side::Left, Side::Right}) {
          auto one = sys.apply_gen(w, g, side);
          CHECK(sys.apply_gen(one, g, side) == w);
          CHECK(std::abs(sys.length(one) - sys.length(w)) == 1);
          CHECK(sys.longer(w, g, side) == (sys.length(one) > sys.length(w)));
        }
      }
    }
  };
  check_sys(s4);
  check_sys(b3);
  check_sys(d7);
}

TEST_CASE("length counts inversions") {
  SymmetricGroup s4(4);
  CHECK(s4.length(s4.identity()) == 0);
  CHECK(s4.length(perm(s4, "1432")) == 3);
  CHECK(s4.length(perm(s4, "4321")) == 6);
}

TEST_CASE("word evaluation is the ordered product") {
  SymmetricGroup s4(4);
  CHECK(evaluate_word(s4, {}) == s4.identity());
  CHECK(s4.to_string(evaluate_word(s4, {3, 2, 3})) == "1432");
  CHECK(evaluate_word(s4, {1, 1}) == s4.identity());
  CHECK_THROWS_AS(evaluate_word(s4, {4}), domain_error);
}

TEST_CASE("reduced words are detected incrementally") {
  SymmetricGroup s4(4);
  CHECK(is_reduced(s4, {3, 2, 3}));
  CHECK_FALSE(is_reduced(s4, {1, 1}));
  CHECK(is_reduced(s4, {2, 3, 2}));
  // agreement with the definition via length, over every word of size <= 5
  for (int size = 0; size <= 5; ++size)
    for (const Word& q : all_words_of_size(s4, size))
      CHECK(is_reduced(s4, q) ==
            (s4.length(evaluate_word(s4, q)) == static_cast<int>(q.size())));
}

TEST_CASE("greedy product keeps only length-increasing steps") {
  SymmetricGroup s4(4);
  CHECK(demazure_product(s4, {}) == s4.identity());
  CHECK(s4.to_string(demazure_product(s4, {1, 1})) == "2134");
  CHECK(s4.to_string(demazure_product(s4, {3, 2, 3, 2, 3})) == "1432");
  // never shorter than any prefix, and fixed on reduced words
  CHECK(demazure_product(s4, {3, 2, 3}) == evaluate_word(s4, {3, 2, 3}));
}

TEST_CASE("greedy product is monotone under taking subwords") {
  SymmetricGroup s4(4);
  for (const Word& q : all_words_of_size(s4, 5)) {
    auto dq = demazure_product(s4, q);
    for (uint32_t sub = 0; sub < 32; ++sub) {
      Word p;
      for (int k = 0; k < 5; ++k)
        if (sub >> k & 1) p.push_back(q[k]);
      CHECK(bruhat_leq(s4, demazure_product(s4, p), dq));
    }
  }
}

TEST_CASE("order comparison matches brute-force subword search") {
  SymmetricGroup s4(4);
  CHECK(bruhat_leq(s4, perm(s4, "1423"), perm(s4, "1432")));
  CHECK_FALSE(bruhat_leq(s4, perm(s4, "2134"), perm(s4, "1432")));
  auto elems = all_elements(s4);
  REQUIRE(elems.size() == 24);
  for (const auto& a : elems) {
    CHECK(bruhat_leq(s4, s4.identity(), a));
    for (const auto& b : elems) {
      bool brute = contains_target_bruteforce(s4, any_reduced_word(s4, b), a);
      CHECK(bruhat_leq(s4, a, b) == brute);
    }
  }
}

TEST_CASE("order comparison on random large-group pairs") {
  SymmetricGroup s6(6);
  std::mt19937 rng(42);
  for (int trial = 0; trial < 10000; ++trial) {
    auto a = random_permutation(s6, rng);
    auto b = random_permutation(s6, rng);
    bool brute = contains_target_bruteforce(s6, any_reduced_word(s6, b), a);
    REQUIRE(bruhat_leq(s6, a, b) == brute);
  }
}

TEST_CASE("containment of a target inside a word") {
  SymmetricGroup s4(4);
  CHECK(contains_target(s4, {}, s4.identity()));
  CHECK(contains_target(s4, {1, 2}, s4.identity()));
  CHECK(contains_target(s4, {3, 2, 3, 2, 3}, perm(s4, "1432")));
  CHECK_FALSE(contains_target(s4, {1, 2}, perm(s4, "1432")));
}

TEST_CASE("containment test agrees with subword search everywhere small") {
  SymmetricGroup s4(4);
  auto elems = all_elements(s4);
  for (int size = 0; size <= 6; ++size) {
    for (const Word& p : all_words_of_size(s4, size)) {
      auto delta = demazure_product(s4, p);
      for (const auto& pi : elems) {
        bool fast = bruhat_leq(s4, pi, delta);
        CHECK(fast == contains_target_bruteforce(s4, p, pi));
        CHECK(fast == contains_target(s4, p, pi));
      }
    }
  }
}

TEST_CASE("greedy product is stable on subwords that still contain it") {
  SymmetricGroup s4(4);
  for (int size = 0; size <= 6; ++size) {
    for (const Word& p : all_words_of_size(s4, size)) {
      auto pi = demazure_product(s4, p);
      for (uint32_t sub = 0; sub < (1u << size); ++sub) {
        Word q;
        for (int k = 0; k < size; ++k)
          if (sub >> k & 1) q.push_back(p[k]);
        if (contains_target(s4, q, pi)) CHECK(demazure_product(s4, q) == pi);
      }
    }
  }
}

TEST_CASE("one-letter deletions from a word one step past reduced") {
  // Words T with |T| = length(pi) + 1.  Count positions whose removal leaves
  // a word evaluating to pi: never more than two; exactly two when the greedy
  // product of T is pi; exactly one when T is reduced and covers pi.
  SymmetricGroup s4(4);
  for (const auto& pi : all_elements(s4)) {
    int lp = s4.length(pi);
    if (lp + 1 > 7) continue;
    for (const Word& t : all_words_of_size(s4, lp + 1)) {
      int hits = 0;
      for (size_t drop = 0; drop < t.size(); ++drop) {
        Word rest;
        for (size_t k = 0; k < t.size(); ++k)
          if (k != drop) rest.push_back(t[k]);
        if (evaluate_word(s4, rest) == pi) ++hits;
      }
      CHECK(hits <= 2);
      if (demazure_product(s4, t) == pi) CHECK(hits == 2);
      if (is_reduced(s4, t)) {
        auto tau = evaluate_word(s4, t);
        if (bruhat_leq(s4, pi, tau) && tau != pi) CHECK(hits == 1);
      }
    }
  }
}

TEST_CASE("reduced word enumeration") {
  SymmetricGroup s4(4);
  CHECK(reduced_words(s4, s4.identity()) == std::vector<Word>{{}});
  CHECK(reduced_words(s4, perm(s4, "1432")) == std::vector<Word>{{2, 3, 2}, {3, 2, 3}});
  SymmetricGroup s3(3);
  CHECK(reduced_words(s3, s3.parse("321")) == std::vector<Word>{{1, 2, 1}, {2, 1, 2}});
  for (const auto& pi : all_elements(s4)) {
    auto words = reduced_words(s4, pi);
    CHECK(static_cast<int64_t>(words.size()) == reduced_word_count(s4, pi));
    CHECK(std::is_sorted(words.begin(), words.end()));
    for (const Word& w : words) {
      CHECK(is_reduced(s4, w));
      CHECK(evaluate_word(s4, w) == pi);
    }
    // the lex-least enumerated word matches the greedy construction
    CHECK(words.front() == lex_min_reduced_word(s4, pi));
  }
  SymmetricGroup s5(5);
  CHECK(reduced_word_count(s5, longest_element(s5)) == 768);
}

TEST_CASE("repetition count of a target inside a word") {
  SymmetricGroup s4(4);
  CHECK(repetition_number(s4, {}, perm(s4, "1432")) == 0);
  CHECK(repetition_number(s4, {}, s4.identity()) == 1);
  CHECK(repetition_number(s4, {3, 2, 3, 2, 3}, perm(s4, "1432")) == 4);
  SymmetricGroup s3(3);
  CHECK(repetition_number(s3, {1, 2, 1}, s3.parse("321")) == 1);
}

TEST_CASE("shortest words containing every reduced expression") {
  SymmetricGroup s3(3);
  CHECK(minimal_universal_word(s3, s3.identity(), 3) == std::vector<Word>{{}});
  CHECK(minimal_universal_word(s3, s3.parse("321"), 6) ==
        std::vector<Word>{{1, 2, 1, 2}, {2, 1, 2, 1}});
  CHECK(minimal_universal_word(s3, s3.parse("213"), 2) == std::vector<Word>{{1}});
  // an unreachable bound yields the empty list
  CHECK(minimal_universal_word(s3, s3.parse("321"), 3).empty());
  // every witness really contains every reduced word as a subsequence
  for (const Word& u : minimal_universal_word(s3, s3.parse("321"), 6)) {
    for (const Word& r : reduced_words(s3, s3.parse("321"))) {
      size_t j = 0;
      for (int letter : u)
        if (j < r.size() && r[j] == letter) ++j;
      CHECK(j == r.size());
    }
  }
}

TEST_CASE("group multiplication, inversion, packing") {
  SymmetricGroup s4(4);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    auto u = random_permutation(s4, rng);
    auto v = random_permutation(s4, rng);
    CHECK(s4.multiply(u, s4.inverse(u)) == s4.identity());
    CHECK(s4.inverse(s4.multiply(u, v)) == s4.multiply(s4.inverse(v), s4.inverse(u)));
    CHECK(s4.length(u) == s4.length(s4.inverse(u)));
  }
  // packing separates all elements
  std::set<uint64_t> keys;
  for (const auto& w : all_elements(s4)) keys.insert(s4.pack(w));
  CHECK(keys.size() == 24);
}

TEST_CASE("longest element and enumeration sizes per backend") {
  SymmetricGroup s4(4);
  CHECK(s4.to_string(longest_element(s4)) == "4321");
  CHECK(all_elements(s4).size() == 24);

  SignedPermutations b2(2);
  CHECK(b2.to_string(longest_element(b2)) == "-1 -2");
  CHECK(b2.length(longest_element(b2)) == 4);
  CHECK(all_elements(b2).size() == 8);

  SignedPermutations b3(3);
  CHECK(all_elements(b3).size() == 48);
  CHECK(b3.length(longest_element(b3)) == 9);

  Dihedral d7(7);
  CHECK(all_elements(d7).size() == 14);
  CHECK(d7.length(longest_element(d7)) == 7);
}

TEST_CASE("signed backend length formula matches breadth-first distances") {
  for (int n : {1, 2, 3}) {
    SignedPermutations sys(n);
    // BFS over right multiplication, comparing the inversion statistic
    std::unordered_map<uint64_t, int> dist;
    std::vector<SignedPermutation> queue{sys.identity()};
    dist[sys.pack(sys.identity())] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
      auto w = queue[head];
      for (int g = 1; g <= sys.rank(); ++g) {
        auto next = sys.apply_gen(w, g, Side::Right);
        if (dist.emplace(sys.pack(next), dist[sys.pack(w)] + 1).second)
          queue.push_back(next);
      }
    }
    for (const auto& w : queue) CHECK(sys.length(w) == dist[sys.pack(w)]);
  }
}

TEST_CASE("defining relations hold in each backend") {
  SymmetricGroup s4(4);
  for (int i = 1; i <= 2; ++i) {
    CHECK(evaluate_word(s4, {i, i + 1, i}) == evaluate_word(s4, {i + 1, i, i + 1}));
  }
  CHECK(evaluate_word(s4, {1, 3}) == evaluate_word(s4, {3, 1}));

  SignedPermutations b3(3);
  CHECK(evaluate_word(b3, {1, 2, 1, 2}) == evaluate_word(b3, {2, 1, 2, 1}));
  CHECK(evaluate_word(b3, {2, 3, 2}) == evaluate_word(b3, {3, 2, 3}));
  CHECK(evaluate_word(b3, {1, 3}) == evaluate_word(b3, {3, 1}));

  Dihedral d5(5);
  Word braid;
  for (int k = 0; k < 5; ++k) braid.push_back(1 + k % 2);  // s1 s2 s1 s2 s1
  Word braid2;
  for (int k = 0; k < 5; ++k) braid2.push_back(2 - k % 2);  // s2 s1 s2 s1 s2
  CHECK(evaluate_word(d5, braid) == evaluate_word(d5, braid2));
  CHECK(evaluate_word(d5, braid) == longest_element(d5));
}

TEST_CASE("element text round trips") {
  SymmetricGroup s4(4);
  for (const auto& w : all_elements(s4)) CHECK(s4.parse(s4.to_string(w)) == w);
  CHECK_THROWS_AS(s4.parse("1435"), domain_error);
  CHECK_THROWS_AS(s4.parse("112"), domain_error);
  CHECK_THROWS_AS(s4.parse("14320"), domain_error);

  SymmetricGroup s12(12);
  auto w0 = longest_element(s12);
  CHECK(s12.to_string(w0) == "12 11 10 9 8 7 6 5 4 3 2 1");
  CHECK(s12.parse(s12.to_string(w0)) == w0);

  SignedPermutations b3(3);
  CHECK(b3.to_string(b3.parse("2 -1 3")) == "2 -1 3");
  for (const auto& w : all_elements(b3)) CHECK(b3.parse(b3.to_string(w)) == w);
  CHECK_THROWS_AS(b3.parse("1 2"), domain_error);
  CHECK_THROWS_AS(b3.parse("1 1 -2"), domain_error);

  Dihedral d5(5);
  CHECK(d5.to_string(d5.identity()) == "e");
  CHECK(d5.parse("e") == d5.identity());
  for (const auto& w : all_elements(d5)) {
    CHECK(d5.parse(d5.to_string(w)) == w);
    CHECK(is_reduced(d5, lex_min_reduced_word(d5, w)));
  }
}

TEST_CASE("word text round trips") {
  CHECK(parse_word("3 2 3 2 3") == Word{3, 2, 3, 2, 3});
  CHECK(parse_word("") == Word{});
  CHECK(word_to_string({3, 2, 3}) == "3 2 3");
  CHECK_THROWS_AS(parse_word("3 x 2"), domain_error);
}
