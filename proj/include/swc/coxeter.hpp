#pragma once
// Exact finite Coxeter group arithmetic: elements, words, lengths, Bruhat
// order, Demazure products, reduced-word enumeration.
//
// Conventions (used everywhere, stated once):
//   * products act on the right of one-line notation: w * s_i swaps the
//     entries in positions i, i+1; words multiply left to right;
//   * generator indices are 1-based, as are positions inside words;
//   * composition is (u*v)(j) = u(v(j)).

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "swc/base.hpp"

namespace swc::coxeter {

enum class Side { Left, Right };

// A word is an ordered list of 1-based generator indices.  Subwords are
// identified by their position sets inside the ambient word and are never
// re-indexed.
using Word = std::vector<int>;

inline Word parse_word(const std::string& text) {
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
      throw domain_error("bad word letter: '" + tok + "'");
    }
  }
  return out;
}

inline std::string word_to_string(const Word& w) {
  std::string out;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(w[k]);
  }
  return out;
}

// ===========================================================================
// Symmetric group S_n on one-line permutations (rank n-1)
// ===========================================================================

class Permutation {
 public:
  static constexpr int kMaxN = 16;

  Permutation() : n_(0) { v_.fill(0); }

  static Permutation identity(int n) {
    Permutation p;
    p.n_ = static_cast<uint8_t>(n);
    for (int i = 0; i < n; ++i) p.v_[i] = static_cast<uint8_t>(i + 1);
    return p;
  }

  int size() const { return n_; }
  int operator()(int i) const { return v_[i - 1]; }  // 1-based
  void set(int i, int val) { v_[i - 1] = static_cast<uint8_t>(val); }

  bool operator==(const Permutation& o) const { return n_ == o.n_ && v_ == o.v_; }
  bool operator!=(const Permutation& o) const { return !(*this == o); }
  bool operator<(const Permutation& o) const {  // lex on one-line values
    return std::lexicographical_compare(v_.begin(), v_.begin() + n_,
                                        o.v_.begin(), o.v_.begin() + o.n_);
  }

  uint64_t pack() const {  // 4 bits per entry, entries <= 16
    uint64_t key = 0;
    for (int i = 0; i < n_; ++i) key |= static_cast<uint64_t>(v_[i] - 1) << (4 * i);
    return key;
  }

 private:
  std::array<uint8_t, kMaxN> v_;
  uint8_t n_;
};

class SymmetricGroup {
 public:
  using Element = Permutation;

  explicit SymmetricGroup(int n) : n_(n) {
    if (n < 1 || n > Permutation::kMaxN)
      throw domain_error("SymmetricGroup: n must be in [1, 16]");
  }

  int degree() const { return n_; }
  int rank() const { return n_ - 1; }
  Element identity() const { return Permutation::identity(n_); }

  Element apply_gen(Element w, int i, Side side) const {
    check_gen(i);
    if (side == Side::Right) {  // swap positions i, i+1
      int a = w(i), b = w(i + 1);
      w.set(i, b);
      w.set(i + 1, a);
    } else {  // swap values i, i+1
      for (int p = 1; p <= n_; ++p) {
        if (w(p) == i) w.set(p, i + 1);
        else if (w(p) == i + 1) w.set(p, i);
      }
    }
    return w;
  }

  int length(const Element& w) const {  // inversion count
    int inv = 0;
    for (int i = 1; i < n_; ++i)
      for (int j = i + 1; j <= n_; ++j)
        if (w(i) > w(j)) ++inv;
    return inv;
  }

  // True iff multiplying by s_i on the given side increases length.
  bool longer(const Element& w, int i, Side side) const {
    check_gen(i);
    if (side == Side::Right) return w(i) < w(i + 1);
    int pi = 0, pj = 0;  // positions of values i, i+1
    for (int p = 1; p <= n_; ++p) {
      if (w(p) == i) pi = p;
      else if (w(p) == i + 1) pj = p;
    }
    return pi < pj;
  }

  Element multiply(const Element& u, const Element& v) const {
    Element r = identity();
    for (int j = 1; j <= n_; ++j) r.set(j, u(v(j)));
    return r;
  }

  Element inverse(const Element& w) const {
    Element r = identity();
    for (int j = 1; j <= n_; ++j) r.set(w(j), j);
    return r;
  }

  uint64_t pack(const Element& w) const { return w.pack(); }

  // One-line notation: compact digit string for n <= 9, else space-separated.
  std::string to_string(const Element& w) const {
    std::string out;
    for (int i = 1; i <= n_; ++i) {
      if (n_ > 9 && i > 1) out += ' ';
      out += std::to_string(w(i));
    }
    return out;
  }

  Element parse(const std::string& text) const {
    std::vector<int> vals;
    if (text.find_first_of(" \t,") != std::string::npos) {
      std::string cleaned = text;
      std::replace_if(cleaned.begin(), cleaned.end(),
                      [](char c) { return c == ',' || c == '\t'; }, ' ');
      std::istringstream in(cleaned);
      std::string tok;
      while (in >> tok) vals.push_back(parse_int(tok));
    } else {
      for (char c : text) {
        if (c < '1' || c > '9') throw domain_error("bad permutation: '" + text + "'");
        vals.push_back(c - '0');
      }
    }
    if (static_cast<int>(vals.size()) != n_)
      throw domain_error("permutation has wrong size: '" + text + "'");
    Element w = identity();
    std::vector<bool> seen(n_ + 1, false);
    for (int j = 1; j <= n_; ++j) {
      int v = vals[j - 1];
      if (v < 1 || v > n_ || seen[v])
        throw domain_error("not a permutation of 1.." + std::to_string(n_) + ": '" + text + "'");
      seen[v] = true;
      w.set(j, v);
    }
    return w;
  }

 private:
  static int parse_int(const std::string& tok) {
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      return v;
    } catch (const std::exception&) {
      throw domain_error("bad integer: '" + tok + "'");
    }
  }
  void check_gen(int i) const {
    if (i < 1 || i > rank()) throw domain_error("generator index out of range");
  }
  int n_;
};

// ===========================================================================
// Signed permutations (hyperoctahedral group, rank n)
//
// Generator 1 flips the sign in position 1; generator g >= 2 swaps positions
// g-1, g.  Length = inversions + negatives + negative sum pairs.
// ===========================================================================

class SignedPermutation {
 public:
  static constexpr int kMaxN = 12;

  SignedPermutation() : n_(0) { v_.fill(0); }

  static SignedPermutation identity(int n) {
    SignedPermutation p;
    p.n_ = static_cast<uint8_t>(n);
    for (int i = 0; i < n; ++i) p.v_[i] = static_cast<int8_t>(i + 1);
    return p;
  }

  int size() const { return n_; }
  int operator()(int i) const { return v_[i - 1]; }
  void set(int i, int val) { v_[i - 1] = static_cast<int8_t>(val); }

  bool operator==(const SignedPermutation& o) const { return n_ == o.n_ && v_ == o.v_; }
  bool operator!=(const SignedPermutation& o) const { return !(*this == o); }
  bool operator<(const SignedPermutation& o) const {
    return std::lexicographical_compare(v_.begin(), v_.begin() + n_,
                                        o.v_.begin(), o.v_.begin() + o.n_);
  }

  uint64_t pack() const {  // 5 bits per entry: (|v|-1)*2 + (v<0)
    uint64_t key = 0;
    for (int i = 0; i < n_; ++i) {
      int v = v_[i];
      uint64_t code = static_cast<uint64_t>((std::abs(v) - 1) * 2 + (v < 0 ? 1 : 0));
      key |= code << (5 * i);
    }
    return key;
  }

 private:
  std::array<int8_t, kMaxN> v_;
  uint8_t n_;
};

class SignedPermutations {
 public:
  using Element = SignedPermutation;

  explicit SignedPermutations(int n) : n_(n) {
    if (n < 1 || n > SignedPermutation::kMaxN)
      throw domain_error("SignedPermutations: n must be in [1, 12]");
  }

  int degree() const { return n_; }
  int rank() const { return n_; }
  Element identity() const { return SignedPermutation::identity(n_); }

  Element apply_gen(Element w, int i, Side side) const {
    check_gen(i);
    if (side == Side::Right) {
      if (i == 1) {
        w.set(1, -w(1));
      } else {
        int a = w(i - 1), b = w(i);
        w.set(i - 1, b);
        w.set(i, a);
      }
    } else {
      if (i == 1) {  // flip the entry of absolute value 1
        for (int p = 1; p <= n_; ++p)
          if (std::abs(w(p)) == 1) { w.set(p, -w(p)); break; }
      } else {  // swap values i-1, i keeping signs
        for (int p = 1; p <= n_; ++p) {
          int v = w(p), a = std::abs(v), s = v < 0 ? -1 : 1;
          if (a == i - 1) w.set(p, s * i);
          else if (a == i) w.set(p, s * (i - 1));
        }
      }
    }
    return w;
  }

  int length(const Element& w) const {
    int inv = 0, neg = 0, nsp = 0;
    for (int i = 1; i <= n_; ++i) {
      if (w(i) < 0) ++neg;
      for (int j = i + 1; j <= n_; ++j) {
        if (w(i) > w(j)) ++inv;
        if (w(i) + w(j) < 0) ++nsp;
      }
    }
    return inv + neg + nsp;
  }

  bool longer(const Element& w, int i, Side side) const {
    check_gen(i);
    if (side == Side::Right) return i == 1 ? w(1) > 0 : w(i - 1) < w(i);
    return length(apply_gen(w, i, Side::Left)) > length(w);
  }

  Element multiply(const Element& u, const Element& v) const {
    Element r = identity();
    for (int j = 1; j <= n_; ++j) {
      int vj = v(j);
      r.set(j, vj > 0 ? u(vj) : -u(-vj));
    }
    return r;
  }

  Element inverse(const Element& w) const {
    Element r = identity();
    for (int j = 1; j <= n_; ++j) {
      int a = w(j);
      if (a > 0) r.set(a, j);
      else r.set(-a, -j);
    }
    return r;
  }

  uint64_t pack(const Element& w) const { return w.pack(); }

  std::string to_string(const Element& w) const {  // "2 -1 3"
    std::string out;
    for (int i = 1; i <= n_; ++i) {
      if (i > 1) out += ' ';
      out += std::to_string(w(i));
    }
    return out;
  }

  Element parse(const std::string& text) const {
    std::istringstream in(text);
    std::vector<int> vals;
    std::string tok;
    while (in >> tok) {
      try {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        vals.push_back(v);
      } catch (const std::exception&) {
        throw domain_error("bad signed permutation entry: '" + tok + "'");
      }
    }
    if (static_cast<int>(vals.size()) != n_)
      throw domain_error("signed permutation has wrong size: '" + text + "'");
    Element w = identity();
    std::vector<bool> seen(n_ + 1, false);
    for (int j = 1; j <= n_; ++j) {
      int v = vals[j - 1], a = std::abs(v);
      if (a < 1 || a > n_ || seen[a])
        throw domain_error("not a signed permutation: '" + text + "'");
      seen[a] = true;
      w.set(j, v);
    }
    return w;
  }

 private:
  void check_gen(int i) const {
    if (i < 1 || i > rank()) throw domain_error("generator index out of range");
  }
  int n_;
};

// ===========================================================================
// Dihedral group of order 2m (rank 2): elements r^k f^eps with
// s_1 = f, s_2 = r^{m-1} f, so s_1 s_2 = r.  Lengths come from BFS.
// ===========================================================================

struct DihedralElement {
  uint32_t k = 0;    // rotation exponent, 0 <= k < m
  uint8_t flip = 0;  // reflection flag

  bool operator==(const DihedralElement& o) const { return k == o.k && flip == o.flip; }
  bool operator!=(const DihedralElement& o) const { return !(*this == o); }
  bool operator<(const DihedralElement& o) const {
    return k != o.k ? k < o.k : flip < o.flip;
  }
};

class Dihedral {
 public:
  using Element = DihedralElement;

  explicit Dihedral(int m) : m_(m) {
    if (m < 2 || m > 1000000) throw domain_error("Dihedral: m must be in [2, 10^6]");
    build_length_table();
  }

  int order_parameter() const { return m_; }
  int rank() const { return 2; }
  Element identity() const { return {0, 0}; }

  Element multiply(const Element& a, const Element& b) const {
    // (r^a f^eps)(r^b f^delta) = r^{a + (-1)^eps b} f^{eps xor delta}
    uint32_t kb = a.flip ? (m_ - b.k) % m_ : b.k;
    return {(a.k + kb) % m_, static_cast<uint8_t>(a.flip ^ b.flip)};
  }

  Element inverse(const Element& a) const {
    if (a.flip) return a;  // reflections are involutions
    return {(m_ - a.k) % m_, 0};
  }

  Element generator(int i) const {
    check_gen(i);
    return i == 1 ? Element{0, 1} : Element{static_cast<uint32_t>(m_ - 1), 1};
  }

  Element apply_gen(const Element& w, int i, Side side) const {
    Element g = generator(i);
    return side == Side::Right ? multiply(w, g) : multiply(g, w);
  }

  int length(const Element& w) const { return len_[index(w)]; }

  bool longer(const Element& w, int i, Side side) const {
    return length(apply_gen(w, i, side)) > length(w);
  }

  uint64_t pack(const Element& w) const { return index(w); }

  // I/O uses generator words; the identity prints as "e".
  std::string to_string(const Element& w) const;  // defined after lex_min_reduced_word

  Element parse(const std::string& text) const {
    std::string t = text;
    t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == ' '; }), t.end());
    if (t.empty() || t == "e") return identity();
    Element w = identity();
    for (const int g : parse_word(text)) w = apply_gen(w, g, Side::Right);
    return w;
  }

 private:
  size_t index(const Element& w) const { return static_cast<size_t>(w.k) * 2 + w.flip; }

  void build_length_table() {
    len_.assign(static_cast<size_t>(m_) * 2, -1);
    std::deque<Element> queue{identity()};
    len_[index(identity())] = 0;
    while (!queue.empty()) {
      Element w = queue.front();
      queue.pop_front();
      for (int g = 1; g <= 2; ++g) {
        Element next = multiply(w, generator(g));
        if (len_[index(next)] < 0) {
          len_[index(next)] = len_[index(w)] + 1;
          queue.push_back(next);
        }
      }
    }
  }

  void check_gen(int i) const {
    if (i < 1 || i > 2) throw domain_error("generator index out of range");
  }

  int m_;
  std::vector<int> len_;
};

// ===========================================================================
// Generic word algorithms over any backend
// ===========================================================================

template <class S>
void validate_word(const S& sys, const Word& q) {
  for (int letter : q)
    if (letter < 1 || letter > sys.rank())
      throw domain_error("word letter out of range: " + std::to_string(letter));
}

template <class S>
typename S::Element evaluate_word(const S& sys, const Word& q) {
  validate_word(sys, q);
  auto w = sys.identity();
  for (int letter : q) w = sys.apply_gen(w, letter, Side::Right);
  return w;
}

template <class S>
bool is_reduced(const S& sys, const Word& q) {
  validate_word(sys, q);
  auto w = sys.identity();
  for (int letter : q) {
    if (!sys.longer(w, letter, Side::Right)) return false;
    w = sys.apply_gen(w, letter, Side::Right);
  }
  return true;
}

// One 0-Hecke step: multiply by s_i iff that increases length.
template <class S>
typename S::Element demazure_step(const S& sys, const typename S::Element& w, int i,
                                  Side side) {
  return sys.longer(w, i, side) ? sys.apply_gen(w, i, side) : w;
}

template <class S>
typename S::Element demazure_product(const S& sys, const Word& q) {
  validate_word(sys, q);
  auto w = sys.identity();
  for (int letter : q) w = demazure_step(sys, w, letter, Side::Right);
  return w;
}

// Bruhat order by the lifting rule: strip right descents off b, lowering a
// alongside whenever possible; a <= b iff a reaches the identity with b.
template <class S>
bool bruhat_leq(const S& sys, typename S::Element a, typename S::Element b) {
  int la = sys.length(a);
  int lb = sys.length(b);
  if (la > lb) return false;
  while (lb > 0) {
    int d = 0;
    for (int g = 1; g <= sys.rank(); ++g)
      if (!sys.longer(b, g, Side::Right)) { d = g; break; }
    b = sys.apply_gen(b, d, Side::Right);
    --lb;
    if (!sys.longer(a, d, Side::Right)) {
      a = sys.apply_gen(a, d, Side::Right);
      --la;
    }
  }
  return la == 0;
}

// Fast containment test: some subsequence of p represents pi.
template <class S>
bool contains_target(const S& sys, const Word& p, const typename S::Element& pi) {
  return bruhat_leq(sys, pi, demazure_product(sys, p));
}

// Independent brute-force route for the same question: breadth-first subword
// search tracking every element reachable as a reduced subsequence product.
template <class S>
bool contains_target_bruteforce(const S& sys, const Word& p, const typename S::Element& pi) {
  validate_word(sys, p);
  const int target_len = sys.length(pi);
  std::vector<typename S::Element> reach{sys.identity()};
  std::unordered_set<uint64_t> seen{sys.pack(sys.identity())};
  if (pi == sys.identity()) return true;
  for (int letter : p) {
    const size_t frozen = reach.size();
    for (size_t r = 0; r < frozen; ++r) {
      if (!sys.longer(reach[r], letter, Side::Right)) continue;
      auto next = sys.apply_gen(reach[r], letter, Side::Right);
      if (sys.length(next) > target_len) continue;
      if (next == pi) return true;
      if (seen.insert(sys.pack(next)).second) reach.push_back(next);
    }
  }
  return false;
}

// All reduced words for pi, lexicographically sorted.
template <class S>
std::vector<Word> reduced_words(const S& sys, const typename S::Element& pi) {
  std::vector<Word> out;
  if (pi == sys.identity()) {
    out.push_back({});
    return out;
  }
  for (int g = 1; g <= sys.rank(); ++g) {
    if (sys.longer(pi, g, Side::Right)) continue;  // want right descents
    auto shorter = sys.apply_gen(pi, g, Side::Right);
    for (Word w : reduced_words(sys, shorter)) {
      w.push_back(g);
      out.push_back(std::move(w));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Number of reduced words, by the descent recursion with memoization.
template <class S>
int64_t reduced_word_count(const S& sys, const typename S::Element& pi) {
  std::unordered_map<uint64_t, int64_t> memo;
  auto rec = [&](auto&& self, const typename S::Element& w) -> int64_t {
    if (w == sys.identity()) return 1;
    auto it = memo.find(sys.pack(w));
    if (it != memo.end()) return it->second;
    int64_t total = 0;
    for (int g = 1; g <= sys.rank(); ++g) {
      if (sys.longer(w, g, Side::Right)) continue;
      total = checked::add(total, self(self, sys.apply_gen(w, g, Side::Right)));
    }
    memo.emplace(sys.pack(w), total);
    return total;
  };
  return rec(rec, pi);
}

// Largest number of distinct position-subsets of q spelling one fixed reduced
// word of pi, maximized over the reduced words.
template <class S>
int64_t repetition_number(const S& sys, const Word& q, const typename S::Element& pi) {
  validate_word(sys, q);
  int64_t best = 0;
  for (const Word& r : reduced_words(sys, pi)) {
    // dp[j] = number of ways to embed the first j letters of r so far
    std::vector<int64_t> dp(r.size() + 1, 0);
    dp[0] = 1;
    for (int letter : q)
      for (size_t j = r.size(); j >= 1; --j)
        if (r[j - 1] == letter) dp[j] = checked::add(dp[j], dp[j - 1]);
    best = std::max(best, dp[r.size()]);
  }
  return best;
}

namespace detail {

// True iff every word in `targets` embeds into `q` as a subsequence.
inline bool contains_all_words(const Word& q, const std::vector<Word>& targets) {
  for (const Word& t : targets) {
    size_t j = 0;
    for (int letter : q) {
      if (j < t.size() && t[j] == letter) ++j;
    }
    if (j < t.size()) return false;
  }
  return true;
}

}  // namespace detail

// All words of minimal length (at most max_len) containing every reduced word
// of pi as a subsequence; empty when the bound is too small.
template <class S>
std::vector<Word> minimal_universal_word(const S& sys, const typename S::Element& pi,
                                         int max_len) {
  const std::vector<Word> targets = reduced_words(sys, pi);
  const int start = sys.length(pi);
  for (int len = start; len <= max_len; ++len) {
    std::vector<Word> hits;
    Word cand(len, 1);
    while (true) {
      if (detail::contains_all_words(cand, targets)) hits.push_back(cand);
      int pos = len - 1;  // lexicographic odometer over [1, rank]^len
      while (pos >= 0 && cand[pos] == sys.rank()) {
        cand[pos] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++cand[pos];
    }
    if (!hits.empty()) return hits;
  }
  return {};
}

// Greedy ascent to the longest element (unique in a finite group).
template <class S>
typename S::Element longest_element(const S& sys) {
  auto w = sys.identity();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int g = 1; g <= sys.rank(); ++g) {
      if (sys.longer(w, g, Side::Right)) {
        w = sys.apply_gen(w, g, Side::Right);
        moved = true;
        break;
      }
    }
  }
  return w;
}

// Lexicographically least reduced word, built by greedy left descents.
template <class S>
Word lex_min_reduced_word(const S& sys, typename S::Element w) {
  Word out;
  while (w != sys.identity()) {
    for (int g = 1; g <= sys.rank(); ++g) {
      if (!sys.longer(w, g, Side::Left)) {
        out.push_back(g);
        w = sys.apply_gen(w, g, Side::Left);
        break;
      }
    }
  }
  return out;
}

// Any one reduced word (first-right-descent peel), cheaper than enumeration.
template <class S>
Word any_reduced_word(const S& sys, typename S::Element w) {
  Word out;
  while (w != sys.identity()) {
    for (int g = 1; g <= sys.rank(); ++g) {
      if (!sys.longer(w, g, Side::Right)) {
        out.push_back(g);
        w = sys.apply_gen(w, g, Side::Right);
        break;
      }
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

// Every group element, canonically sorted; intended for small backends.
template <class S>
std::vector<typename S::Element> all_elements(const S& sys) {
  std::vector<typename S::Element> out{sys.identity()};
  std::unordered_set<uint64_t> seen{sys.pack(sys.identity())};
  for (size_t head = 0; head < out.size(); ++head) {
    auto w = out[head];  // copy: out may reallocate
    for (int g = 1; g <= sys.rank(); ++g) {
      auto next = sys.apply_gen(w, g, Side::Right);
      if (seen.insert(sys.pack(next)).second) out.push_back(next);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string Dihedral::to_string(const Element& w) const {
  if (w == identity()) return "e";
  return word_to_string(lex_min_reduced_word(*this, w));
}

}  // namespace swc::coxeter
