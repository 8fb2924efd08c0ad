#pragma once
// Exact sparse multivariate polynomial arithmetic over checked 64-bit
// integers, with the variable families z (position variables, optionally
// doubly indexed), x and y (geometric variables).  Term output order is
// graded: total degree first, then earliest variables with largest exponents.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "swc/base.hpp"

namespace swc::kpoly {

struct VariableName {
  char family = 'z';  // ordered z < x < y
  int i = 0;
  int j = 0;  // 0 means singly indexed

  static VariableName z(int i) { return {'z', i, 0}; }
  static VariableName z2(int i, int j) { return {'z', i, j}; }
  static VariableName x(int i) { return {'x', i, 0}; }
  static VariableName y(int i) { return {'y', i, 0}; }

  int family_rank() const {
    switch (family) {
      case 'z': return 0;
      case 'x': return 1;
      case 'y': return 2;
      default: throw domain_error("unknown variable family");
    }
  }

  bool operator==(const VariableName& o) const {
    return family == o.family && i == o.i && j == o.j;
  }
  bool operator!=(const VariableName& o) const { return !(*this == o); }
  bool operator<(const VariableName& o) const {
    if (family != o.family) return family_rank() < o.family_rank();
    if (i != o.i) return i < o.i;
    return j < o.j;
  }

  std::string to_string() const {
    std::string out(1, family);
    out += '[' + std::to_string(i);
    if (j != 0) out += ',' + std::to_string(j);
    out += ']';
    return out;
  }
};

// Sorted (variable, exponent) pairs with positive exponents.
using Monomial = std::vector<std::pair<VariableName, int>>;

inline int total_degree(const Monomial& m) {
  int d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

// Graded order: lower total degree first; at equal degree the monomial whose
// earliest differing variable carries the larger exponent comes first, and a
// variable beats its absence.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    size_t ia = 0, ib = 0;
    while (ia < a.size() && ib < b.size()) {
      if (a[ia].first != b[ib].first) return a[ia].first < b[ib].first;
      if (a[ia].second != b[ib].second) return a[ia].second > b[ib].second;
      ++ia, ++ib;
    }
    return ia < a.size();  // both exhausted: equal (false)
  }
};

class SparsePolynomial {
 public:
  SparsePolynomial() = default;

  static SparsePolynomial constant(int64_t c) {
    SparsePolynomial p;
    if (c != 0) p.terms_[{}] = c;
    return p;
  }

  static SparsePolynomial variable(VariableName v, int exponent = 1) {
    if (exponent < 0) throw domain_error("negative exponent");
    if (exponent == 0) return constant(1);
    SparsePolynomial p;
    p.terms_[{{v, exponent}}] = 1;
    return p;
  }

  static SparsePolynomial monomial(Monomial m, int64_t coeff) {
    SparsePolynomial p;
    if (coeff != 0) p.terms_[std::move(m)] = coeff;
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, int64_t, MonomialLess>& terms() const { return terms_; }

  int64_t coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
  }
  int64_t constant_term() const { return coeff({}); }

  int degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
  }

  void add_term(const Monomial& m, int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second = checked::add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  SparsePolynomial& operator+=(const SparsePolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  SparsePolynomial& operator-=(const SparsePolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, checked::neg(c));
    return *this;
  }

  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) {
    return a += b;
  }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) {
    return a -= b;
  }

  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    SparsePolynomial out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_)
        out.add_term(merge_monomials(ma, mb), checked::mul(ca, cb));
    return out;
  }

  SparsePolynomial operator-() const {
    SparsePolynomial out;
    for (const auto& [m, c] : terms_) out.terms_[m] = checked::neg(c);
    return out;
  }

  bool operator==(const SparsePolynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const SparsePolynomial& o) const { return !(*this == o); }

  // Simultaneous substitution; unmapped variables stay themselves.
  SparsePolynomial substitute(const std::map<VariableName, SparsePolynomial>& images) const {
    SparsePolynomial out;
    for (const auto& [m, c] : terms_) {
      SparsePolynomial term = constant(c);
      for (const auto& [v, e] : m) {
        auto it = images.find(v);
        SparsePolynomial base = it == images.end() ? variable(v) : it->second;
        for (int k = 0; k < e; ++k) term = term * base;
      }
      out += term;
    }
    return out;
  }

  // Coefficients of the powers of one variable: result[k] collects the terms
  // with exponent k on v, with v removed.
  std::map<int, SparsePolynomial> by_powers(VariableName v) const {
    std::map<int, SparsePolynomial> out;
    for (const auto& [m, c] : terms_) {
      int e = 0;
      Monomial rest;
      for (const auto& [var, exp] : m) {
        if (var == v) e = exp;
        else rest.emplace_back(var, exp);
      }
      out[e].add_term(rest, c);
    }
    return out;
  }

  std::string to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      int64_t mag = c;
      if (out.empty()) {
        if (c < 0) { out += "-"; mag = checked::neg(c); }
      } else {
        out += c < 0 ? " - " : " + ";
        if (c < 0) mag = checked::neg(c);
      }
      std::string body;
      for (const auto& [v, e] : m) {
        if (!body.empty()) body += '*';
        body += v.to_string();
        if (e > 1) body += '^' + std::to_string(e);
      }
      if (body.empty()) out += std::to_string(mag);
      else if (mag == 1) out += body;
      else out += std::to_string(mag) + '*' + body;
    }
    return out;
  }

 private:
  static Monomial merge_monomials(const Monomial& a, const Monomial& b) {
    Monomial out;
    size_t ia = 0, ib = 0;
    while (ia < a.size() || ib < b.size()) {
      if (ib == b.size() || (ia < a.size() && a[ia].first < b[ib].first)) {
        out.push_back(a[ia++]);
      } else if (ia == a.size() || b[ib].first < a[ia].first) {
        out.push_back(b[ib++]);
      } else {
        out.emplace_back(a[ia].first, a[ia].second + b[ib].second);
        ++ia, ++ib;
      }
    }
    return out;
  }

  std::map<Monomial, int64_t, MonomialLess> terms_;
};

inline SparsePolynomial one() { return SparsePolynomial::constant(1); }

inline SparsePolynomial one_minus(VariableName v) {
  return SparsePolynomial::constant(1) - SparsePolynomial::variable(v);
}

}  // namespace swc::kpoly
