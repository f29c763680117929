#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "derange/error.hpp"

namespace derange {

using Integer = boost::multiprecision::cpp_int;

/// Variable families. Declaration order is the monomial order: X < Y < T.
enum class Family : std::uint8_t { x, y, t };

struct Variable {
  Family family = Family::x;
  int index = 0;  // 1-based for x and y; 0 for t

  static Variable x(int i) { return {Family::x, i}; }
  static Variable y(int i) { return {Family::y, i}; }
  static Variable t() { return {Family::t, 0}; }

  std::string to_string() const {
    switch (family) {
      case Family::x: return "x" + std::to_string(index);
      case Family::y: return "y" + std::to_string(index);
      case Family::t: return "t";
    }
    return "?";
  }

  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

/// A power product with positive exponents, kept sorted by variable.
class Monomial {
 public:
  using Factor = std::pair<Variable, int>;

  Monomial() = default;

  static Monomial of(Variable v, int exponent = 1) {
    Monomial m;
    if (exponent > 0) m.factors_.emplace_back(v, exponent);
    return m;
  }

  /// Product of `family` variables over a set or multiset of indices.
  static Monomial product(Family family, std::span<const int> indices) {
    Monomial m;
    for (int i : indices) m *= of({family, family == Family::t ? 0 : i});
    return m;
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  int degree() const {
    int d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
  }

  int exponent(Variable v) const {
    for (const auto& [w, e] : factors_) {
      if (w == v) return e;
    }
    return 0;
  }

  Monomial& operator*=(const Monomial& other) {
    std::vector<Factor> merged;
    merged.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
      if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
        merged.push_back(*a++);
      } else if (a == factors_.end() || b->first < a->first) {
        merged.push_back(*b++);
      } else {
        merged.emplace_back(a->first, a->second + b->second);
        ++a;
        ++b;
      }
    }
    factors_ = std::move(merged);
    return *this;
  }

  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  /// "x1*y2^2"; the empty monomial renders as "1".
  std::string to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& [v, e] : factors_) {
      if (!out.empty()) out.push_back('*');
      out += v.to_string();
      if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

/// Graded lexicographic order, x1 > x2 > ... > y1 > ... > t. A monomial
/// compares greater when it has larger total degree, or equal degree and a
/// larger exponent on the first variable where the two differ.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.degree();
    const int db = b.degree();
    if (da != db) return da > db;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t i = 0;
    for (; i < fa.size() && i < fb.size(); ++i) {
      if (fa[i].first != fb[i].first) return fa[i].first < fb[i].first;
      if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
    }
    return i < fa.size() && i == fb.size();
  }
};

/// Sparse multivariate polynomial with exact integer coefficients.
///
/// Terms are kept in canonical form: descending graded lexicographic order,
/// no zero coefficients. Equality is structural.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Integer, GrlexGreater>;

  Polynomial() = default;
  Polynomial(Integer constant) { add_term(Monomial{}, std::move(constant)); }  // NOLINT
  Polynomial(int constant) : Polynomial(Integer(constant)) {}                  // NOLINT
  Polynomial(const Monomial& m, Integer coefficient = 1) { add_term(m, std::move(coefficient)); }  // NOLINT

  static Polynomial var(Variable v) { return Polynomial(Monomial::of(v)); }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
  }

  Polynomial operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    }
    return out;
  }

  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

  Polynomial pow(int e) const {
    Polynomial out(1);
    for (int i = 0; i < e; ++i) out *= *this;
    return out;
  }

  /// Replaces every variable v by image(v).
  Polynomial substitute(const std::function<Polynomial(Variable)>& image) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
      Polynomial term(c);
      for (const auto& [v, e] : m.factors()) term *= image(v).pow(e);
      out += term;
    }
    return out;
  }

  /// Canonical text form, e.g. "-x1*y2", "t^2 - t", "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      const bool negative = c < 0;
      const Integer magnitude = negative ? Integer(-c) : c;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      if (m.is_one()) {
        out += magnitude.str();
      } else {
        if (magnitude != 1) out += magnitude.str() + "*";
        out += m.to_string();
      }
      first = false;
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// First monomial, in canonical order, where two polynomials disagree.
struct Discrepancy {
  Monomial monomial;
  Integer lhs;
  Integer rhs;
};

inline std::optional<Discrepancy> first_discrepancy(const Polynomial& lhs, const Polynomial& rhs) {
  const Polynomial diff = lhs - rhs;
  if (diff.is_zero()) return std::nullopt;
  const Monomial& m = diff.terms().begin()->first;
  return Discrepancy{m, lhs.coefficient(m), rhs.coefficient(m)};
}

// ---------------------------------------------------------------------------
// Univariate helpers in t, used for factoring probe results.

/// Dense coefficient vector in t, lowest degree first. Throws if `p` has any
/// variable other than t.
inline std::vector<Integer> dense_in_t(const Polynomial& p) {
  std::vector<Integer> out;
  for (const auto& [m, c] : p.terms()) {
    int e = 0;
    for (const auto& [v, k] : m.factors()) {
      if (v.family != Family::t) throw domain_error("expected a polynomial in t: " + p.to_string());
      e = k;
    }
    if (out.size() <= static_cast<std::size_t>(e)) out.resize(static_cast<std::size_t>(e) + 1);
    out[static_cast<std::size_t>(e)] += c;
  }
  return out;
}

inline Polynomial from_dense_in_t(const std::vector<Integer>& coeffs) {
  Polynomial out;
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    out.add_term(Monomial::of(Variable::t(), static_cast<int>(e)), coeffs[e]);
  }
  return out;
}

/// Divides by (t - root); returns the quotient when the remainder is zero.
inline std::optional<std::vector<Integer>> divide_by_linear(const std::vector<Integer>& coeffs, int root) {
  if (coeffs.empty()) return std::nullopt;
  // synthetic division from the top coefficient down
  std::vector<Integer> quotient(coeffs.size() - 1);
  Integer carry = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Integer value = coeffs[k] + carry * root;
    if (k == 0) {
      if (value != 0) return std::nullopt;
    } else {
      quotient[k - 1] = value;
      carry = value;
    }
  }
  return quotient;
}

}  // namespace derange
