#pragma once

// Difference monomials Y^u = y_1^{u_1} ... y_n^{u_n}, identified with their
// exponent vectors u in N[x]^n, plus the integer vectors in (N u {-1})^n that
// name prime components and minimal generators.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mdi/error.hpp"
#include "mdi/exp_poly.hpp"

namespace mdi {

/// Exponent vector of a difference monomial. The arity is the number of
/// difference indeterminates and is fixed per ring; binary operations check it.
class ExpVector {
 public:
  ExpVector() = default;

  // The monomial 1 in n indeterminates.
  explicit ExpVector(std::size_t arity) : coords_(arity) {}

  explicit ExpVector(std::vector<ExpPoly> coords) : coords_(std::move(coords)) {}

  ExpVector(std::initializer_list<ExpPoly> coords) : coords_(coords) {}

  std::size_t arity() const noexcept { return coords_.size(); }

  const ExpPoly& operator[](std::size_t j) const { return coords_[j]; }
  ExpPoly& operator[](std::size_t j) { return coords_[j]; }

  const std::vector<ExpPoly>& coords() const noexcept { return coords_; }

  bool is_one() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(), [](const ExpPoly& p) { return p.is_zero(); });
  }

  long max_degree() const noexcept {
    long d = -1;
    for (const auto& p : coords_) d = std::max(d, p.degree());
    return d;
  }

  Coeff max_coeff() const noexcept {
    Coeff c = 0;
    for (const auto& p : coords_) c = std::max(c, p.max_coeff());
    return c;
  }

  bool operator==(const ExpVector&) const = default;

 private:
  std::vector<ExpPoly> coords_;
};

inline void check_arity(std::size_t expected, std::size_t got) {
  if (expected != got) throw ArityError(expected, got);
}

inline void check_arity(const ExpVector& u, const ExpVector& v) { check_arity(u.arity(), v.arity()); }

/// Entries in N u {-1}; -1 means "variable absent".
struct CharVector {
  std::vector<long> entries;

  CharVector() = default;
  explicit CharVector(std::vector<long> e) : entries(std::move(e)) {}
  CharVector(std::initializer_list<long> e) : entries(e) {}

  std::size_t arity() const noexcept { return entries.size(); }
  long operator[](std::size_t i) const { return entries[i]; }

  bool operator==(const CharVector&) const = default;
  auto operator<=>(const CharVector&) const = default;
};

/// Entrywise a <= b.
inline bool entrywise_leq(const CharVector& a, const CharVector& b) {
  check_arity(a.arity(), b.arity());
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Arithmetic

inline ExpVector add(const ExpVector& u, const ExpVector& v) {
  check_arity(u, v);
  std::vector<ExpPoly> out;
  out.reserve(u.arity());
  for (std::size_t j = 0; j < u.arity(); ++j) out.push_back(add(u[j], v[j]));
  return ExpVector(std::move(out));
}

inline ExpVector operator+(const ExpVector& u, const ExpVector& v) { return add(u, v); }

inline ExpVector shift(const ExpVector& u, std::size_t i) {
  std::vector<ExpPoly> out;
  out.reserve(u.arity());
  for (const auto& p : u.coords()) out.push_back(shift(p, i));
  return ExpVector(std::move(out));
}

inline ExpVector scale(Coeff m, const ExpVector& u) {
  std::vector<ExpPoly> out;
  out.reserve(u.arity());
  for (const auto& p : u.coords()) out.push_back(scale(m, p));
  return ExpVector(std::move(out));
}

inline ExpVector mul(const ExpPoly& g, const ExpVector& u) {
  std::vector<ExpPoly> out;
  out.reserve(u.arity());
  for (const auto& p : u.coords()) out.push_back(mul(g, p));
  return ExpVector(std::move(out));
}

/// Coefficientwise order on N[x]^n: v - u has natural coefficients.
inline bool coeff_leq(const ExpVector& u, const ExpVector& v) {
  check_arity(u, v);
  for (std::size_t j = 0; j < u.arity(); ++j)
    if (!coeff_leq(u[j], v[j])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Orders

/// Lexicographic extension of cmp_total; the canonical order for every
/// emitted set.
inline std::strong_ordering cmp_total(const ExpVector& u, const ExpVector& v) {
  check_arity(u, v);
  for (std::size_t j = 0; j < u.arity(); ++j)
    if (auto c = cmp_total(u[j], v[j]); c != 0) return c;
  return std::strong_ordering::equal;
}

struct TotalLess {
  bool operator()(const ExpVector& u, const ExpVector& v) const { return cmp_total(u, v) < 0; }
};

inline bool precedes_vec(const ExpVector& u, const ExpVector& v) {
  check_arity(u, v);
  for (std::size_t j = 0; j < u.arity(); ++j)
    if (!precedes(u[j], v[j])) return false;
  return true;
}

/// Least i with x^i u <= v coefficientwise, if any. Shifts beyond
/// max_j (deg v_j - deg u_j) push a nonzero coefficient of u past deg v_j.
inline std::optional<std::size_t> divides_shifted(const ExpVector& u, const ExpVector& v) {
  check_arity(u, v);
  long bound = -1;
  bool any = false;
  for (std::size_t j = 0; j < u.arity(); ++j) {
    if (u[j].is_zero()) continue;
    if (v[j].is_zero()) return std::nullopt;
    long slack = v[j].degree() - u[j].degree();
    bound = any ? std::min(bound, slack) : slack;
    any = true;
  }
  if (!any) return 0;
  for (long i = 0; i <= bound; ++i) {
    bool fits = true;
    for (std::size_t j = 0; j < u.arity() && fits; ++j) {
      auto a = u[j].coeffs();
      for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] > v[j][k + static_cast<std::size_t>(i)]) {
          fits = false;
          break;
        }
      }
    }
    if (fits) return static_cast<std::size_t>(i);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Patterns

inline CharVector deg_vector(const ExpVector& u) {
  CharVector b;
  b.entries.reserve(u.arity());
  for (const auto& p : u.coords()) b.entries.push_back(p.degree());
  return b;
}

inline CharVector support_pattern(const ExpVector& u) {
  CharVector b;
  b.entries.reserve(u.arity());
  for (const auto& p : u.coords()) b.entries.push_back(p.is_zero() ? 0 : 1);
  return b;
}

/// prod_i y_i^{x^{b_i}} with x^{-1} = 0.
inline ExpVector pattern_monomial(const CharVector& b) {
  std::vector<ExpPoly> out;
  out.reserve(b.arity());
  for (long e : b.entries) {
    if (e < -1) throw PreconditionError("character vector entry below -1");
    out.push_back(e < 0 ? ExpPoly{} : ExpPoly::term(1, static_cast<std::size_t>(e)));
  }
  return ExpVector(std::move(out));
}

/// The monomial y_1^{a_1} ... with a_i in {0,1}: y_i for every nonzero coordinate.
inline ExpVector support_monomial(const ExpVector& u) {
  std::vector<ExpPoly> out;
  out.reserve(u.arity());
  for (const auto& p : u.coords()) out.push_back(p.is_zero() ? ExpPoly{} : ExpPoly::constant(1));
  return ExpVector(std::move(out));
}

inline ExpVector squarefree(const ExpVector& u) {
  std::vector<ExpPoly> out;
  out.reserve(u.arity());
  for (const auto& p : u.coords()) out.push_back(squarefree(p));
  return ExpVector(std::move(out));
}

/// Largest k with x^k dividing every coordinate; -1 for the zero vector.
inline long low_degree(const ExpVector& u) {
  long k = -1;
  for (const auto& p : u.coords()) {
    if (p.is_zero()) continue;
    k = k < 0 ? p.low_degree() : std::min(k, p.low_degree());
  }
  return k;
}

/// u / x^{low_degree(u)}.
inline ExpVector strip_shift(const ExpVector& u) {
  long k = low_degree(u);
  if (k <= 0) return u;
  std::vector<ExpPoly> out;
  out.reserve(u.arity());
  for (const auto& p : u.coords()) out.push_back(unshift(p, static_cast<std::size_t>(k)));
  return ExpVector(std::move(out));
}

// ---------------------------------------------------------------------------
// Sets

inline void canonicalize(std::vector<ExpVector>& s) {
  std::sort(s.begin(), s.end(), TotalLess{});
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

inline void canonicalize(std::vector<CharVector>& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

/// Elements of s not strictly above another element under `leq`. Duplicates
/// collapse to one copy; output is canonically sorted. Quadratic scan.
template <typename T, typename Leq>
std::vector<T> minimal_under(std::vector<T> s, Leq leq) {
  canonicalize(s);
  std::vector<T> out;
  for (std::size_t a = 0; a < s.size(); ++a) {
    bool dominated = false;
    for (std::size_t b = 0; b < s.size() && !dominated; ++b)
      dominated = b != a && leq(s[b], s[a]) && !leq(s[a], s[b]);
    if (!dominated) out.push_back(s[a]);
  }
  return out;
}

/// The precedes-minimal elements of a finite set, sorted by cmp_total.
inline std::vector<ExpVector> minimal_elements(std::vector<ExpVector> s) {
  return minimal_under(std::move(s), [](const ExpVector& a, const ExpVector& b) { return precedes_vec(a, b); });
}

inline constexpr std::size_t kDefaultSplitCap = std::size_t{1} << 20;

/// All ordered pairs (p, q) with p + q = u. There are prod (c + 1) of them
/// over every coefficient c of u.
inline std::vector<std::pair<ExpVector, ExpVector>> splits(const ExpVector& u,
                                                           std::size_t cap = kDefaultSplitCap) {
  // Flatten coefficients so the enumeration is an odometer.
  std::vector<std::pair<std::size_t, std::size_t>> slots;  // (coordinate, degree)
  std::vector<Coeff> limit;
  unsigned __int128 count = 1;
  for (std::size_t j = 0; j < u.arity(); ++j) {
    auto c = u[j].coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] == 0) continue;
      slots.emplace_back(j, k);
      limit.push_back(c[k]);
      count *= static_cast<unsigned __int128>(c[k]) + 1;
      if (count > cap) throw CapExceededError("splits: more than " + std::to_string(cap) + " pairs");
    }
  }
  std::vector<std::pair<ExpVector, ExpVector>> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<Coeff> digit(slots.size(), 0);
  for (;;) {
    std::vector<std::vector<Coeff>> p(u.arity()), q(u.arity());
    for (std::size_t j = 0; j < u.arity(); ++j) {
      auto c = u[j].coeffs();
      p[j].assign(c.size(), 0);
      q[j].assign(c.begin(), c.end());
    }
    for (std::size_t s = 0; s < slots.size(); ++s) {
      auto [j, k] = slots[s];
      p[j][k] = digit[s];
      q[j][k] -= digit[s];
    }
    std::vector<ExpPoly> pp, qq;
    for (std::size_t j = 0; j < u.arity(); ++j) {
      pp.emplace_back(std::move(p[j]));
      qq.emplace_back(std::move(q[j]));
    }
    out.emplace_back(ExpVector(std::move(pp)), ExpVector(std::move(qq)));
    std::size_t s = 0;
    while (s < slots.size() && digit[s] == limit[s]) digit[s++] = 0;
    if (s == slots.size()) break;
    ++digit[s];
  }
  return out;
}

}  // namespace mdi
