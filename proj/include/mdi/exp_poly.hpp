#pragma once

// Symbolic exponents: polynomials in N[x].
//
// For an element a of a difference ring, a^p with p = sum c_i x^i stands for
// prod_i sigma^i(a)^{c_i}. Monomials of the difference polynomial ring are
// therefore indexed by vectors of ExpPoly, and everything in this library
// reduces to arithmetic and orders on N[x].

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mdi/error.hpp"

namespace mdi {

using Coeff = std::uint64_t;

// Largest degree an ExpPoly may reach. Keeps shift() from allocating
// unbounded memory on hostile input.
inline constexpr std::size_t kMaxDegree = std::size_t{1} << 16;

namespace detail {

inline Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coefficient overflow in addition");
  return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("coefficient overflow in multiplication");
  return r;
}

inline void check_length(std::size_t len) {
  if (len > kMaxDegree + 1) throw OverflowError("exponent degree exceeds " + std::to_string(kMaxDegree));
}

}  // namespace detail

/// An element of N[x], stored densely with coeffs()[i] the coefficient of
/// x^i. Always canonical: no trailing zeros, the zero polynomial is empty.
class ExpPoly {
 public:
  ExpPoly() = default;

  explicit ExpPoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    detail::check_length(coeffs_.size());
    trim();
  }

  ExpPoly(std::initializer_list<Coeff> coeffs) : ExpPoly(std::vector<Coeff>(coeffs)) {}

  static ExpPoly constant(Coeff c) { return c == 0 ? ExpPoly{} : ExpPoly(std::vector<Coeff>{c}); }

  // c * x^k
  static ExpPoly term(Coeff c, std::size_t k) {
    if (c == 0) return {};
    detail::check_length(k + 1);
    std::vector<Coeff> v(k + 1, 0);
    v[k] = c;
    return ExpPoly(std::move(v));
  }

  std::span<const Coeff> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept { return coeffs_.empty(); }

  // Coefficient of x^i; zero beyond the stored range.
  Coeff operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }

  /// deg(0) = -1.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

  /// Index of the lowest nonzero coefficient; -1 for zero.
  long low_degree() const noexcept {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return static_cast<long>(i);
    return -1;
  }

  /// |f|: the sum of all coefficients.
  Coeff weight() const {
    Coeff s = 0;
    for (Coeff c : coeffs_) s = detail::checked_add(s, c);
    return s;
  }

  Coeff max_coeff() const noexcept {
    return coeffs_.empty() ? 0 : *std::max_element(coeffs_.begin(), coeffs_.end());
  }

  bool operator==(const ExpPoly&) const = default;

  friend ExpPoly add(const ExpPoly& f, const ExpPoly& g) {
    const auto& big = f.coeffs_.size() >= g.coeffs_.size() ? f.coeffs_ : g.coeffs_;
    const auto& small = f.coeffs_.size() >= g.coeffs_.size() ? g.coeffs_ : f.coeffs_;
    std::vector<Coeff> out(big);
    for (std::size_t i = 0; i < small.size(); ++i) out[i] = detail::checked_add(out[i], small[i]);
    return ExpPoly(std::move(out));
  }

  /// x^i * f
  friend ExpPoly shift(const ExpPoly& f, std::size_t i) {
    if (f.is_zero() || i == 0) return f;
    detail::check_length(f.coeffs_.size() + i);
    std::vector<Coeff> out(f.coeffs_.size() + i, 0);
    std::copy(f.coeffs_.begin(), f.coeffs_.end(), out.begin() + static_cast<std::ptrdiff_t>(i));
    return ExpPoly(std::move(out));
  }

  friend ExpPoly scale(Coeff m, const ExpPoly& f) {
    if (m == 0) return {};
    std::vector<Coeff> out(f.coeffs_);
    for (Coeff& c : out) c = detail::checked_mul(c, m);
    return ExpPoly(std::move(out));
  }

  friend ExpPoly mul(const ExpPoly& f, const ExpPoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    detail::check_length(f.coeffs_.size() + g.coeffs_.size() - 1);
    std::vector<Coeff> out(f.coeffs_.size() + g.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
      if (f.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < g.coeffs_.size(); ++j)
        out[i + j] = detail::checked_add(out[i + j], detail::checked_mul(f.coeffs_[i], g.coeffs_[j]));
    }
    return ExpPoly(std::move(out));
  }

  ExpPoly& operator+=(const ExpPoly& g) { return *this = add(*this, g); }
  friend ExpPoly operator+(const ExpPoly& f, const ExpPoly& g) { return add(f, g); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

/// The total order of the ring: compare coefficient vectors from the highest
/// degree down. For canonical polynomials a higher degree always wins.
inline std::strong_ordering cmp_total(const ExpPoly& f, const ExpPoly& g) {
  auto a = f.coeffs(), b = g.coeffs();
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

/// The suffix-sum partial order: f precedes g iff sum_{j>=i} f_j <= sum_{j>=i} g_j
/// for every i. Compatible with addition and with multiplication by x.
inline bool precedes(const ExpPoly& f, const ExpPoly& g) {
  auto a = f.coeffs(), b = g.coeffs();
  if (a.size() > b.size()) return false;
  // 128-bit accumulators: at most kMaxDegree+1 terms of 64 bits each.
  unsigned __int128 sa = 0, sb = 0;
  for (std::size_t i = b.size(); i-- > 0;) {
    if (i < a.size()) sa += a[i];
    sb += b[i];
    if (sa > sb) return false;
  }
  return true;
}

/// Coefficientwise f <= g, i.e. g - f lies in N[x].
inline bool coeff_leq(const ExpPoly& f, const ExpPoly& g) {
  auto a = f.coeffs(), b = g.coeffs();
  if (a.size() > b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// Every nonzero coefficient replaced by 1.
inline ExpPoly squarefree(const ExpPoly& f) {
  std::vector<Coeff> out(f.coeffs().begin(), f.coeffs().end());
  for (Coeff& c : out) c = c != 0 ? 1 : 0;
  return ExpPoly(std::move(out));
}

/// f / x^k, assuming the k lowest coefficients vanish.
inline ExpPoly unshift(const ExpPoly& f, std::size_t k) {
  if (f.is_zero() || k == 0) return f;
  auto c = f.coeffs();
  return ExpPoly(std::vector<Coeff>(c.begin() + static_cast<std::ptrdiff_t>(std::min(k, c.size())), c.end()));
}

}  // namespace mdi
