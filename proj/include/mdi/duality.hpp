#pragma once

// Alexander duality for radical well-mixed monomial ideals.
//
// For a point a in (N u {-1})^n dominating every character vector of I, the
// dual I^[a] is the intersection of m^{a\b} over the character vectors b of
// I. Duality swaps generators and components, and applying it twice gives I
// back.

#include <string>
#include <vector>

#include "mdi/decompose.hpp"
#include "mdi/error.hpp"
#include "mdi/ideal.hpp"
#include "mdi/monomial.hpp"

namespace mdi {

inline std::string to_string(const CharVector& b) {
  std::string s = "(";
  for (std::size_t i = 0; i < b.arity(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
  return s + ")";
}

/// (a\b)_i = a_i + 1 - b_i when b_i >= 0, and -1 when b_i = -1.
/// Accepts b_i up to a_i + 1: character vectors of a dual reach that bound.
inline CharVector a_complement(const CharVector& a, const CharVector& b) {
  check_arity(a.arity(), b.arity());
  CharVector out;
  out.entries.reserve(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (a[i] < -1 || b[i] < -1 || b[i] > a[i] + 1)
      throw PreconditionError("a_complement: " + to_string(b) + " is not bounded by " + to_string(a) + " + 1");
    out.entries.push_back(b[i] == -1 ? -1 : a[i] + 1 - b[i]);
  }
  return out;
}

/// Entrywise maximum of the character vectors; the smallest admissible point.
inline CharVector default_point(const IdealPresentation& I) {
  CharVector a(std::vector<long>(I.arity(), -1));
  for (const auto& c : character_vectors(I))
    for (std::size_t i = 0; i < a.arity(); ++i) a.entries[i] = std::max(a[i], c[i]);
  return a;
}

/// The duality point together with an ideal it dominates.
class DualityContext {
 public:
  DualityContext(CharVector a, IdealPresentation I) : a_(std::move(a)), ideal_(reduce_generators(I)) {
    if (ideal_.kind() != ClosureKind::radical_well_mixed)
      throw PreconditionError("Alexander duality needs a radical_well_mixed ideal");
    if (ideal_.is_unit()) throw PreconditionError("Alexander duality is undefined for the unit ideal");
    if (ideal_.gens().empty()) throw PreconditionError("Alexander duality is undefined for the zero ideal");
    check_arity(ideal_.arity(), a_.arity());
    for (long e : a_.entries)
      if (e < -1) throw PreconditionError("duality point entries must be >= -1");
    for (const auto& c : character_vectors(ideal_))
      if (!entrywise_leq(c, a_))
        throw PreconditionError("duality point " + to_string(a_) + " does not dominate character vector " +
                                to_string(c));
  }

  explicit DualityContext(IdealPresentation I) : DualityContext(default_point(I), I) {}

  const CharVector& point() const noexcept { return a_; }
  const IdealPresentation& ideal() const noexcept { return ideal_; }

 private:
  CharVector a_;
  IdealPresentation ideal_;
};

struct AlexanderDual {
  Decomposition components;      // m^{a\b} for every character vector b of I
  IdealPresentation generators;  // minimal generators of the same ideal
};

/// Dual via the definition: one component per character vector of I.
inline Decomposition dual_components(const CharVector& a, const std::vector<CharVector>& char_vectors) {
  Decomposition D{Flavor::rwm_prime, a.arity(), {}};
  for (const auto& b : char_vectors) D.components.push_back(a_complement(a, b));
  D.components = detail::irredundant(std::move(D.components), Flavor::rwm_prime);
  return D;
}

/// Dual via the component side: the pattern monomials x^{a\b} over the
/// irreducible components m^b of I generate I^[a].
inline IdealPresentation dual_generators(const CharVector& a, const Decomposition& components) {
  std::vector<ExpVector> gens;
  for (const auto& b : components.components) gens.push_back(pattern_monomial(a_complement(a, b)));
  return reduce_generators(IdealPresentation(a.arity(), ClosureKind::radical_well_mixed, std::move(gens)));
}

inline AlexanderDual alexander_dual(const DualityContext& ctx) {
  auto D = dual_components(ctx.point(), character_vectors(ctx.ideal()));
  return {D, components_to_generators(D)};
}

/// Both constructions, compared on minimal generators.
inline bool dual_routes_agree(const DualityContext& ctx) {
  auto via_chars = alexander_dual(ctx).generators;
  auto via_comps = dual_generators(ctx.point(), standard_prime_decomposition(ctx.ideal()));
  return reduce_generators(via_chars) == reduce_generators(via_comps);
}

/// x^b with x^{-1} = 0 lies outside I exactly when x^{a-b} lies in I^[a],
/// where (a-b)_i = a_i + 1 for b_i = -1.
inline bool complementation_check(const DualityContext& ctx, const CharVector& b) {
  const CharVector& a = ctx.point();
  check_arity(a.arity(), b.arity());
  if (!entrywise_leq(b, a)) throw PreconditionError("complementation_check: " + to_string(b) + " not <= point");
  std::vector<long> diff(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (b[i] < -1) throw PreconditionError("character vector entry below -1");
    diff[i] = b[i] == -1 ? a[i] + 1 : a[i] - b[i];
  }
  auto dual = alexander_dual(ctx).components;
  bool outside = !member(pattern_monomial(b), ctx.ideal());
  bool inside_dual = member(pattern_monomial(CharVector(std::move(diff))), dual);
  return outside == inside_dual;
}

/// (I^[a])^[a] == I on minimal generators. The second dual is taken over the
/// character vectors of I^[a], which may exceed a by one in an entry.
inline bool involution_check(const DualityContext& ctx) {
  const CharVector& a = ctx.point();
  auto first = alexander_dual(ctx).generators;
  auto second = dual_components(a, character_vectors(first));
  return components_to_generators(second) == ctx.ideal();
}

/// Does a dominate every character vector of I^[a]?
inline bool point_dominates_dual(const DualityContext& ctx) {
  for (const auto& c : character_vectors(alexander_dual(ctx).generators))
    if (!entrywise_leq(c, ctx.point())) return false;
  return true;
}

}  // namespace mdi
