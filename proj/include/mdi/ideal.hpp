#pragma once

// Monomial difference ideals presented by finitely many generators, tagged
// with the closure under which they generate.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mdi/error.hpp"
#include "mdi/monomial.hpp"

namespace mdi {

enum class ClosureKind {
  delta,               // [S]
  radical,             // sqrt[S]
  reflexive,           // [S]*
  perfect,             // {S}
  well_mixed,          // <S>, support level
  radical_well_mixed,  // <S>_r
};

inline constexpr std::array<ClosureKind, 6> kAllKinds = {
    ClosureKind::delta,   ClosureKind::radical,    ClosureKind::reflexive,
    ClosureKind::perfect, ClosureKind::well_mixed, ClosureKind::radical_well_mixed};

inline std::string_view to_string(ClosureKind k) {
  switch (k) {
    case ClosureKind::delta: return "delta";
    case ClosureKind::radical: return "radical";
    case ClosureKind::reflexive: return "reflexive";
    case ClosureKind::perfect: return "perfect";
    case ClosureKind::well_mixed: return "well_mixed";
    case ClosureKind::radical_well_mixed: return "radical_well_mixed";
  }
  return "?";
}

inline std::optional<ClosureKind> parse_kind(std::string_view s) {
  for (auto k : kAllKinds)
    if (s == to_string(k)) return k;
  if (s == "wm" || s == "well-mixed") return ClosureKind::well_mixed;
  if (s == "rwm" || s == "radical-well-mixed") return ClosureKind::radical_well_mixed;
  return std::nullopt;
}

/// Generators plus closure kind. Generators are nonzero, deduplicated and
/// sorted by cmp_total; the monomial 1 is recorded as the unit flag instead.
class IdealPresentation {
 public:
  IdealPresentation(std::size_t arity, ClosureKind kind, std::vector<ExpVector> gens = {})
      : arity_(arity), kind_(kind) {
    if (arity == 0) throw PreconditionError("arity must be at least 1");
    for (auto& g : gens) {
      check_arity(arity_, g.arity());
      if (g.is_one())
        unit_ = true;
      else
        gens_.push_back(std::move(g));
    }
    canonicalize(gens_);
  }

  static IdealPresentation unit(std::size_t arity, ClosureKind kind) {
    IdealPresentation I(arity, kind);
    I.unit_ = true;
    return I;
  }

  std::size_t arity() const noexcept { return arity_; }
  ClosureKind kind() const noexcept { return kind_; }
  bool is_unit() const noexcept { return unit_; }
  const std::vector<ExpVector>& gens() const noexcept { return gens_; }

  IdealPresentation with_kind(ClosureKind k) const {
    IdealPresentation I = *this;
    I.kind_ = k;
    return I;
  }

  bool operator==(const IdealPresentation&) const = default;

 private:
  std::size_t arity_;
  ClosureKind kind_;
  bool unit_ = false;
  std::vector<ExpVector> gens_;
};

// ---------------------------------------------------------------------------
// Membership, one criterion per closure kind.

namespace member_by {

inline bool delta(const ExpVector& v, const ExpVector& g) { return divides_shifted(g, v).has_value(); }

// m*v only fixes coefficient magnitudes, so sqrt[S] membership is a support
// question: some shift of g must have its support inside that of v.
inline bool radical(const ExpVector& v, const ExpVector& g) {
  check_arity(v, g);
  long bound = -1;
  bool any = false;
  for (std::size_t j = 0; j < g.arity(); ++j) {
    if (g[j].is_zero()) continue;
    if (v[j].is_zero()) return false;
    long slack = v[j].degree() - g[j].degree();
    bound = any ? std::min(bound, slack) : slack;
    any = true;
  }
  if (!any) return true;
  for (long i = 0; i <= bound; ++i) {
    bool inside = true;
    for (std::size_t j = 0; j < g.arity() && inside; ++j) {
      auto c = g[j].coeffs();
      for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0 && v[j][k + static_cast<std::size_t>(i)] == 0) {
          inside = false;
          break;
        }
    }
    if (inside) return true;
  }
  return false;
}

// x^m v in [g] for some m >= 0: either a forward shift of g fits under v, or
// g itself fits under x^k v, which forces x^k to divide g.
inline bool reflexive(const ExpVector& v, const ExpVector& g) { return divides_shifted(strip_shift(g), v).has_value(); }

inline bool perfect(const ExpVector& v, const ExpVector& g) {
  return entrywise_leq(support_pattern(g), support_pattern(v));
}

inline bool well_mixed(const ExpVector& v, const ExpVector& g) { return precedes_vec(g, v); }

inline bool radical_well_mixed(const ExpVector& v, const ExpVector& g) {
  return entrywise_leq(deg_vector(g), deg_vector(v));
}

}  // namespace member_by

/// Does generator g alone put v into the closure of the given kind?
inline bool member_via(ClosureKind kind, const ExpVector& v, const ExpVector& g) {
  switch (kind) {
    case ClosureKind::delta: return member_by::delta(v, g);
    case ClosureKind::radical: return member_by::radical(v, g);
    case ClosureKind::reflexive: return member_by::reflexive(v, g);
    case ClosureKind::perfect: return member_by::perfect(v, g);
    case ClosureKind::well_mixed: return member_by::well_mixed(v, g);
    case ClosureKind::radical_well_mixed: return member_by::radical_well_mixed(v, g);
  }
  return false;
}

/// Every closure here is a union over generators of the closure of that
/// generator alone, so membership is an existential over gens.
inline bool member(const ExpVector& v, const IdealPresentation& I) {
  check_arity(I.arity(), v.arity());
  if (I.is_unit()) return true;
  return std::any_of(I.gens().begin(), I.gens().end(),
                     [&](const ExpVector& g) { return member_via(I.kind(), v, g); });
}

/// Polynomial membership: a polynomial lies in a monomial ideal iff every
/// monomial of its support does.
inline bool member_all(const std::vector<ExpVector>& support, const IdealPresentation& I) {
  return std::all_of(support.begin(), support.end(), [&](const ExpVector& v) { return member(v, I); });
}

// ---------------------------------------------------------------------------
// Generator reduction

namespace detail {

inline std::vector<ExpVector> delta_minimal(std::vector<ExpVector> s) {
  return minimal_under(std::move(s),
                       [](const ExpVector& a, const ExpVector& b) { return divides_shifted(a, b).has_value(); });
}

inline std::vector<ExpVector> pattern_minimal(const std::vector<ExpVector>& gens, CharVector (*pattern)(const ExpVector&),
                                              ExpVector (*realize)(const CharVector&)) {
  std::vector<CharVector> pats;
  pats.reserve(gens.size());
  for (const auto& g : gens) pats.push_back(pattern(g));
  pats = minimal_under(std::move(pats), entrywise_leq);
  std::vector<ExpVector> out;
  out.reserve(pats.size());
  for (const auto& p : pats) out.push_back(realize(p));
  canonicalize(out);
  return out;
}

inline ExpVector pattern_to_support_monomial(const CharVector& p) {
  std::vector<ExpPoly> out;
  for (long e : p.entries) out.push_back(e != 0 ? ExpPoly::constant(1) : ExpPoly{});
  return ExpVector(std::move(out));
}

}  // namespace detail

/// A smaller presentation with the same member() function.
inline IdealPresentation reduce_generators(const IdealPresentation& I) {
  if (I.is_unit()) return IdealPresentation::unit(I.arity(), I.kind());
  std::vector<ExpVector> gens = I.gens();
  switch (I.kind()) {
    case ClosureKind::delta:
      gens = detail::delta_minimal(std::move(gens));
      break;
    case ClosureKind::radical:
      for (auto& g : gens) g = squarefree(g);
      gens = detail::delta_minimal(std::move(gens));
      break;
    case ClosureKind::reflexive:
      for (auto& g : gens) g = strip_shift(g);
      gens = detail::delta_minimal(std::move(gens));
      break;
    case ClosureKind::perfect:
      gens = detail::pattern_minimal(gens, support_pattern, detail::pattern_to_support_monomial);
      break;
    case ClosureKind::well_mixed:
      gens = minimal_elements(std::move(gens));
      break;
    case ClosureKind::radical_well_mixed:
      gens = detail::pattern_minimal(gens, deg_vector, pattern_monomial);
      break;
  }
  return IdealPresentation(I.arity(), I.kind(), std::move(gens));
}

/// Character vectors of <gens>_r: the minimal degree vectors.
inline std::vector<CharVector> character_vectors(const IdealPresentation& I) {
  if (I.kind() != ClosureKind::radical_well_mixed)
    throw PreconditionError("character vectors need a radical_well_mixed presentation");
  std::vector<CharVector> out;
  const auto reduced = reduce_generators(I);
  for (const auto& g : reduced.gens()) out.push_back(deg_vector(g));
  canonicalize(out);
  return out;
}

inline void check_compatible(const IdealPresentation& I, const IdealPresentation& J) {
  check_arity(I.arity(), J.arity());
  if (I.kind() != J.kind())
    throw PreconditionError("kind mismatch: " + std::string(to_string(I.kind())) + " vs " +
                            std::string(to_string(J.kind())));
}

/// I + J: union of generators, reduced.
inline IdealPresentation sum(const IdealPresentation& I, const IdealPresentation& J) {
  check_compatible(I, J);
  if (I.is_unit() || J.is_unit()) return IdealPresentation::unit(I.arity(), I.kind());
  std::vector<ExpVector> gens = I.gens();
  gens.insert(gens.end(), J.gens().begin(), J.gens().end());
  return reduce_generators(IdealPresentation(I.arity(), I.kind(), std::move(gens)));
}

/// <F>_r cap <G>_r = <FG>_r, and likewise {F} cap {G} = {FG}.
inline IdealPresentation intersect(const IdealPresentation& I, const IdealPresentation& J) {
  check_compatible(I, J);
  if (I.kind() != ClosureKind::radical_well_mixed && I.kind() != ClosureKind::perfect)
    throw PreconditionError("intersection by products needs radical_well_mixed or perfect kind, got " +
                            std::string(to_string(I.kind())));
  if (I.is_unit()) return reduce_generators(J);
  if (J.is_unit()) return reduce_generators(I);
  auto a = reduce_generators(I), b = reduce_generators(J);
  std::vector<ExpVector> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const auto& u : a.gens())
    for (const auto& w : b.gens()) gens.push_back(u + w);
  return reduce_generators(IdealPresentation(I.arity(), I.kind(), std::move(gens)));
}

inline IdealPresentation intersect_rwm(const IdealPresentation& I, const IdealPresentation& J) {
  if (I.kind() != ClosureKind::radical_well_mixed || J.kind() != ClosureKind::radical_well_mixed)
    throw PreconditionError("intersect_rwm needs radical_well_mixed presentations");
  return intersect(I, J);
}

}  // namespace mdi
