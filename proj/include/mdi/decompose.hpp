#pragma once

// Prime decompositions.
//
// A radical well-mixed monomial ideal is an irredundant intersection of the
// primes m^b = [ y_i^{x^{b_i}} : b_i != -1 ], b in (N u {-1})^n. Membership of
// Y^v in m^b only looks at deg(v), so the whole computation happens on degree
// vectors. A perfect monomial ideal is an intersection of p^b = [ y_i : b_i = 1 ],
// b in {0,1}^n, i.e. of minimal transversals of the support hypergraph.

#include <algorithm>
#include <string>
#include <vector>

#include "mdi/error.hpp"
#include "mdi/ideal.hpp"
#include "mdi/monomial.hpp"

namespace mdi {

enum class Flavor { rwm_prime, perfect_prime };

inline std::string_view to_string(Flavor f) { return f == Flavor::rwm_prime ? "rwm_prime" : "perfect_prime"; }

struct Decomposition {
  Flavor flavor = Flavor::rwm_prime;
  std::size_t arity = 0;
  std::vector<CharVector> components;  // irredundant, sorted

  bool operator==(const Decomposition&) const = default;
};

inline bool component_member(const ExpVector& v, const CharVector& b, Flavor flavor) {
  check_arity(v.arity(), b.arity());
  for (std::size_t i = 0; i < b.arity(); ++i) {
    if (flavor == Flavor::rwm_prime) {
      if (b[i] != -1 && v[i].degree() >= b[i]) return true;
    } else if (b[i] == 1 && !v[i].is_zero()) {
      return true;
    }
  }
  return false;
}

/// Is the component named by a contained in the one named by b? Each
/// generator of the left side is a single-variable monomial.
inline bool component_contains(const CharVector& a, const CharVector& b, Flavor flavor) {
  check_arity(a.arity(), b.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (flavor == Flavor::rwm_prime) {
      if (a[i] != -1 && (b[i] == -1 || a[i] < b[i])) return false;
    } else if (a[i] == 1 && b[i] != 1) {
      return false;
    }
  }
  return true;
}

namespace detail {

// Drop every component that contains a different one.
inline std::vector<CharVector> irredundant(std::vector<CharVector> comps, Flavor flavor) {
  canonicalize(comps);
  std::vector<CharVector> out;
  for (std::size_t a = 0; a < comps.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < comps.size() && !redundant; ++b)
      redundant = b != a && component_contains(comps[b], comps[a], flavor);
    if (!redundant) out.push_back(comps[a]);
  }
  return out;
}

// Irreducible decomposition of the up-set generated by `gens` in
// (N u {-1})^n: Y^v is in the ideal iff deg(v) >= some generator.
//
// Generators are added one at a time. A component that already contains the
// new generator survives; any other is refined along each coordinate the
// generator uses. A refined candidate is dropped as soon as it contains a
// component already kept, which is the choice-function expansion with
// absorption applied eagerly.
inline std::vector<CharVector> rwm_components(const std::vector<CharVector>& gens, std::size_t arity) {
  std::vector<CharVector> comps{CharVector(std::vector<long>(arity, -1))};
  for (const auto& u : gens) {
    std::vector<CharVector> kept, fresh;
    for (auto& c : comps) {
      bool contains_u = false;
      for (std::size_t i = 0; i < arity; ++i) contains_u = contains_u || (c[i] != -1 && u[i] >= c[i]);
      if (contains_u)
        kept.push_back(c);
      else
        fresh.push_back(c);
    }
    std::vector<CharVector> next = kept;
    for (const auto& c : fresh) {
      for (std::size_t i = 0; i < arity; ++i) {
        if (u[i] == -1) continue;
        CharVector d = c;
        d.entries[i] = d[i] == -1 ? u[i] : std::min(d[i], u[i]);
        bool absorbed = std::any_of(kept.begin(), kept.end(), [&](const CharVector& k) {
          return component_contains(k, d, Flavor::rwm_prime);
        });
        if (!absorbed) next.push_back(std::move(d));
      }
    }
    comps = irredundant(std::move(next), Flavor::rwm_prime);
  }
  return comps;
}

}  // namespace detail

/// The unique irredundant decomposition of <gens>_r into primes m^b.
inline Decomposition standard_prime_decomposition(const IdealPresentation& I) {
  if (I.kind() != ClosureKind::radical_well_mixed)
    throw PreconditionError("standard prime decomposition needs radical_well_mixed kind, got " +
                            std::string(to_string(I.kind())));
  if (I.is_unit()) throw PreconditionError("unit ideal has no prime decomposition");
  // The zero ideal comes out as the single component (-1, ..., -1).
  Decomposition d{Flavor::rwm_prime, I.arity(), {}};
  d.components = detail::rwm_components(character_vectors(I), I.arity());
  return d;
}

/// Minimal transversals of a hypergraph on `arity` vertices whose edges are
/// given as 0/1 vectors. Berge's incremental scheme with minimization.
inline std::vector<CharVector> minimal_transversals(const std::vector<CharVector>& edges, std::size_t arity) {
  std::vector<CharVector> hits{CharVector(std::vector<long>(arity, 0))};
  for (const auto& e : edges) {
    check_arity(arity, e.arity());
    std::vector<CharVector> next;
    for (const auto& h : hits) {
      bool hit = false;
      for (std::size_t i = 0; i < arity && !hit; ++i) hit = h[i] == 1 && e[i] == 1;
      if (hit) {
        next.push_back(h);
        continue;
      }
      for (std::size_t i = 0; i < arity; ++i) {
        if (e[i] != 1) continue;
        CharVector g = h;
        g.entries[i] = 1;
        next.push_back(std::move(g));
      }
    }
    hits = minimal_under(std::move(next), entrywise_leq);
  }
  return hits;
}

/// {gens} as an intersection of primes p^b = [y_i : b_i = 1].
inline Decomposition perfect_prime_decomposition(const IdealPresentation& I) {
  if (I.kind() != ClosureKind::perfect)
    throw PreconditionError("perfect prime decomposition needs perfect kind, got " +
                            std::string(to_string(I.kind())));
  if (I.is_unit()) throw PreconditionError("unit ideal has no prime decomposition");
  Decomposition d{Flavor::perfect_prime, I.arity(), {}};
  std::vector<CharVector> edges;
  const auto reduced = reduce_generators(I);
  for (const auto& g : reduced.gens()) edges.push_back(support_pattern(g));
  d.components = minimal_transversals(edges, I.arity());
  canonicalize(d.components);
  return d;
}

inline Decomposition decompose(const IdealPresentation& I) {
  return I.kind() == ClosureKind::perfect ? perfect_prime_decomposition(I) : standard_prime_decomposition(I);
}

/// Generators of the single prime named by b.
inline IdealPresentation component_ideal(const CharVector& b, Flavor flavor) {
  std::vector<ExpVector> gens;
  for (std::size_t i = 0; i < b.arity(); ++i) {
    bool present = flavor == Flavor::rwm_prime ? b[i] != -1 : b[i] == 1;
    if (!present) continue;
    std::vector<long> e(b.arity(), -1);
    e[i] = flavor == Flavor::rwm_prime ? b[i] : 0;
    gens.push_back(pattern_monomial(CharVector(std::move(e))));
  }
  auto kind = flavor == Flavor::rwm_prime ? ClosureKind::radical_well_mixed : ClosureKind::perfect;
  return IdealPresentation(b.arity(), kind, std::move(gens));
}

/// Re-expand an intersection of components into minimal generators:
/// intersect the components one at a time using products of generators.
inline IdealPresentation components_to_generators(const Decomposition& D) {
  auto kind = D.flavor == Flavor::rwm_prime ? ClosureKind::radical_well_mixed : ClosureKind::perfect;
  if (D.components.empty()) return IdealPresentation::unit(D.arity, kind);
  IdealPresentation acc = component_ideal(D.components.front(), D.flavor);
  for (std::size_t k = 1; k < D.components.size(); ++k) acc = intersect(acc, component_ideal(D.components[k], D.flavor));
  return reduce_generators(acc);
}

/// Membership in the intersection of the components.
inline bool member(const ExpVector& v, const Decomposition& D) {
  return std::all_of(D.components.begin(), D.components.end(),
                     [&](const CharVector& b) { return component_member(v, b, D.flavor); });
}

}  // namespace mdi
