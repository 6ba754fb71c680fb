#pragma once

// Properties of a Delta-ideal [S]: is it prime, and is it already closed
// under the radical / reflexive / perfect / radical well-mixed closure?

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "mdi/decompose.hpp"
#include "mdi/error.hpp"
#include "mdi/ideal.hpp"
#include "mdi/monomial.hpp"

namespace mdi {

/// Some b with [gens] = m^b, if there is one.
///
/// Decided by three conditions: the radical well-mixed closure has exactly one
/// component b, each y_i^{x^{b_i}} lies in [gens], and every generator lies in
/// m^b. The last two already give [gens] = m^b.
inline std::optional<CharVector> is_prime(const IdealPresentation& I) {
  if (I.kind() != ClosureKind::delta) throw PreconditionError("is_prime needs a delta presentation");
  if (I.is_unit()) return std::nullopt;
  auto D = standard_prime_decomposition(I.with_kind(ClosureKind::radical_well_mixed));
  if (D.components.size() != 1) return std::nullopt;
  const CharVector& b = D.components.front();
  const auto prime = component_ideal(b, Flavor::rwm_prime);
  for (const auto& y : prime.gens())
    if (!member(y, I)) return std::nullopt;
  for (const auto& g : I.gens())
    if (!component_member(g, b, Flavor::rwm_prime)) return std::nullopt;
  return b;
}

enum class ClosureProperty { radical, reflexive, perfect, rwm };

inline std::string_view to_string(ClosureProperty p) {
  switch (p) {
    case ClosureProperty::radical: return "radical";
    case ClosureProperty::reflexive: return "reflexive";
    case ClosureProperty::perfect: return "perfect";
    case ClosureProperty::rwm: return "rwm";
  }
  return "?";
}

inline std::optional<ClosureProperty> parse_property(std::string_view s) {
  for (auto p : {ClosureProperty::radical, ClosureProperty::reflexive, ClosureProperty::perfect, ClosureProperty::rwm})
    if (s == to_string(p)) return p;
  if (s == "radical_well_mixed") return ClosureProperty::rwm;
  return std::nullopt;
}

inline ClosureKind closure_kind(ClosureProperty p) {
  switch (p) {
    case ClosureProperty::radical: return ClosureKind::radical;
    case ClosureProperty::reflexive: return ClosureKind::reflexive;
    case ClosureProperty::perfect: return ClosureKind::perfect;
    case ClosureProperty::rwm: return ClosureKind::radical_well_mixed;
  }
  return ClosureKind::delta;
}

struct WitnessCaps {
  long max_degree = -1;        // -1: 2 * (max generator degree) + 2
  Coeff max_coeff = 0;         // 0: max generator coefficient + 1
  std::size_t max_candidates = std::size_t{1} << 20;
};

struct ClosedVerdict {
  enum class Status { yes, no, inconclusive };
  Status status = Status::inconclusive;
  std::optional<ExpVector> witness;  // set iff status == no
  std::size_t candidates_checked = 0;
};

inline std::string_view to_string(ClosedVerdict::Status s) {
  switch (s) {
    case ClosedVerdict::Status::yes: return "yes";
    case ClosedVerdict::Status::no: return "no";
    case ClosedVerdict::Status::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace detail {

// Candidate order: smaller top degree first, then cmp_total.
inline bool witness_less(const ExpVector& a, const ExpVector& b) {
  if (a.max_degree() != b.max_degree()) return a.max_degree() < b.max_degree();
  return cmp_total(a, b) < 0;
}

}  // namespace detail

/// Bounded witness search for v in closure([gens]) \ [gens].
///
/// Candidates are the squarefree and x-stripped forms of each generator
/// (these Delta-generate the radical and reflexive closures) and every vector
/// of single terms (x^{c_1}, ..., x^{c_n}) with c_j <= degree cap. If [gens]
/// is not perfect or not radical well-mixed, a witness of the second shape
/// exists with every c_j <= 2 * (max generator degree) + 1, so "yes" is
/// reported only when that whole range was searched.
inline ClosedVerdict is_closed_under(const IdealPresentation& I, ClosureProperty prop, WitnessCaps caps = {}) {
  if (I.kind() != ClosureKind::delta) throw PreconditionError("is_closed_under needs a delta presentation");
  ClosedVerdict verdict;
  if (I.is_unit()) {
    verdict.status = ClosedVerdict::Status::yes;
    return verdict;
  }
  const std::size_t n = I.arity();
  long gen_deg = 0;
  Coeff gen_coeff = 0;
  for (const auto& g : I.gens()) {
    gen_deg = std::max(gen_deg, g.max_degree());
    gen_coeff = std::max(gen_coeff, g.max_coeff());
  }
  const long deg_cap = caps.max_degree >= 0 ? caps.max_degree : 2 * gen_deg + 2;
  const Coeff coeff_cap = caps.max_coeff > 0 ? caps.max_coeff : gen_coeff + 1;

  IdealPresentation closure = I.with_kind(closure_kind(prop));
  std::vector<ExpVector> witnesses;
  auto consider = [&](const ExpVector& v) {
    if (v.max_degree() > deg_cap || v.max_coeff() > coeff_cap) return false;
    ++verdict.candidates_checked;
    if (member(v, closure) && !member(v, I)) witnesses.push_back(v);
    return true;
  };

  bool basis_inside = true;
  for (const auto& g : I.gens()) {
    basis_inside = consider(squarefree(g)) && basis_inside;
    basis_inside = consider(strip_shift(g)) && basis_inside;
  }

  bool exhausted = true;
  if (prop == ClosureProperty::perfect || prop == ClosureProperty::rwm) {
    // Odometer over c in {-1, ..., deg_cap}^n.
    std::vector<long> c(n, -1);
    std::size_t budget = caps.max_candidates;
    for (;;) {
      if (budget-- == 0) {
        exhausted = false;
        break;
      }
      consider(pattern_monomial(CharVector(c)));
      std::size_t j = 0;
      while (j < n && c[j] == deg_cap) c[j++] = -1;
      if (j == n) break;
      ++c[j];
    }
  }

  if (!witnesses.empty()) {
    verdict.status = ClosedVerdict::Status::no;
    verdict.witness = *std::min_element(witnesses.begin(), witnesses.end(), detail::witness_less);
    return verdict;
  }
  bool complete = (prop == ClosureProperty::radical || prop == ClosureProperty::reflexive)
                      ? basis_inside
                      : exhausted && deg_cap >= 2 * gen_deg + 1;
  verdict.status = complete ? ClosedVerdict::Status::yes : ClosedVerdict::Status::inconclusive;
  return verdict;
}

}  // namespace mdi
