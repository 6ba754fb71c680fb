#pragma once

// Brute-force deciders used as ground truth for the fast membership criteria.
//
// Nothing here consults the orders or shortcuts of ideal.hpp. Well-mixed
// membership is decided by running the support-level closure moves
//
//     w -> w + t,    w -> x^i w,    p + q -> p + x q
//
// to a fixpoint. Every move leaves deg(w_j) and |w_j| non-decreasing in each
// coordinate, so a derivation of v never leaves the finite box
// { w : deg(w_j) <= deg(v_j), |w_j| <= |v_j| } and the search may be confined
// to it. The radical, reflexive and perfect closures are searched over their
// defining multipliers m, x^m and g with direct [S]-membership tests.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mdi/error.hpp"
#include "mdi/exp_poly.hpp"
#include "mdi/ideal.hpp"
#include "mdi/monomial.hpp"

namespace mdi::oracle {

struct OracleCaps {
  long max_degree = 3;
  Coeff max_coeff_sum = 6;
  std::size_t max_states = 1'000'000;
};

enum class Verdict { yes, no, false_at_caps };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "true";
    case Verdict::no: return "false";
    case Verdict::false_at_caps: return "false-at-caps";
  }
  return "?";
}

/// How the split move p + q -> p + x q is generated.
enum class MoveSet {
  full_splits,  // every split (p, q) of the current element
  unit,         // one unit raised from x^k to x^{k+1}; generates the same closure
};

/// Per-coordinate bounds (degree, coefficient sum) of the search region.
struct Box {
  std::vector<long> max_degree;
  std::vector<Coeff> max_sum;

  std::size_t arity() const noexcept { return max_degree.size(); }

  static Box uniform(std::size_t arity, long degree, Coeff sum) {
    return {std::vector<long>(arity, degree), std::vector<Coeff>(arity, sum)};
  }

  static Box below(const ExpVector& v) {
    Box b;
    for (const auto& p : v.coords()) {
      b.max_degree.push_back(p.degree());
      b.max_sum.push_back(p.weight());
    }
    return b;
  }

  bool admits(const ExpVector& v) const {
    check_arity(arity(), v.arity());
    for (std::size_t j = 0; j < arity(); ++j)
      if (v[j].degree() > max_degree[j] || v[j].weight() > max_sum[j]) return false;
    return true;
  }
};

namespace detail {

// Dense encoding of a box point: coordinate j occupies `width` bytes.
struct Codec {
  std::size_t arity;
  std::size_t width;

  explicit Codec(const Box& box) : arity(box.arity()), width(1) {
    for (long d : box.max_degree) width = std::max<std::size_t>(width, static_cast<std::size_t>(d + 1));
    for (Coeff s : box.max_sum)
      if (s > 255) throw CapExceededError("oracle box coefficient sum above 255");
  }

  std::string encode(const ExpVector& v) const {
    std::string s(arity * width, '\0');
    for (std::size_t j = 0; j < arity; ++j) {
      auto c = v[j].coeffs();
      for (std::size_t k = 0; k < c.size(); ++k) s[j * width + k] = static_cast<char>(c[k]);
    }
    return s;
  }

  ExpVector decode(const std::string& s) const {
    std::vector<ExpPoly> coords;
    for (std::size_t j = 0; j < arity; ++j) {
      std::vector<Coeff> c(width);
      for (std::size_t k = 0; k < width; ++k) c[k] = static_cast<unsigned char>(s[j * width + k]);
      coords.emplace_back(std::move(c));
    }
    return ExpVector(std::move(coords));
  }

  unsigned at(const std::string& s, std::size_t j, std::size_t k) const {
    return static_cast<unsigned char>(s[j * width + k]);
  }
  void set(std::string& s, std::size_t j, std::size_t k, unsigned c) const {
    s[j * width + k] = static_cast<char>(c);
  }
};

inline long coord_degree(const Codec& cd, const std::string& s, std::size_t j) {
  for (std::size_t k = cd.width; k-- > 0;)
    if (cd.at(s, j, k) != 0) return static_cast<long>(k);
  return -1;
}

inline unsigned coord_sum(const Codec& cd, const std::string& s, std::size_t j) {
  unsigned t = 0;
  for (std::size_t k = 0; k < cd.width; ++k) t += cd.at(s, j, k);
  return t;
}

inline bool in_box(const Codec& cd, const Box& box, const std::string& s) {
  for (std::size_t j = 0; j < cd.arity; ++j)
    if (coord_degree(cd, s, j) > box.max_degree[j] || coord_sum(cd, s, j) > box.max_sum[j]) return false;
  return true;
}

// Calls emit(next) for every single-move successor of s inside the box.
template <typename Emit>
void successors(const Codec& cd, const Box& box, MoveSet moves, const std::string& s, Emit&& emit) {
  // w -> w + x^k e_j
  for (std::size_t j = 0; j < cd.arity; ++j) {
    if (coord_sum(cd, s, j) + 1 > box.max_sum[j]) continue;
    for (long k = 0; k <= box.max_degree[j]; ++k) {
      std::string t = s;
      cd.set(t, j, static_cast<std::size_t>(k), cd.at(s, j, static_cast<std::size_t>(k)) + 1);
      emit(std::move(t));
    }
  }
  // w -> x w
  {
    bool fits = true;
    for (std::size_t j = 0; j < cd.arity && fits; ++j) {
      long d = coord_degree(cd, s, j);
      fits = d < 0 || d + 1 <= box.max_degree[j];
    }
    if (fits) {
      std::string t(s.size(), '\0');
      for (std::size_t j = 0; j < cd.arity; ++j)
        for (std::size_t k = 0; k + 1 < cd.width; ++k) cd.set(t, j, k + 1, cd.at(s, j, k));
      emit(std::move(t));
    }
  }
  if (moves == MoveSet::unit) {
    for (std::size_t j = 0; j < cd.arity; ++j)
      for (long k = 0; k < box.max_degree[j]; ++k) {
        auto kk = static_cast<std::size_t>(k);
        if (cd.at(s, j, kk) == 0) continue;
        std::string t = s;
        cd.set(t, j, kk, cd.at(s, j, kk) - 1);
        cd.set(t, j, kk + 1, cd.at(s, j, kk + 1) + 1);
        emit(std::move(t));
      }
    return;
  }
  // Every split w = p + q, moved to p + x q.
  for (auto& [p, q] : splits(cd.decode(s))) {
    ExpVector next = add(p, shift(q, 1));
    bool fits = true;
    for (std::size_t j = 0; j < cd.arity && fits; ++j) fits = next[j].degree() <= box.max_degree[j];
    if (fits) emit(cd.encode(next));
  }
}

}  // namespace detail

/// The well-mixed support closure of `seeds`, intersected with `box`.
class ClosureSet {
 public:
  ClosureSet(const std::vector<ExpVector>& seeds, Box box, MoveSet moves, std::size_t max_states,
             const std::optional<ExpVector>& stop_at = std::nullopt)
      : box_(std::move(box)), codec_(box_) {
    std::deque<std::string> work;
    std::optional<std::string> target;
    if (stop_at) target = codec_.encode(*stop_at);
    auto push = [&](std::string s) {
      if (!detail::in_box(codec_, box_, s)) return;
      if (!states_.insert(s).second) return;
      if (states_.size() > max_states)
        throw CapExceededError("oracle fixpoint exceeded " + std::to_string(max_states) + " states");
      if (target && s == *target) reached_ = true;
      work.push_back(std::move(s));
    };
    for (const auto& g : seeds) {
      check_arity(box_.arity(), g.arity());
      if (box_.admits(g)) push(codec_.encode(g));
    }
    while (!work.empty() && !reached_) {
      std::string s = std::move(work.front());
      work.pop_front();
      detail::successors(codec_, box_, moves, s, push);
    }
  }

  bool contains(const ExpVector& v) const { return box_.admits(v) && states_.count(codec_.encode(v)) > 0; }
  bool reached() const noexcept { return reached_; }
  std::size_t size() const noexcept { return states_.size(); }

  std::vector<ExpVector> elements() const {
    std::vector<ExpVector> out;
    out.reserve(states_.size());
    for (const auto& s : states_) out.push_back(codec_.decode(s));
    canonicalize(out);
    return out;
  }

 private:
  Box box_;
  detail::Codec codec_;
  std::unordered_set<std::string> states_;
  bool reached_ = false;
};

inline void check_admits(const ExpVector& v, const OracleCaps& caps) {
  for (const auto& p : v.coords())
    if (p.degree() > caps.max_degree || p.weight() > caps.max_coeff_sum)
      throw CapExceededError("oracle caps do not admit the query monomial");
}

/// v in <S>, by a fixpoint over the box below v. Exact for admitted v.
inline bool wm_closure_decide(const ExpVector& v, const std::vector<ExpVector>& S, const OracleCaps& caps = {},
                              MoveSet moves = MoveSet::full_splits) {
  check_admits(v, caps);
  for (const auto& g : S)
    if (g.is_one()) return true;
  return ClosureSet(S, Box::below(v), moves, caps.max_states, v).reached();
}

/// One-coordinate closures, memoized on (seed, degree bound, sum bound).
///
/// Every move can be applied to a single coordinate (a whole-vector shift is
/// the split with p = 0), and projecting a move onto a coordinate gives a
/// move, so closure({g}) is the product over j of the closures of g_j.
class FactoredClosure {
 public:
  explicit FactoredClosure(std::size_t max_states = 1'000'000) : max_states_(max_states) {}

  bool contains(const ExpVector& g, const ExpVector& v) {
    check_arity(g, v);
    for (std::size_t j = 0; j < v.arity(); ++j)
      if (!contains_1d(g[j], v[j])) return false;
    return true;
  }

  bool contains_1d(const ExpPoly& seed, const ExpPoly& target) {
    Key key{std::vector<Coeff>(seed.coeffs().begin(), seed.coeffs().end()), target.degree(), target.weight()};
    auto it = memo_.find(key);
    if (it == memo_.end()) {
      ExpVector s{seed};
      ExpVector t{target};
      it = memo_.emplace(std::move(key), ClosureSet({s}, Box::below(t), MoveSet::unit, max_states_)).first;
    }
    return it->second.contains(ExpVector{target});
  }

 private:
  using Key = std::tuple<std::vector<Coeff>, long, Coeff>;
  std::size_t max_states_;
  std::map<Key, ClosureSet> memo_;
};

inline bool wm_closure_decide_factored(const ExpVector& v, const std::vector<ExpVector>& S, FactoredClosure& fc) {
  return std::any_of(S.begin(), S.end(), [&](const ExpVector& g) { return fc.contains(g, v); });
}

/// v in sqrt<S>: some m v lies in <S>, m from 1 to the largest generator
/// coordinate weight.
inline Verdict rwm_closure_decide(const ExpVector& v, const std::vector<ExpVector>& S, FactoredClosure& fc,
                                  const OracleCaps& caps = {}) {
  check_admits(v, caps);
  Coeff top = 1;
  for (const auto& g : S)
    for (const auto& p : g.coords()) top = std::max(top, p.weight());
  for (Coeff m = 1; m <= top; ++m)
    if (wm_closure_decide_factored(scale(m, v), S, fc)) return Verdict::yes;
  return Verdict::false_at_caps;
}

/// w in [S] by trying every shift of every generator.
inline bool delta_member(const ExpVector& w, const std::vector<ExpVector>& S) {
  const long top = std::max(w.max_degree(), 0L);
  for (const auto& g : S) {
    check_arity(g, w);
    for (long i = 0; i <= top; ++i) {
      bool fits = true;
      for (std::size_t j = 0; j < w.arity() && fits; ++j) {
        auto c = g[j].coeffs();
        for (std::size_t k = 0; k < c.size() && fits; ++k) fits = c[k] <= w[j][k + static_cast<std::size_t>(i)];
      }
      if (fits) return true;
    }
  }
  return false;
}

namespace detail {

// g in N[x] with deg <= d and every coefficient in [0, c], g != 0.
inline std::vector<ExpPoly> polys_in_box(long d, Coeff c) {
  std::vector<ExpPoly> out;
  std::vector<Coeff> digits(static_cast<std::size_t>(d + 1), 0);
  for (;;) {
    std::size_t k = 0;
    while (k < digits.size() && digits[k] == c) digits[k++] = 0;
    if (k == digits.size()) break;
    ++digits[k];
    out.emplace_back(digits);
  }
  return out;
}

}  // namespace detail

/// Bounded search for v in sqrt[S], [S]* or {S}. A "yes" is a verified
/// witness; otherwise the answer is false-at-caps.
inline Verdict bounded_closure_decide(const ExpVector& v, const std::vector<ExpVector>& S, ClosureKind kind,
                                      const OracleCaps& caps = {}) {
  if (kind != ClosureKind::radical && kind != ClosureKind::reflexive && kind != ClosureKind::perfect)
    throw PreconditionError("bounded_closure_decide handles radical, reflexive and perfect");
  check_admits(v, caps);
  if (delta_member(v, S)) return Verdict::yes;
  switch (kind) {
    case ClosureKind::radical: {
      Coeff top = 1, vw = 0;
      for (const auto& g : S) top = std::max(top, g.max_coeff());
      for (const auto& p : v.coords()) vw += p.weight();
      for (Coeff m = 2; m <= top * std::max<Coeff>(vw, 1); ++m)
        if (delta_member(scale(m, v), S)) return Verdict::yes;
      return Verdict::false_at_caps;
    }
    case ClosureKind::reflexive:
      for (long m = 1; m <= caps.max_degree; ++m)
        if (delta_member(shift(v, static_cast<std::size_t>(m)), S)) return Verdict::yes;
      return Verdict::false_at_caps;
    case ClosureKind::perfect: {
      std::vector<ExpPoly> multipliers = detail::polys_in_box(caps.max_degree, 2);
      for (Coeff c = 1; c <= caps.max_coeff_sum; ++c)
        for (long len = 0; len <= 2 * caps.max_degree; ++len)
          multipliers.emplace_back(std::vector<Coeff>(static_cast<std::size_t>(len + 1), c));
      for (const auto& g : multipliers)
        if (delta_member(mul(g, v), S)) return Verdict::yes;
      return Verdict::false_at_caps;
    }
    default:
      return Verdict::false_at_caps;
  }
}

// ---------------------------------------------------------------------------
// Grid harnesses

/// Every ExpVector whose coordinates have degree <= d and weight <= s.
inline std::vector<ExpVector> enumerate_grid(std::size_t arity, long d, Coeff s,
                                             std::size_t max_points = 4'000'000) {
  if (d < 0) throw PreconditionError("grid degree bound must be nonnegative");
  // Count compositions first so oversized grids fail before allocating.
  // ways[w] = number of coefficient lists of the current length with weight w.
  const std::size_t cap = max_points + 1;
  std::vector<std::size_t> ways(1, 1);
  for (long k = 0; k <= d; ++k) {
    std::vector<std::size_t> next(std::min<std::size_t>(ways.size() + s, s + 1), 0);
    for (std::size_t w = 0; w < ways.size(); ++w)
      for (std::size_t c = 0; w + c < next.size(); ++c) next[w + c] = std::min(cap, next[w + c] + ways[w]);
    ways = std::move(next);
  }
  std::size_t per_coord = 0, total = 1;
  for (auto w : ways) per_coord = std::min(cap, per_coord + w);
  for (std::size_t i = 0; i < arity; ++i) total = std::min<std::size_t>(cap, total * per_coord);
  if (total > max_points) throw CapExceededError("grid has more than " + std::to_string(max_points) + " points");

  std::vector<ExpPoly> polys{ExpPoly{}};
  std::vector<Coeff> digits(static_cast<std::size_t>(d + 1), 0);
  auto rec = [&](auto&& self, std::size_t k, Coeff left) -> void {
    if (k == digits.size()) {
      ExpPoly p(digits);
      if (!p.is_zero()) polys.push_back(std::move(p));
      return;
    }
    for (Coeff c = 0; c <= left; ++c) {
      digits[k] = c;
      self(self, k + 1, left - c);
    }
    digits[k] = 0;
  };
  rec(rec, 0, s);
  std::vector<ExpVector> out;
  std::vector<std::size_t> idx(arity, 0);
  for (;;) {
    std::vector<ExpPoly> c;
    for (auto i : idx) c.push_back(polys[i]);
    out.emplace_back(std::move(c));
    std::size_t j = 0;
    while (j < arity && idx[j] + 1 == polys.size()) idx[j++] = 0;
    if (j == arity) break;
    ++idx[j];
  }
  return out;
}

/// A random generator set: 1 to max_gens nonzero vectors whose coordinates
/// have degree <= d and weight <= s.
inline std::vector<ExpVector> random_generator_set(std::mt19937_64& rng, std::size_t arity, std::size_t max_gens,
                                                   long d, Coeff s) {
  std::vector<ExpPoly> polys{ExpPoly{}};
  for (const auto& p : detail::polys_in_box(d, s))
    if (p.weight() <= s) polys.push_back(p);
  std::uniform_int_distribution<std::size_t> count(1, max_gens), pick(0, polys.size() - 1);
  std::vector<ExpVector> out;
  for (std::size_t n = count(rng); out.size() < n;) {
    std::vector<ExpPoly> c;
    for (std::size_t j = 0; j < arity; ++j) c.push_back(polys[pick(rng)]);
    ExpVector v(std::move(c));
    if (!v.is_one()) out.push_back(std::move(v));
  }
  return out;
}

struct GridReport {
  std::size_t checked = 0;
  std::vector<ExpVector> disagreements;
};

/// Compare member(v, I) with membership in the intersection of D's components
/// for every v in the grid.
template <typename Decomp>
GridReport decomposition_grid_check(const IdealPresentation& I, const Decomp& D, const OracleCaps& caps = {3, 3}) {
  GridReport r;
  for (const auto& v : enumerate_grid(I.arity(), caps.max_degree, caps.max_coeff_sum)) {
    ++r.checked;
    bool in_components = std::all_of(D.components.begin(), D.components.end(),
                                     [&](const auto& b) { return component_member(v, b, D.flavor); });
    if (member(v, I) != in_components) r.disagreements.push_back(v);
  }
  return r;
}

struct KindTally {
  std::size_t checked = 0;
  std::size_t disagreements = 0;   // fast and oracle contradict each other
  std::size_t false_at_caps = 0;   // fast says yes, bounded oracle found no witness
  std::optional<std::pair<ExpVector, bool>> first_disagreement;  // (v, fast verdict)

  void merge(const KindTally& o) {
    checked += o.checked;
    disagreements += o.disagreements;
    false_at_caps += o.false_at_caps;
    if (!first_disagreement) first_disagreement = o.first_disagreement;
  }
};

struct VerifyReport {
  std::map<ClosureKind, KindTally> kinds;

  std::size_t checked() const {
    std::size_t t = 0;
    for (const auto& [k, v] : kinds) t += v.checked;
    return t;
  }
  std::size_t disagreements() const {
    std::size_t t = 0;
    for (const auto& [k, v] : kinds) t += v.disagreements;
    return t;
  }
  std::size_t false_at_caps() const {
    std::size_t t = 0;
    for (const auto& [k, v] : kinds) t += v.false_at_caps;
    return t;
  }
  void merge(const VerifyReport& o) {
    for (const auto& [k, v] : o.kinds) kinds[k].merge(v);
  }
};

/// Fast member() against the oracles for every v in `grid`, for every
/// non-delta kind, with S as generators. Well-mixed and radical well-mixed
/// must agree exactly; for the bounded kinds an oracle "yes" the fast path
/// rejects is a disagreement, and a fast "yes" without an oracle witness is
/// counted as false-at-caps.
inline VerifyReport verify_generator_set(const std::vector<ExpVector>& S, std::size_t arity,
                                         const std::vector<ExpVector>& grid, const OracleCaps& caps = {}) {
  VerifyReport rep;
  long gd = 0;
  Coeff gs = 0;
  for (const auto& v : grid)
    for (const auto& p : v.coords()) {
      gd = std::max(gd, p.degree());
      gs = std::max(gs, p.weight());
    }
  ClosureSet wm(S, Box::uniform(arity, gd, gs), MoveSet::unit, caps.max_states);
  FactoredClosure fc(caps.max_states);
  auto record = [&](ClosureKind k, const ExpVector& v, bool fast, Verdict oracle) {
    auto& t = rep.kinds[k];
    ++t.checked;
    bool exact = k == ClosureKind::well_mixed || k == ClosureKind::radical_well_mixed;
    bool contradiction = false;
    switch (oracle) {
      case Verdict::yes: contradiction = !fast; break;
      case Verdict::no: contradiction = fast; break;
      case Verdict::false_at_caps:
        if (fast && exact) contradiction = true;
        else if (fast) ++t.false_at_caps;
        break;
    }
    if (contradiction) {
      ++t.disagreements;
      if (!t.first_disagreement) t.first_disagreement = std::make_pair(v, fast);
    }
  };
  for (const auto& v : grid) {
    for (auto kind : kAllKinds) {
      if (kind == ClosureKind::delta) continue;
      bool fast = member(v, IdealPresentation(arity, kind, S));
      Verdict truth;
      switch (kind) {
        case ClosureKind::well_mixed:
          truth = wm.contains(v) ? Verdict::yes : Verdict::no;
          break;
        case ClosureKind::radical_well_mixed:
          truth = rwm_closure_decide(v, S, fc, {gd, gs, caps.max_states});
          break;
        default:
          truth = bounded_closure_decide(v, S, kind, {std::max(caps.max_degree, gd), caps.max_coeff_sum, caps.max_states});
      }
      record(kind, v, fast, truth);
    }
  }
  return rep;
}

}  // namespace mdi::oracle
