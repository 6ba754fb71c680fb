#pragma once

// Text forms.
//
//   poly      := term { '+' term }
//   term      := INT [ '*' xpow ] | xpow
//   xpow      := 'x' [ '^' INT ]
//   monomial  := '1' | factor { '*' factor }
//   factor    := 'y' INT [ '^' ( INT | '{' poly '}' ) ]
//
// Whitespace is ignored everywhere. Repeated variables multiply, so their
// exponents add. Ideal files hold `kind:` and `arity:` header lines followed
// by one monomial per line; `#` starts a comment.

#include <cctype>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mdi/error.hpp"
#include "mdi/exp_poly.hpp"
#include "mdi/ideal.hpp"
#include "mdi/monomial.hpp"

namespace mdi {

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::uint64_t natural() {
    skip_ws();
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = checked_add(checked_mul(v, 10), static_cast<std::uint64_t>(text_[pos_] - '0'));
      ++pos_;
    }
    if (pos_ == start) fail("expected a natural number");
    return v;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::size_t position() const noexcept { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline ExpPoly parse_poly(Cursor& in) {
  ExpPoly out;
  do {
    Coeff c = 1;
    std::size_t k = 0;
    bool has_x = false;
    if (std::isdigit(static_cast<unsigned char>(in.peek()))) {
      c = in.natural();
      if (in.accept('*')) {
        if (in.peek() != 'x') in.fail("expected 'x'");
        has_x = true;
      }
    } else if (in.peek() == 'x') {
      has_x = true;
    } else {
      in.fail("expected a term");
    }
    if (has_x) {
      in.expect('x');
      k = 1;
      if (in.accept('^')) {
        auto e = in.natural();
        if (e > kMaxDegree) throw OverflowError("exponent degree exceeds " + std::to_string(kMaxDegree));
        k = static_cast<std::size_t>(e);
      }
    }
    out += ExpPoly::term(c, k);
  } while (in.accept('+'));
  return out;
}

inline ExpVector parse_monomial(Cursor& in, std::size_t arity) {
  ExpVector out(arity);
  if (in.peek() == '1') {
    std::size_t at = in.position();
    if (in.natural() != 1) throw ParseError("expected '1' or a variable", at);
    return out;
  }
  do {
    in.expect('y');
    std::size_t at = in.position();
    auto idx = in.natural();
    if (idx < 1 || idx > arity)
      throw ParseError("variable y" + std::to_string(idx) + " outside arity " + std::to_string(arity), at);
    ExpPoly e = ExpPoly::constant(1);
    if (in.accept('^')) {
      if (in.accept('{')) {
        e = parse_poly(in);
        in.expect('}');
      } else {
        e = ExpPoly::constant(in.natural());
      }
    }
    out[idx - 1] += e;
  } while (in.accept('*'));
  return out;
}

}  // namespace detail

inline ExpPoly parse_poly(std::string_view text) {
  detail::Cursor in(text);
  ExpPoly p = detail::parse_poly(in);
  if (!in.at_end()) in.fail("trailing input");
  return p;
}

inline ExpVector parse_monomial(std::string_view text, std::size_t arity) {
  detail::Cursor in(text);
  ExpVector v = detail::parse_monomial(in, arity);
  if (!in.at_end()) in.fail("trailing input");
  return v;
}

/// Terms by decreasing degree: `2*x^2+x+3`. Zero renders as `0`.
inline std::string render(const ExpPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  auto c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    if (!s.empty()) s += '+';
    if (k == 0) {
      s += std::to_string(c[k]);
      continue;
    }
    if (c[k] != 1) s += std::to_string(c[k]) + '*';
    s += 'x';
    if (k > 1) s += '^' + std::to_string(k);
  }
  return s;
}

/// `y1^{x^2+1}*y2^3`; plain naturals drop the braces, exponent 1 drops the
/// power, and the monomial 1 renders as `1`.
inline std::string render(const ExpVector& v) {
  std::string s;
  for (std::size_t j = 0; j < v.arity(); ++j) {
    const ExpPoly& e = v[j];
    if (e.is_zero()) continue;
    if (!s.empty()) s += '*';
    s += 'y' + std::to_string(j + 1);
    if (e.degree() == 0) {
      if (e[0] != 1) s += '^' + std::to_string(e[0]);
    } else {
      s += "^{" + render(e) + '}';
    }
  }
  return s.empty() ? "1" : s;
}

/// Parse an ideal file. Header lines `kind: <kind>` and `arity: <n>` must
/// precede the first monomial.
inline IdealPresentation parse_ideal(std::istream& in) {
  std::optional<ClosureKind> kind;
  std::size_t arity = 0;
  std::vector<ExpVector> gens;
  std::string line;
  std::size_t lineno = 0;
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto where = [&](const std::string& what) { return "line " + std::to_string(lineno) + ": " + what; };
    if (auto colon = line.find(':'); colon != std::string::npos) {
      std::string key = trim(line.substr(0, colon)), value = trim(line.substr(colon + 1));
      if (key == "kind") {
        kind = parse_kind(value);
        if (!kind) throw ParseError(where("unknown kind '" + value + "'"), colon + 1);
      } else if (key == "arity") {
        try {
          detail::Cursor c(value);
          arity = static_cast<std::size_t>(c.natural());
          if (!c.at_end()) c.fail("trailing input");
        } catch (const ParseError&) {
          throw ParseError(where("bad arity '" + value + "'"), colon + 1);
        }
        if (arity == 0) throw ParseError(where("arity must be at least 1"), colon + 1);
      } else {
        throw ParseError(where("unknown header '" + key + "'"), 0);
      }
      continue;
    }
    if (arity == 0) throw ParseError(where("monomial before the arity header"), 0);
    try {
      gens.push_back(parse_monomial(line, arity));
    } catch (const ParseError& e) {
      throw ParseError(where(e.what()), e.position());
    }
  }
  if (!kind) throw ParseError("missing 'kind:' header", 0);
  if (arity == 0) throw ParseError("missing 'arity:' header", 0);
  return IdealPresentation(arity, *kind, std::move(gens));
}

inline IdealPresentation parse_ideal(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_ideal(in);
}

inline std::string render(const IdealPresentation& I) {
  std::string s = "kind: " + std::string(to_string(I.kind())) + "\narity: " + std::to_string(I.arity()) + "\n";
  if (I.is_unit()) s += "1\n";
  for (const auto& g : I.gens()) s += render(g) + "\n";
  return s;
}

/// Comma-separated integers, e.g. `0,-1,2`.
inline CharVector parse_char_vector(std::string_view text) {
  CharVector out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    std::string item(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty entry in integer list", pos);
    item = item.substr(b, e - b + 1);
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(item, &used);
    } catch (const std::exception&) {
      throw ParseError("bad integer '" + item + "'", pos);
    }
    if (used != item.size()) throw ParseError("bad integer '" + item + "'", pos);
    out.entries.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace mdi
