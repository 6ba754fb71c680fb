// Library tour: parse an ideal, test membership, decompose, dualize.

#include <iostream>

#include "mdi/mdi.hpp"

int main() {
  using namespace mdi;

  auto I = parse_ideal("kind: well_mixed\narity: 2\ny1^2\ny2^2\n");
  for (const char* text : {"y1^{x+1}", "y1^{x}", "y1*y2"}) {
    auto v = parse_monomial(text, 2);
    std::cout << render(v) << (member(v, I) ? " in " : " not in ") << "<y1^2, y2^2>\n";
  }

  auto J = parse_ideal("kind: rwm\narity: 2\ny1^{x}*y2\ny1*y2^{x}\n");
  std::cout << "components:";
  for (const auto& b : decompose(J).components) std::cout << ' ' << to_string(b);
  std::cout << '\n';

  DualityContext ctx(CharVector{1, 1}, J);
  auto dual = alexander_dual(ctx);
  std::cout << "dual at (1,1):";
  for (const auto& g : dual.generators.gens()) std::cout << ' ' << render(g);
  std::cout << "\ninvolution holds: " << std::boolalpha << involution_check(ctx) << '\n';
}
