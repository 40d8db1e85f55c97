// Walks one member of each family through the main pipelines.

#include <iostream>

#include "fibknot/report.hpp"

using namespace fibknot;

int main(int argc, char** argv) {
  const int g = argc > 1 ? std::stoi(argv[1]) : 2;
  const int n = argc > 2 ? std::stoi(argv[2]) : 3;

  for (Variant v : {Variant::original, Variant::enhanced}) {
    const FamilySpec spec{g, n, v};
    Family f = build_family(spec, default_rule(v));
    std::cout << to_string(v) << " g=" << g << " n=" << n << "\n";
    std::cout << "  beta      " << to_text(f.beta) << "\n";

    DestabilizationResult d = destabilize_greedy(f.beta);
    std::cout << "  unknot    " << (d.unknot ? "certified" : "not certified") << " in " << d.certificate.size()
              << " moves\n";
    std::cout << "  Burau     Delta = " << alexander_from_burau(f.beta).to_string() << "\n";

    const IntMatrix m = lift_homological(f.beta);
    const AlexanderPolynomial fibred = monodromy_alexander(m);
    std::cout << "  fibred    Delta = " << fibred.to_string() << ", det " << fibred.determinant() << "\n";
    const SeifertMatrix s = seifert_from_monodromy(m, ChainSurface(g));
    std::cout << "  Seifert   signature " << classical_signature(s) << "\n";
  }

  Classification c = classify(parse_twist_word("A B^-1"), chain_pair(g, true).intersections);
  std::cout << "chain pair g=" << g << ": " << to_string(c.type) << ", trace " << c.trace.to_string()
            << ", dilatation " << c.dilatation << "\n";
  std::cout << "two-bridge [2,...,2]: " << crosscheck_w0_detail(g).fraction.to_string() << "\n";
  return 0;
}
