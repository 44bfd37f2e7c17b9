// Copyright 2026 The ceorb Authors
// SPDX-License-Identifier: Apache-2.0

// Orbits of SL(n) x GL(n-1) on Mat(n, n-1), from the Dynkin diagram and from cone faces.

#include "ceorb/ceorb.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 4;
  if (n < 2 || n > 9) {
    std::cerr << "usage: matrix_orbits [n in 2..9]\n";
    return 2;
  }
  const ceorb::RootSystem sys({{'A', n - 1}});
  ceorb::NodeSet levi;
  for (int i = 0; i + 2 < n; ++i) levi.insert(i);

  for (const auto& o : ceorb::enumerate_canonical_orbits(sys, levi)) {
    std::cout << "Pi_Y {" << (o.pi_y.empty() ? "" : o.pi_y.to_string()) << "}  dim Y " << o.dim_y << "  d_G " << o.d_g << '\n';
  }
  std::cout << "modality " << ceorb::modality_canonical(sys, levi) << '\n';

  const auto general = ceorb::enumerate_general_orbits(sys, levi, ceorb::fundamental_generators(sys));
  std::cout << "cone faces " << general.faces.size() << ", meeting the dominant chamber "
            << general.orbits.size() << '\n';
  const auto cc = ceorb::crosscheck_orbits(sys, levi);
  std::cout << "cross-check " << (cc.ok ? "ok" : cc.detail) << '\n';
  return cc.ok ? 0 : 1;
}
