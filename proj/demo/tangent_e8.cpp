// Copyright 2026 The ceorb Authors
// SPDX-License-Identifier: Apache-2.0

// Minimal ambient module of CE(G/Ru(P)) for E8 with an E7 levi.

#include "ceorb/ceorb.hpp"

#include <iostream>

int main() {
  const ceorb::RootSystem e8({{'E', 8}});
  const ceorb::NodeSet levi{0, 1, 2, 3, 4, 5, 6};  // drop the end of the long arm
  const auto report = ceorb::tangent_report(e8, levi);
  for (const auto& s : report.summands) {
    std::cout << "omega_" << s.node + 1 << (s.retained ? "  kept    " : "  removed ") << s.g_dim << " x "
              << s.l_dim << '\n';
  }
  std::cout << "tangent dimension " << report.total << ", dim CE " << report.dim_ce << '\n';
}
