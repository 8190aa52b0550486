#pragma once

#include <vector>

#include "flatperm/poly.hpp"

namespace flatperm::reference {

/// Highest r for which c_{r,l}(x) has been published.
inline constexpr int kPublishedCTableMaxR = 5;

/// The published polynomials c_{r,0}, ..., c_{r,r} for 1 <= r <= 5.
std::vector<Poly> published_c_table(int r);

}  // namespace flatperm::reference
