#pragma once

#include <cstdint>
#include <vector>

#include "flagwitt/dynkin.hpp"

namespace flagwitt {

/// Element of the weight lattice, stored in the fundamental-weight basis:
/// coeffs[a-1] is the coefficient of omega_a. Under lambda -> [L_lambda] this
/// is also a line-bundle class on G/B.
struct Weight {
  DiagramPtr diagram;
  std::vector<std::int64_t> coeffs;

  bool operator==(const Weight& other) const {
    return *diagram == *other.diagram && coeffs == other.coeffs;
  }
};

Weight zero_weight(DiagramPtr d);

/// omega_alpha, the basis vector at alpha: <omega_alpha, beta^vee> = delta.
Weight fundamental_weight(DiagramPtr d, int alpha);

/// <lambda, beta^vee>. In the fundamental-weight basis this is a coefficient
/// read-off, exact by construction.
std::int64_t pairing(const Weight& lambda, int beta);

/// alpha_j as a weight: column j of the Cartan matrix.
Weight root_as_weight(DiagramPtr d, int j);

/// Componentwise sum; signals Overflow instead of wrapping.
Weight add(const Weight& a, const Weight& b);

/// Integer scaling; signals Overflow instead of wrapping.
Weight scale(std::int64_t c, const Weight& lambda);

}  // namespace flagwitt
