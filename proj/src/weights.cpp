#include "flagwitt/weights.hpp"

namespace flagwitt {

namespace {

void check_same_diagram(const Weight& a, const Weight& b) {
  if (!(*a.diagram == *b.diagram)) throw DiagramMismatch();
}

}  // namespace

Weight zero_weight(DiagramPtr d) {
  return Weight{d, std::vector<std::int64_t>(d->rank(), 0)};
}

Weight fundamental_weight(DiagramPtr d, int alpha) {
  d->check_vertex(alpha);
  Weight w = zero_weight(std::move(d));
  w.coeffs[alpha - 1] = 1;
  return w;
}

std::int64_t pairing(const Weight& lambda, int beta) {
  lambda.diagram->check_vertex(beta);
  return lambda.coeffs[beta - 1];
}

Weight root_as_weight(DiagramPtr d, int j) {
  d->check_vertex(j);
  Weight w = zero_weight(d);
  for (int i = 1; i <= d->rank(); ++i) w.coeffs[i - 1] = d->cartan(i, j);
  return w;
}

Weight add(const Weight& a, const Weight& b) {
  check_same_diagram(a, b);
  Weight out = a;
  for (size_t k = 0; k < out.coeffs.size(); ++k)
    if (__builtin_add_overflow(a.coeffs[k], b.coeffs[k], &out.coeffs[k]))
      throw Overflow();
  return out;
}

Weight scale(std::int64_t c, const Weight& lambda) {
  Weight out = lambda;
  for (auto& x : out.coeffs)
    if (__builtin_mul_overflow(c, x, &x)) throw Overflow();
  return out;
}

}  // namespace flagwitt
