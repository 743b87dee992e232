#include "spinlift/oracle.hpp"

namespace spinlift {

Vec4 Sampler::vector(double scale) {
  Vec4 v;
  for (int i = 0; i < 4; ++i) v[i] = uniform(-scale, scale);
  return v;
}

Bivector Sampler::bivector(const Metric& g, double scale) {
  Mat4 f = Mat4::Zero();
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      f(a, b) = uniform(-scale, scale);
      f(b, a) = -f(a, b);
    }
  }
  return Bivector::from_coefficients(g, f);
}

Bivector Sampler::simple_bivector(const Metric& g, double scale) {
  const Vec4 u = vector(scale);
  const Vec4 v = vector(scale);
  return wedge(g, u, v);
}

LorentzTransformation Sampler::transformation(const Metric& g, double scale) {
  return LorentzTransformation(g, exp_series(bivector(g, scale).matrix()));
}

Bivector random_bivector(const Metric& g, std::uint64_t seed, double scale) {
  return Sampler(seed).bivector(g, scale);
}

LorentzTransformation random_transformation(const Metric& g, std::uint64_t seed, double scale) {
  return Sampler(seed).transformation(g, scale);
}

}  // namespace spinlift
