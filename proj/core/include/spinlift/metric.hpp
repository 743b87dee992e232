#pragma once

#include <optional>
#include <string_view>

#include <Eigen/Core>

namespace spinlift {

using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;

/// Largest absolute entry; the norm every tolerance in the library is
/// expressed against.
template <class Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

/// Diagonal Lorentz signatures. kGeneral marks a metric built from an
/// arbitrary symmetric matrix with determinant -1.
enum class Signature { kPlusMinus, kMinusPlus, kGeneral };

/// "pmmm" for (+,-,-,-), "mppp" for (-,+,+,+), "general" otherwise.
std::string_view signature_tag(Signature s);
std::optional<Signature> parse_signature(std::string_view tag);

/// A Lorentz metric g on R^4: symmetric, nondegenerate, det g = -1.
class Metric {
 public:
  /// (+,-,-,-), the library-wide default.
  Metric();

  static Metric make(Signature s);

  /// Accepts any symmetric matrix with det = -1 (to 1e-12). Throws
  /// Error(kInvalidMetric) otherwise.
  static Metric from_matrix(const Mat4& g);

  const Mat4& matrix() const { return g_; }
  const Mat4& inverse() const { return g_inv_; }
  Signature signature() const { return signature_; }

  double operator()(int a, int b) const { return g_(a, b); }

  /// True when g is diagonal with entries +-1 (required for the Clifford
  /// constructions).
  bool is_diagonal_unit() const;

  bool operator==(const Metric& other) const { return g_ == other.g_; }

 private:
  Metric(const Mat4& g, Signature s);

  Mat4 g_;
  Mat4 g_inv_;
  Signature signature_;
};

inline Metric make_metric(Signature s) { return Metric::make(s); }

/// g(u, v) = u^T g v.
double inner(const Metric& g, const Vec4& u, const Vec4& v);

}  // namespace spinlift
