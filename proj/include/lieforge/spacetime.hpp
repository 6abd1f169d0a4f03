#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <tuple>

#include "lieforge/algebra_check.hpp"

namespace lieforge {

/// Real 4-vector, components 1..4 with 4 the time component (c = 1).
struct FourVector {
  std::array<double, 4> x{};

  double operator[](int mu) const { return x.at(static_cast<std::size_t>(mu - 1)); }
  double& operator[](int mu) { return x.at(static_cast<std::size_t>(mu - 1)); }
  friend FourVector operator+(FourVector a, const FourVector& b) {
    for (int k = 0; k < 4; ++k) a.x[k] += b.x[k];
    return a;
  }
  friend FourVector operator-(FourVector a, const FourVector& b) {
    for (int k = 0; k < 4; ++k) a.x[k] -= b.x[k];
    return a;
  }
  friend bool operator==(const FourVector&, const FourVector&) = default;
};

/// Rotation angles theta and rapidities phi; the transform rotates first,
/// then boosts.
struct RotBoostParams {
  std::array<double, 3> theta{};
  std::array<double, 3> phi{};
};

/// Minkowski metric diagonal, signature (+,+,+,-).
inline constexpr std::array<double, 4> kMetric{1.0, 1.0, 1.0, -1.0};

/// exp(i phi_i K4^i) exp(i theta_i J4^i), returned in full complex form.
CMatrix d4(const RotBoostParams& params, const Tolerance& tol = {});

/// Generic exp(i phi_i K^i) exp(i theta_i J^i) in whatever rep J, K live in.
CMatrix lorentz_transform(const GeneratorSet& j, const GeneratorSet& k, const RotBoostParams& params,
                          const Tolerance& tol = {});

/// D x. Throws DimError unless D is 4x4 and PurityError if D x has an
/// imaginary part above exp_eps (relative to |x|).
FourVector apply(const CMatrix& d, const FourVector& x, const Tolerance& tol = {});

/// x1^2 + x2^2 + x3^2 - x4^2
double interval_sq(const FourVector& x);
/// -det(x^mu sigma^mu)
double interval_sq_via_det(const FourVector& x);

/// x -> lambda x + a, realized with the append-one 5x5 device.
struct AffineTransform {
  CMatrix lambda = CMatrix::identity(4);
  FourVector a{};

  CMatrix to_matrix() const;
  /// T2.compose(T1) acts as T1 first, then T2.
  AffineTransform compose(const AffineTransform& first) const;
};

/// Applies the 5x5 matrix to (x, 1); throws PurityError if the appended
/// component does not come back as exactly 1 or the result is not real.
FourVector affine_apply(const AffineTransform& t, const FourVector& x, const Tolerance& tol = {});

struct AffineGenerators {
  GeneratorSet j5;
  GeneratorSet k5;
  GeneratorSet p5;
};

/// 5x5 generators of the append-one representation. J5/K5 embed J4/K4 in
/// the upper-left block. The translation generators sit in the last column
/// with covariant signs, P5^i = -i E_{i5} and P5^4 = +i E_{45}, which is what
/// makes [P5, K5] follow the alpha = 1 vector-boost relation.
AffineGenerators affine_generators();

/// exp(i a_mu P5^mu) with a_mu = g_{mu nu} a^nu, i.e. the 5x5 translation by
/// the contravariant displacement `a`.
CMatrix translation_exponential(const FourVector& a, const Tolerance& tol = {});

/// Intertwining relation D V^mu D^-1 = Lambda_nu^mu V^nu. D is generated by
/// (J, K) in their own rep; Lambda = d4(params); Lambda_nu^mu is the
/// index-raised transform (g Lambda^T g)_{mu nu}, i.e. the inverse of Lambda.
/// Prechecks the [J,J]/[J,K]/[K,K] and [V,J]/[V,K] relations at alpha = 1 and
/// throws PrecondError if they fail.
CheckReport intertwine_check(const GeneratorSet& j, const GeneratorSet& k, const GeneratorSet& v,
                             const RotBoostParams& params, const Tolerance& tol = {});

/// Seeded random trials of finite rotations: x'^i x'^i and x'^4 preserved.
/// max_residual is the largest relative error (divided by max(1, |x|^2)).
CheckReport rotation_invariance_check(std::uint32_t trials, std::uint64_t seed, const Tolerance& tol = {});
/// Seeded random trials of D4(theta, phi) with |phi| <= 3: the interval is
/// preserved.
CheckReport boost_invariance_check(std::uint32_t trials, std::uint64_t seed, const Tolerance& tol = {});

/// Seeded draws built on std::mt19937_64 (whose output sequence is fixed by
/// the standard); doubles are formed from the top 53 bits so results do not
/// depend on the library's distribution implementations.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
  /// uniform in [lo, hi)
  double uniform(double lo, double hi);
  FourVector four_vector(double scale);
  /// theta uniform in [-pi, pi)^3, phi uniform direction with |phi| <= max_rapidity
  RotBoostParams rot_boost(double max_rapidity);

 private:
  std::mt19937_64 engine_;
};

}  // namespace lieforge
