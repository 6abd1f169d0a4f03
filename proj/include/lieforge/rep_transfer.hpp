#pragma once

#include <array>
#include <string>
#include <vector>

#include "lieforge/algebra_check.hpp"

namespace lieforge {

/// Coefficients of [V^mu, A^i] = coeff^{mu i nu} V^nu, mu,nu in 1..4, i in 1..3.
class CoeffTensor {
 public:
  enum class Source { FromJ, FromK, Other };
  /// Which block families of V entered the extraction.
  enum class Blocks { Both, UpperOnly, LowerOnly };

  CoeffTensor(Source source, Blocks blocks);

  /// 1-based (mu, i, nu)
  CScalar operator()(int mu, int i, int nu) const;
  void set(int mu, int i, int nu, CScalar v);

  /// The 4x4 matrix whose (mu, nu) entry is coeff^{mu i nu}.
  CMatrix slice(int i) const;

  Source source() const noexcept { return source_; }
  Blocks blocks() const noexcept { return blocks_; }

 private:
  Source source_;
  Blocks blocks_;
  std::array<CScalar, 4 * 3 * 4> values_{};
};

std::string_view to_string(CoeffTensor::Source s);
std::string_view to_string(CoeffTensor::Blocks b);

/// Reads the coefficients of [V^mu, A^i] in the V family, one 2x2 block at a
/// time.
///
/// The four 4x4 V^nu are not linearly independent as 16-component objects,
/// but their upper-right blocks are (and so are their lower-left blocks), so
/// each block of the commutator is decomposed in the matching block basis.
/// When both block families are nonzero the two decompositions must agree.
///
/// Errors: ShapeError (V not 4x4 off-block-diagonal, wrong member counts),
/// BasisError (a nonzero block family is linearly dependent, or both
/// families vanish), NotVClosedError (a commutator block leaves the span),
/// InconsistentBlocksError (upper and lower coefficients disagree).
CoeffTensor extract_coeffs(const GeneratorSet& v, const GeneratorSet& a, const Tolerance& tol = {});

/// (J4^i)_{rho mu} = i eps^{rho i mu}
GeneratorSet build_j4();
/// (K4^i)_{a b} = -i (d_a^i d_b^4 + d_b^i d_a^4)
GeneratorSet build_k4();
/// The boost coefficients extracted against a vector set built with `alpha`:
/// -i (alpha d^{i mu} d^{4 nu} + d^{i nu} d^{4 mu} / alpha). Equals build_k4()
/// at alpha = 1.
GeneratorSet boost_coefficients(CScalar alpha);

/// Structure-constant transfer check: for every ordered pair (A,B) from
/// {J(2+2), K(2+2)} the extracted coefficient matrices satisfy
/// [a^i, b^k] = s^{ikn} c^n with s tabulated from the Lorentz algebra. Also
/// compares extracted slices with the closed forms and checks the Lorentz
/// algebra of build_j4/build_k4 directly.
std::vector<CheckReport> verify_transfer(const Tolerance& tol = {}, const VectorParams& params = {});

/// Same checks on caller-supplied sets: V, J, K in the (2+2)-rep and the
/// closed-form J4, K4 they should transfer to. `alpha` is the constant V was
/// built with.
std::vector<CheckReport> verify_transfer(const GeneratorSet& v, const GeneratorSet& j, const GeneratorSet& k,
                                         const GeneratorSet& j4, const GeneratorSet& k4, CScalar alpha,
                                         const Tolerance& tol = {});

}  // namespace lieforge
