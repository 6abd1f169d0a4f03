#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lieforge/linalg.hpp"

namespace lieforge {

/// Which representation a generator family lives in. The SU(2)-derived tags
/// have fixed dimensions; the SU(N) tags carry N or N^2-1, and Custom is for
/// hand-built candidate sets.
enum class RepTag { Rep2, Rep2plus2, Rep4, Rep5affine, SU3fund, SU3adjoint, SUNfund, SUNadjoint, Custom };

struct RepLabel {
  RepTag tag;
  std::size_t dim;

  /// Throws ParamError if `dim` does not match a fixed-dimension tag.
  static RepLabel make(RepTag tag, std::size_t dim);
  static RepLabel of(RepTag tag);  ///< fixed-dimension tags only
  friend bool operator==(const RepLabel&, const RepLabel&) = default;
};

enum class GeneratorKind { AngularMomentum, Boost, Vector, Momentum };

std::string_view to_string(RepTag tag);
std::string_view to_string(GeneratorKind kind);
RepTag rep_tag_from_string(std::string_view s);
GeneratorKind generator_kind_from_string(std::string_view s);

/// A labeled family {J^i}, {K^i}, {V^mu} or {P^mu}. Indexing is 1-based,
/// index 4 is time.
///
/// Construction enforces the member count (3 for J/K, 4 for V/P; SU(N) sets
/// may have any count) and a common dimension. Hermiticity and tracelessness
/// of angular-momentum sets are measured, not enforced, so perturbed or
/// candidate sets can still be fed to the checkers.
class GeneratorSet {
 public:
  GeneratorSet(RepLabel rep, GeneratorKind kind, std::vector<CMatrix> members);

  const RepLabel& rep() const noexcept { return rep_; }
  GeneratorKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return members_.size(); }
  std::size_t dim() const noexcept { return rep_.dim; }

  /// 1-based access; throws IndexError.
  const CMatrix& operator[](std::size_t index) const;
  const std::vector<CMatrix>& members() const& noexcept { return members_; }
  std::vector<CMatrix> members() && { return std::move(members_); }

  /// Returns a copy with entry (row, col) (0-based) of member `index`
  /// (1-based) shifted by `delta`.
  GeneratorSet perturbed(std::size_t index, std::size_t row, std::size_t col, CScalar delta) const;

  /// max over members of ||M - M^dagger||_F and |tr M|.
  double hermitian_traceless_residual() const;

 private:
  RepLabel rep_;
  GeneratorKind kind_;
  std::vector<CMatrix> members_;
};

/// Constants of the off-block vector matrices: upper block c_plus {J, 1/(2 alpha)},
/// lower block c_minus {J, -1/(2 alpha)}. Defaults reproduce the gamma matrices.
struct VectorParams {
  CScalar c_plus{0.0, -2.0};
  CScalar c_minus{0.0, 2.0};
  CScalar alpha{1.0, 0.0};
};

enum class MomentumBranch { Plus, Minus };

/// sigma^1..sigma^4, with sigma^4 the 2x2 unit matrix.
CMatrix pauli(int index);

GeneratorSet j2();
/// K^i = +i J^i in the 2-rep.
GeneratorSet k2();
/// {c J^1, c J^2, c J^3, c4 1}.
GeneratorSet v2(CScalar c, CScalar c4);

/// Block-diagonal J = diag(J, J), K = diag(+K, -K) on C^2 + C^2.
std::pair<GeneratorSet, GeneratorSet> rep22_jk();
/// Off-block-diagonal vector matrices; throws ParamError when alpha == 0.
GeneratorSet rep22_v(const VectorParams& p = {});
/// Single-off-block momentum matrices. Plus requires c_minus == 0 and Minus
/// requires c_plus == 0; violations throw ParamError.
GeneratorSet momentum(const VectorParams& p, MomentumBranch branch);

/// gamma^i = -i [[0, s^i], [-s^i, 0]], gamma^4 = -i [[0, 1], [1, 0]].
GeneratorSet gamma();
/// -i gamma^4 gamma^1 gamma^2 gamma^3
CMatrix gamma5();
/// (1 + gamma5)/2 and (1 - gamma5)/2.
std::pair<CMatrix, CMatrix> gamma5_projectors();
/// P^mu = projector * V^mu, labeled as a momentum set.
GeneratorSet project_vector(const CMatrix& projector, const GeneratorSet& v);

}  // namespace lieforge
