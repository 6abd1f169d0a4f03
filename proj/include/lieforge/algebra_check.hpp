#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lieforge/su2_reps.hpp"

namespace lieforge {

/// One id per verified relation. The Eq* ids follow the equation numbering
/// of the construction; Ex* ids are the worked exercises.
enum class IdentityId {
  Eq2, Eq3, Eq6, Eq7, Eq10, Eq11, Eq12, Eq13, Eq15, Eq16, Eq18, Eq19, Eq20,
  Eq24, Eq25, Eq26, Eq27, Eq29, Eq30, Eq31,
  Ex1, Ex2, Ex3, Ex4, Ex5, Ex6, Ex7,
};

std::string_view to_string(IdentityId id);
IdentityId identity_from_string(std::string_view s);

/// Where a relation broke: the generator indices involved and a short
/// description of the offending pair.
struct Witness {
  std::vector<int> indices;
  std::string description;
};

/// Invariant: passed == (max_residual < tolerance), and witness is present
/// exactly when the check failed.
struct CheckReport {
  IdentityId identity;
  std::string label;  ///< which relation within the identity, e.g. "[K,K] Rep2"
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::optional<Witness> witness;
  std::string note;

  static CheckReport make(IdentityId id, std::string label, double residual, double tolerance,
                          std::optional<Witness> worst = std::nullopt, std::string note = {});
};

/// epsilon^{abc} for indices in 1..4; any index equal to 4 gives 0.
int levi_civita(int a, int b, int c);
inline int kronecker(int a, int b) { return a == b ? 1 : 0; }

/// Tracks the worst residual over a family of index tuples.
class ResidualTracker {
 public:
  void observe(double residual, std::vector<int> indices, std::string description);
  double max() const noexcept { return max_; }
  CheckReport report(IdentityId id, std::string label, double tolerance, std::string note = {}) const;

 private:
  double max_ = 0.0;
  std::vector<int> indices_;
  std::string description_;
};

/// Eq2 over all 9 (i,j) pairs and, for fundamental reps (Rep2, SU3fund,
/// SUNfund), Eq3 over all 9 pairs. Throws ShapeError unless J is a
/// three-member angular-momentum set.
std::vector<CheckReport> check_su2_fundamental(const GeneratorSet& j, const Tolerance& tol = {});

/// [J,J], [J,K], [K,K] over all 9 pairs each. The identity id follows the
/// rep (Rep2 -> Eq7, Rep2plus2 -> Eq11, Rep4 -> Eq26, otherwise Eq18).
std::vector<CheckReport> check_lorentz(const GeneratorSet& j, const GeneratorSet& k,
                                       const Tolerance& tol = {});

/// [V^mu, J^j] = i eps^{mu j k} V^k over all 12 pairs.
CheckReport check_vector_rotation(const GeneratorSet& v, const GeneratorSet& j, IdentityId id,
                                  const Tolerance& tol = {});
/// [V^mu, K^j] = -i(alpha d^{j mu} d^{4 nu} + d^{j nu} d^{4 mu} / alpha) V^nu over all 12 pairs.
CheckReport check_vector_boost(const GeneratorSet& v, const GeneratorSet& k, CScalar alpha,
                               IdentityId id, const Tolerance& tol = {});
/// The 9 spatial pairs [V^i, K^j] = -i delta_ij alpha V^4.
CheckReport check_spatial_vector_boost(const GeneratorSet& v, const GeneratorSet& k, CScalar alpha,
                                       const Tolerance& tol = {});
/// The 3 time pairs [V^4, K^j] = -(i/alpha) V^j.
CheckReport check_time_vector_boost(const GeneratorSet& v, const GeneratorSet& k, CScalar alpha,
                                    const Tolerance& tol = {});
/// Block form of [V^i, K^j] in the (2+2)-rep: -i delta_ij [[0, c+/2 1], [-c-/2 1, 0]].
CheckReport check_vk_block_form(const GeneratorSet& v, const GeneratorSet& k, const VectorParams& p,
                                const Tolerance& tol = {});
/// [P^mu, P^nu] = 0 over all 16 pairs.
CheckReport check_momentum_commute(const GeneratorSet& p, IdentityId id, const Tolerance& tol = {});

/// Eq18 (three reports), Eq19 (two clauses) and Eq20. Eq20 is reported for
/// every V so that a generic vector set visibly fails it.
std::vector<CheckReport> check_poincare(const GeneratorSet& j, const GeneratorSet& k,
                                        const GeneratorSet& v, CScalar alpha = 1.0,
                                        const Tolerance& tol = {});

/// Confirms that the 2-rep cannot carry the Poincare [V,K] relation: with V
/// and K both multiples of J, [V^i,K^j] is antisymmetric in ij, its diagonal
/// vanishes, and it is not identically zero. Passes when all three hold.
CheckReport check_2rep_vk_asymmetry(const Tolerance& tol = {});

bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace lieforge
