#pragma once

#include <array>
#include <string>
#include <vector>

#include "lieforge/su2_reps.hpp"

namespace lieforge {

/// Commutator and anticommutator structure of a generator family:
///   [J^a, J^b] = i f^{abc} J^c
///   {J^a, J^b} = delta_coeff delta^{ab} 1 + d^{abc} J^c
struct StructureTensors {
  std::size_t n = 0;      ///< matrix dimension N of the defining rep
  std::size_t count = 0;  ///< number of generators
  std::vector<double> f;  ///< count^3, index (a,b,c) 0-based at (a*count + b)*count + c
  std::vector<double> d;
  double delta_coeff = 0.0;
  double commutator_residual = 0.0;      ///< max_ab || [J^a,J^b] - i f^{abc} J^c ||_F
  double anticommutator_residual = 0.0;  ///< max_ab || {J^a,J^b} - delta_coeff delta^{ab} 1 - d^{abc} J^c ||_F

  /// 1-based
  double f_at(std::size_t a, std::size_t b, std::size_t c) const;
  double d_at(std::size_t a, std::size_t b, std::size_t c) const;
};

/// The eight Gell-Mann matrices, normalized tr(l^a l^b) = 2 delta^{ab}.
std::vector<CMatrix> gell_mann();
/// Generalized Gell-Mann matrices for SU(N), N >= 2 (same normalization).
/// N = 2 gives the Pauli matrices and N = 3 the standard Gell-Mann order.
std::vector<CMatrix> sun_lambdas(std::size_t n);
/// J^a = lambda^a / 2 as a generator set (SU3fund for N = 3, Rep2 for N = 2).
GeneratorSet sun_generators(std::size_t n);

/// Trace-formula extraction. With kappa_c = tr(J^c J^c):
///   f^{abc} = -i tr([J^a,J^b] J^c) / kappa_c,  d^{abc} = tr({J^a,J^b} J^c) / kappa_c.
/// Throws BasisError unless the generators are hermitian, traceless and
/// mutually orthogonal under the trace pairing.
StructureTensors extract_structure(const std::vector<CMatrix>& generators, const Tolerance& tol = {});

/// (J_adj^a)_{bc} = i f^{bac}; for N = 2 this is the spatial block of J4.
GeneratorSet adjoint_from_f(const StructureTensors& st);
/// max_ab || [A^a, A^b] - i f^{abc} A^c ||_F for a candidate family A.
double f_algebra_residual(const std::vector<CMatrix>& family, const StructureTensors& st);

struct ObstructionReport {
  std::size_t n = 0;
  double max_abs_d = 0.0;
  std::array<std::size_t, 3> argmax{};  ///< 1-based (a,b,c); first in lexicographic order
  double delta_coeff = 0.0;
  bool obstructed = false;
  std::string statement;
};

/// The boost construction needs {J^a,J^b} proportional to delta^{ab} 1; any
/// d^{abc} above tolerance breaks the reduction of [V^i,K^j] to a single
/// time-component vector matrix.
ObstructionReport boost_obstruction_report(const StructureTensors& st, const Tolerance& tol = {});

}  // namespace lieforge
