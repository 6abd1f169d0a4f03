#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "lieforge/errors.hpp"

namespace lieforge {

using CScalar = std::complex<double>;

inline constexpr CScalar kI{0.0, 1.0};

/// Numerical thresholds. `abs_eps` applies to identities that are exact in
/// complex arithmetic, `exp_eps` to anything that passes through a matrix
/// exponential.
struct Tolerance {
  double abs_eps = 1e-12;
  double exp_eps = 1e-10;

  /// Throws ParamError unless 0 < abs_eps <= exp_eps < 1.
  void validate() const;
  static Tolerance with_abs(double abs_eps);
};

/// Dense square complex matrix, row-major. Entries are always finite.
class CMatrix {
 public:
  /// dim x dim zero matrix; dim must be >= 1.
  explicit CMatrix(std::size_t dim);
  /// Row-major nested initializer; must be square.
  CMatrix(std::initializer_list<std::initializer_list<CScalar>> rows);

  static CMatrix zero(std::size_t dim) { return CMatrix(dim); }
  static CMatrix identity(std::size_t dim);
  /// Unit matrix E_{row,col} (0-based).
  static CMatrix unit(std::size_t dim, std::size_t row, std::size_t col);

  std::size_t dim() const noexcept { return dim_; }

  // 0-based element access
  const CScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
  /// Writes must stay finite; `set` enforces it, the raw reference does not.
  CScalar& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  void set(std::size_t r, std::size_t c, CScalar v);

  std::span<const CScalar> data() const noexcept { return data_; }

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(CScalar s);

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator-(CMatrix a) { return a *= -1.0; }
  friend CMatrix operator*(CMatrix a, CScalar s) { return a *= s; }
  friend CMatrix operator*(CScalar s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
  friend bool operator==(const CMatrix& a, const CMatrix& b) = default;

  CMatrix adjoint() const;
  CMatrix transpose() const;
  CScalar trace() const;
  bool is_finite() const;

  /// Copy of the (size x size) sub-block starting at (row, col).
  CMatrix block(std::size_t row, std::size_t col, std::size_t size) const;
  /// Overwrite the sub-block at (row, col) with `b`.
  void set_block(std::size_t row, std::size_t col, const CMatrix& b);

 private:
  std::size_t dim_;
  std::vector<CScalar> data_;
};

/// Block-diagonal direct sum diag(a, b).
CMatrix direct_sum(const CMatrix& a, const CMatrix& b);

/// AB - BA. Throws DimError on mismatched dimensions.
CMatrix commutator(const CMatrix& a, const CMatrix& b);
/// AB + BA. Throws DimError on mismatched dimensions.
CMatrix anticommutator(const CMatrix& a, const CMatrix& b);

/// exp(A) by scaling and squaring around a truncated Taylor series.
///
/// The argument is scaled by 2^-s until its 1-norm is at most 1/2, the series
/// is summed until the next term is below machine precision relative to the
/// partial sum, and the result is squared s times. Intended for the small
/// (<= 10x10) generator combinations used throughout the library.
CMatrix mat_exp(const CMatrix& a, const Tolerance& tol = {});

/// Least-squares expansion of a matrix in a (possibly incomplete) basis.
struct Decomposition {
  std::vector<CScalar> coeffs;
  double residual = 0.0;  ///< Frobenius norm of M - sum c_nu B_nu
};

/// Solves the real normal equations over the flattened (re, im) space of
/// dimension 2 d^2. Throws BasisError when the basis is rank deficient and
/// DimError when a basis element has the wrong dimension.
Decomposition decompose_in_basis(const CMatrix& m, std::span<const CMatrix> basis,
                                 const Tolerance& tol = {});

/// Determinant by LU with partial pivoting.
CScalar det(const CMatrix& a);

double frobenius_norm(const CMatrix& a);
/// ||A - B||_F. Throws DimError on mismatched dimensions.
double frobenius_distance(const CMatrix& a, const CMatrix& b);
/// max |Im a_ij|
double max_imag(const CMatrix& a);

}  // namespace lieforge
