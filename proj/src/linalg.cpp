#include "lieforge/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace lieforge {

namespace {

void require_same_dim(const CMatrix& a, const CMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimError(std::string(op) + ": dimension mismatch " + std::to_string(a.dim()) +
                   " vs " + std::to_string(b.dim()));
  }
}

bool finite(CScalar z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double one_norm(const CMatrix& a) {
  double best = 0.0;
  for (std::size_t c = 0; c < a.dim(); ++c) {
    double col = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r) col += std::abs(a(r, c));
    best = std::max(best, col);
  }
  return best;
}

}  // namespace

void Tolerance::validate() const {
  if (!(abs_eps > 0.0 && abs_eps <= exp_eps && exp_eps < 1.0)) {
    throw ParamError("tolerance requires 0 < abs_eps <= exp_eps < 1 (got abs_eps=" +
                     std::to_string(abs_eps) + ", exp_eps=" + std::to_string(exp_eps) + ")");
  }
}

Tolerance Tolerance::with_abs(double abs_eps) {
  Tolerance t;
  t.abs_eps = abs_eps;
  t.exp_eps = std::max(t.exp_eps, abs_eps);
  t.validate();
  return t;
}

CMatrix::CMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
  if (dim == 0) throw DimError("matrix dimension must be >= 1");
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<CScalar>> rows)
    : CMatrix(rows.size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != dim_) throw DimError("matrix literal is not square");
    std::size_t c = 0;
    for (const auto& v : row) set(r, c++, v);
    ++r;
  }
}

CMatrix CMatrix::identity(std::size_t dim) {
  CMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::unit(std::size_t dim, std::size_t row, std::size_t col) {
  CMatrix m(dim);
  if (row >= dim || col >= dim) throw IndexError("unit matrix index out of range");
  m(row, col) = 1.0;
  return m;
}

void CMatrix::set(std::size_t r, std::size_t c, CScalar v) {
  if (r >= dim_ || c >= dim_) throw IndexError("matrix index out of range");
  if (!finite(v)) throw ParamError("non-finite matrix entry");
  (*this)(r, c) = v;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  require_same_dim(*this, o, "add");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  require_same_dim(*this, o, "subtract");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

CMatrix& CMatrix::operator*=(CScalar s) {
  for (auto& v : data_) v *= s;
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a, b, "multiply");
  const std::size_t n = a.dim();
  CMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const CScalar ark = a(r, k);
      if (ark == CScalar{}) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

CMatrix CMatrix::transpose() const {
  CMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

CScalar CMatrix::trace() const {
  CScalar t{};
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

bool CMatrix::is_finite() const {
  return std::all_of(data_.begin(), data_.end(), finite);
}

CMatrix CMatrix::block(std::size_t row, std::size_t col, std::size_t size) const {
  if (row + size > dim_ || col + size > dim_) throw IndexError("block out of range");
  CMatrix out(size);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c) out(r, c) = (*this)(row + r, col + c);
  return out;
}

void CMatrix::set_block(std::size_t row, std::size_t col, const CMatrix& b) {
  if (row + b.dim() > dim_ || col + b.dim() > dim_) throw IndexError("block out of range");
  for (std::size_t r = 0; r < b.dim(); ++r)
    for (std::size_t c = 0; c < b.dim(); ++c) (*this)(row + r, col + c) = b(r, c);
}

CMatrix direct_sum(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.dim() + b.dim());
  out.set_block(0, 0, a);
  out.set_block(a.dim(), a.dim(), b);
  return out;
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a, b, "commutator");
  return a * b - b * a;
}

CMatrix anticommutator(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a, b, "anticommutator");
  return a * b + b * a;
}

CMatrix mat_exp(const CMatrix& a, const Tolerance& tol) {
  tol.validate();
  if (!a.is_finite()) throw ParamError("mat_exp: non-finite input");
  const std::size_t n = a.dim();

  int squarings = 0;
  const double norm = one_norm(a);
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const CMatrix scaled = a * CScalar(std::ldexp(1.0, -squarings));

  CMatrix sum = CMatrix::identity(n);
  CMatrix term = CMatrix::identity(n);
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int k = 1; k < 64; ++k) {
    term = term * scaled;
    term *= 1.0 / k;
    sum += term;
    if (frobenius_norm(term) <= eps * frobenius_norm(sum)) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

Decomposition decompose_in_basis(const CMatrix& m, std::span<const CMatrix> basis,
                                 const Tolerance& tol) {
  tol.validate();
  const std::size_t d2 = m.dim() * m.dim();
  const std::size_t rows = 2 * d2;
  const std::size_t unknowns = 2 * basis.size();
  for (const auto& b : basis) {
    if (b.dim() != m.dim()) throw DimError("decompose_in_basis: basis dimension mismatch");
  }

  // Column 2v is flatten(B_v), column 2v+1 is flatten(i B_v); flatten stacks
  // real parts over imaginary parts.
  std::vector<double> cols(unknowns * rows);
  for (std::size_t v = 0; v < basis.size(); ++v) {
    const auto src = basis[v].data();
    double* re_col = &cols[(2 * v) * rows];
    double* im_col = &cols[(2 * v + 1) * rows];
    for (std::size_t k = 0; k < d2; ++k) {
      re_col[k] = src[k].real();
      re_col[d2 + k] = src[k].imag();
      im_col[k] = -src[k].imag();
      im_col[d2 + k] = src[k].real();
    }
  }
  std::vector<double> target(rows);
  for (std::size_t k = 0; k < d2; ++k) {
    target[k] = m.data()[k].real();
    target[d2 + k] = m.data()[k].imag();
  }

  // Normal equations G z = A^T t, solved by Gaussian elimination with
  // partial pivoting. A pivot that collapses relative to the largest Gram
  // diagonal means the basis is linearly dependent.
  const std::size_t u = unknowns;
  std::vector<double> gram(u * u), rhs(u);
  double max_diag = 0.0;
  for (std::size_t p = 0; p < u; ++p) {
    for (std::size_t q = 0; q < u; ++q) {
      double s = 0.0;
      for (std::size_t k = 0; k < rows; ++k) s += cols[p * rows + k] * cols[q * rows + k];
      gram[p * u + q] = s;
    }
    double s = 0.0;
    for (std::size_t k = 0; k < rows; ++k) s += cols[p * rows + k] * target[k];
    rhs[p] = s;
    max_diag = std::max(max_diag, gram[p * u + p]);
  }
  if (u > 0 && max_diag == 0.0) throw BasisError("decompose_in_basis: basis contains only zero matrices");

  const double pivot_floor = tol.abs_eps * max_diag;
  for (std::size_t col = 0; col < u; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < u; ++r)
      if (std::abs(gram[r * u + col]) > std::abs(gram[piv * u + col])) piv = r;
    if (std::abs(gram[piv * u + col]) <= pivot_floor) {
      throw BasisError("decompose_in_basis: basis is linearly dependent (element " +
                       std::to_string(col / 2 + 1) + ")");
    }
    if (piv != col) {
      for (std::size_t c = 0; c < u; ++c) std::swap(gram[piv * u + c], gram[col * u + c]);
      std::swap(rhs[piv], rhs[col]);
    }
    for (std::size_t r = col + 1; r < u; ++r) {
      const double f = gram[r * u + col] / gram[col * u + col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < u; ++c) gram[r * u + c] -= f * gram[col * u + c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<double> z(u);
  for (std::size_t r = u; r-- > 0;) {
    double s = rhs[r];
    for (std::size_t c = r + 1; c < u; ++c) s -= gram[r * u + c] * z[c];
    z[r] = s / gram[r * u + r];
  }

  Decomposition out;
  out.coeffs.resize(basis.size());
  CMatrix approx(m.dim());
  for (std::size_t v = 0; v < basis.size(); ++v) {
    out.coeffs[v] = CScalar(z[2 * v], z[2 * v + 1]);
    approx += basis[v] * out.coeffs[v];
  }
  out.residual = frobenius_distance(m, approx);
  return out;
}

CScalar det(const CMatrix& a) {
  const std::size_t n = a.dim();
  CMatrix lu = a;
  CScalar result = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(lu(r, col)) > std::abs(lu(piv, col))) piv = r;
    if (lu(piv, col) == CScalar{}) return CScalar{};
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(lu(piv, c), lu(col, c));
      result = -result;
    }
    result *= lu(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const CScalar f = lu(r, col) / lu(col, col);
      for (std::size_t c = col; c < n; ++c) lu(r, c) -= f * lu(col, c);
    }
  }
  return result;
}

double frobenius_norm(const CMatrix& a) {
  double s = 0.0;
  for (const auto& v : a.data()) s += std::norm(v);
  return std::sqrt(s);
}

double frobenius_distance(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a, b, "frobenius_distance");
  double s = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) s += std::norm(a.data()[k] - b.data()[k]);
  return std::sqrt(s);
}

double max_imag(const CMatrix& a) {
  double best = 0.0;
  for (const auto& v : a.data()) best = std::max(best, std::abs(v.imag()));
  return best;
}

}  // namespace lieforge
