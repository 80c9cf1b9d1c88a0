#pragma once

// Linear algebra in a weighted inner product (x, y)_G = x^T G y, G symmetric positive definite.
// An operator X is G-selfadjoint when G X is symmetric.

#include "gkt/linalg.hpp"

namespace gkt::metric {

/// Eigen-pairs of a G-selfadjoint operator X: X V = V diag(values), V^T G V = I.
/// Values ascending. Only the symmetric part of G X is used.
struct SelfAdjointEigen {
    Vector values;
    Matrix vectors;
};

SelfAdjointEigen eigen(const Matrix& x, const Matrix& g);

/// Eigen-pairs of the pencil (S, G): S V = G V diag(values), V^T G V = I. S symmetric.
SelfAdjointEigen pencil_eigen(const Matrix& s, const Matrix& g);

/// X^s for a G-selfadjoint positive X (eigenvalues clipped at zero for s > 0).
Matrix power(const Matrix& x, const Matrix& g, double s);

/// Operator norm of X as a map (R^n, G) -> (R^n, G).
double operator_norm(const Matrix& x, const Matrix& g);

/// Operator norm of complex X as a map (C^n, G) -> (C^n, G).
double operator_norm(const CMatrix& x, const Matrix& g);

/// sqrt(x^T G x).
double norm(const Vector& x, const Matrix& g);

double inner(const Vector& x, const Vector& y, const Matrix& g);

/// Relative asymmetry ||G X - (G X)^T||_F / ||G X||_F (0 when G X = 0).
double selfadjoint_residual(const Matrix& x, const Matrix& g);

/// Symmetric square root G^{1/2} and its inverse.
Matrix sqrt_spd(const Matrix& g);
Matrix inv_sqrt_spd(const Matrix& g);

/// Spectral condition number of a symmetric positive definite matrix.
double condition_spd(const Matrix& g);

/// Max absolute asymmetry |G - G^T| relative to max |G|.
double symmetry_error(const Matrix& g);

}  // namespace gkt::metric
