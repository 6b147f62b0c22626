#pragma once

#include <complex>
#include <vector>

#include <Eigen/Core>

#include "zwidth/lti/polynomial.hpp"

namespace zwidth {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Spectrum = std::vector<std::complex<double>>;

/// Diagonal similarity scaling (powers of two) that equalizes row and column
/// norms. Returns the scaling vector d with balanced = D^-1 M D.
Vector balance_in_place(Matrix& m);

/// Eigenvalues of a square matrix (balanced before the real Schur step).
/// Sorted by descending modulus, then by real part, then by imaginary part.
Spectrum eigenvalues(const Matrix& m);

/// Largest eigenvalue modulus; 0 for an empty matrix.
double spectral_radius(const Matrix& m);

/// det(xI - M), computed from the upper Hessenberg form with the standard
/// column recurrence. Monic of degree n.
Polynomial charpoly(const Matrix& m);

/// Orders a spectrum the same way `eigenvalues` does.
void sort_spectrum(Spectrum& s);

}  // namespace zwidth
