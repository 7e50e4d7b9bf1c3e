#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "ptlattice/complex_matrix.hpp"

namespace ptl {

struct EigenOptions {
    /// Inputs larger than this are refused with Error{InvalidArgument}.
    std::size_t max_dimension = 4096;
    /// QR sweeps allowed per eigenvalue before Error{NoConvergence}.
    int iterations_per_eigenvalue = 30;
};

struct EigenDecomposition {
    std::vector<Complex> values;
    /// Column k is the unit-norm right eigenvector for values[k].
    ComplexMatrix vectors;
};

/// All eigenvalues of a dense complex matrix via Householder reduction to
/// upper Hessenberg form and single-shift implicit QR (complex Schur form).
/// Eigenvalues are returned in the order they appear on the Schur diagonal.
std::vector<Complex> eigenvalues(const ComplexMatrix& matrix, const EigenOptions& options = {});

/// Eigenvalues plus right eigenvectors from back-substitution on the Schur form.
EigenDecomposition eigen_decomposition(const ComplexMatrix& matrix, const EigenOptions& options = {});

enum class PtPhase { Unbroken, Broken };

std::string_view to_string(PtPhase phase) noexcept;

struct Spectrum {
    std::vector<Complex> eigenvalues;
    double max_abs_imag = 0.0;
    PtPhase classification = PtPhase::Unbroken;
    /// Multiset distance between the spectrum and its complex conjugate.
    double pairing_defect = 0.0;
};

constexpr double kDefaultRealityFactor = 1e-8;

/// Unbroken iff max |Im e| <= reality_tolerance. Eigenvalues are stored
/// sorted by (Re, Im).
Spectrum classify_spectrum(std::vector<Complex> eigenvalues, double reality_tolerance);

/// ||M v - e v|| / (||M||_F ||v||); throws Error{ZeroVector} for v = 0.
double residual_check(const ComplexMatrix& matrix, Complex eigenvalue, std::span<const Complex> vector);

/// Sort by (Re, Im) ascending; ties broken by Im.
void sort_eigenvalues(std::vector<Complex>& values);

/// Largest pair distance after matching each element of a (sorted by
/// (Re, Im)) to its nearest unused element of b. Throws on size mismatch.
double multiset_distance(std::span<const Complex> a, std::span<const Complex> b);

} // namespace ptl
