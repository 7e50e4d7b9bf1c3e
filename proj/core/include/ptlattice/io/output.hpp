#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ptlattice/io/config.hpp"
#include "ptlattice/sectors.hpp"
#include "ptlattice/spectral.hpp"
#include "ptlattice/threshold.hpp"

namespace ptl::io {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr std::string_view kPhaseCsvHeader = "m,mu,gamma_pt,status,evaluations";

/// 12 significant digits, '.' separator, locale independent; "inf"/"nan" for non-finite.
std::string format_number(double value);

/// Phase-diagram CSV: two `# ` metadata lines (version, resolved config JSON),
/// then the header and one row per impurity site, '\n' line endings.
std::string phase_csv(const PhaseDiagram& diagram, const JobConfig& job);

std::string spectrum_json(const Spectrum& spectrum, std::size_t dimension, bool pt_symmetric, const JobConfig& job);

std::string verify_json(const DirectSumReport& report, const JobConfig& job);

struct RingReport {
    std::optional<double> formula;
    std::string formula_error;
    std::vector<PhaseRow> rows;
    /// max - min of gamma_pt over rows with a threshold.
    double spread = 0.0;
    /// max |gamma_pt - formula| over rows; NaN without a formula value.
    double max_deviation = 0.0;
    bool consistent = false;
};

/// Agreement required between bisection and the ring formula.
inline constexpr double kRingFormulaTolerance = 1e-2;

std::string ring_json(const RingReport& report, const JobConfig& job);

/// Writes the whole file at once; Error{IoError} on failure.
void write_file(const std::filesystem::path& path, std::string_view contents);

} // namespace ptl::io
