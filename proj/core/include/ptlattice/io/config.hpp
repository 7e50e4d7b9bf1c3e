#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ptlattice/lattice.hpp"
#include "ptlattice/ring.hpp"
#include "ptlattice/spin_matrix.hpp"
#include "ptlattice/threshold.hpp"

namespace ptl::io {

enum class Command { Spectrum, Threshold, PhaseDiagram, RingThreshold, Verify };

std::string_view to_string(Command command) noexcept;
Command parse_command(std::string_view name);

struct RingArms {
    double t0s = 1.0;
    double t0d = 0.0;
    double tbs = 0.5;
    double tbd = 0.0;

    friend bool operator==(const RingArms&, const RingArms&) = default;
};

/// Fully resolved job. After parse_config every field holds an explicit value;
/// tolerances are absolute (already multiplied by the reference scale).
struct JobConfig {
    Command command = Command::Spectrum;

    int sites = 0;
    Boundary boundary = Boundary::Open;
    ProfileKind profile = ProfileKind::Constant;
    double t_s = 1.0;
    double t_d = 0.0;
    double t0 = 1.0;
    double t_d_fraction = 0.0;
    std::vector<SpinMatrix> bonds;
    bool force = false;

    int impurity_site = 1;
    SpinMatrix gain = SpinMatrix::tau_z();
    double gamma = 0.0;
    SpinMatrix ray = SpinMatrix::tau_z();

    /// Phase-diagram series; each entry sets t_d = ratio * t_s (constant) or
    /// the t_d fraction (parabolic-sqrt).
    std::vector<double> t_d_over_t_s;
    int m_first = 1;
    int m_last = 1;

    RingArms ring;

    double tolerance = 0.0;
    double reality_tolerance = 0.0;
    double bracket_cap = 0.0;
    double verify_tolerance = 1e-8;
    int validation_points = 16;
    std::size_t max_dimension = 4096;
    int workers = 1;

    friend bool operator==(const JobConfig&, const JobConfig&) = default;
};

/// Parses a single YAML/JSON mapping into a fully defaulted job.
///
/// `overrides` are `key=value` assignments applied before defaults are
/// resolved; only N, m, t_d and gamma may be overridden. `command` fills in
/// the command when the document has none and must match it otherwise.
/// Unknown keys are rejected. Throws Error{ParseError} for malformed
/// documents and Error{ValidationError} for bad values; messages carry the
/// key and line.
JobConfig parse_config(std::string_view text, std::span<const std::string> overrides = {},
                       std::optional<Command> command = std::nullopt);

/// Reads a config file; Error{IoError} if unreadable.
std::string read_text_file(const std::string& path);

/// Canonical JSON document. With include_execution=false the worker count is
/// left out, so the text depends only on what determines the results.
/// parse_config(print_config(c)) == c.
std::string print_config(const JobConfig& job, bool include_execution = true);

/// Largest tunneling amplitude implied by the lattice parameters.
double reference_scale(const JobConfig& job);

/// Lattice for the job; `mixing_ratio` overrides t_d (constant) or the
/// t_d fraction (parabolic-sqrt) when non-negative.
LatticeSpec make_lattice(const JobConfig& job, double mixing_ratio = -1.0);

RingSpec make_ring(const JobConfig& job, int impurity_site);

ThresholdOptions make_threshold_options(const JobConfig& job);

} // namespace ptl::io
