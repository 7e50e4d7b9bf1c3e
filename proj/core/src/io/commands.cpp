#include "ptlattice/io/commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "ptlattice/errors.hpp"
#include "ptlattice/hamiltonian.hpp"
#include "ptlattice/io/output.hpp"
#include "ptlattice/ring.hpp"

namespace ptl::io {

namespace {

std::vector<int> impurity_range(const JobConfig& job)
{
    std::vector<int> sites;
    for (int m = job.m_first; m <= job.m_last; ++m)
        sites.push_back(m);
    return sites;
}

bool row_failed(const PhaseRow& row)
{
    return !has_threshold(row.result.status);
}

std::string phase_file_name(double ratio)
{
    return fmt::format("phase_diagram_td{}.csv", format_number(ratio));
}

int run_spectrum(const JobConfig& job, const std::filesystem::path& dir, CommandResult& result, std::ostream& log)
{
    const LatticeSpec spec = make_lattice(job);
    const ComplexMatrix h = assemble_hamiltonian(spec);
    EigenOptions eigen;
    eigen.max_dimension = job.max_dimension;
    const Spectrum spectrum = classify_spectrum(eigenvalues(h, eigen), job.reality_tolerance);
    const auto path = dir / "spectrum.json";
    write_file(path, spectrum_json(spectrum, h.dim(), check_pt_symmetry(h, spec.sites()), job));
    result.files.push_back(path);
    log << "spectrum: " << to_string(spectrum.classification) << ", max |Im| = "
        << format_number(spectrum.max_abs_imag) << "\n";
    return kExitOk;
}

int run_threshold(const JobConfig& job, const std::filesystem::path& dir, CommandResult& result, std::ostream& log)
{
    const LatticeSpec spec = make_lattice(job);
    const std::vector<int> site{job.impurity_site};
    const PhaseDiagram diagram = phase_diagram(spec, site, GainRay(job.ray), make_threshold_options(job), 1);
    const auto path = dir / "threshold.csv";
    write_file(path, phase_csv(diagram, job));
    result.files.push_back(path);
    const auto& row = diagram.rows.front();
    log << "threshold: m=" << row.impurity_site << " gamma_pt=" << format_number(row.result.gamma_pt) << " ("
        << to_string(row.result.status) << ")\n";
    return row_failed(row) ? kExitNumerical : kExitOk;
}

int run_phase_diagram(const JobConfig& job, const std::filesystem::path& dir, CommandResult& result,
                      std::ostream& log)
{
    const auto sites = impurity_range(job);
    const GainRay ray(job.ray);
    const auto options = make_threshold_options(job);
    int code = kExitOk;

    std::vector<double> series = job.t_d_over_t_s;
    if (series.empty())
        series.push_back(-1.0);  // explicit profile: a single series from the bond list
    for (double ratio : series) {
        const PhaseDiagram diagram = phase_diagram(make_lattice(job, ratio), sites, ray, options, job.workers);
        const auto path = dir / (ratio >= 0.0 ? phase_file_name(ratio) : std::string("phase_diagram.csv"));
        write_file(path, phase_csv(diagram, job));
        result.files.push_back(path);
        const auto failed = std::count_if(diagram.rows.begin(), diagram.rows.end(), row_failed);
        log << "phase-diagram: " << path.filename().string() << " rows=" << diagram.rows.size()
            << " failed=" << failed << "\n";
        if (failed > 0)
            code = kExitNumerical;
    }
    return code;
}

int run_ring(const JobConfig& job, const std::filesystem::path& dir, CommandResult& result, std::ostream& log)
{
    RingReport report;
    try {
        report.formula = ring_threshold_formula(make_ring(job, job.m_first));
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::OutOfRegime)
            throw;
        report.formula_error = e.what();
    }

    const GainRay ray(job.ray);
    const auto options = make_threshold_options(job);
    const auto sites = impurity_range(job);
    report.rows.resize(sites.size());
    // Each m is a different lattice (the arms move with the impurities), so
    // this is a sweep of single-row diagrams.
    for (std::size_t i = 0; i < sites.size(); ++i) {
        const LatticeSpec spec = ring_lattice(make_ring(job, sites[i]), ray.direction(), 0.0);
        const std::vector<int> one{sites[i]};
        report.rows[i] = phase_diagram(spec, one, ray, options, 1).rows.front();
    }

    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    bool all_found = true;
    report.max_deviation = report.formula ? 0.0 : std::numeric_limits<double>::quiet_NaN();
    for (const auto& row : report.rows) {
        if (!has_threshold(row.result.status)) {
            all_found = false;
            continue;
        }
        lo = std::min(lo, row.result.gamma_pt);
        hi = std::max(hi, row.result.gamma_pt);
        if (report.formula)
            report.max_deviation = std::max(report.max_deviation, std::abs(row.result.gamma_pt - *report.formula));
    }
    report.spread = hi >= lo ? hi - lo : 0.0;
    report.consistent = all_found && report.formula && report.max_deviation <= kRingFormulaTolerance;

    const auto path = dir / "ring_threshold.json";
    write_file(path, ring_json(report, job));
    result.files.push_back(path);
    log << "ring-threshold: formula=" << (report.formula ? format_number(*report.formula) : "n/a")
        << " spread=" << format_number(report.spread) << " consistent=" << (report.consistent ? "yes" : "no")
        << "\n";
    return all_found ? kExitOk : kExitNumerical;
}

int run_verify(const JobConfig& job, const std::filesystem::path& dir, CommandResult& result, std::ostream& log)
{
    EigenOptions eigen;
    eigen.max_dimension = job.max_dimension;
    const DirectSumReport report = verify_direct_sum(make_lattice(job), job.verify_tolerance, eigen);
    const auto path = dir / "verify.json";
    write_file(path, verify_json(report, job));
    result.files.push_back(path);
    log << "verify: basis=" << to_string(report.basis) << " distance=" << format_number(report.max_distance)
        << (report.pass ? " pass" : " FAIL") << "\n";
    return report.pass ? kExitOk : kExitNumerical;
}

} // namespace

CommandResult run_command(const JobConfig& job, const std::filesystem::path& out_dir, std::ostream& log)
{
    CommandResult result;
    try {
        std::error_code ec;
        std::filesystem::create_directories(out_dir, ec);
        if (ec)
            throw Error(ErrorKind::IoError, "cannot create output directory '" + out_dir.string() + "'");

        switch (job.command) {
        case Command::Spectrum: result.exit_code = run_spectrum(job, out_dir, result, log); break;
        case Command::Threshold: result.exit_code = run_threshold(job, out_dir, result, log); break;
        case Command::PhaseDiagram: result.exit_code = run_phase_diagram(job, out_dir, result, log); break;
        case Command::RingThreshold: result.exit_code = run_ring(job, out_dir, result, log); break;
        case Command::Verify: result.exit_code = run_verify(job, out_dir, result, log); break;
        }
    } catch (const Error& e) {
        log << "error: " << e.what() << "\n";
        result.exit_code = is_numerical(e.kind()) ? kExitNumerical : kExitValidation;
    }
    return result;
}

} // namespace ptl::io
