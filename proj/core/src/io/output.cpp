#include "ptlattice/io/output.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "ptlattice/errors.hpp"

namespace ptl::io {

namespace {

using Json = nlohmann::ordered_json;

/// Rounds to the printed 12-significant-digit value so JSON and CSV agree.
double rounded(double value)
{
    if (!std::isfinite(value))
        return value;
    const std::string text = fmt::format("{:.12g}", value);
    double out = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), out);
    return out == 0.0 ? 0.0 : out;
}

Json metadata(const JobConfig& job)
{
    return Json{{"version", std::string(kVersion)}, {"config", Json::parse(print_config(job, false))}};
}

std::string dump(const Json& doc)
{
    return doc.dump(2) + "\n";
}

} // namespace

std::string format_number(double value)
{
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    return fmt::format("{:.12g}", value == 0.0 ? 0.0 : value);
}

std::string phase_csv(const PhaseDiagram& diagram, const JobConfig& job)
{
    std::string out;
    out += fmt::format("# ptlattice {}\n", kVersion);
    out += fmt::format("# config: {}\n", print_config(job, false));
    out += kPhaseCsvHeader;
    out += '\n';
    for (const auto& row : diagram.rows) {
        out += fmt::format("{},{},{},{},{}\n", row.impurity_site, format_number(row.mu),
                           format_number(row.result.gamma_pt), to_string(row.result.status), row.result.evaluations);
    }
    return out;
}

std::string spectrum_json(const Spectrum& spectrum, std::size_t dimension, bool pt_symmetric, const JobConfig& job)
{
    Json doc = metadata(job);
    doc["dimension"] = dimension;
    Json values = Json::array();
    for (const auto& e : spectrum.eigenvalues)
        values.push_back({rounded(e.real()), rounded(e.imag())});
    doc["eigenvalues"] = std::move(values);
    doc["max_abs_imag"] = rounded(spectrum.max_abs_imag);
    doc["classification"] = std::string(to_string(spectrum.classification));
    doc["pairing_defect"] = rounded(spectrum.pairing_defect);
    doc["pt_symmetric"] = pt_symmetric;
    return dump(doc);
}

std::string verify_json(const DirectSumReport& report, const JobConfig& job)
{
    Json doc = metadata(job);
    doc["basis"] = std::string(to_string(report.basis));
    doc["dimension"] = report.full_spectrum.size();
    doc["max_multiset_distance"] = rounded(report.max_distance);
    doc["tolerance"] = report.tolerance;
    doc["pass"] = report.pass;
    return dump(doc);
}

std::string ring_json(const RingReport& report, const JobConfig& job)
{
    Json doc = metadata(job);
    doc["formula"] = report.formula ? Json(rounded(*report.formula)) : Json(nullptr);
    doc["formula_error"] = report.formula_error.empty() ? Json(nullptr) : Json(report.formula_error);
    Json rows = Json::array();
    for (const auto& row : report.rows) {
        rows.push_back({{"m", row.impurity_site},
                        {"mu", rounded(row.mu)},
                        {"gamma_pt", rounded(row.result.gamma_pt)},
                        {"status", std::string(to_string(row.result.status))},
                        {"evaluations", row.result.evaluations}});
    }
    doc["rows"] = std::move(rows);
    doc["spread"] = rounded(report.spread);
    doc["max_deviation"] = rounded(report.max_deviation);
    doc["formula_tolerance"] = kRingFormulaTolerance;
    doc["consistent"] = report.consistent;
    return dump(doc);
}

void write_file(const std::filesystem::path& path, std::string_view contents)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(ErrorKind::IoError, "cannot open '" + path.string() + "' for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out)
        throw Error(ErrorKind::IoError, "failed writing '" + path.string() + "'");
}

} // namespace ptl::io
