#include "ptlattice/io/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>
#include <yaml-cpp/yaml.h>

#include "ptlattice/errors.hpp"

namespace ptl::io {

namespace {

const std::set<std::string> kKnownKeys = {
    "command", "N", "boundary", "profile", "t_s", "t_d", "t0", "t_d_fraction", "bonds", "force", "m",
    "gain", "gamma", "ray", "t_d_over_t_s", "m_range", "ring", "tolerance", "reality_tolerance",
    "bracket_cap", "verify_tolerance", "validation_points", "max_dimension", "workers",
};

const std::set<std::string> kOverridableKeys = {"N", "m", "t_d", "gamma"};

std::string where(const std::string& key, const YAML::Node& node)
{
    std::string out = "key '" + key + "'";
    if (node && node.Mark().line >= 0)
        out += " (line " + std::to_string(node.Mark().line + 1) + ")";
    return out;
}

[[noreturn]] void invalid(const std::string& key, const YAML::Node& node, const std::string& what)
{
    throw Error(ErrorKind::ValidationError, where(key, node) + ": " + what);
}

template <class T>
T read(const YAML::Node& root, const std::string& key, T fallback, const char* type_name)
{
    const YAML::Node node = root[key];
    if (!node)
        return fallback;
    try {
        return node.as<T>();
    } catch (const YAML::Exception&) {
        invalid(key, node, std::string("expected ") + type_name);
    }
}

double read_number(const YAML::Node& root, const std::string& key, double fallback)
{
    const double value = read<double>(root, key, fallback, "a number");
    if (!std::isfinite(value))
        invalid(key, root[key], "must be finite");
    return value;
}

SpinMatrix spin_from_node(const YAML::Node& node, const std::string& key)
{
    try {
        if (node.IsScalar()) {
            const auto name = node.as<std::string>();
            if (name == "tau_z")
                return SpinMatrix::tau_z();
            if (name == "tau_x")
                return SpinMatrix::tau_x();
            if (name == "identity")
                return SpinMatrix::identity();
            invalid(key, node, "unknown matrix preset '" + name + "' (expected tau_z, tau_x, identity)");
        }
        if (node.IsSequence()) {
            if (node.size() < 1 || node.size() > 3)
                invalid(key, node, "expected [s], [s, x] or [s, x, z]");
            SpinMatrix m;
            m.s = node[0].as<double>();
            if (node.size() > 1)
                m.x = node[1].as<double>();
            if (node.size() > 2)
                m.z = node[2].as<double>();
            return m;
        }
        if (node.IsMap()) {
            SpinMatrix m;
            for (const auto& entry : node) {
                const auto name = entry.first.as<std::string>();
                if (name == "s")
                    m.s = entry.second.as<double>();
                else if (name == "x")
                    m.x = entry.second.as<double>();
                else if (name == "z")
                    m.z = entry.second.as<double>();
                else
                    invalid(key + "." + name, entry.first, "unknown key");
            }
            return m;
        }
    } catch (const YAML::Exception&) {
        invalid(key, node, "expected a matrix preset, [s, x, z] or {s, x, z}");
    }
    invalid(key, node, "expected a matrix preset, [s, x, z] or {s, x, z}");
}

std::vector<SpinMatrix> read_bonds(const YAML::Node& node)
{
    if (!node.IsSequence())
        invalid("bonds", node, "expected a list of bonds");
    std::vector<SpinMatrix> bonds;
    for (const auto& entry : node) {
        if (entry.IsScalar()) {
            try {
                bonds.push_back({entry.as<double>(), 0.0, 0.0});
            } catch (const YAML::Exception&) {
                invalid("bonds", entry, "expected a number");
            }
        } else {
            bonds.push_back(spin_from_node(entry, "bonds"));
        }
    }
    return bonds;
}

Boundary parse_boundary(const YAML::Node& root)
{
    const auto name = read<std::string>(root, "boundary", "open", "a string");
    if (name == "open")
        return Boundary::Open;
    if (name == "periodic")
        return Boundary::Periodic;
    invalid("boundary", root["boundary"], "expected open or periodic");
}

ProfileKind parse_profile_kind(const YAML::Node& root)
{
    const auto name = read<std::string>(root, "profile", "constant", "a string");
    if (name == "constant")
        return ProfileKind::Constant;
    if (name == "parabolic-sqrt")
        return ProfileKind::ParabolicSqrt;
    if (name == "explicit")
        return ProfileKind::Explicit;
    invalid("profile", root["profile"], "expected constant, parabolic-sqrt or explicit");
}

void apply_overrides(YAML::Node& root, std::span<const std::string> overrides)
{
    for (const auto& assignment : overrides) {
        const auto eq = assignment.find('=');
        if (eq == std::string::npos || eq == 0)
            throw Error(ErrorKind::ValidationError, "override '" + assignment + "' is not key=value");
        const std::string key = assignment.substr(0, eq);
        if (!kOverridableKeys.contains(key)) {
            throw Error(ErrorKind::ValidationError,
                        "override of '" + key + "' not supported (allowed: N, m, t_d, gamma)");
        }
        try {
            root[key] = YAML::Load(assignment.substr(eq + 1));
        } catch (const YAML::Exception& e) {
            throw Error(ErrorKind::ParseError, "override '" + assignment + "': " + e.what());
        }
    }
}

void require_positive(const std::string& key, const YAML::Node& root, double value)
{
    if (!(value > 0.0))
        invalid(key, root[key], "must be > 0");
}

/// Re-raises library errors as ValidationError tagged with the offending key.
template <class Fn>
void validate_with(const std::string& key, const YAML::Node& node, Fn&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        invalid(key, node, e.what());
    }
}

nlohmann::ordered_json spin_json(const SpinMatrix& m)
{
    return {{"s", m.s}, {"x", m.x}, {"z", m.z}};
}

} // namespace

std::string_view to_string(Command command) noexcept
{
    switch (command) {
    case Command::Spectrum: return "spectrum";
    case Command::Threshold: return "threshold";
    case Command::PhaseDiagram: return "phase-diagram";
    case Command::RingThreshold: return "ring-threshold";
    case Command::Verify: return "verify";
    }
    return "unknown";
}

Command parse_command(std::string_view name)
{
    for (auto c : {Command::Spectrum, Command::Threshold, Command::PhaseDiagram, Command::RingThreshold,
                   Command::Verify}) {
        if (to_string(c) == name)
            return c;
    }
    throw Error(ErrorKind::ValidationError, "unknown command '" + std::string(name) +
                                                "' (expected spectrum, threshold, phase-diagram, "
                                                "ring-threshold or verify)");
}

double reference_scale(const JobConfig& job)
{
    double scale = 0.0;
    if (job.command == Command::RingThreshold) {
        for (double v : {job.ring.t0s, job.ring.t0d, job.ring.tbs, job.ring.tbd})
            scale = std::max(scale, std::abs(v));
    } else if (job.profile == ProfileKind::Constant) {
        scale = std::max(std::abs(job.t_s), std::abs(job.t_d));
    } else if (job.profile == ProfileKind::ParabolicSqrt) {
        const int count = bond_count(job.sites, job.boundary);
        for (int k = 1; k <= count; ++k)
            scale = std::max(scale, std::abs(job.t0) * std::sqrt(static_cast<double>(k) * (job.sites - k)));
    } else {
        for (const auto& bond : job.bonds)
            scale = std::max(scale, bond.max_abs_coefficient());
    }
    return scale > 0.0 ? scale : 1.0;
}

LatticeSpec make_lattice(const JobConfig& job, double mixing_ratio)
{
    ProfileParams params;
    switch (job.profile) {
    case ProfileKind::Constant:
        params = ConstantProfile{job.t_s, mixing_ratio >= 0.0 ? mixing_ratio * job.t_s : job.t_d};
        break;
    case ProfileKind::ParabolicSqrt:
        params = ParabolicSqrtProfile{job.t0, mixing_ratio >= 0.0 ? mixing_ratio : job.t_d_fraction};
        break;
    default:
        params = ExplicitProfile{job.bonds, job.force};
        break;
    }
    return LatticeSpec(build_profile(params, job.sites, job.boundary), job.impurity_site, job.gain, job.gamma);
}

RingSpec make_ring(const JobConfig& job, int impurity_site)
{
    return RingSpec{job.sites, impurity_site, SpinMatrix{job.ring.t0s, job.ring.t0d, 0.0},
                    SpinMatrix{job.ring.tbs, job.ring.tbd, 0.0}};
}

ThresholdOptions make_threshold_options(const JobConfig& job)
{
    ThresholdOptions options;
    options.tolerance = job.tolerance;
    options.reality_tolerance = job.reality_tolerance;
    options.bracket_cap = job.bracket_cap;
    options.validation_points = job.validation_points;
    options.eigen.max_dimension = job.max_dimension;
    return options;
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::IoError, "cannot read config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

JobConfig parse_config(std::string_view text, std::span<const std::string> overrides, std::optional<Command> command)
{
    YAML::Node root;
    try {
        root = YAML::Load(std::string(text));
    } catch (const YAML::ParserException& e) {
        throw Error(ErrorKind::ParseError, "line " + std::to_string(e.mark.line + 1) + ": " + e.msg);
    }
    if (!root.IsMap())
        throw Error(ErrorKind::ParseError, "config must be a single key/value mapping");
    for (const auto& entry : root) {
        const auto key = entry.first.as<std::string>();
        if (!kKnownKeys.contains(key))
            invalid(key, entry.first, "unknown key");
    }
    apply_overrides(root, overrides);

    JobConfig job;
    if (root["command"]) {
        job.command = parse_command(read<std::string>(root, "command", "", "a string"));
        if (command && *command != job.command) {
            invalid("command", root["command"],
                    "config says '" + std::string(to_string(job.command)) + "' but '" +
                        std::string(to_string(*command)) + "' was requested");
        }
    } else if (command) {
        job.command = *command;
    } else {
        throw Error(ErrorKind::ValidationError, "key 'command' is required");
    }

    if (!root["N"])
        throw Error(ErrorKind::ValidationError, "key 'N' is required");
    job.sites = read<int>(root, "N", 0, "an integer");
    if (job.sites < 2)
        invalid("N", root["N"], "must be >= 2");
    job.boundary = parse_boundary(root);
    job.profile = parse_profile_kind(root);
    job.t_s = read_number(root, "t_s", 1.0);
    job.t_d = read_number(root, "t_d", 0.0);
    job.t0 = read_number(root, "t0", 1.0);
    job.t_d_fraction = read_number(root, "t_d_fraction", 0.0);
    if (root["bonds"])
        job.bonds = read_bonds(root["bonds"]);
    job.force = read<bool>(root, "force", false, "a boolean");

    job.impurity_site = read<int>(root, "m", 1, "an integer");
    job.gain = root["gain"] ? spin_from_node(root["gain"], "gain") : SpinMatrix::tau_z();
    job.gamma = read_number(root, "gamma", 0.0);
    if (job.gamma < 0.0)
        invalid("gamma", root["gamma"], "must be >= 0");
    if (root["ray"]) {
        validate_with("ray", root["ray"], [&] { job.ray = GainRay(spin_from_node(root["ray"], "ray")).direction(); });
    }

    if (const YAML::Node node = root["t_d_over_t_s"]) {
        try {
            if (node.IsSequence())
                job.t_d_over_t_s = node.as<std::vector<double>>();
            else
                job.t_d_over_t_s = {node.as<double>()};
        } catch (const YAML::Exception&) {
            invalid("t_d_over_t_s", node, "expected a number or a list of numbers");
        }
        if (job.profile == ProfileKind::Explicit && !job.t_d_over_t_s.empty())
            invalid("t_d_over_t_s", node, "not available for explicit profiles");
        if (job.profile != ProfileKind::Explicit && job.t_d_over_t_s.empty())
            invalid("t_d_over_t_s", node, "must not be empty");
        for (double r : job.t_d_over_t_s) {
            if (!(r >= 0.0 && r <= 1.0))
                invalid("t_d_over_t_s", node, "ratios must lie in [0, 1]");
        }
    } else if (job.profile == ProfileKind::Constant) {
        job.t_d_over_t_s = {job.t_s > 0.0 ? job.t_d / job.t_s : 0.0};
    } else if (job.profile == ProfileKind::ParabolicSqrt) {
        job.t_d_over_t_s = {job.t_d_fraction};
    }

    job.m_first = 1;
    job.m_last = job.sites / 2;
    if (const YAML::Node node = root["m_range"]) {
        std::vector<int> range;
        try {
            range = node.as<std::vector<int>>();
        } catch (const YAML::Exception&) {
            invalid("m_range", node, "expected [first, last]");
        }
        if (range.size() != 2)
            invalid("m_range", node, "expected [first, last]");
        job.m_first = range[0];
        job.m_last = range[1];
        if (job.m_first < 1 || job.m_last > job.sites / 2 || job.m_first > job.m_last)
            invalid("m_range", node, "must satisfy 1 <= first <= last <= " + std::to_string(job.sites / 2));
    }

    if (const YAML::Node node = root["ring"]) {
        if (!node.IsMap())
            invalid("ring", node, "expected {t0s, t0d, tbs, tbd}");
        for (const auto& entry : node) {
            const auto name = entry.first.as<std::string>();
            if (name != "t0s" && name != "t0d" && name != "tbs" && name != "tbd")
                invalid("ring." + name, entry.first, "unknown key");
        }
        job.ring.t0s = read_number(node, "t0s", job.ring.t0s);
        job.ring.t0d = read_number(node, "t0d", job.ring.t0d);
        job.ring.tbs = read_number(node, "tbs", job.ring.tbs);
        job.ring.tbd = read_number(node, "tbd", job.ring.tbd);
    }

    const double scale = reference_scale(job);
    job.tolerance = read_number(root, "tolerance", kDefaultToleranceFactor * scale);
    job.reality_tolerance = read_number(root, "reality_tolerance", kDefaultRealityFactor * scale);
    job.bracket_cap = read_number(root, "bracket_cap", kDefaultBracketCapFactor * scale);
    job.verify_tolerance = read_number(root, "verify_tolerance", 1e-8);
    job.validation_points = read<int>(root, "validation_points", 16, "an integer");
    job.max_dimension = read<std::size_t>(root, "max_dimension", 4096, "a non-negative integer");
    job.workers = read<int>(root, "workers", 1, "an integer");
    require_positive("tolerance", root, job.tolerance);
    require_positive("reality_tolerance", root, job.reality_tolerance);
    require_positive("bracket_cap", root, job.bracket_cap);
    require_positive("verify_tolerance", root, job.verify_tolerance);
    if (job.validation_points < 2)
        invalid("validation_points", root["validation_points"], "must be >= 2");
    if (job.workers < 1)
        invalid("workers", root["workers"], "must be >= 1");

    // Semantic checks: every lattice the job will build must be valid.
    validate_with("m", root["m"], [&] { validate_impurity_site(job.sites, job.impurity_site); });
    if (job.command == Command::RingThreshold) {
        validate_with("ring", root["ring"], [&] {
            for (int m = job.m_first; m <= job.m_last; ++m)
                (void)ring_profile(make_ring(job, m));
        });
    } else {
        const YAML::Node profile_node = root["bonds"] ? root["bonds"] : root["profile"];
        validate_with("profile", profile_node, [&] {
            if (job.command == Command::PhaseDiagram && job.profile != ProfileKind::Explicit) {
                for (double ratio : job.t_d_over_t_s)
                    (void)make_lattice(job, ratio);
            } else {
                (void)make_lattice(job);
            }
        });
    }
    return job;
}

std::string print_config(const JobConfig& job, bool include_execution)
{
    nlohmann::ordered_json doc;
    doc["command"] = std::string(to_string(job.command));
    doc["N"] = job.sites;
    doc["boundary"] = std::string(to_string(job.boundary));
    doc["profile"] = std::string(to_string(job.profile));
    doc["t_s"] = job.t_s;
    doc["t_d"] = job.t_d;
    doc["t0"] = job.t0;
    doc["t_d_fraction"] = job.t_d_fraction;
    doc["bonds"] = nlohmann::ordered_json::array();
    for (const auto& bond : job.bonds)
        doc["bonds"].push_back({bond.s, bond.x, bond.z});
    doc["force"] = job.force;
    doc["m"] = job.impurity_site;
    doc["gain"] = spin_json(job.gain);
    doc["gamma"] = job.gamma;
    doc["ray"] = spin_json(job.ray);
    doc["t_d_over_t_s"] = job.t_d_over_t_s;
    doc["m_range"] = {job.m_first, job.m_last};
    doc["ring"] = {{"t0s", job.ring.t0s}, {"t0d", job.ring.t0d}, {"tbs", job.ring.tbs}, {"tbd", job.ring.tbd}};
    doc["tolerance"] = job.tolerance;
    doc["reality_tolerance"] = job.reality_tolerance;
    doc["bracket_cap"] = job.bracket_cap;
    doc["verify_tolerance"] = job.verify_tolerance;
    doc["validation_points"] = job.validation_points;
    doc["max_dimension"] = job.max_dimension;
    if (include_execution)
        doc["workers"] = job.workers;
    return doc.dump();
}

} // namespace ptl::io
