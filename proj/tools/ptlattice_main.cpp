// ptlattice <command> --config <path> [--set key=value ...] --out <dir>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ptlattice/errors.hpp"
#include "ptlattice/io/commands.hpp"
#include "ptlattice/io/config.hpp"

namespace {

struct Invocation {
    std::string config_path;
    std::vector<std::string> overrides;
    std::string out_dir = ".";
};

int workers_from_env(int fallback)
{
    const char* env = std::getenv("PTLATTICE_WORKERS");
    if (env == nullptr || *env == '\0')
        return fallback;
    try {
        const int value = std::stoi(env);
        if (value >= 1)
            return value;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid PTLATTICE_WORKERS='" << env << "'\n";
    return fallback;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"PT-symmetric pseudospin lattices: spectra, sector decomposition and symmetry-breaking thresholds"};
    app.require_subcommand(1);

    Invocation inv;
    for (auto command : {ptl::io::Command::Spectrum, ptl::io::Command::Threshold, ptl::io::Command::PhaseDiagram,
                         ptl::io::Command::RingThreshold, ptl::io::Command::Verify}) {
        auto* sub = app.add_subcommand(std::string(ptl::io::to_string(command)));
        sub->add_option("--config", inv.config_path, "YAML or JSON job description")->required();
        sub->add_option("--set", inv.overrides, "Override N, m, t_d or gamma (key=value)");
        sub->add_option("--out", inv.out_dir, "Output directory")->capture_default_str();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : ptl::io::kExitValidation;
    }

    const auto command = ptl::io::parse_command(app.get_subcommands().front()->get_name());
    ptl::io::JobConfig job;
    try {
        job = ptl::io::parse_config(ptl::io::read_text_file(inv.config_path), inv.overrides, command);
    } catch (const ptl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ptl::io::kExitValidation;
    }
    job.workers = workers_from_env(job.workers);

    const auto result = ptl::io::run_command(job, inv.out_dir, std::cerr);
    for (const auto& file : result.files)
        std::cout << file.string() << "\n";
    return result.exit_code;
}
