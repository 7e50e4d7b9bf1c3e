#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "ptlattice/errors.hpp"
#include "ptlattice/io/config.hpp"

using namespace ptl;
using namespace ptl::io;

namespace {

Error parse_error(const std::string& text, std::vector<std::string> overrides = {})
{
    try {
        parse_config(text, overrides);
    } catch (const Error& e) {
        return e;
    }
    ADD_FAILURE() << "accepted: " << text;
    return Error(ErrorKind::InvalidArgument, "");
}

} // namespace

TEST(ParseConfig, OddChainThresholdJob)
{
    const auto job = parse_config("{command: threshold, N: 41, profile: constant, t_s: 1, t_d: 0, m: 1, ray: tau_z}");
    EXPECT_EQ(job.command, Command::Threshold);
    EXPECT_EQ(job.sites, 41);
    EXPECT_EQ(job.boundary, Boundary::Open);
    EXPECT_EQ(job.impurity_site, 1);
    EXPECT_EQ(job.ray, SpinMatrix::tau_z());
    EXPECT_DOUBLE_EQ(job.tolerance, 1e-4);
    EXPECT_DOUBLE_EQ(job.reality_tolerance, 1e-8);
    EXPECT_DOUBLE_EQ(job.bracket_cap, 8.0);
    EXPECT_EQ(job.m_first, 1);
    EXPECT_EQ(job.m_last, 20);
    EXPECT_EQ(job.workers, 1);
}

TEST(ParseConfig, CenterImpurityRejected)
{
    const auto e = parse_error("{command: threshold, N: 41, m: 21, t_s: 1}");
    EXPECT_EQ(e.kind(), ErrorKind::ValidationError);
    EXPECT_NE(std::string(e.what()).find("'m'"), std::string::npos) << e.what();
}

TEST(ParseConfig, PhaseDiagramSeries)
{
    const auto job = parse_config("{command: phase-diagram, N: 40, t_d_over_t_s: [0, 0.4, 0.7], ray: tau_z}");
    EXPECT_EQ(job.t_d_over_t_s, (std::vector<double>{0.0, 0.4, 0.7}));
    EXPECT_EQ(job.m_last, 20);
    EXPECT_EQ(make_lattice(job, 0.7).profile().bond(3), (SpinMatrix{1.0, 0.7, 0.0}));
}

TEST(ParseConfig, YamlBlockStyleAndGainForms)
{
    const auto job = parse_config("command: spectrum\n"
                                  "N: 6\n"
                                  "boundary: periodic\n"
                                  "gain: [0.5, 0.25, 0]\n"
                                  "ray: {s: 2, x: 1}\n"
                                  "gamma: 0.3\n");
    EXPECT_EQ(job.boundary, Boundary::Periodic);
    EXPECT_EQ(job.gain, (SpinMatrix{0.5, 0.25, 0.0}));
    EXPECT_EQ(job.ray, (SpinMatrix{1.0, 0.5, 0.0}));
}

TEST(ParseConfig, ExplicitBonds)
{
    const auto job = parse_config("{command: verify, N: 4, profile: explicit, bonds: [1, [0.5, 0.2, 0], 1]}");
    ASSERT_EQ(job.bonds.size(), 3u);
    EXPECT_EQ(job.bonds[0], (SpinMatrix{1.0, 0.0, 0.0}));
    EXPECT_EQ(job.bonds[1], (SpinMatrix{0.5, 0.2, 0.0}));
    EXPECT_TRUE(job.t_d_over_t_s.empty());

    const auto asymmetric = parse_error("{command: verify, N: 4, profile: explicit, bonds: [1, 1, 2]}");
    EXPECT_EQ(asymmetric.kind(), ErrorKind::ValidationError);
}

TEST(ParseConfig, Errors)
{
    EXPECT_EQ(parse_error("{command: spectrum, N: 4, colour: red}").kind(), ErrorKind::ValidationError);
    EXPECT_EQ(parse_error("{command: spectrum}").kind(), ErrorKind::ValidationError);
    EXPECT_EQ(parse_error("{command: spectre, N: 4}").kind(), ErrorKind::ValidationError);
    EXPECT_EQ(parse_error("{command: spectrum, N: 1}").kind(), ErrorKind::ValidationError);
    EXPECT_EQ(parse_error("{command: spectrum, N: 4, tolerance: 0}").kind(), ErrorKind::ValidationError);
    EXPECT_EQ(parse_error("{command: spectrum, N: 4, t_d: 2}").kind(), ErrorKind::ValidationError);
    EXPECT_EQ(parse_error("{command: phase-diagram, N: 8, m_range: [3, 5]}").kind(), ErrorKind::ValidationError);
    EXPECT_EQ(parse_error("{command: ring-threshold, N: 8, ring: {t0s: 1, tbz: 1}}").kind(),
              ErrorKind::ValidationError);
    EXPECT_EQ(parse_error("[1, 2, 3]").kind(), ErrorKind::ParseError);

    const auto malformed = parse_error("command: spectrum\nN: 4\ngain: [1, 2\n");
    EXPECT_EQ(malformed.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(malformed.what()).find("line"), std::string::npos);

    const auto typed = parse_error("command: spectrum\nN: 4\nt_s: fast\n");
    EXPECT_NE(std::string(typed.what()).find("line 3"), std::string::npos) << typed.what();
}

TEST(ParseConfig, Overrides)
{
    const std::vector<std::string> overrides{"N=12", "m=3", "t_d=0.25", "gamma=0.5"};
    const auto job = parse_config("{command: spectrum, N: 4, m: 1}", overrides);
    EXPECT_EQ(job.sites, 12);
    EXPECT_EQ(job.impurity_site, 3);
    EXPECT_EQ(job.t_d, 0.25);
    EXPECT_EQ(job.gamma, 0.5);

    EXPECT_EQ(parse_error("{command: spectrum, N: 4}", {"boundary=periodic"}).kind(), ErrorKind::ValidationError);
    EXPECT_EQ(parse_error("{command: spectrum, N: 4}", {"N"}).kind(), ErrorKind::ValidationError);
    EXPECT_EQ(parse_error("{command: spectrum, N: 4}", {"m=3"}).kind(), ErrorKind::ValidationError);
}

TEST(ParseConfig, CommandArgument)
{
    EXPECT_EQ(parse_config("{N: 4}", {}, Command::Verify).command, Command::Verify);
    EXPECT_EQ(parse_config("{command: verify, N: 4}", {}, Command::Verify).command, Command::Verify);
    EXPECT_THROW(parse_config("{command: spectrum, N: 4}", {}, Command::Verify), Error);
}

TEST(PrintConfig, WorkersOnlyWithExecutionFields)
{
    auto job = parse_config("{command: spectrum, N: 4, workers: 3}");
    EXPECT_NE(print_config(job).find("\"workers\":3"), std::string::npos);
    EXPECT_EQ(print_config(job, false).find("workers"), std::string::npos);
    auto other = job;
    other.workers = 1;
    EXPECT_EQ(print_config(job, false), print_config(other, false));
}

TEST(PrintConfig, RoundTripRandomConfigs)
{
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::vector<std::string> commands{"spectrum", "threshold", "phase-diagram", "ring-threshold", "verify"};
    for (int trial = 0; trial < 200; ++trial) {
        const std::string command = commands[trial % commands.size()];
        const int n = std::uniform_int_distribution<int>(3, 30)(rng);
        const int m = std::uniform_int_distribution<int>(1, n / 2)(rng);
        std::string text = "{command: " + command + ", N: " + std::to_string(n) + ", m: " + std::to_string(m);
        text += unit(rng) < 0.5 ? ", boundary: periodic" : ", boundary: open";
        const double kind = unit(rng);
        if (command == "ring-threshold") {
            const double t0 = 0.5 + unit(rng);
            text += ", ring: {t0s: " + std::to_string(t0) + ", t0d: " + std::to_string(0.3 * t0 * unit(rng)) +
                    ", tbs: " + std::to_string(0.4 * unit(rng)) + ", tbd: 0}";
        } else if (kind < 0.4) {
            const double ts = 0.2 + unit(rng);
            text += ", t_s: " + std::to_string(ts) + ", t_d: " + std::to_string(ts * unit(rng));
            if (command == "phase-diagram")
                text += ", t_d_over_t_s: [" + std::to_string(unit(rng)) + ", " + std::to_string(unit(rng)) + "]";
        } else if (kind < 0.7) {
            text += ", profile: parabolic-sqrt, t0: " + std::to_string(0.1 + unit(rng)) +
                    ", t_d_fraction: " + std::to_string(unit(rng));
        } else {
            text += ", profile: explicit, bonds: [";
            const int count = text.find("periodic") != std::string::npos ? n : n - 1;
            std::vector<double> s(static_cast<std::size_t>(count));
            for (int k = 0; k < count; ++k)
                s[static_cast<std::size_t>(k)] = 0.5 + unit(rng);
            for (int k = 0; k + 1 < n; ++k)
                s[static_cast<std::size_t>(n - 2 - k)] = s[static_cast<std::size_t>(k)];
            for (int k = 0; k < count; ++k)
                text += (k ? ", [" : "[") + std::to_string(s[static_cast<std::size_t>(k)]) + ", " +
                        std::to_string(0.5 * s[static_cast<std::size_t>(k)]) + ", 0]";
            text += "]";
        }
        text += ", gain: [" + std::to_string(unit(rng)) + ", " + std::to_string(unit(rng)) + ", 0.1]";
        text += ", gamma: " + std::to_string(2.0 * unit(rng));
        text += ", ray: [1, " + std::to_string(unit(rng)) + ", 0]";
        text += ", workers: " + std::to_string(1 + trial % 4);
        text += "}";

        JobConfig job;
        try {
            job = parse_config(text);
        } catch (const Error& e) {
            ADD_FAILURE() << e.what() << "\n" << text;
            continue;
        }
        const std::string printed = print_config(job);
        const JobConfig back = parse_config(printed);
        EXPECT_EQ(back, job) << text << "\n" << printed;
        EXPECT_EQ(print_config(back), printed);
    }
}
