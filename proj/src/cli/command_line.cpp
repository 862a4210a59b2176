#include "symplane/cli/command_line.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <optional>

#include "CLI11.hpp"
#include "symplane/cli/output.hpp"
#include "symplane/cli/report.hpp"

namespace symplane::cli {

namespace {

// "x,y" or "x,y,r" into doubles; a usage error on anything else.
std::vector<double> parse_tuple(const std::string& text, std::size_t count, const std::string& flag) {
    std::vector<double> values;
    const char* cur = text.data();
    const char* end = text.data() + text.size();
    while (true) {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(cur, end, v);
        if (ec != std::errc{} || !std::isfinite(v)) break;
        values.push_back(v);
        cur = ptr;
        if (cur == end) {
            if (values.size() == count) return values;
            break;
        }
        if (*cur != ',') break;
        ++cur;
    }
    throw Error(ErrorCode::InvalidArgument,
                flag + " expects " + std::to_string(count) + " comma-separated numbers, got '" + text + "'");
}

Vec2 parse_vec(const std::string& text, const std::string& flag) {
    const auto v = parse_tuple(text, 2, flag);
    return {v[0], v[1]};
}

struct OutputFlags {
    bool json = false;
    bool csv = false;
    std::string svg;
};

void add_output_flags(CLI::App* sub, OutputFlags& flags, bool csv, bool svg) {
    sub->add_flag("--json", flags.json, "JSON report on stdout (default)");
    if (csv) sub->add_flag("--csv", flags.csv, "CSV table on stdout instead of JSON");
    if (svg) sub->add_option("--svg", flags.svg, "Write an SVG plot to this path");
}

int emit(const RunReport& report, const OutputFlags& flags, std::ostream& out, std::ostream& err) {
    if (!flags.svg.empty()) {
        std::ofstream file(flags.svg, std::ios::binary);
        if (!file) {
            err << "error: cannot write SVG to '" << flags.svg << "'\n";
            return kExitUsage;
        }
        file << to_svg(report);
    }
    if (flags.csv)
        out << to_csv(report);
    else
        out << to_json(report).dump(2) << '\n';
    if (!report.diagnostic.empty()) err << "error: " << report.diagnostic << '\n';
    return report.exit_code;
}

}  // namespace

int run_command_line(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Planar symplectic geometry: identities, constructions, crank kinematics, oscillator dynamics",
                 args.empty() ? "symplane" : args.front()};
    app.require_subcommand(1);

    OutputFlags flags;
    std::function<RunReport()> job;

    IdentitiesOptions id_opts;
    auto* identities = app.add_subcommand("identities", "Property-check the five planar identities on random input");
    identities->add_option("--samples", id_opts.samples, "Number of random quadruples")->capture_default_str();
    identities->add_option("--seed", id_opts.seed, "Generator seed")->capture_default_str();
    identities->add_option("--range", id_opts.range, "Components drawn from [-range, range]")->capture_default_str();
    add_output_flags(identities, flags, true, false);
    identities->callback([&] { job = [&] { return run_identities(id_opts); }; });

    std::string ia, iu, ib, iv;
    auto* intersect = app.add_subcommand("intersect", "Intersect line (a, u) with line (b, v)");
    intersect->add_option("--a", ia, "Point on line 1, x,y")->required();
    intersect->add_option("--u", iu, "Direction of line 1, x,y")->required();
    intersect->add_option("--b", ib, "Point on line 2, x,y")->required();
    intersect->add_option("--v", iv, "Direction of line 2, x,y")->required();
    add_output_flags(intersect, flags, false, false);
    intersect->callback([&] {
        job = [&] {
            return run_intersect({parse_vec(ia, "--a"), parse_vec(iu, "--u"), parse_vec(ib, "--b"),
                                  parse_vec(iv, "--v")});
        };
    });

    std::string tc1, tc2;
    auto* tangents = app.add_subcommand("tangents", "Common tangents of two circles");
    tangents->add_option("--c1", tc1, "Circle 1 as x,y,r")->required();
    tangents->add_option("--c2", tc2, "Circle 2 as x,y,r")->required();
    add_output_flags(tangents, flags, false, true);
    tangents->callback([&] {
        job = [&] {
            const auto c1 = parse_tuple(tc1, 3, "--c1");
            const auto c2 = parse_tuple(tc2, 3, "--c2");
            return run_tangents({{c1[0], c1[1]}, c1[2], {c2[0], c2[1]}, c2[2]});
        };
    });

    CrankOptions crank_opts;
    std::string pivot;
    auto* crank = app.add_subcommand("crank", "Sweep the inverted slider crank over a range of crank angles");
    crank->add_option("--length", crank_opts.length, "Crank length a")->required();
    crank->add_option("--pivot", pivot, "Guide pivot C, x,y")->required();
    crank->add_option("--phidot", crank_opts.phi_dot, "Constant crank rate")->required();
    crank->add_option("--from", crank_opts.from, "First crank angle")->required();
    crank->add_option("--to", crank_opts.to, "Last crank angle")->required();
    crank->add_option("--steps", crank_opts.steps, "Number of samples, both ends included")->required();
    crank->add_flag("--degrees", crank_opts.degrees, "Angles and angular rates in degrees");
    add_output_flags(crank, flags, true, true);
    crank->callback([&] {
        job = [&] {
            crank_opts.pivot = parse_vec(pivot, "--pivot");
            return run_crank(crank_opts);
        };
    });

    OscillatorOptions osc_opts;
    std::string method;
    auto* osc = app.add_subcommand("oscillator", "Integrate the harmonic oscillator in phase space");
    osc->add_option("--mass", osc_opts.mass, "Mass m")->required();
    osc->add_option("--stiffness", osc_opts.stiffness, "Spring rate k")->required();
    osc->add_option("--q0", osc_opts.q0, "Initial coordinate")->required();
    osc->add_option("--p0", osc_opts.p0, "Initial momentum")->required();
    osc->add_option("--dt", osc_opts.dt, "Time step")->required();
    osc->add_option("--steps", osc_opts.steps, "Number of steps")->required();
    osc->add_option("--method", method, "euler | symplectic-euler | leapfrog")
        ->required()
        ->check(CLI::IsMember({"euler", "symplectic-euler", "leapfrog"}));
    add_output_flags(osc, flags, true, true);
    osc->callback([&] {
        job = [&] {
            osc_opts.method = parse_integrator(method);
            return run_oscillator(osc_opts);
        };
    });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    if (args.empty()) argv.push_back("symplane");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    if (flags.json && flags.csv) {
        err << "error: --json and --csv are mutually exclusive\n";
        return kExitUsage;
    }

    try {
        return emit(job(), flags, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace symplane::cli
