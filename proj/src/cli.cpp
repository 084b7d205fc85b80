#include "biquat/cli.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "biquat/audit.hpp"
#include "biquat/dynamics.hpp"
#include "biquat/suites.hpp"

namespace biquat {

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
    std::uint64_t seed = 1;
    std::string out_dir = "out";
    std::string convention;
    int samples = 25;
    std::string lattice;
    bool json_stdout = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--seed", o.seed, "run seed; all randomness derives from it");
    cmd->add_option("--out", o.out_dir, "output directory for reports");
    cmd->add_option("--convention", o.convention,
                    "convention override, e.g. 'transpose' or 'dagger/g+p+r+'");
    cmd->add_option("--samples", o.samples, "sample count per suite");
    cmd->add_option("--lattice", o.lattice, "lattice as nt,nx,ny,nz,h");
    cmd->add_flag("--json", o.json_stdout, "echo machine-readable JSON to stdout");
}

SuiteConfig make_config(const CommonOpts& o) {
    SuiteConfig cfg;
    cfg.seed = o.seed;
    cfg.samples = o.samples;
    if (!o.convention.empty()) cfg.convention = convention_from_string(o.convention);
    if (!o.lattice.empty()) {
        std::array<int, 4> ext{};
        double h = 0.0;
        if (std::sscanf(o.lattice.c_str(), "%d,%d,%d,%d,%lf", &ext[0], &ext[1], &ext[2], &ext[3],
                        &h) != 5 ||
            h <= 0.0 || ext[0] <= 0 || ext[1] <= 0 || ext[2] <= 0 || ext[3] <= 0)
            throw CLI::ValidationError("--lattice", "expected nt,nx,ny,nz,h with positive entries");
        cfg.lattice_extents = ext;
        cfg.lattice_spacing = h;
    }
    return cfg;
}

void write_file(const fs::path& path, const std::string& text) {
    fs::create_directories(path.parent_path().empty() ? fs::path(".") : path.parent_path());
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path.string());
    os << text;
}

/// Wall-clock metadata lives in its own file so every report stays
/// byte-deterministic for a fixed config and seed.
void write_run_meta(const fs::path& dir, const std::string& command) {
    const auto now = std::chrono::system_clock::now();
    const auto t = std::chrono::system_clock::to_time_t(now);
    ordered_json j;
    j["command"] = command;
    char buf[64];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    j["timestamp"] = buf;
    write_file(dir / "run_meta.json", j.dump(2) + "\n");
}

int cmd_verify(const std::vector<std::string>& suites, const CommonOpts& o) {
    std::vector<std::string> to_run = suites.empty() ? suite_names() : suites;
    for (const auto& name : to_run) {
        if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
            std::cerr << "unknown suite: " << name << "\n";
            return kExitUsage;
        }
    }
    const SuiteConfig cfg = make_config(o);
    std::vector<SuiteResult> results;
    bool all_pass = true;
    for (const auto& name : to_run) {
        SuiteResult r = run_suite(name, cfg);
        all_pass = all_pass && r.pass;
        const std::string json = suite_json(r);
        write_file(fs::path(o.out_dir) / ("suite_" + name + ".json"), json + "\n");
        if (o.json_stdout) std::cout << json << "\n";
        std::cout << (r.pass ? "[pass] " : "[FAIL] ") << name << "\n";
        results.push_back(std::move(r));
    }
    write_file(fs::path(o.out_dir) / "summary.md", summary_markdown(results));
    write_run_meta(o.out_dir, "verify");
    return all_pass ? kExitPass : kExitFail;
}

int cmd_spectrum(const std::vector<double>& coeffs, const CommonOpts& o) {
    for (double v : coeffs)
        if (!std::isfinite(v)) {
            std::cerr << "coefficients must be finite\n";
            return kExitUsage;
        }
    const Biquaternion e{{coeffs[0], coeffs[1]},
                         {coeffs[2], coeffs[3]},
                         {coeffs[4], coeffs[5]},
                         {coeffs[6], coeffs[7]}};
    const MassSpectrum s = mass_spectrum(e);
    ordered_json j;
    j["schema"] = "v1";
    j["kind"] = "spectrum";
    j["masses"] = {s.m1, s.m2};
    j["eigenvalues"] = {s.eigenvalues[0], s.eigenvalues[1]};
    j["classification"] = to_string(s.classification);
    if (o.json_stdout)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << "masses: " << s.m1 << " " << s.m2 << "\nclassification: "
                  << to_string(s.classification) << "\n";
    return kExitPass;
}

int cmd_audit(const CommonOpts& o) {
    const AuditReport report = run_audit(o.seed);
    const std::string json = audit_report_json(report);
    write_file(fs::path(o.out_dir) / "audit.json", json + "\n");
    write_run_meta(o.out_dir, "audit");
    if (o.json_stdout) std::cout << json << "\n";
    std::cout << (report.partial ? "PARTIAL: no assignment passes every claim"
                                 : "selected convention: " + to_string(*report.selected))
              << "\n";
    return report.partial ? kExitFail : kExitPass;
}

struct PetiauOpts {
    std::string k = "1,0,0,0";
    double coupling = 1.0;
    double amplitude = 0.6;
    double step = 0.01;
    double span = 120.0;
    bool zero_init = false;
};

int cmd_petiau(const PetiauOpts& p, const CommonOpts& o) {
    WaveVector k;
    if (std::sscanf(p.k.c_str(), "%lf,%lf,%lf,%lf", &k.omega, &k.p[0], &k.p[1], &k.p[2]) != 4)
        throw CLI::ValidationError("--k", "expected w,px,py,pz");
    const ReducedSystem sys(k, p.coupling);

    Rng rng(o.seed, "petiau");
    PhaseReducedState init;
    if (!p.zero_init) {
        init.A = p.amplitude * rng.biquaternion();
        init.B = p.amplitude * rng.biquaternion();
        init.E = Biquaternion::one() + 0.5 * p.amplitude * rng.biquaternion();
    }
    const TrajectoryRecord t = integrate(sys, init, p.span, p.step);

    std::ostringstream csv;
    csv.precision(17);
    csv << "s";
    const char* names[3] = {"A", "B", "E"};
    const char* comps[8] = {"w_re", "w_im", "x_re", "x_im", "y_re", "y_im", "z_re", "z_im"};
    for (const char* n : names)
        for (const char* cc : comps) csv << "," << n << "_" << cc;
    csv << "\n";
    for (std::size_t i = 0; i < t.s.size(); ++i) {
        csv << t.s[i];
        for (double v : t.states[i]) csv << "," << v;
        csv << "\n";
    }
    write_file(fs::path(o.out_dir) / "trajectory.csv", csv.str());

    ordered_json j;
    j["schema"] = "v1";
    j["kind"] = "petiau";
    j["seed"] = o.seed;
    j["coupling"] = p.coupling;
    j["step"] = p.step;
    j["span"] = p.span;
    j["divergent"] = t.divergent;
    j["step_halving_error"] = t.step_halving_error;
    auto period_json = [](const std::optional<PeriodEstimate>& pe) -> ordered_json {
        if (!pe) return nullptr;
        return {{"period", pe->period}, {"confidence", pe->confidence}};
    };
    j["period1"] = period_json(t.period1);
    j["period2"] = period_json(t.period2);
    write_file(fs::path(o.out_dir) / "petiau.json", j.dump(2) + "\n");
    write_run_meta(o.out_dir, "petiau");
    if (o.json_stdout) std::cout << j.dump(2) << "\n";
    return kExitPass;
}

int cmd_report(const std::string& dir) {
    if (!fs::is_directory(dir)) {
        std::cerr << "no such directory: " << dir << "\n";
        return kExitUsage;
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".json" && entry.path().filename() != "run_meta.json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        std::cerr << "no prior JSON outputs in " << dir << "\n";
        return kExitUsage;
    }
    std::ostringstream md;
    md << "# Aggregated verification report\n\n";
    for (const auto& f : files) {
        std::ifstream is(f);
        ordered_json j;
        try {
            is >> j;
        } catch (const std::exception& ex) {
            std::cerr << "corrupt JSON in " << f.string() << ": " << ex.what() << "\n";
            return kExitUsage;
        }
        const std::string kind = j.value("kind", "?");
        md << "## " << f.filename().string() << " (" << kind << ")\n\n";
        if (kind == "suite") {
            md << "- suite: " << j.value("suite", "?") << ", pass: " << j.value("pass", false)
               << "\n";
            for (const auto& c : j["checks"])
                md << "  - " << c.value("name", "?") << ": " << c["value"].dump() << " "
                   << c.value("comparison", "<=") << " " << c["tolerance"].dump() << " => "
                   << (c.value("pass", false) ? "ok" : "FAIL") << "\n";
        } else if (kind == "audit") {
            md << "- selected: " << j.value("selected", "") << ", partial: "
               << j.value("partial", false) << "\n";
            int pass = 0, fail = 0, indet = 0;
            for (const auto& cell : j["cells"]) {
                const std::string v = cell.value("verdict", "");
                if (v == "pass") ++pass;
                else if (v == "fail") ++fail;
                else ++indet;
            }
            md << "- cells: " << pass << " pass, " << fail << " fail, " << indet
               << " indeterminate\n";
        } else if (kind == "petiau") {
            md << "- divergent: " << j.value("divergent", false) << "\n";
            if (!j["period1"].is_null()) md << "- period1: " << j["period1"].dump() << "\n";
            if (!j["period2"].is_null()) md << "- period2: " << j["period2"].dump() << "\n";
        } else if (kind == "spectrum") {
            md << "- masses: " << j["masses"].dump() << " (" << j.value("classification", "")
               << ")\n";
        }
        md << "\n";
    }
    write_file(fs::path(dir) / "report.md", md.str());
    std::cout << "wrote " << (fs::path(dir) / "report.md").string() << "\n";
    return kExitPass;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"biquaternion field-equation verification harness"};
    app.set_config("--config", "", "flat key=value config file; command-line flags win");
    app.require_subcommand(1);

    CommonOpts common;

    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::vector<std::string> suites;
    verify->add_option("suites", suites, "suite names (default: all)");
    add_common(verify, common);

    auto* spectrum = app.add_subcommand("spectrum", "mass spectrum of a coupling E");
    std::vector<double> coeffs;
    spectrum->add_option("coefficients", coeffs,
                         "8 reals: re/im pairs of the coefficients of 1, e1, e2, e3")
        ->expected(8);
    add_common(spectrum, common);

    auto* audit = app.add_subcommand("audit", "exhaustive convention audit");
    add_common(audit, common);

    auto* petiau = app.add_subcommand("petiau", "integrate the phase-reduced coupled system");
    PetiauOpts popts;
    petiau->add_option("--k", popts.k, "timelike unit wave vector w,px,py,pz");
    petiau->add_option("--coupling", popts.coupling, "derivative-coupling strength");
    petiau->add_option("--amplitude", popts.amplitude, "initial amplitude scale");
    petiau->add_option("--step", popts.step, "integration step");
    petiau->add_option("--span", popts.span, "phase span");
    petiau->add_flag("--zero-init", popts.zero_init, "start from the zero state");
    add_common(petiau, common);

    auto* report = app.add_subcommand("report", "aggregate prior JSON outputs into markdown");
    std::string report_dir = "out";
    report->add_option("dir", report_dir, "directory holding earlier outputs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(suites, common);
        if (spectrum->parsed()) return cmd_spectrum(coeffs, common);
        if (audit->parsed()) return cmd_audit(common);
        if (petiau->parsed()) return cmd_petiau(popts, common);
        if (report->parsed()) return cmd_report(report_dir);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}

}  // namespace biquat
