// dubseq: generate waypoint instances, solve them, compute bounds, and run
// the ratio benchmark.
//
// Exit codes: 0 success, 1 invalid input or failed solve, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dubseq/dubseq.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw dubseq::Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw dubseq::Error("cannot write " + path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Curvature-constrained paths through ordered waypoints"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a random instance");
    std::size_t gen_n = 0;
    double gen_rho = 100.0;
    std::uint64_t gen_seed = 0;
    std::optional<double> gen_extent;
    std::string gen_out;
    gen->add_option("--n", gen_n, "Number of waypoints")->required()->check(CLI::Range(3, 1'000'000));
    gen->add_option("--rho", gen_rho, "Minimum turning radius")->check(CLI::PositiveNumber);
    gen->add_option("--seed", gen_seed, "Random seed");
    gen->add_option("--extent", gen_extent, "Side of the square sampling window (default 10*rho*sqrt(n))");
    gen->add_option("-o", gen_out, "Output file (default stdout)");

    // solve
    auto* solve = app.add_subcommand("solve", "Solve an instance");
    std::string solve_in, solve_out, solve_svg;
    double solve_eps = 1e-4;
    std::size_t solve_intervals = 32;
    solve->add_option("instance", solve_in, "Instance JSON file")->required();
    solve->add_option("--eps", solve_eps, "Relative accuracy of the three-point solver")->check(CLI::PositiveNumber);
    solve->add_option("--intervals", solve_intervals, "Heading intervals for the grid bounds")
        ->check(CLI::Range(2, 4096));
    solve->add_option("-o", solve_out, "Solution JSON output (default stdout)");
    solve->add_option("--svg", solve_svg, "Write an SVG of the three candidates");

    // lb
    auto* lb = app.add_subcommand("lb", "Compute lower bounds and the grid witness");
    std::string lb_in, lb_out;
    std::size_t lb_intervals = 32;
    lb->add_option("instance", lb_in, "Instance JSON file")->required();
    lb->add_option("--intervals", lb_intervals, "Heading intervals per waypoint")->check(CLI::Range(2, 4096));
    lb->add_option("-o", lb_out, "Output file (default stdout)");

    // bench
    auto* bench = app.add_subcommand("bench", "Ratio benchmark over random instances");
    dubseq::BenchConfig cfg;
    std::string bench_csv;
    bool no_timing = false;
    bench->add_option("--sizes", cfg.sizes, "Instance sizes")->delimiter(',');
    bench->add_option("--count", cfg.count, "Instances per size")->check(CLI::PositiveNumber);
    bench->add_option("--rho", cfg.rho, "Minimum turning radius")->check(CLI::PositiveNumber);
    bench->add_option("--eps", cfg.eps, "Three-point solver accuracy")->check(CLI::PositiveNumber);
    bench->add_option("--intervals", cfg.intervals, "Heading intervals for the proxy bound")
        ->check(CLI::Range(2, 4096));
    bench->add_option("--seed", cfg.seed, "Master seed");
    bench->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
    bench->add_flag("--no-timing", no_timing, "Write NA for runtimes (byte-reproducible output)");
    bench->add_option("--csv", bench_csv, "CSV output (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*gen) {
            const double extent = gen_extent.value_or(dubseq::default_extent(gen_n, gen_rho));
            write_output(gen_out, dubseq::write_instance(dubseq::generate(gen_n, gen_rho, extent, gen_seed)));
        } else if (*solve) {
            const auto inst = dubseq::read_instance(read_file(solve_in));
            const auto report = dubseq::solve_sequence(inst, solve_eps, dubseq::HeadingGrid{solve_intervals});
            write_output(solve_out, dubseq::write_solution(report));
            if (!solve_svg.empty())
                write_output(solve_svg, dubseq::render_svg(inst, report.solution.candidates));
        } else if (*lb) {
            const auto inst = dubseq::read_instance(read_file(lb_in));
            write_output(lb_out, dubseq::bounds_json(dubseq::compute_bounds(inst, {lb_intervals})).dump(2) + "\n");
        } else if (*bench) {
            for (std::size_t n : cfg.sizes)
                if (n < 3) throw dubseq::ValidationError("bench: sizes must be at least 3");
            cfg.record_timing = !no_timing;
            write_output(bench_csv, dubseq::bench_csv(cfg, dubseq::run_bench(cfg)));
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const dubseq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
