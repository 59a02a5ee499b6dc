#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cfrechet/curve_io.hpp"
#include "cfrechet/decision.hpp"
#include "cfrechet/rng.hpp"
#include "cfrechet/svg.hpp"
#include "cfrechet/synth.hpp"

namespace {

using cfrechet::ClosedCurve;
using cfrechet::DecideOptions;
using cfrechet::DecisionReport;
using cfrechet::SplitMix64;
using nlohmann::json;

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

// Data goes to stdout unless --out names a file; diagnostics stay on stderr.
void emit(const std::string& out_path, const std::string& data) {
    if (out_path.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open " + out_path + " for writing");
    f << data;
    if (!f) throw std::runtime_error("failed writing " + out_path);
}

int run_decide(const std::string& a, const std::string& b, double eps, bool serial) {
    const ClosedCurve x = cfrechet::read_curve_file(a);
    const ClosedCurve y = cfrechet::read_curve_file(b);
    const auto t0 = std::chrono::steady_clock::now();
    const DecisionReport rep = cfrechet::decide(x, y, eps, DecideOptions{!serial});
    const double ms = elapsed_ms(t0);
    json j{{"answer", rep.answer},   {"m", rep.m},         {"n", rep.n},
           {"pushes", rep.pushes()}, {"pops", rep.pops()}, {"wall_time_ms", ms}};
    j["witness_u"] = rep.witness_u ? json(*rep.witness_u) : json(nullptr);
    std::cout << j.dump(2) << '\n';
    return rep.answer ? 0 : 1;
}

int run_distance(const std::string& a, const std::string& b, double tol, bool serial) {
    const ClosedCurve x = cfrechet::read_curve_file(a);
    const ClosedCurve y = cfrechet::read_curve_file(b);
    const auto r = cfrechet::distance(x, y, tol, DecideOptions{!serial});
    const json j{{"distance", r.value}, {"iterations", r.iterations}};
    std::cout << j.dump(2) << '\n';
    return 0;
}

int run_diagram(const std::string& a, const std::string& b, double eps,
                const std::string& out_path) {
    const ClosedCurve x = cfrechet::read_curve_file(a);
    const ClosedCurve y = cfrechet::read_curve_file(b);
    std::ostringstream svg;
    cfrechet::write_diagram_svg(svg, x, y, eps);
    emit(out_path, svg.str());
    return 0;
}

int run_gen(const std::string& kind, std::size_t m, std::uint64_t seed,
            const std::string& out_path) {
    const ClosedCurve c = cfrechet::synth_curve(kind, m, seed);
    std::ostringstream body;
    cfrechet::write_curve_json(body, c);
    emit(out_path, body.str());
    return 0;
}

struct BenchSize {
    std::size_t m = 0;
    std::size_t n = 0;
};

BenchSize parse_size(const std::string& token) {
    BenchSize s;
    std::size_t xpos = token.find('x');
    std::istringstream in(token.substr(0, xpos));
    if (!(in >> s.m) || !in.eof() || s.m == 0)
        throw std::runtime_error("bad size token \"" + token + "\" (use M or MxN)");
    if (xpos == std::string::npos) {
        s.n = s.m;
    } else {
        std::istringstream in2(token.substr(xpos + 1));
        if (!(in2 >> s.n) || !in2.eof() || s.n == 0)
            throw std::runtime_error("bad size token \"" + token + "\" (use M or MxN)");
    }
    return s;
}

ClosedCurve random_unit_square_curve(std::size_t count, SplitMix64& rng) {
    std::vector<double> coords(2 * count);
    for (double& c : coords) c = rng.uniform01();
    return ClosedCurve(2, std::move(coords));
}

double median_cross_distance(const ClosedCurve& x, const ClosedCurve& y) {
    std::vector<double> d;
    d.reserve(x.size() * y.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            d.push_back(std::sqrt(cfrechet::sq_dist(x.vertex(i), y.vertex(j))));
    const std::size_t mid = (d.size() - 1) / 2;
    std::nth_element(d.begin(), d.begin() + std::ptrdiff_t(mid), d.end());
    return d[mid];
}

struct BenchRow {
    std::size_t m = 0, n = 0, trial = 0;
    double eps = 0.0;
    bool answer = false;
    std::uint64_t pushes_down = 0, pushes_up = 0;
    double push_ratio = 0.0;  // max over the two passes of pushes / 6mn
    std::size_t deque_down = 0, deque_down_bound = 0;
    std::size_t deque_up = 0, deque_up_bound = 0;
    double wall_ms = 0.0;  // reported on the diagnostic stream only
};

int run_bench(const std::vector<std::string>& size_tokens, std::size_t trials,
              std::uint64_t seed, const std::string& format, const std::string& out_path,
              bool serial) {
    std::vector<BenchSize> sizes;
    for (const std::string& t : size_tokens) sizes.push_back(parse_size(t));

    std::vector<BenchRow> rows;
    for (const BenchSize& s : sizes) {
        std::vector<double> times;
        for (std::size_t trial = 0; trial < trials; ++trial) {
            const std::uint64_t stream = SplitMix64::mix(
                SplitMix64::mix(seed, (std::uint64_t(s.m) << 32) | std::uint64_t(s.n)), trial);
            SplitMix64 rng(stream);
            const ClosedCurve x = random_unit_square_curve(s.m, rng);
            const ClosedCurve y = random_unit_square_curve(s.n, rng);
            const double eps = median_cross_distance(x, y);

            const auto t0 = std::chrono::steady_clock::now();
            const DecisionReport rep = cfrechet::decide(x, y, eps, DecideOptions{!serial});
            BenchRow row;
            row.wall_ms = elapsed_ms(t0);
            row.m = s.m;
            row.n = s.n;
            row.trial = trial;
            row.eps = eps;
            row.answer = rep.answer;
            row.pushes_down = rep.forward.pushes;
            row.pushes_up = rep.backward.pushes;
            row.push_ratio = double(std::max(rep.forward.pushes, rep.backward.pushes)) /
                             (6.0 * double(s.m) * double(s.n));
            row.deque_down = rep.forward.max_deque;
            row.deque_down_bound = 2 * s.n + 1;
            row.deque_up = rep.backward.max_deque;
            row.deque_up_bound = 4 * s.m + 1;
            rows.push_back(row);
            times.push_back(row.wall_ms);
        }
        if (!times.empty()) {
            const std::size_t mid = times.size() / 2;
            std::nth_element(times.begin(), times.begin() + std::ptrdiff_t(mid), times.end());
            double worst_ratio = 0.0;
            for (const BenchRow& r : rows)
                if (r.m == s.m && r.n == s.n) worst_ratio = std::max(worst_ratio, r.push_ratio);
            std::fprintf(stderr, "m=%zu n=%zu trials=%zu median_ms=%.3f max_push_ratio=%.4f\n",
                         s.m, s.n, trials, times[mid], worst_ratio);
        }
    }

    // Timings vary run to run, so the data stream carries only the
    // deterministic columns; wall times appear in the stderr table above.
    std::string data;
    if (format == "csv") {
        std::string csv =
            "m,n,trial,eps,answer,pushes_down,pushes_up,push_ratio,"
            "deque_down,deque_down_bound,deque_up,deque_up_bound\n";
        char buf[256];
        for (const BenchRow& r : rows) {
            std::snprintf(buf, sizeof buf, "%zu,%zu,%zu,%.17g,%d,%llu,%llu,%.6f,%zu,%zu,%zu,%zu\n",
                          r.m, r.n, r.trial, r.eps, int(r.answer),
                          (unsigned long long)r.pushes_down, (unsigned long long)r.pushes_up,
                          r.push_ratio, r.deque_down, r.deque_down_bound, r.deque_up,
                          r.deque_up_bound);
            csv += buf;
        }
        data = csv;
    } else if (format == "json") {
        json arr = json::array();
        for (const BenchRow& r : rows)
            arr.push_back(json{{"m", r.m},
                               {"n", r.n},
                               {"trial", r.trial},
                               {"eps", r.eps},
                               {"answer", r.answer},
                               {"pushes_down", r.pushes_down},
                               {"pushes_up", r.pushes_up},
                               {"push_ratio", r.push_ratio},
                               {"deque_down", r.deque_down},
                               {"deque_down_bound", r.deque_down_bound},
                               {"deque_up", r.deque_up},
                               {"deque_up_bound", r.deque_up_bound}});
        data = arr.dump(2) + "\n";
    } else {
        throw std::runtime_error("unknown --format \"" + format + "\" (use csv or json)");
    }
    emit(out_path, data);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frechet similarity of closed polygonal curves"};
    app.require_subcommand(1);

    std::string curve_a, curve_b, out_path, kind, format = "csv";
    double eps = 0.0, tol = 1e-6;
    bool serial = false;
    std::size_t gen_m = 8, trials = 5;
    std::uint64_t seed = 1;
    std::vector<std::string> size_tokens{"16", "32", "64"};
    int status = 0;

    CLI::App* cd = app.add_subcommand("decide", "Is the Frechet distance at most eps?");
    cd->add_option("curve_a", curve_a, "first curve (JSON)")->required();
    cd->add_option("curve_b", curve_b, "second curve (JSON)")->required();
    cd->add_option("--eps", eps, "distance threshold")->required();
    cd->add_flag("--serial", serial, "use the serial grid kernel");
    cd->callback([&] { status = run_decide(curve_a, curve_b, eps, serial); });

    CLI::App* cx = app.add_subcommand("distance", "Frechet distance by bisection");
    cx->add_option("curve_a", curve_a, "first curve (JSON)")->required();
    cx->add_option("curve_b", curve_b, "second curve (JSON)")->required();
    cx->add_option("--tol", tol, "absolute tolerance (default 1e-6)");
    cx->add_flag("--serial", serial, "use the serial grid kernel");
    cx->callback([&] { status = run_distance(curve_a, curve_b, tol, serial); });

    CLI::App* cg = app.add_subcommand("diagram", "Render the free-space diagram as SVG");
    cg->add_option("curve_a", curve_a, "first curve (JSON)")->required();
    cg->add_option("curve_b", curve_b, "second curve (JSON)")->required();
    cg->add_option("--eps", eps, "distance threshold")->required();
    cg->add_option("--out", out_path, "output file (default: stdout)");
    cg->callback([&] { status = run_diagram(curve_a, curve_b, eps, out_path); });

    CLI::App* cb = app.add_subcommand("bench", "Random-instance benchmark of decide");
    cb->add_option("--sizes", size_tokens, "sizes as M or MxN (default 16,32,64)")
        ->delimiter(',');
    cb->add_option("--trials", trials, "trials per size (default 5)");
    cb->add_option("--seed", seed, "base seed (default 1)");
    cb->add_option("--format", format, "data format: csv or json (default csv)");
    cb->add_option("--out", out_path, "data file (default: stdout)");
    cb->add_flag("--serial", serial, "use the serial grid kernel");
    cb->callback(
        [&] { status = run_bench(size_tokens, trials, seed, format, out_path, serial); });

    CLI::App* cn = app.add_subcommand("gen", "Generate a synthetic closed curve");
    cn->add_option("kind", kind, "polygon, star or noisy-circle")->required();
    cn->add_option("--m", gen_m, "vertex count (default 8)");
    cn->add_option("--seed", seed, "seed (default 1)");
    cn->add_option("--out", out_path, "output file (default: stdout)");
    cn->callback([&] { status = run_gen(kind, gen_m, seed, out_path); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return status;
}
