// Benchmark: serial reference sweep vs the OpenMP-partitioned one, plus the
// partitioned generating-vector search. The two paths must produce identical
// results; this target reports wall times and speedups.

#include <chrono>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "affprym/cli.hpp"
#include "affprym/genvec.hpp"
#include "affprym/sweep.hpp"

using namespace affprym;

namespace {

template <typename F>
double time_s(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    int q = argc > 1 ? std::stoi(argv[1]) : 13;
    int max_g = argc > 2 ? std::stoi(argv[2]) : 1;
    int max_s = argc > 3 ? std::stoi(argv[3]) : 4;

#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (built without OpenMP)\n";
#endif

    auto G = cli::group_for_q(q);
    sweep::SweepOptions opt;
    opt.max_g = max_g;
    opt.max_s = max_s;

    sweep::SweepReport serial_report, parallel_report;
    opt.parallel = false;
    double t_serial = time_s([&] { serial_report = sweep::theorem_sweep(G, opt); });
    opt.parallel = true;
    double t_parallel = time_s([&] { parallel_report = sweep::theorem_sweep(G, opt); });

    std::cout << "theorem sweep q=" << q << " (g<=" << max_g << ", s<=" << max_s << ", "
              << serial_report.total << " signatures, " << serial_report.realizable
              << " realizable)\n";
    std::cout << "  serial:   " << t_serial << " s\n";
    std::cout << "  parallel: " << t_parallel << " s  (speedup "
              << (t_parallel > 0 ? t_serial / t_parallel : 0.0) << "x)\n";
    if (!(serial_report == parallel_report)) {
        std::cout << "MISMATCH: parallel sweep differs from the serial reference\n";
        return 1;
    }

    // partitioned search on one chunky signature
    auto sig = prym::parse_signature(G, max_g >= 1 ? "1;" + std::to_string(G.p()) + "," +
                                                         std::to_string(G.q() - 1)
                                                   : "0;");
    genvec::SearchResult rs, rp;
    double s_serial =
        time_s([&] { rs = genvec::find_generating_vector(G, sig, genvec::kDefaultBudget, false); });
    double s_parallel =
        time_s([&] { rp = genvec::find_generating_vector(G, sig, genvec::kDefaultBudget, true); });
    std::cout << "generating-vector search on (" << sig.to_string() << ")\n";
    std::cout << "  serial:   " << s_serial << " s (" << rs.nodes << " nodes)\n";
    std::cout << "  parallel: " << s_parallel << " s\n";
    bool same = rs.status == rp.status;
    if (rs.witness && rp.witness)
        same = same && rs.witness->elliptic == rp.witness->elliptic &&
               rs.witness->hyperbolic == rp.witness->hyperbolic;
    if (!same) {
        std::cout << "MISMATCH: parallel search differs from the serial reference\n";
        return 1;
    }
    std::cout << "parallel results identical to the serial reference\n";
    return 0;
}
