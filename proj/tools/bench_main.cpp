// Benchmark: serial reference versus OpenMP kernels for closure construction
// and exhaustive law checking on a synthetic instance family.

#include <CLI11.hpp>

#include <chrono>
#include <iomanip>
#include <iostream>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rough/ingestion.hpp"
#include "rough/lattice.hpp"

using namespace rough;

namespace {

template <typename Fn>
auto timed(Fn&& fn, double& ms) {
    const auto start = std::chrono::steady_clock::now();
    auto result = fn();
    const auto stop = std::chrono::steady_clock::now();
    ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return result;
}

Instance synthetic_instance(std::size_t universe_size, std::size_t block_count, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<std::string> labels;
    labels.reserve(universe_size);
    for (std::size_t i = 0; i < universe_size; ++i) labels.push_back("u" + std::to_string(i));
    UniversePtr u = Universe::make(labels);

    std::vector<std::size_t> order(universe_size);
    for (std::size_t i = 0; i < universe_size; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    // random cut points, so block sizes vary and the degrees are diverse
    const std::size_t wanted = std::min(block_count, universe_size);
    std::vector<std::size_t> cuts = {0, universe_size};
    std::uniform_int_distribution<std::size_t> pos(1, universe_size - 1);
    while (cuts.size() < wanted + 1) cuts.push_back(pos(rng));
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t b = 0; b + 1 < cuts.size(); ++b)
        blocks.emplace_back(order.begin() + cuts[b], order.begin() + cuts[b + 1]);
    Partition partition = Partition::of_index_blocks(u, std::move(blocks));

    Bitset bits(universe_size);
    std::uniform_int_distribution<int> coin(0, 1);
    for (std::size_t i = 0; i < universe_size; ++i)
        if (coin(rng)) bits.set(i);
    Subset target(u, std::move(bits));
    return Instance{u, std::move(partition), std::move(target), std::nullopt};
}

// Evenly thinned grid so the closure stays at the requested scale.
BetaGrid capped_grid(const Partition& partition, const Subset& target, std::size_t cap) {
    const ThresholdProfile profile = thresholds(partition, target);
    std::vector<Precision> values;
    values.push_back(Precision::zero());
    if (!profile.critical.empty() && cap > 1) {
        const std::size_t take = std::min(cap - 1, profile.critical.size());
        for (std::size_t i = 0; i < take; ++i) {
            const std::size_t idx = i * (profile.critical.size() - 1) / std::max<std::size_t>(take - 1, 1);
            values.push_back(Precision(profile.critical[idx]));
        }
    }
    return BetaGrid::of(std::move(values));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP benchmark for closure and law-check kernels"};
    std::size_t universe_size = 1500;
    std::size_t block_count = 300;
    std::size_t grid_cap = 14;
    unsigned seed = 1;
    bool quick = false;
    app.add_option("--universe", universe_size, "universe size");
    app.add_option("--blocks", block_count, "number of blocks");
    app.add_option("--grid-cap", grid_cap, "max grid points (closure grows quadratically)");
    app.add_option("--seed", seed, "rng seed");
    app.add_flag("--quick", quick, "small sizes for smoke testing");
    CLI11_PARSE(app, argc, argv);

    if (quick) {
        universe_size = 120;
        block_count = 24;
        grid_cap = 6;
    }

    const Instance inst = synthetic_instance(universe_size, block_count, seed);
    const BetaGrid grid = capped_grid(inst.partition, inst.target, grid_cap);
    const std::vector<LatticeElement> fam = family(inst.partition, inst.target, grid);

    std::cout << "universe " << universe_size << ", blocks " << inst.partition.block_count()
              << ", grid " << grid.size() << ", family " << fam.size() << "\n";
#ifdef _OPENMP
    std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "openmp: disabled at build time (parallel calls run serially)\n";
#endif

    double serial_closure_ms = 0, parallel_closure_ms = 0;
    const auto closed_serial = timed([&] { return closure_serial(fam); }, serial_closure_ms);
    const auto closed_parallel = timed([&] { return closure(fam); }, parallel_closure_ms);

    bool same = closed_serial.size() == closed_parallel.size();
    for (std::size_t i = 0; same && i < closed_serial.size(); ++i)
        same = equal(closed_serial[i], closed_parallel[i]);
    if (!same) {
        std::cerr << "MISMATCH: serial and parallel closures differ\n";
        return 1;
    }

    double serial_laws_ms = 0, parallel_laws_ms = 0;
    const LawReport serial_report =
        timed([&] { return check_laws_serial(closed_serial); }, serial_laws_ms);
    const LawReport parallel_report =
        timed([&] { return check_laws(closed_serial); }, parallel_laws_ms);

    bool reports_agree = serial_report.closed == parallel_report.closed &&
                         serial_report.laws.size() == parallel_report.laws.size();
    for (std::size_t i = 0; reports_agree && i < serial_report.laws.size(); ++i)
        reports_agree = serial_report.laws[i].second.holds == parallel_report.laws[i].second.holds;
    if (!reports_agree || !serial_report.all_hold()) {
        std::cerr << "MISMATCH: law reports differ or laws failed\n";
        return 1;
    }

    const auto row = [](const char* name, std::size_t n, double serial_ms, double parallel_ms) {
        std::cout << std::left << std::setw(12) << name << " n=" << std::setw(6) << n
                  << " serial " << std::right << std::setw(10) << std::fixed
                  << std::setprecision(2) << serial_ms << " ms   parallel " << std::setw(10)
                  << parallel_ms << " ms   speedup " << std::setprecision(2)
                  << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << "x\n";
    };
    row("closure", closed_serial.size(), serial_closure_ms, parallel_closure_ms);
    row("check_laws", closed_serial.size(), serial_laws_ms, parallel_laws_ms);
    std::cout << "checked triples: " << serial_report.checked_triples << ", all laws hold\n";
    return 0;
}
