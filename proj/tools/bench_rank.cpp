// Benchmark: streaming restricted-rank kernel, serial reference vs the
// OpenMP-sharded variant, on large cyclic codes.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>

#include "cycemb/cyclic_code.hpp"
#include "cycemb/embed.hpp"

using namespace cycemb;

namespace {

double time_s(auto&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

CoordSet random_coords(uint64_t bound, uint64_t count, std::mt19937_64& rng) {
    std::vector<uint64_t> all(bound);
    for (uint64_t i = 0; i < bound; ++i) all[i] = i + 1;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(count);
    std::sort(all.begin(), all.end());
    return CoordSet::make(std::move(all), bound);
}

} // namespace

int main(int argc, char** argv) {
    const uint64_t multiplier = argc > 1 ? std::stoull(argv[1]) : 4369;

    // g = 1 + X^2 + X^4 + X^5 has order 15, so any odd multiple of 15 is a
    // valid cyclic length for it
    Field f2 = Field::make(2, 1);
    Poly g = Poly::make(f2, {1, 0, 1, 0, 1, 1});
    const uint64_t nprime = 15 * multiplier;
    CyclicCode code = CyclicCode::make(f2, nprime, g);
    std::cout << "cyclic code: n'=" << code.length() << " k'=" << code.dimension() << "\n";

    std::mt19937_64 rng(42);
    for (uint64_t count : {256ull, 4096ull, 16384ull, 65536ull}) {
        if (count > nprime || count > kRestrictedRankGuard) continue;
        CoordSet L = random_coords(nprime, count, rng);
        uint64_t r_serial = 0, r_parallel = 0;
        double t_serial = time_s([&] { r_serial = restricted_rank_serial(code, L); });
        double t_parallel = time_s([&] { r_parallel = restricted_rank_parallel(code, L); });
        std::cout << "|L|=" << count << " rank=" << r_serial
                  << " serial=" << t_serial << "s parallel=" << t_parallel << "s speedup="
                  << (t_parallel > 0 ? t_serial / t_parallel : 0.0) << "x"
                  << (r_serial == r_parallel ? "" : "  MISMATCH") << "\n";
        if (r_serial != r_parallel) return 1;
    }
    return 0;
}
