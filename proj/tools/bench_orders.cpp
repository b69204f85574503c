// Benchmark comparing the serial order enumeration against the
// OpenMP-partitioned one, on cycle-graph filtrations where the oracle has
// real work to do.

#include "tsr/rigidity.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace tsr;

namespace {

filtration cycle_graph(int m) {
    std::vector<simplex> simplices;
    std::map<simplex, rat> values;
    for (int v = 0; v < m; ++v) {
        simplices.push_back(simplex{v});
        values[simplex{v}] = v;
    }
    for (int v = 0; v + 1 < m; ++v) {
        simplices.push_back(simplex{v, v + 1});
        values[simplex{v, v + 1}] = m + v;
    }
    simplices.push_back(simplex{0, m - 1});
    values[simplex{0, m - 1}] = 2 * m - 1;
    auto K = std::make_shared<simplicial_complex>(simplicial_complex::from_simplices(simplices));
    return validate_filtration(std::move(K), values);
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

} // namespace

int main(int argc, char** argv) {
    const int m = argc > 1 ? std::stoi(argv[1]) : 6;
    const std::uint64_t cap = argc > 2 ? std::stoull(argv[2]) : 50000000ull;
    filtration f = cycle_graph(m);
    // just above the largest threshold inside D for [1]-[0]
    const rat eps = rat(m, 2) + rat(1, 4);
    const field_spec F(2);
    const chain alpha = parse_cycle(f.complex(), F, "[1] - [0]");

    std::printf("cycle graph C_%d: %d simplices, epsilon = %s\n", m, f.size(),
                format_rational(eps).c_str());

    int max_threads = 2;
#ifdef _OPENMP
    max_threads = omp_get_max_threads();
#endif

    // count-only enumeration: serial reference vs partitioned subtrees
    auto t0 = std::chrono::steady_clock::now();
    std::uint64_t count = for_each_realizable_order(f, eps, cap, nullptr);
    const double serial_count = ms_since(t0);
    std::printf("%-30s %12llu orders %10.1f ms\n", "count (serial)",
                static_cast<unsigned long long>(count), serial_count);

    t0 = std::chrono::steady_clock::now();
    auto prefixes = enumeration_prefixes(f, eps, max_threads * 8);
    std::vector<std::uint64_t> per_prefix(prefixes.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(prefixes.size()); ++i)
        per_prefix[i] =
            enumerate_below_prefix(f, eps, prefixes[i], [](const std::vector<int>&) {
                return true;
            });
    std::uint64_t par_count = 0;
    for (std::uint64_t c : per_prefix) par_count += c;
    const double parallel_count = ms_since(t0);
    std::printf("count (%d threads)              %12llu orders %10.1f ms  speedup %.2fx\n",
                max_threads, static_cast<unsigned long long>(par_count), parallel_count,
                serial_count / parallel_count);
    if (par_count != count) {
        std::printf("MISMATCH between serial and partitioned counts\n");
        return 1;
    }

    // materializing enumeration
    t0 = std::chrono::steady_clock::now();
    auto serial_orders = realizable_orders(f, eps, cap, 1);
    const double serial_mat = ms_since(t0);
    std::printf("%-30s %12zu orders %10.1f ms\n", "materialize (serial)",
                serial_orders.size(), serial_mat);

    t0 = std::chrono::steady_clock::now();
    auto parallel_orders = realizable_orders(f, eps, cap, max_threads);
    const double parallel_mat = ms_since(t0);
    std::printf("materialize (%d threads)        %12zu orders %10.1f ms  speedup %.2fx\n",
                max_threads, parallel_orders.size(), parallel_mat, serial_mat / parallel_mat);
    if (parallel_orders != serial_orders) {
        std::printf("MISMATCH between serial and parallel order lists\n");
        return 1;
    }

    t0 = std::chrono::steady_clock::now();
    auto s1 = sigma_epsilon(f, alpha, F, eps, cap, 1);
    const double sigma_serial = ms_since(t0);
    std::printf("%-28s %12zu members %9.1f ms\n", "sigma (serial)", s1.members.size(),
                sigma_serial);

    t0 = std::chrono::steady_clock::now();
    auto s2 = sigma_epsilon(f, alpha, F, eps, cap, max_threads);
    const double sigma_par = ms_since(t0);
    std::printf("sigma (%d threads)            %12zu members %9.1f ms  speedup %.2fx\n",
                max_threads, s2.members.size(), sigma_par, sigma_serial / sigma_par);

    if (s1.members != s2.members || s1.orders_examined != s2.orders_examined) {
        std::printf("MISMATCH between serial and parallel sigma\n");
        return 1;
    }
    return 0;
}
