// Benchmark comparing the parallel kernels against their serial reference
// implementations, verifying that both produce identical results.
#include <chrono>
#include <cstdlib>
#include <iostream>

#include "hb/algebra.hpp"
#include "hb/eyb.hpp"
#include "hb/singular.hpp"
#include "hb/tensor.hpp"
#include "hb/trace.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace hb;
using clk = std::chrono::steady_clock;

static double secs(clk::time_point t0) {
    return std::chrono::duration<double>(clk::now() - t0).count();
}

int main(int argc, char** argv) {
    const int scale = argc > 1 ? std::atoi(argv[1]) : 1;
#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (built without OpenMP)\n";
#endif

    // Distribution expansion: 2^bands terms, each a braid word in the group
    // algebra with canonically hashed keys.
    {
        const int bands = 9 + scale;
        SingularWord s{1, 4, {}};
        for (int i = 0; i < bands; ++i) {
            s.letters.push_back(sband(1 + i % 3));
            s.letters.push_back(ssigma(1 + (i + 1) % 3, i % 2 ? 1 : -1));
            if (i % 4 == 0) s.letters.push_back(stau(1, 1));
        }
        auto t0 = clk::now();
        AlgebraElement ref = expand_reference(s);
        const double t_ref = secs(t0);
        t0 = clk::now();
        AlgebraElement par = expand_parallel(s);
        const double t_par = secs(t0);
        std::cout << "expand, " << bands << " double points (" << (1 << bands) << " terms):\n"
                  << "  serial reference: " << t_ref << "s\n"
                  << "  parallel:         " << t_par << "s  (speedup " << t_ref / t_par << "x)\n";
        if (!(ref == par)) {
            std::cerr << "MISMATCH between expansion kernels\n";
            return 1;
        }
    }

    // Weighted tensor trace: parallel over the 2^m state columns.
    {
        const EYBOperator& op = builtin_operator();
        BraidWord w = random_handlebody_word(0, 8 + scale, 40, 7u);
        auto t0 = clk::now();
        const LaurentPoly ref = weighted_trace_reference(w, op);
        const double t_ref = secs(t0);
        t0 = clk::now();
        const LaurentPoly par = weighted_trace(w, op);
        const double t_par = secs(t0);
        std::cout << "weighted trace, " << w.strands << " strands, " << w.letters.size()
                  << " letters (dim " << (1 << w.strands) << "):\n"
                  << "  serial reference: " << t_ref << "s\n"
                  << "  parallel:         " << t_par << "s  (speedup " << t_ref / t_par << "x)\n";
        if (!(ref == par)) {
            std::cerr << "MISMATCH between trace kernels\n";
            return 1;
        }
    }

    std::cout << "kernels agree\n";
    return 0;
}
