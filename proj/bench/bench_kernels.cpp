// Wall-clock comparison of the serial reference kernels against the threaded
// ones: polynomial products, elimination determinants, and a norm-table scan.

#include <iomanip>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "binform/appell.hpp"
#include "binform/catalog.hpp"
#include "binform/matrix.hpp"

using namespace binform;

namespace {

double now() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return 0.0;
#endif
}

template <typename Fn>
double time_best_of(int repeats, Fn&& fn) {
    double best = 1e30;
    for (int i = 0; i < repeats; ++i) {
        double t0 = now();
        fn();
        best = std::min(best, now() - t0);
    }
    return best;
}

void report(const std::string& label, double serial, double threaded) {
    std::cout << std::left << std::setw(34) << label << "serial " << std::setw(10) << serial
              << "threaded " << std::setw(10) << threaded << "speedup "
              << (threaded > 0 ? serial / threaded : 0.0) << "\n";
}

Polynomial dense_input(unsigned vars, unsigned power) {
    Polynomial sum;
    for (unsigned i = 0; i <= vars; ++i) {
        sum += Polynomial(Rational(static_cast<long>(i) + 1)) *
               Polynomial::variable(Variable::coefficient(Series::a, i));
        sum += Polynomial::variable(Variable::coefficient(Series::b, i));
    }
    return sum.pow(power);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::cout << "threads available: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without OpenMP; both columns run the serial path\n";
#endif
    std::cout << std::fixed << std::setprecision(4);

    {
        Polynomial lhs = dense_input(6, 4);
        Polynomial rhs = dense_input(6, 4);
        std::cout << "product size: " << lhs.term_count() << " x " << rhs.term_count() << " terms\n";
        Polynomial a, b;
        double serial = time_best_of(3, [&] { a = kernels::multiply_serial(lhs, rhs); });
        double threaded = time_best_of(3, [&] { b = kernels::multiply_parallel(lhs, rhs); });
        if (a != b) {
            std::cerr << "kernel mismatch\n";
            return 1;
        }
        report("multiply (dense 2-series)", serial, threaded);
    }

    for (unsigned n : {4u, 5u}) {
        PolyMatrix m = catalog::sres_matrix(n, Series::a, Series::b);
        Polynomial a, b;
        kernels::set_parallel(false);
        double serial = time_best_of(1, [&] { a = determinant_bareiss(m); });
        kernels::set_parallel(true);
        double threaded = time_best_of(1, [&] { b = determinant_bareiss(m); });
        if (a != b) {
            std::cerr << "determinant mismatch\n";
            return 1;
        }
        report("elimination det n=" + std::to_string(n) + " (" + std::to_string(2 * n) + "x" +
                   std::to_string(2 * n) + ")",
               serial, threaded);
        Polynomial c;
        double block = time_best_of(1, [&] { c = determinant_block_laplace(m, n); });
        if (a != c) {
            std::cerr << "block-Laplace mismatch\n";
            return 1;
        }
        report("  vs block-Laplace (same matrix)", serial, block);
    }

    {
        appell::Assignment h{{Series::a, appell::Family::hermite}};
        std::vector<appell::IdentityReport> rows;
        double serial = time_best_of(1, [&] {
            appell::FamilySet families;
            rows = appell::norm_table("discr", h, 2, 5, 1, families);
        });
        double threaded = time_best_of(1, [&] {
            appell::FamilySet families;
            rows = appell::norm_table("discr", h, 2, 5, 0, families);
        });
        report("discr norm scan, orders 2..5", serial, threaded);
    }
    return 0;
}
