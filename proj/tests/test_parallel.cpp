#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binform/appell.hpp"
#include "binform/catalog.hpp"
#include "binform/matrix.hpp"
#include "test_support.hpp"

using namespace binform;
using test::P;

namespace {
Polynomial dense_product_input(unsigned vars, unsigned power) {
    Polynomial sum;
    for (unsigned i = 0; i <= vars; ++i)
        sum += Polynomial(Rational(static_cast<long>(i) + 1)) *
               Polynomial::variable(Variable::coefficient(Series::a, i)) +
               Polynomial::variable(Variable::coefficient(Series::b, i));
    return sum.pow(power);
}
}  // namespace

TEST_CASE("threaded multiplication matches the serial reference") {
    test::RandomPolys gen(13, test::coeff_pool(Series::a, 6));
    for (int i = 0; i < 20; ++i) {
        Polynomial p = gen.next(6, 4), q = gen.next(6, 4);
        CHECK(kernels::multiply_parallel(p, q) == kernels::multiply_serial(p, q));
    }
    Polynomial big1 = dense_product_input(5, 4);
    Polynomial big2 = dense_product_input(5, 3);
    REQUIRE(big1.term_count() > 200);
    CHECK(kernels::multiply_parallel(big1, big2) == kernels::multiply_serial(big1, big2));
    CHECK(kernels::multiply_parallel(big1, Polynomial()).is_zero());
}

TEST_CASE("the dispatching product is unaffected by the parallel switch") {
    Polynomial big1 = dense_product_input(4, 4);
    Polynomial big2 = dense_product_input(4, 4);
    kernels::set_parallel(false);
    Polynomial serial = big1 * big2;
    kernels::set_parallel(true);
    Polynomial threaded = big1 * big2;
    CHECK(serial == threaded);
    CHECK(format_polynomial(serial) == format_polynomial(threaded));
}

TEST_CASE("elimination determinant is schedule independent") {
    Polynomial with_threads, without_threads;
    {
        kernels::set_parallel(true);
        with_threads = determinant_bareiss(catalog::discr_matrix(4, Series::a));
    }
    {
        kernels::set_parallel(false);
        without_threads = determinant_bareiss(catalog::discr_matrix(4, Series::a));
        kernels::set_parallel(true);
    }
    CHECK(with_threads == without_threads);
    CHECK(with_threads == *catalog::discr(4, Series::a).raw_determinant);
}

TEST_CASE("norm tables are byte-identical across job counts") {
    appell::Assignment be{{Series::a, appell::Family::bernoulli}, {Series::b, appell::Family::euler}};
    auto render = [&](unsigned jobs) {
        appell::FamilySet families;
        auto rows = appell::norm_table("dv2", be, 1, 10, jobs, families);
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) arr.push_back(r.to_json());
        return arr.dump(2);
    };
    std::string one = render(1);
    CHECK(one == render(2));
    CHECK(one == render(4));
    CHECK(one == render(0));  // all cores

    appell::Assignment h{{Series::a, appell::Family::hermite}};
    auto scan_tr = [&](unsigned jobs) {
        appell::FamilySet families;
        auto rows = appell::norm_table("tr", h, 3, 8, jobs, families);
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) arr.push_back(r.to_json());
        return arr.dump(2);
    };
    CHECK(scan_tr(1) == scan_tr(4));
}
