#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include <fpoisson/freemoments.hpp>
#include <fpoisson/rng.hpp>

#include "oracles.hpp"

using namespace fpoisson;

namespace {

// Independent route: enumerate all partitions by insertion, filter by the
// literal crossing definition, accumulate block-size products.
double oracle_free_moment(int p, const std::vector<double>& a) {
    double sum = 0.0;
    for (const auto& blocks : oracles::insertion_partitions(p)) {
        if (!oracles::definition_is_noncrossing(blocks)) continue;
        double prod = 1.0;
        for (const auto& block : blocks) prod *= a[block.size() - 1];
        sum += prod;
    }
    return sum;
}

double oracle_classical_moment(int p, const std::vector<double>& a) {
    double sum = 0.0;
    for (const auto& blocks : oracles::insertion_partitions(p)) {
        double prod = 1.0;
        for (const auto& block : blocks) prod *= a[block.size() - 1];
        sum += prod;
    }
    return sum;
}

} // namespace

TEST_CASE("free moments: spot values") {
    CHECK(free_moment(2, CumulantSequence{{1, 1}}) == doctest::Approx(2.0));
    CHECK(free_moment(4, CumulantSequence{{1, 1, 1, 1}}) == doctest::Approx(14.0));
    CHECK(free_moment(4, CumulantSequence{{1, 0, 0, 0}}) == doctest::Approx(1.0));
}

TEST_CASE("free moments match the brute-force oracle") {
    // a_k = 2^k: oracle gives (2, 8, 40, 224).
    const std::vector<double> powers{2, 4, 8, 16};
    CHECK(oracle_free_moment(1, powers) == doctest::Approx(2.0));
    CHECK(oracle_free_moment(2, powers) == doctest::Approx(8.0));
    CHECK(oracle_free_moment(3, powers) == doctest::Approx(40.0));
    CHECK(oracle_free_moment(4, powers) == doctest::Approx(224.0));
    const auto batch = free_moments_up_to(4, CumulantSequence{powers});
    CHECK(batch.at(1) == doctest::Approx(2.0));
    CHECK(batch.at(2) == doctest::Approx(8.0));
    CHECK(batch.at(3) == doctest::Approx(40.0));
    CHECK(batch.at(4) == doctest::Approx(224.0));

    Rng rng(2024);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<double> a(8);
        for (auto& v : a) v = 4.0 * rng.uniform01() - 2.0;
        for (int p = 1; p <= 8; ++p)
            CHECK(free_moment(p, CumulantSequence{a}) ==
                  doctest::Approx(oracle_free_moment(p, a)).epsilon(1e-12));
    }
}

TEST_CASE("batch form") {
    const auto catalans = free_moments_up_to(3, CumulantSequence{{1, 1, 1}});
    CHECK(catalans.values == std::vector<double>{1, 2, 5});
    const double c = 1.7;
    const auto singleton = free_moments_up_to(3, CumulantSequence{{c, 0, 0}});
    CHECK(singleton.at(1) == doctest::Approx(c));
    CHECK(singleton.at(2) == doctest::Approx(c * c));
    CHECK(singleton.at(3) == doctest::Approx(c * c * c));
}

TEST_CASE("classical moments") {
    CHECK(classical_moment(4, CumulantSequence{{1, 1, 1, 1}}) == doctest::Approx(15.0));
    CHECK(classical_moment(2, CumulantSequence{{1, 1}}) == doctest::Approx(2.0));
    // p=3, a=(1,2,3): one block 3, three pair partitions 2*1 each, singletons 1.
    CHECK(classical_moment(3, CumulantSequence{{1, 2, 3}}) == doctest::Approx(10.0));
    CHECK(oracle_classical_moment(3, {1, 2, 3}) == doctest::Approx(10.0));
    Rng rng(77);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<double> a(6);
        for (auto& v : a) v = 4.0 * rng.uniform01() - 2.0;
        for (int p = 1; p <= 6; ++p)
            CHECK(classical_moment(p, CumulantSequence{a}) ==
                  doctest::Approx(oracle_classical_moment(p, a)).epsilon(1e-12));
    }
}

TEST_CASE("all-ones cumulants give Catalan and Bell moments") {
    CumulantSequence ones{std::vector<double>(12, 1.0)};
    for (int p = 1; p <= 12; ++p)
        CHECK(free_moment(p, ones) ==
              doctest::Approx(static_cast<double>(catalan_number(p))).epsilon(1e-12));
    for (int p = 1; p <= 10; ++p)
        CHECK(classical_moment(p, ones) ==
              doctest::Approx(static_cast<double>(bell_number(p))).epsilon(1e-12));
}

TEST_CASE("homogeneity: a_k -> c^k a_k scales moment p by c^p") {
    Rng rng(5150);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<double> a(8);
        std::vector<double> magnitudes(8);
        for (std::size_t k = 0; k < a.size(); ++k) {
            a[k] = 4.0 * rng.uniform01() - 2.0;
            magnitudes[k] = std::abs(a[k]);
        }
        const double c = 0.25 + 2.0 * rng.uniform01();
        std::vector<double> scaled(8);
        double power = 1.0;
        for (int k = 1; k <= 8; ++k) {
            power *= c;
            scaled[k - 1] = power * a[k - 1];
        }
        for (int p = 1; p <= 8; ++p) {
            const double factor = std::pow(c, p);
            // 1e-12 relative to the summand mass; signed sums can cancel far
            // below the size of their terms.
            const double free_mass =
                factor * free_moment(p, CumulantSequence{magnitudes}) + 1.0;
            const double classical_mass =
                factor * classical_moment(p, CumulantSequence{magnitudes}) + 1.0;
            CHECK(std::abs(free_moment(p, CumulantSequence{scaled}) -
                           factor * free_moment(p, CumulantSequence{a})) <=
                  1e-12 * free_mass);
            CHECK(std::abs(classical_moment(p, CumulantSequence{scaled}) -
                           factor * classical_moment(p, CumulantSequence{a})) <=
                  1e-12 * classical_mass);
        }
    }
}

TEST_CASE("free <= classical for nonnegative cumulants") {
    Rng rng(99);
    for (int rep = 0; rep < 30; ++rep) {
        std::vector<double> a(10);
        for (auto& v : a) v = 2.0 * rng.uniform01();
        for (int p = 1; p <= 10; ++p)
            CHECK(free_moment(p, CumulantSequence{a}) <= classical_moment(p, CumulantSequence{a}) + 1e-12);
    }
}

TEST_CASE("cumulants from moments: spot inverses") {
    const auto catalan_inverse = free_cumulants_from_moments(MomentSequence{{1, 2, 5, 14}});
    for (double v : catalan_inverse.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
    const double c = -0.6;
    const auto singleton_inverse = free_cumulants_from_moments(MomentSequence{{c, c * c, c * c * c}});
    CHECK(singleton_inverse.at(1) == doctest::Approx(c));
    CHECK(singleton_inverse.at(2) == doctest::Approx(0.0));
    CHECK(singleton_inverse.at(3) == doctest::Approx(0.0));
}

TEST_CASE("round-trip: moments -> cumulants -> moments, 1000 random sequences") {
    Rng rng(31337);
    for (int rep = 0; rep < 1000; ++rep) {
        const int order = 1 + static_cast<int>(rng.below(8));
        std::vector<double> a(static_cast<std::size_t>(order));
        for (auto& v : a) v = 4.0 * rng.uniform01() - 2.0;
        const auto moments = free_moments_up_to(order, CumulantSequence{a});
        const auto recovered = free_cumulants_from_moments(moments);
        REQUIRE(recovered.max_order() == order);
        for (int k = 1; k <= order; ++k)
            CHECK(std::abs(recovered.at(k) - a[static_cast<std::size_t>(k - 1)]) <=
                  1e-9 * (1.0 + std::abs(a[static_cast<std::size_t>(k - 1)])));
    }
}

TEST_CASE("complex scalars round-trip and match the real path") {
    using cplx = std::complex<double>;
    Rng rng(404);
    for (int rep = 0; rep < 100; ++rep) {
        const int order = 1 + static_cast<int>(rng.below(6));
        std::vector<cplx> a(static_cast<std::size_t>(order));
        for (auto& v : a) v = cplx(2.0 * rng.uniform01() - 1.0, 2.0 * rng.uniform01() - 1.0);
        const auto moments = free_moments_up_to(order, a);
        const auto recovered = free_cumulants_from_moments(moments);
        for (int k = 0; k < order; ++k)
            CHECK(std::abs(recovered[static_cast<std::size_t>(k)] -
                           a[static_cast<std::size_t>(k)]) <=
                  1e-9 * (1.0 + std::abs(a[static_cast<std::size_t>(k)])));
    }
    // Real sequences agree across the two instantiations.
    std::vector<cplx> real_as_complex{cplx(0.5, 0), cplx(-1.25, 0), cplx(2.0, 0)};
    CumulantSequence real_seq{{0.5, -1.25, 2.0}};
    for (int p = 1; p <= 3; ++p) {
        CHECK(free_moment(p, real_as_complex).real() ==
              doctest::Approx(free_moment(p, real_seq)).epsilon(1e-14));
        CHECK(free_moment(p, real_as_complex).imag() == doctest::Approx(0.0));
    }
}

TEST_CASE("arity and size errors") {
    CHECK_THROWS_AS(free_moment(4, CumulantSequence{{1, 1}}), ArityError);
    CHECK_THROWS_AS(classical_moment(3, CumulantSequence{{1}}), ArityError);
    CHECK_THROWS_AS(free_moment(17, CumulantSequence{std::vector<double>(17, 1.0)}),
                    SizeLimitError);
    CHECK_THROWS_AS(classical_moment(15, CumulantSequence{std::vector<double>(15, 1.0)}),
                    SizeLimitError);
    CHECK_THROWS_AS(free_cumulants_from_moments(MomentSequence{{}}), ValidationError);
}
