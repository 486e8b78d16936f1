#include <catch2/catch_amalgamated.hpp>

#include "elax/initial_conditions.hpp"
#include "elax/spectral.hpp"
#include "test_helpers.hpp"

using namespace elax;
using elax::test::field_from_fn_2d;
using elax::test::rel_l2_error;

TEST_CASE("grid invariants") {
    CHECK_THROWS_AS(GridSpec(2, 7), ConfigError);
    CHECK_THROWS_AS(GridSpec(2, 6), ConfigError);
    CHECK_THROWS_AS(GridSpec(4, 16), ConfigError);
    GridSpec g(2, 12);
    CHECK(g.dealias_cutoff() == 4);
    CHECK(g.wavenumber(0) == 0);
    CHECK(g.wavenumber(5) == 5);
    CHECK(g.wavenumber(6) == -6);
    CHECK(g.wavenumber(11) == -1);
    CHECK(g.index_of(-1) == 11);
}

TEST_CASE("transform roundtrip") {
    GridSpec g(2, 32);

    SECTION("single mode is exact") {
        FourierField f = ic_mode(g, 1, 0);
        FourierField back = transform_roundtrip(f);
        CHECK(max_coeff_distance(f, back) < 1e-14);
        // and the physical samples really are e^{ix}
        PhysBuffer p = to_physical(f);
        CHECK(std::abs(p[g.flat2(0, 0)] - Complex(1, 0)) < 1e-13);
        CHECK(std::abs(p[g.flat2(8, 0)] - Complex(0, 1)) < 1e-13); // x = pi/2
    }

    SECTION("white noise roundtrips to 1e-12") {
        FourierField f = FourierField::scalar(g);
        Rng rng(42);
        for (auto& v : f.raw()) v = Complex(rng.gaussian(), rng.gaussian());
        FourierField back = transform_roundtrip(f);
        double scale = 0.0;
        for (auto v : f.raw()) scale = std::max(scale, std::abs(v));
        CHECK(max_coeff_distance(f, back) / scale < 1e-12);
    }

    SECTION("zero field") {
        FourierField f = FourierField::scalar(g);
        CHECK(l2_norm(transform_roundtrip(f)) == 0.0);
    }
}

TEST_CASE("derivative") {
    GridSpec g(2, 32);

    SECTION("d/dx sin x = cos x") {
        FourierField f = field_from_fn_2d(g, [](double x, double) { return Complex(std::sin(x), 0); });
        FourierField want = field_from_fn_2d(g, [](double x, double) { return Complex(std::cos(x), 0); });
        CHECK(rel_l2_error(derivative(f, 0), want) < 1e-13);
    }

    SECTION("d/dy e^{i(x+2y)} = 2i e^{i(x+2y)}") {
        FourierField f = ic_mode(g, 1, 2);
        FourierField want = Complex(0, 2) * f;
        CHECK(rel_l2_error(derivative(f, 1), want) < 1e-14);
    }

    SECTION("derivative of constant vanishes") {
        FourierField f = FourierField::scalar(g);
        f.at(0, 0, 0) = Complex(3.5, 0);
        CHECK(l2_norm(derivative(f, 0)) == 0.0);
        CHECK(l2_norm(derivative(f, 1)) == 0.0);
    }

    SECTION("axis bound checked") {
        FourierField f = FourierField::scalar(g);
        CHECK_THROWS_AS(derivative(f, 2), UsageError);
    }
}

TEST_CASE("poisson solve") {
    GridSpec g(2, 32);

    SECTION("cos y -> -cos y") {
        FourierField w = ic_shear(g);
        FourierField psi = solve_poisson(w);
        FourierField want = Complex(-1, 0) * w;
        CHECK(rel_l2_error(psi, want) < 1e-14);
    }

    SECTION("cellular: psi = -omega") {
        FourierField w = ic_cellular(g);
        CHECK(rel_l2_error(solve_poisson(w), Complex(-1, 0) * w) < 1e-14);
    }

    SECTION("zero -> zero, mean discarded") {
        FourierField w = FourierField::scalar(g);
        CHECK(l2_norm(solve_poisson(w)) == 0.0);
        w.at(0, 0, 0) = Complex(7, 0);
        CHECK(l2_norm(solve_poisson(w)) == 0.0);
    }

    SECTION("laplacian of psi reproduces -(-omega): two derivatives") {
        FourierField w = ic_random_smooth(g, {.amplitude = 1.0, .kappa = 3.0, .seed = 3});
        FourierField psi = solve_poisson(w);
        FourierField lap = derivative(derivative(psi, 0), 0) + derivative(derivative(psi, 1), 1);
        CHECK(rel_l2_error(lap, w) < 1e-12);
    }
}

TEST_CASE("sobolev norm") {
    GridSpec g(2, 32);

    SECTION("||e^{ix}||_1 = sqrt(2)") {
        CHECK(sobolev_norm(ic_mode(g, 1, 0), 1.0) == Catch::Approx(std::sqrt(2.0)).epsilon(1e-14));
    }

    SECTION("constant has |c| at every s") {
        FourierField f = FourierField::scalar(g);
        f.at(0, 0, 0) = Complex(-2.5, 0);
        CHECK(sobolev_norm(f, 0.0) == Catch::Approx(2.5));
        CHECK(sobolev_norm(f, 2.0) == Catch::Approx(2.5));
    }

    SECTION("e^{ix} + e^{2iy} at s=2 -> sqrt(29)") {
        FourierField f = ic_mode(g, 1, 0) + ic_mode(g, 0, 2);
        CHECK(sobolev_norm(f, 2.0) == Catch::Approx(std::sqrt(29.0)).epsilon(1e-14));
    }

    SECTION("monotone under coefficient-wise domination at s=0") {
        FourierField a = ic_random_smooth(g, {.amplitude = 1.0, .kappa = 4.0, .seed = 9});
        FourierField b = a;
        for (auto& v : b.raw()) v *= 1.5; // dominates a coefficient-wise
        CHECK(sobolev_norm(a, 0.0) <= sobolev_norm(b, 0.0));
    }
}

TEST_CASE("dealias") {
    GridSpec g(2, 12); // cutoff n/3 = 4

    FourierField f = FourierField::scalar(g);
    f.at(0, 5, 0) = Complex(1, 0);
    f.at(0, 4, 0) = Complex(1, 0);
    f.at(0, 0, -5) = Complex(1, 0);
    FourierField d = dealias(f);
    CHECK(d.at(0, 5, 0) == Complex(0, 0));
    CHECK(d.at(0, 0, -5) == Complex(0, 0));
    CHECK(d.at(0, 4, 0) == Complex(1, 0));
    CHECK(max_coeff_distance(dealias(d), d) == 0.0); // idempotent
}

TEST_CASE("parseval for random fields") {
    GridSpec g(2, 32);
    FourierField f = ic_random_smooth(g, {.amplitude = 0.7, .kappa = 5.0, .seed = 11});
    const double lhs = physical_mean_square(f);
    const double rhs = l2_norm(f) * l2_norm(f);
    CHECK(std::abs(lhs - rhs) / rhs < 1e-12);
}

TEST_CASE("real fields keep conjugate symmetry") {
    GridSpec g(2, 32);
    FourierField f = ic_random_smooth(g, {.amplitude = 1.0, .kappa = 4.0, .seed = 5});
    CHECK(conjugate_symmetry_error(f) < 1e-13);
    PhysBuffer p = to_physical(f);
    double im = 0.0;
    for (auto v : p) im = std::max(im, std::abs(v.imag()));
    CHECK(im < 1e-13);
}

TEST_CASE("rng reproducibility") {
    Rng a(123), b(123);
    for (int i = 0; i < 100; ++i) CHECK(a.gaussian() == b.gaussian());
    GridSpec g(2, 16);
    FourierField f1 = ic_random_smooth(g, {.amplitude = 1.0, .kappa = 3.0, .seed = 77});
    FourierField f2 = ic_random_smooth(g, {.amplitude = 1.0, .kappa = 3.0, .seed = 77});
    CHECK(max_coeff_distance(f1, f2) == 0.0);
}
