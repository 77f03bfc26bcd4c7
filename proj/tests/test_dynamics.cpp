#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "k3nu/dynamics.hpp"
#include "oracles.hpp"

using namespace k3nu;

namespace {

Generator4 fig_generator(double v_cc, double phi, double c_diag, double c12) {
    OscillationParams p;
    p.v_cc = v_cc;
    p.phi = phi;
    auto c = KossakowskiCoefficients::symmetric(c_diag, c_diag, c_diag, c12, 0.0, 0.0);
    return build_effective_generator(p, c);
}

}  // namespace

TEST_CASE("evolve at t = 0 returns the initial observable") {
    Generator4 g = fig_generator(2.0, 0.5 * pi, 0.1, 0.1);
    BlochVector q = evolve(g, BlochVector::sigma_z(), 0.0);
    CHECK(q.a[0] == 0.0);
    CHECK(q.a[1] == 0.0);
    CHECK(q.a[2] == 0.0);
    CHECK(q.a[3] == 1.0);
}

TEST_CASE("evolve under pure diagonal damping decays each axis exponentially") {
    Generator4 g(Mat4::diagonal(0.0, -1.0, -2.0, -4.0));
    BlochVector q0;
    q0.a = {{1.0, 1.0, 1.0, 1.0}};
    BlochVector q = evolve(g, q0, 0.1);
    CHECK(q.a[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(q.a[1] == doctest::Approx(std::exp(-0.1)).epsilon(1e-14));
    CHECK(q.a[2] == doctest::Approx(std::exp(-0.2)).epsilon(1e-14));
    CHECK(q.a[3] == doctest::Approx(std::exp(-0.4)).epsilon(1e-14));
}

TEST_CASE("evolve rejects negative times and non-finite input") {
    Generator4 g = fig_generator(2.0, 0.0, 0.1, 0.0);
    CHECK_THROWS_AS(evolve(g, BlochVector::sigma_z(), -0.1), std::invalid_argument);
    CHECK_THROWS_AS(evolve_rk4(g, BlochVector::sigma_z(), -0.1, 10), std::invalid_argument);
    CHECK_THROWS_AS(evolve_rk4(g, BlochVector::sigma_z(), 0.1, 0), std::invalid_argument);
}

TEST_CASE("evolve matches RK4 on the matter-dominated configuration") {
    // v_cc = 10, t = 0.2, 2000 steps.
    Generator4 g = fig_generator(10.0, 0.3 * pi, 0.1, 0.1);
    BlochVector a = evolve(g, BlochVector::sigma_z(), 0.2);
    BlochVector b = evolve_rk4(g, BlochVector::sigma_z(), 0.2, 2000);
    for (int i = 0; i < 4; ++i) CHECK(std::fabs(a.a[i] - b.a[i]) <= 1e-8);
}

TEST_CASE("evolve matches RK4 with the default step rule across the parameter box") {
    oracles::Rng rng(97);
    for (int rep = 0; rep < 40; ++rep) {
        OscillationParams p;
        p.theta = rng.uniform(0.05, 0.45 * pi);
        p.v_cc = rng.uniform(0.0, 10.0);
        p.phi = rng.uniform(0.0, 2.0 * pi);
        double cd = rng.uniform(0.0, 0.5);
        auto c = KossakowskiCoefficients::symmetric(cd, cd, cd, rng.uniform(-cd, cd), 0.0, 0.0);
        Generator4 g = build_effective_generator(p, c);
        double t = rng.uniform(0.0, 2.0);
        BlochVector a = evolve(g, BlochVector::sigma_z(), t);
        BlochVector b = evolve_rk4(g, BlochVector::sigma_z(), t, rk4_steps_for(g, t));
        for (int i = 0; i < 4; ++i) CHECK(std::fabs(a.a[i] - b.a[i]) <= 1e-8);
    }
}

TEST_CASE("identity component is conserved along the flow") {
    oracles::Rng rng(101);
    for (int rep = 0; rep < 20; ++rep) {
        OscillationParams p;
        p.v_cc = rng.uniform(0.0, 10.0);
        p.phi = rng.uniform(0.0, 2.0 * pi);
        double cd = rng.uniform(0.0, 0.5);
        Generator4 g = build_effective_generator(
            p, KossakowskiCoefficients::symmetric(cd, cd, cd, 0.0, 0.0, 0.0));
        BlochVector q0;
        q0.a = {{0.7, 0.1, -0.2, 0.5}};
        for (double t : {0.1, 1.0, 5.0, 10.0}) {
            BlochVector q = evolve(g, q0, t);
            CHECK(std::fabs(q.a[0] - 0.7) <= 1e-14);
        }
    }
}

TEST_CASE("unitary limit preserves the spatial norm") {
    Generator4 g = fig_generator(3.0, 0.7, 0.0, 0.0);
    BlochVector q0 = BlochVector::sigma_z();
    for (double t : {0.5, 2.0, 10.0}) {
        BlochVector q = evolve(g, q0, t);
        CHECK(std::fabs(q.spatial_norm() - 1.0) <= 1e-10);
    }
}

TEST_CASE("dissipation makes the spatial norm non-increasing") {
    Generator4 g = fig_generator(2.0, 0.5 * pi, 0.1, 0.1);
    BlochVector q0 = BlochVector::sigma_z();
    double prev = q0.spatial_norm();
    for (int k = 1; k <= 50; ++k) {
        BlochVector q = evolve(g, q0, 0.2 * k);
        CHECK(q.spatial_norm() <= prev + 1e-12);
        prev = q.spatial_norm();
    }
}

TEST_CASE("schrodinger_dual transposes the generator") {
    Generator4 g = fig_generator(2.0, 0.5 * pi, 0.1, 0.1);
    Generator4 d = schrodinger_dual(g);
    CHECK((d.matrix - g.matrix.transposed()).norm_max() == 0.0);
    // Self-inverse.
    CHECK((schrodinger_dual(d).matrix - g.matrix).norm_max() == 0.0);
}

TEST_CASE("duality: observable evolution pairs with state evolution") {
    oracles::Rng rng(113);
    for (int rep = 0; rep < 25; ++rep) {
        OscillationParams p;
        p.v_cc = rng.uniform(0.0, 10.0);
        p.phi = rng.uniform(0.0, 2.0 * pi);
        double cd = rng.uniform(0.0, 0.5);
        Generator4 g = build_effective_generator(
            p, KossakowskiCoefficients::symmetric(cd, cd, cd, 0.0, 0.0, 0.0));
        Vec4 a = rng.vector(-1.0, 1.0);
        Vec4 r = rng.vector(-1.0, 1.0);
        double t = rng.uniform(0.0, 3.0);
        double heis = dot(mat_vec(mat_exp(g.matrix, t), a), r);
        double schr = dot(a, mat_vec(mat_exp(schrodinger_dual(g).matrix, t), r));
        CHECK(std::fabs(heis - schr) <= 1e-10);
    }
}

TEST_CASE("rk4_steps_for scales with the generator norm and horizon") {
    Generator4 g = fig_generator(10.0, 0.0, 0.1, 0.0);
    int n1 = rk4_steps_for(g, 1.0);
    int n2 = rk4_steps_for(g, 2.0);
    CHECK(n2 >= 2 * n1 - 1);
    CHECK(rk4_steps_for(g, 0.0) == 1);
    CHECK_THROWS_AS(rk4_steps_for(g, 1.0, 0.0), std::invalid_argument);
}
