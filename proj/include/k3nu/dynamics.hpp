// Heisenberg-picture propagation of Bloch observables.
#pragma once

#include "k3nu/linalg4.hpp"
#include "k3nu/model.hpp"

namespace k3nu {

// Observable in the sigma basis; component 0 multiplies the identity and is
// conserved by every generator built by the model module.
struct BlochVector {
    Vec4 a{};

    // The dichotomic flavor observable sigma_3: a = (0, 0, 0, 1).
    static BlochVector sigma_z();

    double identity_component() const { return a[0]; }
    double spatial_norm() const { return a.spatial_norm(); }
};

// q(t) = exp(G t) q0 via mat_exp. Requires t >= 0 (throws
// std::invalid_argument otherwise).
BlochVector evolve(const Generator4& g, const BlochVector& q0, double t);

// Classical fixed-step RK4 integration of dq/dt = G q with the given number
// of uniform steps (>= 1). Used as an independent cross-check of evolve.
BlochVector evolve_rk4(const Generator4& g, const BlochVector& q0, double t, int steps);

// Step count such that each RK4 step advances at most max_angle in the
// dimensionless variable ||G||_F * t. The default keeps the RK4/evolve
// discrepancy below 1e-8 across the parameter box exercised in the tests.
int rk4_steps_for(const Generator4& g, double t, double max_angle = 0.01);

// Transpose of the generator: propagating states forward with the dual is
// equivalent to propagating observables, dot(exp(G t) a, r) =
// dot(a, exp(G^T t) r).
Generator4 schrodinger_dual(const Generator4& g);

}  // namespace k3nu
