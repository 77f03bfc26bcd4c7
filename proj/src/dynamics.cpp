#include "k3nu/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace k3nu {

BlochVector BlochVector::sigma_z() {
    BlochVector q;
    q.a[3] = 1.0;
    return q;
}

BlochVector evolve(const Generator4& g, const BlochVector& q0, double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("dynamics: evolve requires t >= 0");
    BlochVector q;
    q.a = mat_vec(mat_exp(g.matrix, t), q0.a);
    return q;
}

BlochVector evolve_rk4(const Generator4& g, const BlochVector& q0, double t, int steps) {
    if (!(t >= 0.0)) throw std::invalid_argument("dynamics: evolve_rk4 requires t >= 0");
    if (steps < 1) throw std::invalid_argument("dynamics: evolve_rk4 requires steps >= 1");
    if (!g.matrix.finite() || !q0.a.finite())
        throw std::invalid_argument("dynamics: non-finite evolve_rk4 input");

    const Mat4& m = g.matrix;
    const double h = t / steps;
    Vec4 q = q0.a;
    for (int n = 0; n < steps; ++n) {
        Vec4 k1 = mat_vec(m, q);
        Vec4 k2 = mat_vec(m, q + k1 * (h / 2.0));
        Vec4 k3 = mat_vec(m, q + k2 * (h / 2.0));
        Vec4 k4 = mat_vec(m, q + k3 * h);
        q = q + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
    }
    BlochVector out;
    out.a = q;
    return out;
}

int rk4_steps_for(const Generator4& g, double t, double max_angle) {
    if (!(max_angle > 0.0)) throw std::invalid_argument("dynamics: max_angle must be positive");
    double span = g.matrix.norm_fro() * t;
    int steps = static_cast<int>(std::ceil(span / max_angle));
    return steps < 1 ? 1 : steps;
}

Generator4 schrodinger_dual(const Generator4& g) {
    Generator4 d(g.matrix.transposed(), g.provenance + " [dual]");
    return d;
}

}  // namespace k3nu
