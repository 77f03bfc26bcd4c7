#include "k3nu/leggett_garg.hpp"

#include <cmath>
#include <stdexcept>

namespace k3nu {

TimeTriple::TimeTriple(double a, double b, double c) : t1(a), t2(b), t3(c) {
    if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c)))
        throw std::invalid_argument("leggett_garg: non-finite measurement time");
    if (!(a < b && b < c))
        throw std::invalid_argument("leggett_garg: times must satisfy t1 < t2 < t3");
    if (a < 0.0) throw std::invalid_argument("leggett_garg: times must be nonnegative");
}

TimeTriple TimeTriple::equally_spaced(double tau) {
    if (!(tau > 0.0)) throw std::invalid_argument("leggett_garg: tau must be positive");
    return TimeTriple(0.0, tau, 2.0 * tau);
}

double correlation(const Generator4& g, const BlochVector& q0, double ti, double tj) {
    if (!(ti >= 0.0 && tj >= ti))
        throw std::invalid_argument("leggett_garg: correlation requires 0 <= ti <= tj");
    BlochVector qi = evolve(g, q0, ti);
    BlochVector qj = evolve(g, q0, tj);
    return dot(qi.a, qj.a);
}

K3Result k3(const Generator4& g, const BlochVector& q0, const TimeTriple& times) {
    BlochVector q1 = evolve(g, q0, times.t1);
    BlochVector q2 = evolve(g, q0, times.t2);
    BlochVector q3 = evolve(g, q0, times.t3);

    K3Result r;
    r.c21 = dot(q1.a, q2.a);
    r.c32 = dot(q2.a, q3.a);
    r.c31 = dot(q1.a, q3.a);
    r.k3 = r.c21 + r.c32 - r.c31;
    r.violated = r.k3 > 1.0 + lgi_slack;
    return r;
}

bool lgi_violated(const K3Result& r) { return r.k3 > 1.0 + lgi_slack; }

double delta_k3(const OscillationParams& p, const KossakowskiCoefficients& c, double tau) {
    OscillationParams dirac = p;
    dirac.phi = 0.0;

    const TimeTriple times = TimeTriple::equally_spaced(tau);
    const BlochVector q0 = BlochVector::sigma_z();
    K3Result kd = k3(build_effective_generator(dirac, c), q0, times);
    K3Result km = k3(build_effective_generator(p, c), q0, times);
    return kd.k3 - km.k3;
}

}  // namespace k3nu
