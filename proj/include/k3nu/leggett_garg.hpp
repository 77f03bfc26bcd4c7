// Leggett-Garg temporal correlators and the K3 combination.
#pragma once

#include "k3nu/dynamics.hpp"
#include "k3nu/model.hpp"

namespace k3nu {

// Strictly ordered measurement times t1 < t2 < t3.
struct TimeTriple {
    double t1, t2, t3;

    TimeTriple(double a, double b, double c);

    // (0, tau, 2*tau) for tau > 0.
    static TimeTriple equally_spaced(double tau);
};

struct K3Result {
    double c21 = 0.0;
    double c32 = 0.0;
    double c31 = 0.0;
    double k3 = 0.0;  // c21 + c32 - c31
    bool violated = false;
};

// Numerical slack on the K3 <= 1 bound when flagging violations.
inline constexpr double lgi_slack = 1e-12;

// Two-time correlator C_ij = q(t_i) . q(t_j) of the observable q0 under G,
// with q(t) = exp(G t) q0. Requires 0 <= ti <= tj.
double correlation(const Generator4& g, const BlochVector& q0, double ti, double tj);

// K3 = C21 + C32 - C31 on the given time triple, with the three correlators
// evaluated from the same propagated vectors.
K3Result k3(const Generator4& g, const BlochVector& q0, const TimeTriple& times);

bool lgi_violated(const K3Result& r);

// Dirac-Majorana discriminator at equally spaced times (0, tau, 2*tau):
// K3 evaluated at phi = 0 minus K3 at p.phi, all other inputs identical.
// Both generators are rebuilt here from scratch; nothing is cached, so the
// phi = 0 case returns exactly zero.
double delta_k3(const OscillationParams& p, const KossakowskiCoefficients& c, double tau);

}  // namespace k3nu
