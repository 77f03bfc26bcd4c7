#include "k3nu/model.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace k3nu {

void OscillationParams::validate() const {
    auto bad = [](const std::string& what) { throw std::invalid_argument("params: " + what); };
    if (!std::isfinite(theta) || !std::isfinite(dm2) || !std::isfinite(energy) ||
        !std::isfinite(v_cc) || !std::isfinite(phi))
        bad("non-finite field");
    if (theta < 0.0 || theta > pi / 2.0) bad("theta outside [0, pi/2]");
    if (dm2 < 0.0) bad("dm2 negative");
    if (energy <= 0.0) bad("energy must be positive");
    if (v_cc < 0.0) bad("v_cc negative");
    if (phi < 0.0 || phi > 2.0 * pi) bad("phi outside [0, 2*pi]");
}

KossakowskiCoefficients KossakowskiCoefficients::symmetric(double c11, double c22, double c33,
                                                           double c12, double c13, double c23) {
    KossakowskiCoefficients k;
    k.c_ = {c11, c12, c13, c12, c22, c23, c13, c23, c33};
    return k;
}

KossakowskiCoefficients KossakowskiCoefficients::from_matrix(const std::array<double, 9>& m) {
    KossakowskiCoefficients k;
    k.c_ = m;
    return k;
}

double KossakowskiCoefficients::at(int i, int j) const {
    if (i < 1 || i > 3 || j < 1 || j > 3)
        throw std::invalid_argument("kossakowski: index outside 1..3");
    return c_[static_cast<std::size_t>(3 * (i - 1) + (j - 1))];
}

bool KossakowskiCoefficients::is_symmetric() const {
    return c_[1] == c_[3] && c_[2] == c_[6] && c_[5] == c_[7];
}

bool KossakowskiCoefficients::finite() const {
    for (double x : c_)
        if (!std::isfinite(x)) return false;
    return true;
}

ValidationReport validate_kossakowski(const KossakowskiCoefficients& c) {
    if (!c.finite()) throw std::invalid_argument("kossakowski: non-finite coefficients");
    if (!c.is_symmetric()) throw std::invalid_argument("kossakowski: matrix is not symmetric");

    ValidationReport rep;
    rep.pass = true;
    for (int i = 1; i <= 3; ++i) {
        for (int j = i; j <= 3; ++j) {
            double value = std::fabs(c.at(i, j));
            double bound = 0.5 * (c.at(i, i) + c.at(j, j));
            if (value > bound) {
                rep.pass = false;
                rep.violations.push_back({i, j, value, bound});
            } else if (i != j && value == bound && value != 0.0) {
                rep.boundary = true;
            }
        }
    }

    // Advisory only: nonnegativity of all principal minors of the 3x3
    // symmetric matrix (equivalent to positive semidefiniteness).
    auto det2 = [&](int i, int j) {
        return c.at(i, i) * c.at(j, j) - c.at(i, j) * c.at(i, j);
    };
    double det3 = c.at(1, 1) * det2(2, 3) -
                  c.at(1, 2) * (c.at(1, 2) * c.at(3, 3) - c.at(2, 3) * c.at(1, 3)) +
                  c.at(1, 3) * (c.at(1, 2) * c.at(2, 3) - c.at(2, 2) * c.at(1, 3));
    rep.positive_semidefinite = c.at(1, 1) >= 0.0 && c.at(2, 2) >= 0.0 && c.at(3, 3) >= 0.0 &&
                                det2(1, 2) >= 0.0 && det2(1, 3) >= 0.0 && det2(2, 3) >= 0.0 &&
                                det3 >= 0.0;
    return rep;
}

rejected_coefficients::rejected_coefficients(std::string what, ValidationReport report)
    : std::runtime_error(std::move(what)), report_(std::move(report)) {}

Generator4::Generator4(Mat4 m, std::string who) : matrix(m), provenance(std::move(who)) {}

Mat4 build_hamiltonian_part(const OscillationParams& p) {
    p.validate();
    const double h12 = -p.dm2 / (2.0 * p.energy) + p.v_cc * std::cos(2.0 * p.theta);
    const double h13 = -p.v_cc * std::sin(p.phi) * std::sin(2.0 * p.theta);
    const double h23 = p.v_cc * std::cos(p.phi) * std::sin(2.0 * p.theta);

    Mat4 h;
    h(1, 2) = h12;
    h(2, 1) = -h12;
    h(1, 3) = h13;
    h(3, 1) = -h13;
    h(2, 3) = h23;
    h(3, 2) = -h23;
    return h;
}

Mat4 build_dissipator(const KossakowskiCoefficients& c) {
    ValidationReport rep = validate_kossakowski(c);
    if (!rep.pass) {
        std::ostringstream msg;
        msg << "kossakowski: coefficients rejected:";
        for (const auto& v : rep.violations)
            msg << " |c" << v.i << v.j << "| = " << v.value << " > " << v.bound
                << " = (c" << v.i << v.i << " + c" << v.j << v.j << ")/2;";
        throw rejected_coefficients(msg.str(), rep);
    }

    Mat4 d;
    d(1, 1) = -2.0 * (c.at(2, 2) + c.at(3, 3));
    d(2, 2) = -2.0 * (c.at(1, 1) + c.at(3, 3));
    d(3, 3) = -2.0 * (c.at(1, 1) + c.at(2, 2));
    d(1, 2) = d(2, 1) = 2.0 * c.at(1, 2);
    d(1, 3) = d(3, 1) = 2.0 * c.at(1, 3);
    d(2, 3) = d(3, 2) = 2.0 * c.at(2, 3);
    return d;
}

Generator4 build_effective_generator(const OscillationParams& p,
                                     const KossakowskiCoefficients& c) {
    Mat4 g = build_hamiltonian_part(p) + build_dissipator(c);
    std::ostringstream who;
    who.precision(17);
    who << "theta=" << p.theta << " dm2=" << p.dm2 << " energy=" << p.energy
        << " v_cc=" << p.v_cc << " phi=" << p.phi << " c=[" << c.at(1, 1) << "," << c.at(2, 2)
        << "," << c.at(3, 3) << ";" << c.at(1, 2) << "," << c.at(1, 3) << "," << c.at(2, 3)
        << "]";
    return Generator4(g, who.str());
}

}  // namespace k3nu
