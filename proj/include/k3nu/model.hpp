// Two-flavor neutrino model in the Bloch (sigma-basis) picture.
//
// An observable A = sum_i a_i sigma_i is carried as a Vec4 of expansion
// coefficients (index 0 is the identity component). Its Heisenberg-picture
// equation of motion is da/dt = G a with G = H + D built below; row 0 of G
// is identically zero, so a_0 is conserved.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "k3nu/linalg4.hpp"

namespace k3nu {

inline constexpr double pi = 3.14159265358979323846;

// Vacuum mixing and matter parameters. Energy and the matter potential are
// understood in a consistent unit system (the defaults below use eV-based
// units with dm2 in eV^2 and v_cc dimensionless relative to dm2/(2E); only
// the products G*t enter the dynamics).
//
// phi is the Majorana phase: phi = 0 reproduces the Dirac case.
struct OscillationParams {
    double theta = 0.187 * pi;  // vacuum mixing angle, [0, pi/2]
    double dm2 = 7.54e-5;       // mass-squared splitting, >= 0
    double energy = 1.0;        // neutrino energy, > 0
    double v_cc = 0.0;          // charged-current matter potential, >= 0
    double phi = 0.0;           // Majorana phase, [0, 2*pi]

    // Throws std::invalid_argument when a field is non-finite or out of
    // the ranges above.
    void validate() const;
};

// Symmetric real 3x3 Kossakowski coefficient matrix c_ij, i,j in {1,2,3}.
// Stored as a full matrix so that asymmetric raw input can be detected and
// rejected (validate_kossakowski throws rather than reporting a failure).
class KossakowskiCoefficients {
  public:
    KossakowskiCoefficients() = default;  // all coefficients zero

    static KossakowskiCoefficients symmetric(double c11, double c22, double c33,
                                             double c12, double c13, double c23);
    static KossakowskiCoefficients from_matrix(const std::array<double, 9>& row_major);

    // 1-based indices matching the physics convention c_ij, i,j in {1,2,3}.
    double at(int i, int j) const;

    bool is_symmetric() const;
    bool finite() const;

  private:
    std::array<double, 9> c_{};
};

struct KossakowskiViolation {
    int i = 0, j = 0;    // 1-based pair, i <= j
    double value = 0.0;  // |c_ij|
    double bound = 0.0;  // (c_ii + c_jj) / 2
};

struct ValidationReport {
    bool pass = false;
    // True when some nonzero off-diagonal coefficient sits exactly on its
    // bound |c_ij| = (c_ii + c_jj)/2.
    bool boundary = false;
    // Stricter advisory check: all principal minors of c nonnegative.
    // A report can pass while this flag is false.
    bool positive_semidefinite = false;
    std::vector<KossakowskiViolation> violations;
};

// Checks |c_ij| <= (c_ii + c_jj)/2 for every pair (the i = j case enforces
// c_ii >= 0). Boundary equality passes. Throws std::invalid_argument on
// asymmetric or non-finite input.
ValidationReport validate_kossakowski(const KossakowskiCoefficients& c);

// Thrown by generator builders when the coefficients fail validation.
class rejected_coefficients : public std::runtime_error {
  public:
    rejected_coefficients(std::string what, ValidationReport report);
    const ValidationReport& report() const { return report_; }

  private:
    ValidationReport report_;
};

// Effective evolution generator with a human-readable description of the
// inputs it was built from (carried into output metadata).
struct Generator4 {
    Mat4 matrix;
    std::string provenance = "custom";

    explicit Generator4(Mat4 m, std::string who = "custom");
    Generator4() = default;
};

// Antisymmetric Hamiltonian part. Nonzero entries:
//   H(1,2) = -dm2/(2E) + v_cc*cos(2 theta)
//   H(1,3) = -v_cc*sin(phi)*sin(2 theta)
//   H(2,3) =  v_cc*cos(phi)*sin(2 theta)
// with H(j,i) = -H(i,j); row and column 0 vanish.
Mat4 build_hamiltonian_part(const OscillationParams& p);

// Symmetric dissipative part from the Kossakowski matrix:
//   D(i,i) = -2*(sum of the other two diagonal c's),
//   D(i,j) =  2*c_ij for i != j (spatial indices 1..3),
// row and column 0 vanish. Throws rejected_coefficients when c fails
// validate_kossakowski.
Mat4 build_dissipator(const KossakowskiCoefficients& c);

// G = H + D. Row 0 is identically zero so the identity component of any
// observable is conserved.
Generator4 build_effective_generator(const OscillationParams& p,
                                     const KossakowskiCoefficients& c);

}  // namespace k3nu
