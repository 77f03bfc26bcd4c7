#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "k3nu/scan.hpp"

using namespace k3nu;

namespace {

ScanSpec fig_phi_spec(double v_cc, double c_diag, double c12, int count = 33) {
    ScanSpec spec;
    spec.parameter = ScanParameter::phi;
    spec.grid = {0.0, 2.0 * pi, count};
    spec.base.params.v_cc = v_cc;
    spec.base.kossakowski =
        KossakowskiCoefficients::symmetric(c_diag, c_diag, c_diag, c12, 0.0, 0.0);
    spec.base.tau = 0.1;
    return spec;
}

bool rows_bit_identical(const std::vector<ScanRow>& a, const std::vector<ScanRow>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].param_value != b[i].param_value) return false;
        if (a[i].k3_dirac != b[i].k3_dirac) return false;
        if (a[i].k3_majorana != b[i].k3_majorana) return false;
        if (a[i].delta_k3 != b[i].delta_k3) return false;
        if (a[i].violated_dirac != b[i].violated_dirac) return false;
        if (a[i].violated_majorana != b[i].violated_majorana) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("grid points follow the affine formula exactly") {
    GridSpec g{0.1, 10.0, 200};
    g.validate();
    for (int i = 0; i < g.count; ++i)
        CHECK(g.point(i) == 0.1 + i * (10.0 - 0.1) / 199.0);
    CHECK(g.point(0) == 0.1);
}

TEST_CASE("grid validation rejects bad shapes") {
    CHECK_THROWS_AS((GridSpec{0.0, 1.0, 1}).validate(), std::invalid_argument);
    CHECK_THROWS_AS((GridSpec{1.0, 1.0, 5}).validate(), std::invalid_argument);
    CHECK_THROWS_AS((GridSpec{2.0, 1.0, 5}).validate(), std::invalid_argument);
}

TEST_CASE("phi scan without matter yields an identically zero delta column") {
    ScanSpec spec = fig_phi_spec(0.0, 0.1, 0.0);
    ScanResult r = run_scan(spec);
    REQUIRE(static_cast<int>(r.rows.size()) == spec.grid.count);
    for (const ScanRow& row : r.rows) {
        CHECK(row.delta_k3 == 0.0);
        CHECK(row.k3_dirac == row.k3_majorana);
    }
    CHECK(r.argmax_abs_delta.value == 0.0);
}

TEST_CASE("phi scan with axially symmetric damping stays flat to rounding") {
    ScanSpec spec = fig_phi_spec(2.0, 0.1, 0.0);
    ScanResult r = run_scan(spec);
    for (const ScanRow& row : r.rows) CHECK(std::fabs(row.delta_k3) <= 1e-12);
}

TEST_CASE("every row satisfies delta = dirac - majorana and the violation flags") {
    ScanSpec spec = fig_phi_spec(2.0, 0.1, 0.1);
    ScanResult r = run_scan(spec);
    for (const ScanRow& row : r.rows) {
        CHECK(row.delta_k3 == row.k3_dirac - row.k3_majorana);
        CHECK(row.violated_dirac == (row.k3_dirac > 1.0 + lgi_slack));
        CHECK(row.violated_majorana == (row.k3_majorana > 1.0 + lgi_slack));
    }
}

TEST_CASE("repeated runs and the serial driver are bit-identical") {
    ScanSpec spec = fig_phi_spec(2.0, 0.1, 0.1);
    ScanResult a = run_scan(spec);
    ScanResult b = run_scan(spec);
    ScanResult c = run_scan_serial(spec);
    CHECK(rows_bit_identical(a.rows, b.rows));
    CHECK(rows_bit_identical(a.rows, c.rows));

    SUBCASE("also in envelope mode over v_cc") {
        ScanSpec vspec = fig_phi_spec(2.0, 0.1, 0.1);
        vspec.parameter = ScanParameter::v_cc;
        vspec.grid = {0.5, 6.0, 12};
        CHECK(rows_bit_identical(run_scan(vspec).rows, run_scan_serial(vspec).rows));
    }
}

TEST_CASE("argmax entries are attained by stored rows, ties to the smallest parameter") {
    ScanSpec spec = fig_phi_spec(2.0, 0.1, 0.1);
    ScanResult r = run_scan(spec);

    bool delta_found = false, k3_found = false;
    for (const ScanRow& row : r.rows) {
        if (row.param_value == r.argmax_abs_delta.param_value &&
            row.delta_k3 == r.argmax_abs_delta.value)
            delta_found = true;
        if (row.param_value == r.argmax_k3.param_value &&
            row.k3_majorana == r.argmax_k3.value)
            k3_found = true;
        CHECK(std::fabs(row.delta_k3) <= std::fabs(r.argmax_abs_delta.value));
        CHECK(row.k3_majorana <= r.argmax_k3.value);
    }
    CHECK(delta_found);
    CHECK(k3_found);

    SUBCASE("ties break to the smallest parameter value") {
        // phi grid over a symmetric interval with v_cc = 0: all deltas are
        // exactly zero, so the tie must resolve to the first grid point.
        ScanSpec flat = fig_phi_spec(0.0, 0.1, 0.0, 9);
        ScanResult fr = run_scan(flat);
        CHECK(fr.argmax_abs_delta.param_value == flat.grid.point(0));
    }
}

TEST_CASE("c12 grid crossing the Kossakowski bound aborts with the offending value") {
    ScanSpec spec = fig_phi_spec(2.0, 0.1, 0.0);
    spec.parameter = ScanParameter::c12;
    spec.mode = ScanMode::k3_pair;
    spec.grid = {0.0, 0.2, 5};  // bound is 0.1; points 0.15 and 0.2 violate
    try {
        run_scan(spec);
        FAIL("expected scan_error");
    } catch (const scan_error& e) {
        CHECK(e.param_value() == doctest::Approx(0.15));
        CHECK_FALSE(e.numeric());
        CHECK(std::string(e.what()).find("0.1") != std::string::npos);
    }
}

TEST_CASE("energy grid touching zero aborts with a validation failure") {
    ScanSpec spec = fig_phi_spec(2.0, 0.1, 0.0);
    spec.parameter = ScanParameter::energy;
    spec.mode = ScanMode::k3_pair;
    spec.grid = {0.0, 2.0, 5};
    try {
        run_scan(spec);
        FAIL("expected scan_error");
    } catch (const scan_error& e) {
        CHECK(e.param_value() == 0.0);
        CHECK_FALSE(e.numeric());
    }
}

TEST_CASE("tau overflow inside a row is a numeric failure") {
    ScanSpec spec = fig_phi_spec(2.0, 0.1, 0.0);
    spec.parameter = ScanParameter::tau;
    spec.mode = ScanMode::k3_pair;
    spec.grid = {1e308, 1.5e308, 3};  // t3 = 2*tau overflows
    try {
        run_scan(spec);
        FAIL("expected scan_error");
    } catch (const scan_error& e) {
        CHECK(e.numeric());
    }
}

TEST_CASE("2d scan is outer-major and transpose-invariant as a multiset") {
    ScanSpec inner = fig_phi_spec(2.0, 0.1, 0.1, 5);
    inner.mode = ScanMode::k3_pair;
    ScanSpec outer = inner;
    outer.parameter = ScanParameter::v_cc;
    outer.grid = {1.0, 3.0, 3};

    std::vector<ScanResult> ab = run_scan_2d(outer, inner);
    REQUIRE(ab.size() == 3);
    for (const ScanResult& block : ab) REQUIRE(block.rows.size() == 5);
    CHECK(ab[0].spec.base.params.v_cc == 1.0);
    CHECK(ab[2].spec.base.params.v_cc == 3.0);

    // Transposed nesting: phi outer, v_cc inner.
    ScanSpec inner2 = inner;
    inner2.parameter = ScanParameter::v_cc;
    inner2.grid = outer.grid;
    ScanSpec outer2 = inner;
    std::vector<ScanResult> ba = run_scan_2d(outer2, inner2);

    std::vector<std::pair<double, double>> flat_ab, flat_ba;
    for (std::size_t b = 0; b < ab.size(); ++b)
        for (const ScanRow& row : ab[b].rows)
            flat_ab.push_back({ab[b].spec.base.params.v_cc, row.k3_majorana});
    for (std::size_t b = 0; b < ba.size(); ++b)
        for (const ScanRow& row : ba[b].rows)
            flat_ba.push_back({row.param_value, row.k3_majorana});
    auto lt = [](const auto& x, const auto& y) {
        return x.first != y.first ? x.first < y.first : x.second < y.second;
    };
    std::sort(flat_ab.begin(), flat_ab.end(), lt);
    std::sort(flat_ba.begin(), flat_ba.end(), lt);
    REQUIRE(flat_ab.size() == flat_ba.size());
    for (std::size_t i = 0; i < flat_ab.size(); ++i) {
        CHECK(flat_ab[i].first == doctest::Approx(flat_ba[i].first).epsilon(1e-14));
        CHECK(flat_ab[i].second == doctest::Approx(flat_ba[i].second).epsilon(1e-14));
    }

    CHECK_THROWS_AS(run_scan_2d(inner, inner), std::invalid_argument);
}

TEST_CASE("correlation scan recomputes K3 from its own correlator columns") {
    ScanSpec spec = fig_phi_spec(2.0, 0.1, 0.1, 17);
    CorrelationScanResult r = correlation_scan(spec);
    REQUIRE(r.rows.size() == 17);
    for (const CorrelationRow& row : r.rows) {
        CHECK(row.k3_majorana ==
              doctest::Approx(row.c21 + row.c32 - row.c31).epsilon(1e-14));
        double kd = (row.c21 + row.dc21) + (row.c32 + row.dc32) - (row.c31 + row.dc31);
        CHECK(row.k3_dirac == doctest::Approx(kd).epsilon(1e-13));
    }
    CorrelationScanResult rs = correlation_scan_serial(spec);
    CHECK(rows_bit_identical(std::vector<ScanRow>(r.rows.begin(), r.rows.end()),
                             std::vector<ScanRow>(rs.rows.begin(), rs.rows.end())));
}

TEST_CASE("correlation scan without matter has zero correlator differences") {
    ScanSpec spec = fig_phi_spec(0.0, 0.1, 0.0, 9);
    CorrelationScanResult r = correlation_scan(spec);
    for (const CorrelationRow& row : r.rows) {
        CHECK(row.dc21 == 0.0);
        CHECK(row.dc32 == 0.0);
        CHECK(row.dc31 == 0.0);
    }
}

TEST_CASE("tau envelope rejects a tau scan and bad envelope grids") {
    ScanSpec spec = fig_phi_spec(2.0, 0.1, 0.0);
    spec.parameter = ScanParameter::tau;
    spec.grid = {0.05, 1.0, 5};
    spec.tau_envelope.enabled = true;
    CHECK_THROWS_AS(run_scan(spec), std::invalid_argument);

    spec.parameter = ScanParameter::v_cc;
    spec.tau_envelope.step = 0.0;
    CHECK_THROWS_AS(run_scan(spec), std::invalid_argument);
}

TEST_CASE("delta mode envelope dominates the single-point evaluation") {
    // The enveloped |delta| can only be >= the value at the base phi/tau.
    ScanSpec envelope = fig_phi_spec(2.0, 0.1, 0.1);
    envelope.parameter = ScanParameter::v_cc;
    envelope.grid = {1.0, 4.0, 4};
    ScanSpec pointwise = envelope;
    pointwise.mode = ScanMode::k3_pair;
    pointwise.base.params.phi = pi / 2.0;

    ScanResult re = run_scan(envelope);
    ScanResult rp = run_scan(pointwise);
    for (std::size_t i = 0; i < re.rows.size(); ++i)
        CHECK(std::fabs(re.rows[i].delta_k3) >= std::fabs(rp.rows[i].delta_k3) - 1e-15);

    SUBCASE("and the tau envelope dominates the fixed-tau envelope") {
        ScanSpec tenv = envelope;
        tenv.tau_envelope.enabled = true;
        tenv.tau_envelope.step = 0.1;
        tenv.tau_envelope.count = 30;
        ScanResult rt = run_scan(tenv);
        for (std::size_t i = 0; i < rt.rows.size(); ++i)
            CHECK(std::fabs(rt.rows[i].delta_k3) >=
                  std::fabs(re.rows[i].delta_k3) - 1e-15);
    }
}
