#include <doctest.h>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>

#include "suslov/model.hpp"

using namespace suslov;
using cplx = std::complex<double>;

namespace {

// distance of an eigenvalue multiset to a target set
double spectrum_distance(const std::array<cplx, 5>& eig, std::vector<cplx> target) {
    double worst = 0.0;
    for (const cplx& e : eig) {
        double best = 1e300;
        size_t at = 0;
        for (size_t i = 0; i < target.size(); ++i)
            if (std::abs(e - target[i]) < best) {
                best = std::abs(e - target[i]);
                at = i;
            }
        worst = std::max(worst, best);
        target.erase(target.begin() + at);
    }
    return worst;
}

} // namespace

TEST_SUITE("model") {

TEST_CASE("identity tensor passes validation") {
    InertiaTensor I{1, 1, 1, 0, 0};
    const auto d = validate_inertia(I);
    CHECK(d.pass);
    CHECK(d.det_deviation < 1e-15);
}

TEST_CASE("negative I11 fails with the named violation") {
    InertiaTensor I{-1, 1, 1, 0, 0};
    const auto d = validate_inertia(I);
    CHECK_FALSE(d.pass);
    bool found = false;
    for (const auto& v : d.violations) found |= (v == "I11 > 0");
    CHECK(found);
}

TEST_CASE("p-realization round trips through validation") {
    const InertiaTensor I = inertia_from_p(1.0, 2.0, 1.0, 1.6);
    CHECK(validate_inertia(I).pass);
    CHECK(I.I22 * I.I33 - I.I23 * I.I23 > 0.0);
}

TEST_CASE("params: degenerate cases throw") {
    CHECK_THROWS_AS((void)params_from_inertia(InertiaTensor{1.2, 0.9, 1.0, 0, 0}),
                    DegenerateAxis);
    InertiaTensor balanced = make_inertia(1.0, 1.0, 1.5, 0.0, 0.3);
    CHECK_THROWS_AS((void)params_from_inertia(balanced), DegenerateBalance);
}

TEST_CASE("params round trip recovers p") {
    const InertiaTensor I = inertia_from_p(3.0, 2.0, 1.0, 1.6);
    const SuslovParams P = params_from_inertia(I);
    REQUIRE(P.special);
    CHECK(P.p == doctest::Approx(3.0).epsilon(1e-9));
    // consistency of the special-case fields
    CHECK(P.b == doctest::Approx(0.0));
    CHECK(P.c1 == doctest::Approx(0.0));
    CHECK(P.c2 == doctest::Approx(-2.0 * P.c * P.a).epsilon(1e-12));
    CHECK(P.p * P.p == doctest::Approx((P.c * P.c - 1.0) * P.a * P.a).epsilon(1e-12));
}

TEST_CASE("inertia_from_p rejects bad shapes") {
    CHECK_THROWS_AS((void)inertia_from_p(1.0, 1.0, 2.0, 1.6), InvalidShape); // I11 < I22
    CHECK_THROWS_AS((void)inertia_from_p(1.0, 3.0, 1.0, 1.5), InvalidShape); // I33+I22 <= I11
}

TEST_CASE("swap symmetry is an involution and maps the cases onto each other") {
    BodyState x{1.0, 0.0, 0.0, 0.0, 1.0};
    const BodyState y = apply_swap_symmetry(x);
    CHECK(y.w1 == doctest::Approx(0.0));
    CHECK(y.w2 == doctest::Approx(-1.0));
    CHECK(y.g3 == doctest::Approx(1.0));
    const BodyState z = apply_swap_symmetry(y);
    CHECK(z.w1 == doctest::Approx(x.w1));
    CHECK(z.g1 == doctest::Approx(x.g1));

    const InertiaTensor I1 = inertia_from_p(2.0, 2.0, 1.0, 1.6); // Case1: I13 = 0
    const InertiaTensor I2 = apply_swap_symmetry(I1);
    CHECK(I2.I23 == 0.0);
    CHECK(meromorphicity_class(I2).kind == MeromorphicityCase::Case2_I23zero);
}

TEST_CASE("meromorphicity classification") {
    for (int p = 1; p <= 10; ++p) {
        const InertiaTensor I = inertia_from_p(p, 2.0, 1.0, 1.6);
        const auto v = meromorphicity_class(I);
        CHECK(v.kind == MeromorphicityCase::Case1_I13zero);
        CHECK(v.p_value == doctest::Approx(p).epsilon(1e-9));
        CHECK(v.p_is_integer);
        CHECK(v.parity == (p % 2 ? MeromorphicityVerdict::Parity::Odd
                                 : MeromorphicityVerdict::Parity::Even));
    }
    // I11 = I22 degenerates
    InertiaTensor balanced = make_inertia(1.0, 1.0, 1.5, 0.0, 0.3);
    CHECK(meromorphicity_class(balanced).kind == MeromorphicityCase::Degenerate_I11eqI22);
    // both products nonzero, I11 != I22: not meromorphic
    InertiaTensor generic = make_inertia(2.0, 1.0, 1.5, 0.2, 0.3);
    CHECK(meromorphicity_class(generic).kind == MeromorphicityCase::NonMeromorphic);
}

TEST_CASE("Kovalevskaya spectrum contains {2,1,-1} and 1 +- p on Case1 tensors") {
    const InertiaTensor G = make_inertia(2.0, 1.0, 1.5, 0.2, 0.3);
    const auto eg = kovalevskaya_spectrum(G);
    for (const cplx target : {cplx(2.0), cplx(1.0), cplx(-1.0)}) {
        double best = 1e300;
        for (const auto& e : eg) best = std::min(best, std::abs(e - target));
        CHECK(best < 1e-8);
    }

    const InertiaTensor I = inertia_from_p(3.0, 2.0, 1.0, 1.6);
    const auto e3 = kovalevskaya_spectrum(I);
    CHECK(spectrum_distance(e3, {cplx(2), cplx(1), cplx(-1), cplx(4), cplx(-2)}) < 1e-8);

    // conjugate balance conjugates the spectrum
    const auto ec = kovalevskaya_spectrum(G, true);
    std::vector<cplx> conj_of_eg(eg.begin(), eg.end());
    for (auto& v : conj_of_eg) v = std::conj(v);
    double worst = 0.0;
    for (const auto& e : ec) {
        double best = 1e300;
        for (const auto& f : conj_of_eg) best = std::min(best, std::abs(e - f));
        worst = std::max(worst, best);
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("residue eigenvalues: closed form vs dense eigensolver") {
    SuslovParams P;

    SUBCASE("zero parameters") {
        const auto r = residue_eigenvalues(P);
        CHECK(std::abs(r[0]) < 1e-15);
        CHECK(std::abs(r[1]) < 1e-15);
        CHECK(std::abs(r[2]) < 1e-15);
    }

    SUBCASE("meromorphic parameters give (0, p, -p)") {
        const double p = 2.0, d = 0.7;
        const SuslovParams S = params_from_pd(p, d);
        const auto r = residue_eigenvalues(S);
        std::vector<double> re{std::abs(r[0]), std::abs(r[1]), std::abs(r[2])};
        std::sort(re.begin(), re.end());
        CHECK(re[0] < 1e-12);
        CHECK(re[1] == doctest::Approx(p).epsilon(1e-12));
        CHECK(re[2] == doctest::Approx(p).epsilon(1e-12));
    }

    SUBCASE("generic parameters match an independent eigensolve") {
        P.a = 1.0;
        P.b = 0.0;
        P.c1 = 1.0;
        P.c2 = 0.0;
        const auto r = residue_eigenvalues(P);
        // expected +-(1/2) sqrt(-3+4i)
        const cplx expect = 0.5 * std::sqrt(cplx(-3.0, 4.0));
        CHECK(std::abs(r[1] - expect) < 1e-13);

        const auto M = residue_matrix(P);
        Eigen::Matrix3cd A;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) A(i, j) = M[i][j];
        Eigen::ComplexEigenSolver<Eigen::Matrix3cd> es(A);
        for (int i = 0; i < 3; ++i) {
            double best = 1e300;
            for (const auto& rv : r) best = std::min(best, std::abs(es.eigenvalues()(i) - rv));
            CHECK(best < 1e-12);
        }
        // trace-free structure
        CHECK(std::abs(r[0] + r[1] + r[2]) < 1e-13);
    }
}

TEST_CASE("round-trip property: classification recovers p for p = 1..10") {
    for (int p = 1; p <= 10; ++p) {
        double scale = 0.0;
        const InertiaTensor I = inertia_from_p(p, 1.7, 1.0, 1.4, -1, &scale);
        CHECK(scale > 0.0);
        CHECK(std::abs(I.det() - 1.0) < 1e-12);
        CHECK(meromorphicity_class(I).p_value == doctest::Approx(p).epsilon(1e-9));
    }
}

} // TEST_SUITE
