#include "support/closed_forms.hpp"
#include "support/random_states.hpp"

#include "tqmem/bounds.hpp"
#include "tqmem/decoherence.hpp"
#include "tqmem/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace tqm;

namespace {

using M = ProjectiveQubitMeasurement;

EnvironmentSpec env(EnvironmentKind kind, double s, double coupling = 0.1) {
    return {kind, s, coupling, 1.0, 1.0, 1.0};
}

const BellDiagonalState kFig3{-0.6, 0.5, 0.5};
const BellDiagonalState kFig4{1.0, -1.0, 1.0};
const BellDiagonalState kMixed{0.0, 0.0, 0.0};

void check_invariants(const BoundsSample& b) {
    const double gain = std::max(0.0, b.delta);
    CHECK(b.u_adabi >= b.u_berta);
    CHECK(b.k_adabi >= b.k_berta);
    CHECK(std::abs((b.u_adabi - b.u_berta) - gain) <= 1e-12);
    CHECK(std::abs((b.k_adabi - b.k_berta) - gain) <= 1e-12);
    CHECK(b.s_qb + b.s_rb >= b.u_adabi - 1e-12);
    CHECK(std::abs(b.delta - (b.i_ab - b.i_qb - b.i_rb)) <= 1e-12);
}

}  // namespace

TEST_CASE("complementarity") {
    CHECK(ObservablePair::pauli_xz().complementarity() == 0.5);
    CHECK(complementarity(ObservablePair(M::sigma_z(), M::sigma_z())) == 1.0);
    CHECK(complementarity(ObservablePair(M::sigma_x(), M::sigma_y())) == 0.5);
    const ObservablePair tilted(M::sigma_z(), M(Eigen::Vector3d(std::sqrt(0.75), 0.0, 0.5)));
    CHECK(tilted.complementarity() == doctest::Approx(0.75).epsilon(1e-15));
    const ObservablePair anti(M::sigma_z(), M(-Eigen::Vector3d::UnitZ()));
    CHECK(anti.complementarity() == 1.0);
}

TEST_CASE("berta_bound: examples") {
    const auto xz = ObservablePair::pauli_xz();
    CHECK(std::abs(berta_bound(kFig4, xz)) <= 1e-12);
    CHECK(berta_bound(kMixed, xz) == doctest::Approx(2.0).epsilon(1e-14));
    // S(rho) = 1.478897902987479 for spectrum {0.1, 0.65, 0.1, 0.15}, S(B) = 1
    CHECK(berta_bound(kFig3, xz) == doctest::Approx(1.478897902987479).epsilon(1e-13));
    // identical observables: no incompatibility term
    CHECK(berta_bound(kMixed, ObservablePair(M::sigma_z(), M::sigma_z())) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("adabi_bound: examples") {
    const auto xz = ObservablePair::pauli_xz();
    const auto bell = adabi_bound(kFig4, xz);
    CHECK(std::abs(bell.delta) <= 1e-12);
    CHECK(std::abs(bell.u_adabi) <= 1e-12);

    const auto mixed = adabi_bound(kMixed, xz);
    CHECK(std::abs(mixed.delta) <= 1e-14);
    CHECK(mixed.u_adabi == doctest::Approx(2.0).epsilon(1e-14));

    // delta = I(A;B) - (1 - h(0.8)) - (1 - h(0.75))
    const double i_ab = 0.521102097012521;
    const double expected_delta = i_ab - (1.0 - 0.72192809488736234787) - (1.0 - 0.81127812445913286391);
    const auto fig3 = adabi_bound(kFig3, xz);
    CHECK(fig3.delta == doctest::Approx(expected_delta).epsilon(1e-12));
    CHECK(fig3.delta == doctest::Approx(0.054308316359016).epsilon(1e-12));
    CHECK(fig3.u_adabi == doctest::Approx(1.533206219346495).epsilon(1e-13));
}

TEST_CASE("key rates: examples") {
    const auto xz = ObservablePair::pauli_xz();
    CHECK(key_rate_berta(kFig4, xz) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(key_rate_adabi(kFig4, xz) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(key_rate_berta(kMixed, xz) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(key_rate_berta({0.0, 0.0, 0.5}, xz) == doctest::Approx(-0.81127812445913286391).epsilon(1e-13));
    CHECK(key_rate_berta(kFig3, xz) == doctest::Approx(-0.533206219346495).epsilon(1e-12));
    CHECK(key_rate_adabi(kFig3, xz) == doctest::Approx(-0.478897902987479).epsilon(1e-12));

    // delta <= 0 leaves the key rate unchanged; repeating an observable
    // counts its Holevo term twice and makes that common.
    const ObservablePair zz(M::sigma_z(), M::sigma_z());
    CHECK(adabi_bound({0.0, 0.0, 1.0}, zz).delta == doctest::Approx(-1.0).epsilon(1e-12));
    testgen::Rng rng(3);
    int seen = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const auto s = testgen::bell_diagonal(rng);
        if (adabi_bound(s, zz).delta <= 0.0) {
            ++seen;
            CHECK(key_rate_adabi(s, zz) == key_rate_berta(s, zz));
            CHECK(adabi_bound(s, zz).u_adabi == berta_bound(s, zz));
        }
    }
    CHECK(seen > 0);
}

TEST_CASE("key rate turns negative in the sub-Ohmic Fermionic bath") {
    const auto b = bounds_at(kFig4, ObservablePair::pauli_xz(), 20.0, env(EnvironmentKind::fermionic, 0.5));
    CHECK(b.k_adabi < 0.0);
    CHECK(b.k_berta < 0.0);
}

TEST_CASE("bounds_at: t = 0 reproduces the static operations") {
    const auto xz = ObservablePair::pauli_xz();
    for (const auto& s : {kFig3, kFig4, kMixed}) {
        for (const auto kind : {EnvironmentKind::fermionic, EnvironmentKind::bosonic}) {
            const auto b = bounds_at(s, xz, 0.0, env(kind, 1.0));
            CHECK(b.t == 0.0);
            CHECK(b.alpha == 1.0);
            CHECK(b == evaluate_bounds(s, xz));
            CHECK(b.u_berta == berta_bound(s, xz));
            CHECK(b.u_adabi == adabi_bound(s, xz).u_adabi);
            CHECK(b.k_berta == key_rate_berta(s, xz));
            CHECK(b.k_adabi == key_rate_adabi(s, xz));
        }
    }
}

TEST_CASE("bounds_at: long-time limits for the (-0.6, 0.5, 0.5) state") {
    const auto xz = ObservablePair::pauli_xz();
    const auto f = bounds_at(kFig3, xz, 20.0, env(EnvironmentKind::fermionic, 0.5));
    CHECK(std::abs(f.u_adabi - 2.0) < 0.05);

    // c3 survives the Bosonic channel, so the bound stays away from 2.
    for (double t = 0.0; t <= 20.0; t += 0.5) {
        const auto b = bounds_at(kFig3, xz, t, env(EnvironmentKind::bosonic, 0.5));
        CHECK(b.u_adabi <= 2.0 - 0.05);
    }
}

TEST_CASE("bounds invariants on random states, directions and times") {
    testgen::Rng rng(41);
    std::uniform_real_distribution<double> ut(0.0, 20.0);
    const std::vector<EnvironmentSpec> specs = {
        env(EnvironmentKind::fermionic, 0.5), env(EnvironmentKind::fermionic, 1.0),
        env(EnvironmentKind::fermionic, 2.5), env(EnvironmentKind::bosonic, 0.5),
        env(EnvironmentKind::bosonic, 2.5, 2.0)};
    for (int trial = 0; trial < 300; ++trial) {
        const auto s = testgen::bell_diagonal(rng);
        const ObservablePair pair(M(testgen::unit_vector(rng)), M(testgen::unit_vector(rng)));
        const auto& spec = specs[static_cast<std::size_t>(trial) % specs.size()];
        check_invariants(bounds_at(s, pair, ut(rng), spec));
    }
}

TEST_CASE("bounds agree with the Bell-diagonal closed forms") {
    testgen::Rng rng(43);
    for (int trial = 0; trial < 300; ++trial) {
        const auto s = testgen::bell_diagonal(rng);
        const Eigen::Vector3d nq = testgen::unit_vector(rng);
        const Eigen::Vector3d nr = testgen::unit_vector(rng);
        const auto b = evaluate_bounds(s, ObservablePair(M(nq), M(nr)));
        const auto cf = closed_form::bounds(s, nq, nr);
        CHECK(std::abs(b.u_berta - cf.u_berta) <= 1e-10);
        CHECK(std::abs(b.u_adabi - cf.u_adabi) <= 1e-10);
        CHECK(std::abs(b.delta - cf.delta) <= 1e-10);
        CHECK(std::abs(b.k_berta - cf.k_berta) <= 1e-10);
        CHECK(std::abs(b.k_adabi - cf.k_adabi) <= 1e-10);
        CHECK(std::abs(b.s_qb - closed_form::measured_conditional_entropy(s, nq)) <= 1e-10);
    }
}

TEST_CASE("Bosonic channel fixes states with c1 = c2 = 0") {
    const auto xz = ObservablePair::pauli_xz();
    const BellDiagonalState s{0.0, 0.0, 0.7};
    const auto spec = env(EnvironmentKind::bosonic, 0.5, 3.0);
    const auto b0 = bounds_at(s, xz, 0.0, spec);
    for (const double t : {0.5, 3.0, 20.0}) {
        auto b = bounds_at(s, xz, t, spec);
        CHECK(b.alpha < 1.0);
        b.t = 0.0;
        b.alpha = 1.0;
        CHECK(b == b0);
    }
}

TEST_CASE("Fermionic bounds depend on B and t only through B^2 I_s(t)") {
    const auto xz = ObservablePair::pauli_xz();
    const double k = 1.5;
    for (const double s : {0.5, 1.0}) {
        const auto strong = env(EnvironmentKind::fermionic, s, 0.1);
        const auto weak = env(EnvironmentKind::fermionic, s, 0.1 / k);
        const double t = 2.0;
        const double target = k * k * i_s(t, strong);
        // I_s is increasing for s <= 1, so bisection finds t'.
        double lo = t;
        double hi = 31.0;
        REQUIRE(i_s(hi, strong) > target);
        for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
            const double mid = 0.5 * (lo + hi);
            (i_s(mid, strong) < target ? lo : hi) = mid;
        }
        const auto a = bounds_at(kFig3, xz, t, strong);
        const auto b = bounds_at(kFig3, xz, 0.5 * (lo + hi), weak);
        CHECK(b.alpha == doctest::Approx(a.alpha).epsilon(1e-12));
        CHECK(b.u_adabi == doctest::Approx(a.u_adabi).epsilon(1e-10));
        CHECK(b.k_adabi == doctest::Approx(a.k_adabi).epsilon(1e-10));
    }
}

TEST_CASE("bounds_at propagates invalid input") {
    const auto xz = ObservablePair::pauli_xz();
    CHECK_THROWS_AS(bounds_at({1.0, 1.0, 1.0}, xz, 1.0, env(EnvironmentKind::fermionic, 1.0)), InvalidStateError);
    CHECK_THROWS_AS(bounds_at(kFig3, xz, -1.0, env(EnvironmentKind::fermionic, 1.0)), DomainError);
}
