#include "doctest.h"

#include <cmath>
#include <random>

#include "foamfit/energy.hpp"

using namespace foamfit;

namespace {

TermPartials partials_at(int id, double s, const DeformationState& state) {
    Invariants inv = invariants(state);
    PrincipalStretches p = principal_stretches(state);
    const double stretches[3] = {p.l1, p.l2, p.l3};
    return term_partials(id, s, inv, stretches);
}

// central difference of the unit term value along the inner weight
double fd_ds(int id, double s, const DeformationState& state, double h = 1e-6) {
    return (partials_at(id, s + h, state).g - partials_at(id, s - h, state).g) / (2.0 * h);
}

ModelSpec random_admissible(std::mt19937_64& rng) {
    auto u = [&] { return (rng() >> 11) * 0x1.0p-53; };
    ModelSpec m;
    for (int id = 1; id <= kTermCount; ++id) {
        if (u() < 0.4) continue;
        TermSpec t;
        t.id = id;
        t.w = 100.0 * u();
        t.w_star = term_has_inner(id) ? 3.0 * u() : 0.0;
        m.terms.push_back(t);
    }
    if (m.terms.empty()) m.terms.push_back({1, 10.0, 0.0});
    return m;
}

}  // namespace

TEST_CASE("volumetric term value") {
    // w [J^s - s ln J - 1] at J = 1.3
    TermPartials tp = partials_at(9, 1.06, DeformationState::tension(1.3));
    CHECK(tp.g == doctest::Approx(0.042520214747486795).epsilon(1e-14));
    CHECK(70.3 * tp.g == doctest::Approx(2.9891710967483216).epsilon(1e-14));
}

TEST_CASE("mixed term value") {
    // w J^s [I1b - 3] at lambda = 1.3
    TermPartials tp = partials_at(11, 4.86, DeformationState::tension(1.3));
    CHECK(tp.g == doctest::Approx(0.35030320256690323).epsilon(1e-14));
    CHECK(79.0 * tp.g == doctest::Approx(27.673953002785353).epsilon(1e-14));
}

TEST_CASE("three-term registry model energy") {
    ModelSpec m = printed_model("leap", Architecture::SI_MI);
    double psi = energy(m, DeformationState::tension(1.3));
    CHECK(psi == doctest::Approx(33.296007919170926).epsilon(1e-13));
}

TEST_CASE("principal-stretch term sums the stretch contributions") {
    DeformationState state = DeformationState::shear(0.1, 0.8);
    PrincipalStretches p = principal_stretches(state);
    const double s = 2.4;
    double expected = 0.0;
    for (double l : {p.l1, p.l2, p.l3}) expected += std::pow(l, s) - s * std::log(l) - 1.0;
    CHECK(partials_at(13, s, state).g == doctest::Approx(expected).epsilon(1e-14));
    // term 14 is the same basis function in the second slot
    CHECK(partials_at(14, s, state).g == partials_at(13, s, state).g);
}

TEST_CASE("energy is exactly zero at the identity") {
    DeformationState id = DeformationState::identity();
    for (const char* foam : {"leap", "turbo"})
        for (Architecture arch : {Architecture::SI_MI, Architecture::SI_PS})
            CHECK(energy(printed_model(foam, arch), id) == 0.0);

    std::mt19937_64 rng(17);
    for (int k = 0; k < 200; ++k) CHECK(energy(random_admissible(rng), id) == 0.0);
}

TEST_CASE("inner-weight partials match finite differences") {
    DeformationState ten = DeformationState::tension(1.25);
    DeformationState shr = DeformationState::shear(0.12, 0.8);
    for (int id : {2, 4, 6, 8, 9, 10, 11, 12, 13, 14}) {
        for (double s : {0.3, 1.1, 2.7}) {
            for (const DeformationState& state : {ten, shr}) {
                double analytic = partials_at(id, s, state).ds;
                CHECK(analytic == doctest::Approx(fd_ds(id, s, state)).epsilon(1e-6));
            }
        }
    }
}

TEST_CASE("terms without an inner weight ignore it") {
    DeformationState state = DeformationState::tension(1.2);
    for (int id : {1, 3, 5, 7}) {
        CHECK(!term_has_inner(id));
        CHECK(partials_at(id, 0.0, state).g == partials_at(id, 5.0, state).g);
        CHECK(partials_at(id, 5.0, state).ds == 0.0);
    }
}

TEST_CASE("exponential overflow guard throws") {
    // exp(s [I1b - 3]) with s large enough to push the argument past the guard
    DeformationState state = DeformationState::tension(1.3);
    CHECK_THROWS_AS(partials_at(2, 1.0e4, state), SaturationError);
    try {
        partials_at(2, 1.0e4, state);
    } catch (const SaturationError& e) {
        CHECK(e.term_id == 2);
    }
}

TEST_CASE("unknown term id rejected") {
    DeformationState state = DeformationState::tension(1.1);
    Invariants inv = invariants(state);
    const double stretches[3] = {1.1, 1.0, 1.0};
    CHECK_THROWS_AS(term_partials(0, 0.0, inv, stretches), DomainError);
    CHECK_THROWS_AS(term_partials(15, 0.0, inv, stretches), DomainError);
}
