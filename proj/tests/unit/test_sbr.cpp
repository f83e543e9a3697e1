#include <doctest.h>

#include "fixtures.hpp"
#include "l0path/errors.hpp"
#include "l0path/sbr.hpp"

using namespace l0path;

namespace {

/// Atoms a = (1,1,0.1)/|.|, b = e1, c = e2 and y = e1 + e2: at a tiny lambda
/// the descent adds a, b, c and then drops a.
ProblemPtr three_atom_problem() {
    Eigen::MatrixXd a(3, 3);
    a.col(0) = Eigen::Vector3d(1.0, 1.0, 0.1).normalized();
    a.col(1) = Eigen::Vector3d(1.0, 0.0, 0.0);
    a.col(2) = Eigen::Vector3d(0.0, 1.0, 0.0);
    return make_problem(build_dictionary(a), Eigen::Vector3d(1.0, 1.0, 0.0));
}

/// Brute-force window check: lambda in [dE_add(S), dE_rmv(S)] with every
/// single-replacement error recomputed by a dense solve.
void check_local_optimality(const Eigen::MatrixXd& a, const Eigen::VectorXd& y, const Support& s, double lambda) {
    const double tol = 1e-9 * (1.0 + y.squaredNorm());
    const double e = fixtures::dense_error(a, y, s);
    const auto cap = static_cast<std::size_t>(std::min(a.rows(), a.cols()));
    double add = 0.0, rmv = infinity;
    for (Index i = 0; i < a.cols(); ++i) {
        if (s.contains(i)) {
            rmv = std::min(rmv, fixtures::dense_error(a, y, s.without(i)) - e);
        } else if (s.size() < cap) {
            add = std::max(add, e - fixtures::dense_error(a, y, s.with(i)));
        }
    }
    CHECK(add <= lambda + tol);
    CHECK(lambda <= rmv + tol);
}

}  // namespace

TEST_CASE("identity examples") {
    const auto p = fixtures::identity_problem();
    SUBCASE("large lambda keeps the empty support") {
        const SbrOutcome r = sbr(p, 20.0);
        CHECK(r.state.support().empty());
        CHECK(r.replacements == 0);
    }
    SUBCASE("lambda = 10 selects the second atom") {
        const SbrOutcome r = sbr(p, 10.0);
        CHECK(r.state.support() == Support{1});
        CHECK(r.cost(10.0) == doctest::Approx(19.0));
        CHECK(r.delta_e_add == doctest::Approx(9.0));
        CHECK(r.ell_add == 0);
    }
    SUBCASE("removal quantities") {
        const auto full = ActiveSetState::from_support(p, Support{0, 1});
        CHECK(delta_e_rmv(full) == doctest::Approx(9.0));
        CHECK(ell_rmv(full) == 0);
        const auto single = ActiveSetState::from_support(p, Support{0});
        CHECK(delta_e_rmv(single) == doctest::Approx(25.0 - single.error()));
        CHECK(ell_rmv(single) == 0);
        const auto empty = ActiveSetState::empty(p);
        CHECK_THROWS_AS(delta_e_rmv(empty), Error);
        CHECK_THROWS_AS(ell_rmv(empty), Error);
    }
    SUBCASE("full support has nothing to add") {
        const SbrOutcome r = sbr(p, 1.0, Support{0, 1});
        CHECK(r.delta_e_add == 0.0);
        CHECK(r.ell_add == no_atom);
    }
}

TEST_CASE("three-atom descent adds three atoms then removes the first") {
    SbrOptions opts;
    opts.record_trace = true;
    const SbrOutcome r = sbr(three_atom_problem(), 1e-5, Support{}, opts);
    REQUIRE(r.trace.size() == 4);
    CHECK(r.trace[0].insertion);
    CHECK(r.trace[0].atom == 0);
    CHECK(r.trace[1].insertion);
    CHECK(r.trace[1].atom == 1);
    CHECK(r.trace[2].insertion);
    CHECK(r.trace[2].atom == 2);
    CHECK_FALSE(r.trace[3].insertion);
    CHECK(r.trace[3].atom == 0);
    CHECK(r.state.support() == Support{1, 2});
    for (std::size_t k = 1; k < r.trace.size(); ++k) CHECK(r.trace[k].cost < r.trace[k - 1].cost);
}

TEST_CASE("forbidden first removal") {
    SbrOptions opts;
    opts.forbid_first_removal = 0;
    const SbrOutcome r = sbr(three_atom_problem(), 1e-5, Support{0, 1, 2}, opts);
    CHECK(r.state.support() == Support{0, 1, 2});
    CHECK(r.replacements == 0);
    const SbrOutcome free_run = sbr(three_atom_problem(), 1e-5, Support{0, 1, 2});
    CHECK(free_run.state.support() == Support{1, 2});
}

TEST_CASE("iteration cap") {
    SbrOptions opts;
    opts.max_iterations = 1;
    try {
        (void)sbr(three_atom_problem(), 1e-5, Support{}, opts);
        FAIL("expected CapExceeded");
    } catch (const CapExceeded& e) {
        CHECK(e.code() == ErrorCode::cap_exceeded);
        CHECK(e.partial().state.support() == Support{0});
    }
}

TEST_CASE("lambda = 0 reproduces forward OLS") {
    std::mt19937_64 rng(2024);
    for (int inst = 0; inst < 30; ++inst) {
        const Index n = 6 + inst % 15;
        const Index m = n + 1 + inst % 5;
        const Eigen::MatrixXd a = fixtures::gaussian_matrix(m, n, rng);
        const Eigen::VectorXd y = fixtures::gaussian_vector(m, rng);
        SbrOptions opts;
        opts.record_trace = true;
        const SbrOutcome r = sbr(make_problem(build_dictionary(a), y), 0.0, Support{}, opts);
        const auto steps = static_cast<std::size_t>(n);
        REQUIRE(r.trace.size() == steps);
        const auto ref = fixtures::forward_ols(a, y, steps);
        for (std::size_t k = 0; k < steps; ++k) {
            CHECK(r.trace[k].insertion);
            CHECK(r.trace[k].atom == ref[k]);
        }
    }
}

TEST_CASE("outputs are locally optimal and report the best insertion") {
    std::mt19937_64 rng(99);
    for (int inst = 0; inst < 25; ++inst) {
        const Eigen::MatrixXd a = fixtures::gaussian_matrix(10, 8, rng);
        const Eigen::VectorXd y = fixtures::sparse_observation(a, 3, 0.3, rng);
        const auto p = make_problem(build_dictionary(a), y);
        for (double lambda : {0.01, 0.1, 1.0, 5.0}) {
            SbrOptions opts;
            opts.record_trace = true;
            const SbrOutcome r = sbr(p, lambda, Support{}, opts);
            check_local_optimality(a, y, r.state.support(), lambda);
            for (std::size_t k = 1; k < r.trace.size(); ++k) CHECK(r.trace[k].cost < r.trace[k - 1].cost);

            const Support& s = r.state.support();
            const double e = fixtures::dense_error(a, y, s);
            double best = 0.0;
            Index arg = no_atom;
            for (Index i = 0; i < a.cols(); ++i) {
                if (s.contains(i)) continue;
                const double g = e - fixtures::dense_error(a, y, s.with(i));
                if (arg == no_atom || g > best) {
                    best = g;
                    arg = i;
                }
            }
            CHECK(r.delta_e_add == doctest::Approx(std::max(best, 0.0)).epsilon(1e-8));
            CHECK(r.ell_add == arg);
        }
    }
}

TEST_CASE("removal quantities match dense removals") {
    std::mt19937_64 rng(4);
    const Eigen::MatrixXd a = fixtures::gaussian_matrix(9, 7, rng);
    const Eigen::VectorXd y = fixtures::gaussian_vector(9, rng);
    const auto p = make_problem(build_dictionary(a), y);
    const Support s{0, 2, 3, 6};
    const auto state = ActiveSetState::from_support(p, s);
    double best = infinity;
    Index arg = no_atom;
    for (Index i : s) {
        const double c = fixtures::dense_error(a, y, s.without(i)) - fixtures::dense_error(a, y, s);
        if (c < best) {
            best = c;
            arg = i;
        }
    }
    CHECK(delta_e_rmv(state) == doctest::Approx(best).epsilon(1e-9));
    CHECK(ell_rmv(state) == arg);
}
