#include <doctest.h>

#include "l0path/errors.hpp"
#include "l0path/eval_select.hpp"

using namespace l0path;

namespace {

PathResult two_candidates() {
    PathResult p;
    p.supports = {Support{3}, Support{3, 5}};
    p.errors = {1.0, 0.5};
    p.lambdas = {0.7, 0.0};
    p.continuous = {true};
    p.clamped = {false, false};
    return p;
}

}  // namespace

TEST_CASE("MDLc criterion by direct evaluation") {
    // m = 100: log 1 + log(100) 2/97 vs log 0.5 + log(100) 3/96.
    CHECK(mdlc_criterion(1.0, 1, 100) == doctest::Approx(0.09495).epsilon(1e-3));
    CHECK(mdlc_criterion(0.5, 2, 100) == doctest::Approx(-0.5492).epsilon(1e-3));
    const PathResult p = two_candidates();
    CHECK(p.supports[mdlc_select(p, 100)].size() == 2);
}

TEST_CASE("MDLc eligibility, exact fits and errors") {
    PathResult single;
    single.supports = {Support{}};
    single.errors = {4.0};
    single.lambdas = {0.0};
    CHECK(mdlc_select(single, 10) == 0);

    PathResult tall;
    tall.supports = {Support{0, 1, 2}};
    tall.errors = {1.0};
    tall.lambdas = {0.0};
    CHECK_THROWS_AS(mdlc_select(tall, 5), Error);

    PathResult exact;
    exact.supports = {Support{}, Support{1}, Support{1, 2}, Support{1, 2, 3}};
    exact.errors = {10.0, 3.0, 1e-25, 0.0};
    exact.lambdas = {7.0, 3.0, 1e-10, 0.0};
    CHECK(mdlc_select(exact, 50) == 2);
    CHECK(ic_select(exact, 50, IcRule::mdl) == 2);
}

TEST_CASE("MDLc selection does not depend on segment order") {
    PathResult p;
    p.supports = {Support{}, Support{1}, Support{1, 4}, Support{1, 4, 6}, Support{0, 1, 4, 6}};
    p.errors = {40.0, 12.0, 5.0, 4.2, 4.1};
    p.lambdas = {28, 7, 0.8, 0.1, 0};
    const std::size_t pick = mdlc_select(p, 30);
    PathResult q = p;
    std::reverse(q.supports.begin(), q.supports.end());
    std::reverse(q.errors.begin(), q.errors.end());
    CHECK(q.supports[mdlc_select(q, 30)] == p.supports[pick]);
}

TEST_CASE("information criteria family") {
    const PathResult p = two_candidates();
    CHECK(ic_alpha(IcRule::aic, 100) == 2.0);
    CHECK(ic_alpha(IcRule::mdl, 100) == doctest::Approx(std::log(100.0)));
    CHECK(ic_alpha(IcRule::hannan_quinn, 100) == doctest::Approx(2.0 * std::log(std::log(100.0))));
    CHECK(p.supports[ic_select(p, 100, IcRule::mdl)].size() == 2);
    CHECK(p.supports[ic_select(p, 100, 1e6)].size() == 1);
    CHECK(p.supports[ic_select(p, 100, 0.0)].size() == 2);

    PathResult many;
    many.supports = {Support{}, Support{1}, Support{1, 2}, Support{1, 2, 3}, Support{0, 1, 2, 3}};
    many.errors = {50.0, 20.0, 9.0, 8.0, 7.9};
    many.lambdas = {30, 11, 1, 0.1, 0};
    std::size_t last = 100;
    for (double alpha : {0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 30.0, 100.0, 1e4}) {
        const std::size_t card = many.supports[ic_select(many, 20, alpha)].size();
        CHECK(card <= last);
        last = card;
    }
    CHECK(last == 0);
}

TEST_CASE("support error") {
    const auto a = support_error(Support{1, 2, 3}, Support{2, 3, 4});
    CHECK(a.se == 2);
    CHECK(a.tp == 2);
    const auto b = support_error(Support{1, 2, 3}, Support{1, 2, 3});
    CHECK(b.se == 0);
    CHECK(b.tp == 3);
    const auto c = support_error(Support{1, 2, 3}, Support{});
    CHECK(c.se == 3);
    CHECK(c.tp == 0);
}

TEST_CASE("grids") {
    const LambdaGrid g = log_grid(16.0);
    REQUIRE(g.n_points() == 11);
    CHECK(g.values.front() == 16.0);
    CHECK(g.values.back() == doctest::Approx(1.6e-3));
    for (std::size_t i = 1; i < g.n_points(); ++i) {
        CHECK(g.values[i] < g.values[i - 1]);
        CHECK(g.values[i] / g.values[i - 1] == doctest::Approx(std::pow(10.0, -0.4)));
    }
    CHECK_THROWS_AS(log_grid(0.0), Error);
}

TEST_CASE("trial scoring") {
    PathResult p;
    p.supports = {Support{}, Support{2}, Support{2, 7}, Support{1, 2, 7}};
    p.errors = {30.0, 10.0, 2.0, 1.9};
    p.lambdas = {20.0, 8.0, 0.1, 0.0};
    p.continuous = {true, true, true};
    p.clamped = {false, false, false, false};
    const LambdaGrid g = log_grid(20.0, 4.0, 11);

    const TrialScores s = score_trial(Support{2, 7}, p, g, 50);
    CHECK(s.se == 0);
    CHECK(s.tp == 2);
    CHECK(s.order == 2);
    CHECK(s.se == (2 - s.tp) + (s.order - s.tp));
    CHECK(s.lambda_opt < 8.0);
    CHECK(s.lambda_opt > 0.1);
    CHECK(s.j_grid.size() == 11);
    CHECK(s.j_grid[0] == doctest::Approx(30.0));

    PathResult empty_only;
    empty_only.supports = {Support{}};
    empty_only.errors = {30.0};
    empty_only.lambdas = {0.0};
    const TrialScores e = score_trial(Support{2, 7}, empty_only, g, 50);
    CHECK(e.se == 2);
    CHECK(e.tp == 0);
    CHECK(e.order == 0);

    // Truncated path: grid points below the last breakpoint are skipped.
    PathResult cut = p;
    cut.lambdas.back() = 0.05;
    const TrialScores c = score_trial(Support{2, 7}, cut, g, 50);
    CHECK(c.skipped_grid > 0);
    CHECK(std::isnan(c.j_grid.back()));

    CHECK_THROWS_AS(score_trial(Support{2}, p, LambdaGrid{}, 50), Error);
    PathResult above = p;
    above.lambdas = {1e6, 1e5, 1e4, 1e3};
    CHECK_THROWS_AS(score_trial(Support{2}, above, g, 50), Error);
}

TEST_CASE("ties prefer the larger grid value") {
    PathResult p;
    p.supports = {Support{}, Support{4}, Support{4, 9}};
    p.errors = {10.0, 5.0, 1.0};
    p.lambdas = {5.0, 1.0, 0.0};
    // Against truth {9}, the empty support and {4,9} both miss by one atom.
    const LambdaGrid g = log_grid(10.0, 2.0, 5);
    const TrialScores s = score_trial(Support{9}, p, g, 20);
    CHECK(s.se == 1);
    CHECK(s.lambda_opt == g.values.front());
    CHECK(s.order == 0);
}
