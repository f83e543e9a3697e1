#include <doctest.h>

#include "fixtures.hpp"
#include "l0path/polygon.hpp"

using namespace l0path;

namespace {

std::vector<std::pair<std::size_t, double>> as_pairs(const std::vector<LineS>& lines) {
    std::vector<std::pair<std::size_t, double>> out;
    for (const auto& l : lines) out.emplace_back(l.card, l.error);
    return out;
}

/// Random lines with distinct non-empty supports; errors decrease loosely with card.
std::vector<LineS> random_lines(std::mt19937_64& rng, int count, Index atoms) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<std::uint32_t> mask(0, (1u << atoms) - 1);
    std::vector<LineS> out;
    std::vector<std::uint32_t> seen;
    while (static_cast<int>(out.size()) < count) {
        const std::uint32_t mk = mask(rng);
        if (mk == 0 || std::find(seen.begin(), seen.end(), mk) != seen.end()) continue;
        seen.push_back(mk);
        std::vector<Index> idx;
        for (Index i = 0; i < atoms; ++i)
            if (mk & (1u << i)) idx.push_back(i);
        const double card = static_cast<double>(idx.size());
        out.emplace_back(Support(std::move(idx)), 100.0 * std::exp(-0.6 * card) * (0.5 + u(rng)));
    }
    return out;
}

}  // namespace

TEST_CASE("singleton polygon") {
    const ConcavePolygon p = singleton_polygon(25.0);
    REQUIRE(p.size() == 1);
    CHECK(p.edges()[0].card == 0);
    CHECK(p.edges()[0].error == 25.0);
    CHECK_FALSE(p.edges()[0].explored);
    CHECK(std::isinf(p.upper(0)));
    CHECK(p.lower(0) == 0.0);
    CHECK(p.evaluate(7.0) == std::make_pair(25.0, std::size_t{0}));
    CHECK(singleton_polygon(0.0).check_invariants().empty());
}

TEST_CASE("worked orthonormal folds") {
    ConcavePolygon p = singleton_polygon(25.0);
    const LineS l1(Support{1}, 9.0);
    const Interval i1 = intersect(p, l1);
    CHECK(i1.lo == doctest::Approx(0.0));
    CHECK(i1.hi == doctest::Approx(16.0));
    CHECK(ccv_descent(p, l1).inserted());
    REQUIRE(p.size() == 2);
    CHECK(p.breakpoints()[1] == doctest::Approx(16.0));
    CHECK(p.breakpoints()[2] == 0.0);
    CHECK(p.evaluate(16.0).first == doctest::Approx(25.0));
    CHECK(p.evaluate(16.0).second == 1);

    const LineS dominated(Support{0, 1}, 9.0);
    CHECK(intersect(p, dominated).empty());

    CHECK(ccv_descent(p, LineS(Support{0, 1}, 0.0)).inserted());
    REQUIRE(p.size() == 3);
    CHECK(std::isinf(p.breakpoints()[0]));
    CHECK(p.breakpoints()[1] == doctest::Approx(16.0));
    CHECK(p.breakpoints()[2] == doctest::Approx(9.0));
    CHECK(p.breakpoints()[3] == 0.0);
    CHECK(p.check_invariants().empty());
}

TEST_CASE("dominated and duplicate lines leave the polygon bit-identical") {
    ConcavePolygon p = singleton_polygon(25.0);
    ccv_descent(p, LineS(Support{1}, 9.0));
    const auto edges_before = p.edges();
    const auto bps_before = p.breakpoints();
    CHECK(ccv_descent(p, LineS(Support{0, 1}, 9.0)).status == DescentStatus::dominated);
    CHECK(ccv_descent(p, LineS(Support{1}, 5.0)).status == DescentStatus::duplicate);
    CHECK(p.breakpoints() == bps_before);
    REQUIRE(p.edges().size() == edges_before.size());
    for (std::size_t j = 0; j < p.size(); ++j) {
        CHECK(p.edges()[j].support == edges_before[j].support);
        CHECK(p.edges()[j].error == edges_before[j].error);
    }
}

TEST_CASE("equal slopes keep the smaller error, the incumbent on exact ties") {
    ConcavePolygon p = singleton_polygon(25.0);
    ccv_descent(p, LineS(Support{1}, 9.0));
    CHECK(ccv_descent(p, LineS(Support{0}, 9.0)).status == DescentStatus::dominated);
    CHECK(p.edges()[1].support == Support{1});
    CHECK(ccv_descent(p, LineS(Support{0}, 8.0)).inserted());
    CHECK(p.edges()[1].support == Support{0});
    CHECK(p.size() == 2);
}

TEST_CASE("intersect matches a dense grid scan") {
    std::mt19937_64 rng(21);
    for (int inst = 0; inst < 40; ++inst) {
        auto lines = random_lines(rng, 8, 6);
        const ConcavePolygon poly = ConcavePolygon::envelope_of(lines);
        const LineS probe = random_lines(rng, 1, 6).front();
        if (poly.find(probe.support)) continue;
        const Interval iv = poly.intersect(probe);
        const double hi_scan = 2.0 * (poly.size() > 1 ? poly.breakpoints()[1] : 100.0) + 50.0;
        double lo = infinity, hi = -infinity;
        for (double lam = 0.0; lam <= hi_scan; lam += 1e-3) {
            if (probe.value(lam) < poly.evaluate(lam).first - descent_slack) {
                lo = std::min(lo, lam);
                hi = std::max(hi, lam);
            }
        }
        if (lo > hi) {
            CHECK(iv.empty());
        } else {
            REQUIRE_FALSE(iv.empty());
            CHECK(std::abs(iv.lo - lo) <= 2e-3);
            if (std::isfinite(iv.hi)) CHECK(std::abs(iv.hi - hi) <= 2e-3);
        }
    }
}

TEST_CASE("folding random lines equals the pointwise envelope and is order independent") {
    std::mt19937_64 rng(8);
    for (int inst = 0; inst < 30; ++inst) {
        auto lines = random_lines(rng, 2 + inst % 49, 7);
        lines.emplace_back(Support{}, 150.0);
        ConcavePolygon a = singleton_polygon(150.0);
        for (const auto& l : lines) {
            const auto before = a;
            ccv_descent(a, l);
            REQUIRE(a.check_invariants().empty());
            for (double lam : fixtures::log_probes(1e-3, 1e3, 60)) {
                CHECK(a.evaluate(lam).first <= before.evaluate(lam).first + 1e-12);
            }
        }
        std::shuffle(lines.begin(), lines.end(), rng);
        ConcavePolygon b = singleton_polygon(150.0);
        for (const auto& l : lines) ccv_descent(b, l);

        const auto pairs = as_pairs(lines);
        for (double lam : fixtures::log_probes(1e-3, 1e3, 200)) {
            const double ref = fixtures::lower_envelope(pairs, lam);
            CHECK(std::abs(a.evaluate(lam).first - ref) <= 1e-9 * (1.0 + ref));
            CHECK(std::abs(b.evaluate(lam).first - ref) <= 1e-9 * (1.0 + ref));
        }
        REQUIRE(a.size() == b.size());
        for (std::size_t j = 0; j < a.size(); ++j) {
            CHECK(a.edges()[j].card == b.edges()[j].card);
            CHECK(a.edges()[j].error == b.edges()[j].error);
        }
    }
}

TEST_CASE("evaluate equals the minimum over edges") {
    std::mt19937_64 rng(13);
    const ConcavePolygon poly = ConcavePolygon::envelope_of(random_lines(rng, 30, 6));
    for (double lam : fixtures::log_probes(1e-4, 1e4, 100)) {
        double best = infinity;
        for (const auto& e : poly.edges()) best = std::min(best, e.value(lam));
        CHECK(poly.evaluate(lam).first == doctest::Approx(best).epsilon(1e-12));
    }
}

TEST_CASE("descent removes covered edges and marks the newcomer unexplored") {
    ConcavePolygon p = singleton_polygon(25.0);
    ccv_descent(p, LineS(Support{1}, 9.0));
    p.mutable_edges()[1].explored = true;
    ccv_descent(p, LineS(Support{0, 1}, 0.0));
    // A line with slope 1 through the whole middle interval replaces {1}.
    const DescentResult r = ccv_descent(p, LineS(Support{0}, 4.0));
    CHECK(r.inserted());
    CHECK(r.removed == 1);
    REQUIRE(p.size() == 3);
    CHECK(p.edges()[1].support == Support{0});
    CHECK_FALSE(p.edges()[1].explored);
    CHECK(p.check_invariants().empty());
}
