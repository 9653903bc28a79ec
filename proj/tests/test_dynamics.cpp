#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>

#include "opinion/dynamics.hpp"
#include "opinion/generators.hpp"
#include "opinion/random.hpp"
#include "opinion/signed_digraph.hpp"

using namespace opinion;

namespace {

SignedDigraph two_agents(int w01, int w10) {
    SignedDigraph g(2);
    g.set_weight(0, 1, w01);
    g.set_weight(1, 0, w10);
    return g;
}

TraitAssignment uniform_traits(std::size_t n, double conf, double rad, double stb) {
    return TraitAssignment(n, InnerTraits{conf, rad, stb});
}

// Fan-in fixture: agent 0 is influenced by agents 1..m (weight +1), all of
// whom hold opinion `other` while agent 0 holds `self`. Agents 1..m have no
// in-edges besides their self-loops.
SignedDigraph fan_in(std::size_t m) {
    SignedDigraph g(m + 1);
    for (std::size_t j = 1; j <= m; ++j) g.set_weight(0, j, 1);
    return g;
}

} // namespace

TEST_CASE("classification bands match the printed interval conventions") {
    // Delta = x_i - w_ij x_j, evaluated by hand against the band bounds.
    auto g = two_agents(1, 0);

    // identical opinions: Delta = 0 -> comparable
    auto p = classify_neighbours(0, {0.5, 0.5}, g);
    CHECK(p.comparable == 2);  // neighbour plus self-loop
    CHECK(p.total() == 2);

    // Delta = 0.4: closed lower bound of the "less" band
    p = classify_neighbours(0, {0.9, 0.5}, g);
    CHECK(p.less == 1);
    CHECK(p.comparable == 1);  // self

    // negative edge: Delta = 0.5 - (-1)(-0.9) = -0.4, closed upper bound of "more"
    p = classify_neighbours(0, {0.5, -0.9}, two_agents(-1, 0));
    CHECK(p.more == 1);

    // Delta = 1.2: closed lower bound of "much less"
    p = classify_neighbours(0, {1.0, -0.2}, g);
    CHECK(p.much_less == 1);

    // Delta = -1.2 goes to "much more", not "more"
    p = classify_neighbours(0, {-0.4, 0.8}, g);
    CHECK(p.much_more == 1);
}

TEST_CASE("classification rejects bad inputs") {
    auto g = two_agents(1, 1);
    CHECK_THROWS_AS(classify_neighbours(2, {0.0, 0.0}, g), std::out_of_range);
    CHECK_THROWS_AS(classify_neighbours(0, {0.0, 0.0, 0.0}, g), std::invalid_argument);
    CHECK_THROWS_AS(step({0.0, 0.0, 0.0}, g, uniform_traits(2, 1, 0, 0), EvolutionParams{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(step({0.0, 0.0}, g, uniform_traits(3, 1, 0, 0), EvolutionParams{}),
                    std::invalid_argument);
}

TEST_CASE("saturate") {
    CHECK(saturate(0.3) == 0.3);
    CHECK(saturate(1.5) == 1.0);
    CHECK(saturate(-2.0) == -1.0);
    CHECK(saturate(1.0) == 1.0);
    CHECK_THROWS_AS(saturate(std::nan("")), std::domain_error);
    CHECK_THROWS_AS(saturate(INFINITY), std::domain_error);
}

TEST_CASE("fully stubborn population is a fixed point of step") {
    auto g = gen_small_world(12, 4, 0.3, 0.6, 7);
    RandomSource rng(3);
    OpinionVector x;
    for (int i = 0; i < 12; ++i) x.push_back(rng.opinion());
    auto out = step(x, g, uniform_traits(12, 0.0, 0.0, 1.0), EvolutionParams{});
    CHECK(out == x);
}

TEST_CASE("conformist pull: all outside neighbours agreeing more") {
    // m = 4 neighbours at opinion 0.5, agent 0 at 0: every Delta = -0.5, so
    // all four sit in the "more" band while the self-loop sits in
    // "comparable". The update law then raises x_0 by lambda * 4 / 5 -- the
    // self-loop keeps the full +lambda of the motivating prose out of reach.
    auto g = fan_in(4);
    OpinionVector x{0.0, 0.5, 0.5, 0.5, 0.5};
    TraitAssignment psi = uniform_traits(5, 0.0, 0.0, 1.0);
    psi[0] = InnerTraits{1.0, 0.0, 0.0};

    auto out = step(x, g, psi, EvolutionParams{});
    const double expected = 0.0 + (0.4 / 5.0) * 4.0;
    CHECK(out[0] == expected);
    for (int j = 1; j <= 4; ++j) CHECK(out[j] == 0.5);
}

TEST_CASE("one much-more neighbour exactly offsets the self-loop dilution") {
    // xi-weighted bucket: 2*1 + 2 = 4 = |N_i|, so the change is exactly
    // lambda (the division by 4 is exact in binary).
    SignedDigraph g(4);
    g.set_weight(0, 1, 1);
    g.set_weight(0, 2, 1);
    g.set_weight(0, 3, 1);
    OpinionVector x{-0.4, 0.2, 0.2, 0.9};  // Deltas: -0.6, -0.6, -1.3
    TraitAssignment psi = uniform_traits(4, 0.0, 0.0, 1.0);
    psi[0] = InnerTraits{1.0, 0.0, 0.0};

    auto p = classify_neighbours(0, x, g);
    REQUIRE(p.more == 2);
    REQUIRE(p.much_more == 1);

    auto out = step(x, g, psi, EvolutionParams{});
    CHECK(out[0] == -0.4 + 0.4);
}

TEST_CASE("radical term saturates at the boundary") {
    // beta = 1, every neighbour comparable, x_i = 0.5: raw change is
    // 0.4 * 5 * 0.5 = 1.0, saturated to +1.
    SignedDigraph g(3);
    g.set_weight(0, 1, 1);
    g.set_weight(0, 2, 1);
    OpinionVector x{0.5, 0.5, 0.5};
    TraitAssignment psi = uniform_traits(3, 0.0, 1.0, 0.0);

    auto p = classify_neighbours(0, x, g);
    REQUIRE(p.comparable == 3);

    auto out = step(x, g, psi, EvolutionParams{});
    CHECK(out[0] == 1.0);
}

TEST_CASE("evolve composes step") {
    auto g = gen_lattice(10, 4, 0.77, 21);
    RandomSource rng(5);
    OpinionVector x0;
    for (int i = 0; i < 10; ++i) x0.push_back(rng.opinion());
    auto psi = uniform_traits(10, 0.5, 0.2, 0.3);
    EvolutionParams params;

    CHECK(evolve(x0, g, psi, params, 0) == x0);
    auto manual = step(step(x0, g, psi, params), g, psi, params);
    CHECK(evolve(x0, g, psi, params, 2) == manual);

    auto traj = evolve_trajectory(x0, g, psi, params, 2);
    REQUIRE(traj.size() == 3);
    CHECK(traj[0] == x0);
    CHECK(traj[2] == manual);
}

TEST_CASE("evolve is the identity for a fully stubborn population") {
    auto g = gen_ring(8, 0.5, 2);
    OpinionVector x0{0.1, -0.9, 0.4, 1.0, -1.0, 0.0, 0.6, -0.2};
    CHECK(evolve(x0, g, uniform_traits(8, 0.0, 0.0, 1.0), EvolutionParams{}, 25) == x0);
}

TEST_CASE("average_traits") {
    CHECK_THROWS_AS(average_traits({}), std::invalid_argument);

    auto avg = average_traits(uniform_traits(7, 0.2, 0.3, 0.5));
    CHECK(avg.conformism == doctest::Approx(0.2));
    CHECK(avg.radicalism == doctest::Approx(0.3));
    CHECK(avg.stubbornness == doctest::Approx(0.5));

    TraitAssignment two{InnerTraits{1, 0, 0}, InnerTraits{0, 1, 0}};
    avg = average_traits(two);
    CHECK(avg.conformism == 0.5);
    CHECK(avg.radicalism == 0.5);
    CHECK(avg.stubbornness == 0.0);
    CHECK(avg.on_simplex());

    // nominal mix from the reference scenario: 60/30/10
    auto nominal = average_traits(uniform_traits(100, 0.6, 0.3, 0.1));
    CHECK(nominal.conformism == doctest::Approx(0.6));
    CHECK(nominal.radicalism == doctest::Approx(0.3));
    CHECK(nominal.stubbornness == doctest::Approx(0.1));
}

TEST_CASE("property: bucket counts partition the neighbour set") {
    RandomSource rng(99);
    int checked = 0;
    for (int rep = 0; checked < 1000; ++rep) {
        std::size_t n = 5 + rng.index(20);
        SignedDigraph g = rep % 2 == 0 ? gen_small_world(n, 4, 0.4, 0.5, 1000 + rep)
                                       : gen_complete(n, 0.5, 2000 + rep);
        OpinionVector x;
        for (std::size_t i = 0; i < n; ++i) x.push_back(rng.opinion());
        for (std::size_t agent = 0; agent < n; ++agent) {
            auto p = classify_neighbours(agent, x, g);
            CHECK(p.total() == g.in_degree(agent));
            ++checked;
        }
    }
    CHECK(checked >= 1000);
}

TEST_CASE("property: opinions stay bounded and reruns are bit-identical") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = gen_small_world(30, 4, 0.3, 0.77, seed);
        RandomSource rng(seed * 31 + 7);
        OpinionVector x0;
        for (int i = 0; i < 30; ++i) x0.push_back(rng.opinion());
        TraitAssignment psi;
        for (int i = 0; i < 30; ++i) {
            double u = rng.next_double(), v = rng.next_double();
            if (u > v) std::swap(u, v);
            psi.push_back(InnerTraits{u, v - u, 1.0 - v});
        }
        auto traj = evolve_trajectory(x0, g, psi, EvolutionParams{}, 40);
        for (const auto& state : traj)
            for (double value : state) {
                CHECK(value >= -1.0);
                CHECK(value <= 1.0);
            }
        auto rerun = evolve_trajectory(x0, g, psi, EvolutionParams{}, 40);
        CHECK(std::memcmp(traj.back().data(), rerun.back().data(),
                          traj.back().size() * sizeof(double)) == 0);
        CHECK(traj == rerun);
    }
}

TEST_CASE("property: lambda regroups agreeing neighbours into the comparable band") {
    // Nine stubborn neighbours at 0.6; agent 0 fully conformist at 0.0, so
    // every outside Delta = -0.6 (band "more"). One step raises x_0 by
    // 0.4 * 9/10 = 0.36 and every outside neighbour lands in "comparable".
    const std::size_t m = 9;
    auto g = fan_in(m);
    OpinionVector x(m + 1, 0.6);
    x[0] = 0.0;
    TraitAssignment psi = uniform_traits(m + 1, 0.0, 0.0, 1.0);
    psi[0] = InnerTraits{1.0, 0.0, 0.0};

    auto before = classify_neighbours(0, x, g);
    REQUIRE(before.more == m);
    REQUIRE(before.comparable == 1);

    auto next = step(x, g, psi, EvolutionParams{});
    auto after = classify_neighbours(0, next, g);
    CHECK(after.more == 0);
    CHECK(after.comparable == m + 1);
}

TEST_CASE("property: one step moves boundary much-more neighbours one band up, two steps to comparable") {
    // The xi = 2 step spans one band width (0.8) asymptotically but never
    // exceeds it, so much-more neighbours need two steps to look comparable.
    const std::size_t m = 9;
    auto g = fan_in(m);
    OpinionVector x(m + 1, 0.8);
    x[0] = -0.4;  // Delta = -1.2: much_more, at the band boundary
    TraitAssignment psi = uniform_traits(m + 1, 0.0, 0.0, 1.0);
    psi[0] = InnerTraits{1.0, 0.0, 0.0};

    REQUIRE(classify_neighbours(0, x, g).much_more == m);

    auto one = step(x, g, psi, EvolutionParams{});
    auto after_one = classify_neighbours(0, one, g);
    CHECK(after_one.much_more == 0);
    CHECK(after_one.more == m);

    auto two = step(one, g, psi, EvolutionParams{});
    auto after_two = classify_neighbours(0, two, g);
    CHECK(after_two.comparable == m + 1);
}

TEST_CASE("property: purely conformist population settles into a comparable band") {
    auto g = gen_complete(40, 1.0, 11);
    auto psi = uniform_traits(40, 1.0, 0.0, 0.0);
    EvolutionParams params;
    RandomSource rng(123);
    OpinionVector x;
    for (int i = 0; i < 40; ++i) x.push_back(rng.opinion());

    bool settled = false;
    for (int k = 0; k < 500 && !settled; ++k) {
        auto next = step(x, g, psi, params);
        settled = next == x;
        x = std::move(next);
    }
    REQUIRE(settled);
    for (std::size_t i = 0; i < x.size(); ++i) {
        auto p = classify_neighbours(i, x, g);
        CHECK(p.comparable == 40);
    }
}
