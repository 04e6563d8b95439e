/*
   Copyright 2026 The nomacast Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <cmath>
#include <random>

#include <boost/math/special_functions/gamma.hpp>

#include "nomacast/analysis.hpp"
#include "nomacast/incomplete_gamma.hpp"
#include "nomacast/quadrature.hpp"
#include "oracles.hpp"

using namespace nomacast;

namespace {

AnalysisParams params(int m, int k, double snr_db, double r_m = 1.0, double r_u = 6.0,
                      double r_s = 2.0)
{
    LinkConfig cfg;
    cfg.rho = db_to_linear(snr_db);
    cfg.rate_multicast = r_m;
    cfg.rate_unicast = r_u;
    cfg.rate_secrecy = r_s;
    return AnalysisParams::make(m, k, cfg);
}

struct McProbability {
    double value;
    double std_error;
};

template <typename Event>
McProbability oracle_mc(int m, int k, std::uint64_t seed, int draws, Event event)
{
    oracle::GainSampler sampler(seed);
    std::vector<double> others;
    double z1 = 0.0;
    long hits = 0;
    for (int i = 0; i < draws; ++i) {
        sampler.draw(m, k, z1, others);
        hits += event(z1, others);
    }
    const double p = static_cast<double>(hits) / draws;
    return {p, std::sqrt(p * (1.0 - p) / draws)};
}

} // namespace

TEST_SUITE("incomplete_gamma") {

TEST_CASE("hand-evaluated values")
{
    auto g = inc_gamma_int(3, 0.0);
    CHECK(g.upper == doctest::Approx(2.0));
    CHECK(g.lower == 0.0);
    CHECK(inc_gamma_int(1, 1.0).upper == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(inc_gamma_int(3, 2.0).upper == doctest::Approx(10.0 * std::exp(-2.0)).epsilon(1e-14));
    CHECK(factorial_of_shape(5) == 24.0);
    CHECK_THROWS_AS(inc_gamma_int(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(inc_gamma_int(2, -1.0), std::invalid_argument);
    CHECK(gamma_q(4, std::numeric_limits<double>::infinity()) == 0.0);
}

TEST_CASE("complementarity and agreement with boost on random inputs")
{
    std::mt19937_64 gen(8);
    std::uniform_int_distribution<int> shape(1, 30);
    std::uniform_real_distribution<double> arg(0.0, 100.0);
    for (int i = 0; i < 10000; ++i) {
        const int m = shape(gen);
        const double x = arg(gen);
        const auto g = inc_gamma_int(m, x);
        const double total = boost::math::tgamma(static_cast<double>(m));
        CHECK(std::abs(g.upper + g.lower - total) <= 1e-12 * total);
        CHECK(gamma_p(m, x) == doctest::Approx(boost::math::gamma_p(double(m), x)).epsilon(1e-11));
        CHECK(std::abs(gamma_q(m, x) - boost::math::gamma_q(double(m), x)) < 1e-13);
    }
}

}

TEST_SUITE("quadrature") {

TEST_CASE("Chebyshev-Gauss nodes and weights")
{
    const auto two = cheb_rule(2);
    CHECK(two.nodes[0] == doctest::Approx(std::sqrt(0.5)));
    CHECK(two.nodes[1] == doctest::Approx(-std::sqrt(0.5)));
    CHECK(two.weights[0] == doctest::Approx(M_PI / 2));
    CHECK(two.weights[1] == doctest::Approx(M_PI / 2));
    const auto one = cheb_rule(1);
    CHECK(std::abs(one.nodes[0]) < 1e-15);
    CHECK_THROWS(cheb_rule(0));

    const auto many = cheb_rule(37);
    for (std::size_t i = 1; i < many.size(); ++i) {
        CHECK(many.nodes[i] < many.nodes[i - 1]);
    }
    // The rule integrates f(x) sqrt(1 - x^2) / sqrt(1 - x^2); it is exact
    // when f(x) sqrt(1 - x^2) is a polynomial of degree < 2N.
    for (std::size_t n : {1u, 2u, 7u, 100u}) {
        const auto r = cheb_rule(n);
        CHECK(r.integrate([](double x) { return 1.0 / std::sqrt(1.0 - x * x); }, -1.0, 1.0) ==
              doctest::Approx(M_PI).epsilon(1e-12));
        if (n >= 2) {
            CHECK(r.integrate([](double x) { return std::sqrt(1.0 - x * x); }, -1.0, 1.0) ==
                  doctest::Approx(M_PI / 2).epsilon(1e-12));
        }
    }
    // A single node at 0 sees 1 - x^2 as the constant 1.
    CHECK(cheb_rule(1).integrate([](double x) { return std::sqrt(1.0 - x * x); }, -1.0, 1.0) ==
          doctest::Approx(M_PI).epsilon(1e-12));
}

TEST_CASE("adaptive oracle integrator")
{
    CHECK(std::abs(oracle_integrate([](double x) { return x; }, 0.0, 1.0, 1e-10) - 0.5) < 1e-10);
    CHECK(std::abs(oracle_integrate([](double x) { return std::exp(-x); }, 0.0,
                                    std::numeric_limits<double>::infinity(), 1e-8) -
                   1.0) < 1e-8);
}

}

TEST_SUITE("analysis") {

TEST_CASE("parameter relations")
{
    for (double snr : {0.0, 16.0, 40.0}) {
        const auto p = params(10, 11, snr);
        CHECK(p.inverse_gain_lo > 0.0);
        CHECK(p.inverse_gain_lo < p.inverse_gain_hi);
        CHECK(p.unicast_threshold > p.multicast_floor);
        CHECK(1.0 / p.inverse_gain_lo == doctest::Approx(p.unicast_threshold));
    }
}

TEST_CASE("multicast outage")
{
    LinkConfig cfg;
    cfg.rho = 10.0;
    CHECK(multicast_outage_prob(AnalysisParams::make(1, 2, cfg)) ==
          doctest::Approx(1.0 - std::exp(-0.2)).epsilon(1e-12));
    CHECK(multicast_outage_prob(params(10, 11, 200)) < 1e-18);

    const auto p = params(10, 11, 16.0);
    const double c = p.multicast_floor;
    const auto mc = oracle_mc(10, 11, 1, 10'000'000, [&](double z1, const std::vector<double>& o) {
        return std::min(z1, *std::min_element(o.begin(), o.end())) < c;
    });
    CHECK(std::abs(multicast_outage_prob(p) - mc.value) <= 3.0 * mc.std_error + 1e-12);
}

TEST_CASE("unicast outage against independent oracles")
{
    const auto p = params(10, 11, 16.0);
    const auto rho = p.rho;
    const auto n = unicast_outage_prob(p, cheb_rule(20));
    const auto mc = oracle_mc(10, 11, 2, 10'000'000, [&](double z1, const std::vector<double>& o) {
        return oracle::events(z1, o, rho, 1.0, 6.0, 0.0).unicast;
    });
    CHECK(std::abs(n.probability - mc.value) <= std::max(0.005, 3.0 * mc.std_error));

    const double q3 = oracle::other_limited(10, 11, rho, 1.0, 6.0);
    CHECK(std::abs(unicast_outage_prob(p, cheb_rule(500)).other_limited_term - q3) <= 1e-3);
    CHECK(unicast_outage_prob(params(10, 11, -30.0), cheb_rule(20)).probability == 1.0);
}

TEST_CASE("unicast outage bounds, clamping and monotonicity")
{
    const auto rule = cheb_rule(20);
    for (int m : {1, 2, 10}) {
        double previous = 1.0;
        for (double snr = 0.0; snr <= 50.0; snr += 1.0) {
            const auto p = params(m, 11, snr);
            const auto n = unicast_outage_prob(p, rule);
            const auto b = unicast_outage_bounds(p);
            CHECK(n.probability >= b.lower - 1e-12);
            CHECK(n.probability <= b.upper + 1e-12);
            CHECK(n.unclamped >= -1e-3);
            CHECK(n.unclamped <= 1.0 + 1e-3);
            for (double term : {n.multicast_term, n.self_limited_term, n.other_limited_term}) {
                CHECK(term >= -1e-12);
                CHECK(term <= 1.0 + 1e-12);
            }
            CHECK(n.probability <= previous + 1e-9);
            previous = n.probability;
        }
    }
    CHECK(unicast_outage_bounds(params(2, 3, 40.0)).lower_high_snr == doctest::Approx(3e-4));
}

TEST_CASE("unicast outage quadrature converges when doubling the node count")
{
    for (int m : {2, 10}) {
        for (double snr = 0.0; snr <= 40.0; snr += 4.0) {
            const auto p = params(m, 11, snr);
            const double a = unicast_outage_prob(p, cheb_rule(500)).other_limited_term;
            const double b = unicast_outage_prob(p, cheb_rule(1000)).other_limited_term;
            CHECK(std::abs(a - b) < 1e-4);
        }
    }
}

TEST_CASE("P_D lower bound")
{
    const auto p = params(2, 3, 10.0 * std::log10(30.0));
    CHECK(pd_lower_bound(p).exact == doctest::Approx(1.1 * std::exp(-0.1) / 9.0).epsilon(1e-12));
    CHECK(pd_lower_bound(p).high_snr == doctest::Approx(1.0 / 9.0));
    const auto hi = pd_lower_bound(params(2, 3, 60.0));
    CHECK(std::abs(hi.exact / hi.high_snr - 1.0) < 0.01);
}

TEST_CASE("NOMA rate advantage")
{
    std::mt19937_64 gen(6);
    std::uniform_real_distribution<double> snr(0.0, 50.0);
    std::exponential_distribution<double> expo(1.0);
    for (int i = 0; i < 10000; ++i) {
        const auto p = params(10, 11, snr(gen));
        const double u = p.multicast_floor + expo(gen);
        CHECK(std::abs(noma_rate_advantage(u, u, p)) < 1e-9);
    }
    const auto p = params(10, 11, 40.0);
    CHECK(noma_rate_advantage(1.0, 2.0, p) >= noma_rate_advantage(1.0, 1.5, p));
    CHECK_THROWS_AS(noma_rate_advantage(p.multicast_floor / 2, 1.0, p), std::invalid_argument);
}

TEST_CASE("rate advantage differences reproduce the secrecy-rate gap")
{
    std::mt19937_64 gen(9);
    std::uniform_real_distribution<double> snr(5.0, 45.0);
    std::exponential_distribution<double> expo(1.0);
    for (int i = 0; i < 10000; ++i) {
        LinkConfig cfg;
        cfg.rho = db_to_linear(snr(gen));
        cfg.rate_multicast = 1.0;
        cfg.rate_unicast = 6.0;
        const auto p = AnalysisParams::make(10, 11, cfg);
        const double u = p.multicast_floor * 1.01 + expo(gen);
        const double z2 = u + expo(gen);
        const double z1 = z2 + expo(gen);
        const auto g = EffectiveGains::from(z1, {u, z2});
        const auto out = evaluate_link(g, g, cfg);
        const double direct = (out.noma.legitimate - out.noma.eavesdroppers[1]) -
                              (out.oma.legitimate - out.oma.eavesdroppers[1]);
        const double via_f = noma_rate_advantage(u, z1, p) - noma_rate_advantage(u, z2, p);
        CHECK(via_f == doctest::Approx(direct).epsilon(1e-9).scale(1.0));
    }
}

TEST_CASE("joint min/max density")
{
    CHECK(joint_minmax_pdf(0.2, 0.5, 3) == doctest::Approx(2.0 * std::exp(-0.7)).epsilon(1e-14));
    CHECK(joint_minmax_pdf(0.7, 0.7, 3) == doctest::Approx(2.0 * std::exp(-1.4)).epsilon(1e-14));
    CHECK(joint_minmax_pdf(0.7, 0.7, 5) == 0.0);
    CHECK_THROWS_AS(joint_minmax_pdf(0.1, 0.2, 2), UnsupportedAnalyticsError);
    CHECK_THROWS_AS(joint_minmax_pdf(0.3, 0.2, 4), std::invalid_argument);

    const auto tau = minmax_pdf_coefficients(11);
    REQUIRE(tau.size() == 9);
    CHECK(tau[0] == 90.0);
    for (std::size_t m = 1; m < tau.size(); ++m) {
        CHECK(tau[m] * tau[m - 1] < 0.0);
    }
    for (int k : {3, 4, 11}) {
        for (double u : {0.01, 0.3, 1.2}) {
            for (double dv : {0.0, 0.05, 0.9, 3.0}) {
                // The alternating expansion cancels, so compare on the scale of
                // its largest coefficient rather than relative to the result.
                CHECK(std::abs(joint_minmax_pdf_expanded(u, u + dv, k) - joint_minmax_pdf(u, u + dv, k)) <
                      1e-9);
            }
        }
        const double total = oracle_integrate(
            [&](double v) {
                return oracle_integrate([&](double u) { return joint_minmax_pdf(u, v, k); }, 0.0, v, 1e-10);
            },
            0.0, std::numeric_limits<double>::infinity(), 1e-8);
        CHECK(std::abs(total - 1.0) < 1e-6);
    }
}

TEST_CASE("secrecy outage terms against independent oracles")
{
    const auto rule = cheb_rule(500);
    for (double snr : {10.0, 20.0, 40.0}) {
        const auto p = params(10, 11, snr);
        const auto s = secrecy_outage_prob(p, rule);
        CHECK(std::abs(s.power_limited_term - oracle::power_limited(10, 11, p.rho, 1.0, 2.0)) <= 1e-3);
        CHECK(std::abs(s.eavesdropper_dominant_term -
                       oracle::eavesdropper_dominant(10, 11, p.rho, 1.0, 2.0)) <= 1e-3);
    }
}

TEST_CASE("secrecy outage against Monte Carlo")
{
    const auto p = params(10, 11, 20.0);
    const double rho = p.rho;
    const auto s = secrecy_outage_prob(p, cheb_rule(500));
    const auto mc = oracle_mc(10, 11, 3, 10'000'000, [&](double z1, const std::vector<double>& o) {
        return oracle::events(z1, o, rho, 1.0, 6.0, 2.0).secrecy;
    });
    CHECK(std::abs(s.probability - mc.value) <= std::max(0.01, 3.0 * mc.std_error));

    // The closed-form term: multicast outage or a unicast user weaker than u.
    const double c = p.multicast_floor;
    const auto q5 = oracle_mc(10, 11, 4, 10'000'000, [&](double z1, const std::vector<double>& o) {
        const double u = *std::min_element(o.begin(), o.end());
        return std::min(z1, u) < c || z1 < u;
    });
    CHECK(std::abs(s.no_advantage_term - q5.value) <= 3.0 * q5.std_error);
}

TEST_CASE("secrecy outage at very high SNR with a tiny target")
{
    const auto p = params(10, 11, 60.0, 1.0, 6.0, 1e-3);
    const auto s = secrecy_outage_prob(p, cheb_rule(500));
    const double reference = oracle::power_limited(10, 11, p.rho, 1.0, 1e-3) +
                             oracle::eavesdropper_dominant(10, 11, p.rho, 1.0, 1e-3);
    CHECK(std::abs(s.power_limited_term + s.eavesdropper_dominant_term - reference) < 1e-3);
    // The z1 < u part of the closed-form term approaches K^{-M}.
    const double weak_unicast = s.no_advantage_term - multicast_outage_prob(p);
    CHECK(weak_unicast == doctest::Approx(std::pow(11.0, -10)).epsilon(0.01).scale(0.0));
}

TEST_CASE("secrecy quadrature converges and stays in range")
{
    for (double snr = 0.0; snr <= 40.0; snr += 5.0) {
        const auto p = params(10, 11, snr);
        const auto a = secrecy_outage_prob(p, cheb_rule(500));
        const auto b = secrecy_outage_prob(p, cheb_rule(1000));
        CHECK(std::abs(a.probability - b.probability) < 1e-4);
        CHECK(a.unclamped >= -1e-3);
        CHECK(a.unclamped <= 1.0 + 1e-3);
        for (double term : {a.power_limited_term, a.no_advantage_term, a.eavesdropper_dominant_term}) {
            CHECK(term >= -1e-9);
            CHECK(term <= 1.0 + 1e-9);
        }
        if (snr <= 20.0) {
            const auto r = secrecy_outage_prob(p, cheb_rule(500), OuterMapping::Reciprocal);
            CHECK(std::abs(r.probability - a.probability) < 5e-3);
        }
    }
    CHECK_THROWS_AS(secrecy_outage_prob(params(2, 2, 10.0), cheb_rule(10)), UnsupportedAnalyticsError);
}

}
