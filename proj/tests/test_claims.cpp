#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "yager/claims.hpp"
#include "yager/io.hpp"
#include "yager/majorization.hpp"

using yager::CheckConfig;
using yager::ClaimId;
using yager::Distribution;
using yager::Verdict;

namespace {

CheckConfig small_config(std::size_t trials = 2000) {
    CheckConfig c;
    c.seed = 42;
    c.trials = trials;
    c.n_range = {3, 8};
    c.tolerance = 1e-9;
    c.workers = 2;
    return c;
}

// REFUTED reports must carry a counterexample that fails on re-evaluation.
void expect_counterexample_reproduces(const yager::ClaimReport& r) {
    ASSERT_TRUE(r.counterexample.has_value());
    const auto& ce = *r.counterexample;
    const auto& claim = yager::claim_info(r.claim);
    if (claim.kind == yager::ClaimKind::NegationInequality) {
        const double lhs = yager::evaluate_measure(claim.measure, yager::negate(ce.p));
        const double rhs = yager::evaluate_measure(claim.measure, ce.p);
        EXPECT_EQ(lhs, ce.lhs);
        EXPECT_EQ(rhs, ce.rhs);
        EXPECT_GT(rhs - lhs, r.tolerance);
    } else if (claim.kind == yager::ClaimKind::NegatedMaximizer) {
        const double at_uniform =
            yager::evaluate_measure(claim.measure, yager::negate(Distribution::uniform(ce.p.size())));
        const double value = yager::evaluate_measure(claim.measure, yager::negate(ce.p));
        EXPECT_GT(value - at_uniform, r.tolerance);
    }
    EXPECT_GT(ce.margin, r.tolerance);
}

}  // namespace

TEST(Registry, NineClaimsInOrder) {
    const auto& reg = yager::claim_registry();
    ASSERT_EQ(reg.size(), 9u);
    for (std::size_t i = 0; i < reg.size(); ++i) {
        EXPECT_EQ(static_cast<std::size_t>(reg[i].id), i + 1);
        EXPECT_EQ(reg[i].tag, "C" + std::to_string(i + 1));
        EXPECT_EQ(yager::parse_claim_id(reg[i].tag), reg[i].id);
    }
    try {
        yager::parse_claim_id("C10");
        FAIL();
    } catch (const yager::Error& e) {
        EXPECT_EQ(e.code(), yager::Errc::UnknownClaim);
    }
}

TEST(CheckClaim, C1ConfirmedWithMajorizationOracle) {
    auto cfg = small_config(20000);
    const auto r = yager::check_claim(ClaimId::C1, cfg);
    EXPECT_EQ(r.verdict, Verdict::Confirmed);
    EXPECT_EQ(r.failures, 0u);
    EXPECT_EQ(r.trials_run, 2u + 6u * cfg.trials);
    EXPECT_FALSE(r.counterexample.has_value());
    ASSERT_GE(r.metrics.size(), 2u);
    EXPECT_EQ(r.metrics[1].first, "majorization_disagreements");
    EXPECT_EQ(r.metrics[1].second, 0.0);
}

TEST(CheckClaim, C2AndC3RefutedByWorkedExample) {
    for (ClaimId id : {ClaimId::C2, ClaimId::C3}) {
        for (std::uint64_t seed : {1ull, 42ull, 123456789ull}) {
            auto cfg = small_config(500);
            cfg.seed = seed;
            const auto r = yager::check_claim(id, cfg);
            EXPECT_EQ(r.verdict, Verdict::Refuted);
            ASSERT_TRUE(r.counterexample.has_value());
            EXPECT_EQ(r.counterexample->p, Distribution::make({0.4, 0.3, 0.2, 0.1}));
            expect_counterexample_reproduces(r);
        }
    }
    const auto c2 = yager::check_claim(ClaimId::C2, small_config(100));
    EXPECT_NEAR(c2.counterexample->rhs, 0.1809, 1e-4);
    EXPECT_NEAR(c2.counterexample->lhs, 0.0220, 1e-4);
    EXPECT_NEAR(c2.counterexample->margin, 0.159, 1e-3);
    const auto c3 = yager::check_claim(ClaimId::C3, small_config(100));
    EXPECT_NEAR(c3.counterexample->rhs, -0.3926, 1e-3);
    EXPECT_NEAR(c3.counterexample->lhs, -0.4849, 1e-3);
    EXPECT_NEAR(c3.counterexample->margin, 0.092, 1e-3);
}

TEST(CheckClaim, RandomTrialsAloneRefuteC2) {
    // Without the n = 4 fixture in range, random samples still find violations.
    auto cfg = small_config(500);
    cfg.n_range = {5, 6};
    const auto r = yager::check_claim(ClaimId::C2, cfg);
    EXPECT_EQ(r.verdict, Verdict::Refuted);
    expect_counterexample_reproduces(r);
    EXPECT_GT(r.metrics[0].second, 0.5);
}

TEST(CheckClaim, LimitClaims) {
    CheckConfig cfg = small_config(1);
    cfg.n_range = {2, 1000};
    const auto c4 = yager::check_claim(ClaimId::C4, cfg);
    EXPECT_EQ(c4.verdict, Verdict::Confirmed);
    const auto c5 = yager::check_claim(ClaimId::C5, cfg);
    EXPECT_EQ(c5.verdict, Verdict::Confirmed);
    for (std::size_t n : {2u, 10u, 100u, 1000u}) {
        EXPECT_LE(std::abs(yager::varentropy(Distribution::uniform(n))), 1e-12);
    }
    // |VJ(uniform(n))| grows towards 1, so the decrease-to-zero claim fails at
    // the first comparable step of the grid (n = 2 is skipped: 4 -> 8).
    const auto c6 = yager::check_claim(ClaimId::C6, cfg);
    EXPECT_EQ(c6.verdict, Verdict::Refuted);
    ASSERT_TRUE(c6.counterexample.has_value());
    EXPECT_EQ(c6.counterexample->p.size(), 8u);
    EXPECT_NEAR(c6.counterexample->rhs, 0.49656584886091026, 1e-12);

    cfg.n_range = {3, 8};
    const auto from3 = yager::check_claim(ClaimId::C6, cfg);
    ASSERT_TRUE(from3.counterexample.has_value());
    EXPECT_EQ(from3.counterexample->p.size(), 4u);
    EXPECT_NEAR(from3.counterexample->rhs, 0.32880390778633086, 1e-12);
    EXPECT_NEAR(from3.counterexample->lhs, 0.49656584886091026, 1e-12);
}

TEST(CheckClaim, LimitGrid) {
    EXPECT_EQ(yager::limit_grid({3, 8}), (std::vector<std::size_t>{3, 4, 8}));
    EXPECT_EQ(yager::limit_grid({2, 16}), (std::vector<std::size_t>{2, 4, 8, 16}));
    EXPECT_EQ(yager::limit_grid({5, 5}), (std::vector<std::size_t>{5}));
}

TEST(CheckClaim, VacuousWhenNothingToCompare) {
    CheckConfig cfg = small_config(1);
    cfg.n_range = {2, 2};
    EXPECT_EQ(yager::check_claim(ClaimId::C6, cfg).verdict, Verdict::Vacuous);
    EXPECT_EQ(yager::check_claim(ClaimId::C4, cfg).verdict, Verdict::Vacuous);
    EXPECT_EQ(yager::check_claim(ClaimId::C5, cfg).verdict, Verdict::Confirmed);
}

TEST(CheckClaim, C7ConfirmedWithUniformArgmax) {
    auto cfg = small_config(10000);
    cfg.n_range = {4, 4};
    const auto r = yager::check_claim(ClaimId::C7, cfg);
    EXPECT_EQ(r.verdict, Verdict::Confirmed);
    ASSERT_TRUE(r.max_observed.has_value());
    EXPECT_NEAR(r.max_observed->value, std::log(4.0), 1e-9);
    EXPECT_LE(yager::sup_distance(r.max_observed->p, Distribution::uniform(4)), 1e-15);
    EXPECT_LE(r.metrics[0].second, 1e-9);
}

TEST(CheckClaim, C8AndC9Refuted) {
    auto cfg = small_config(1000);
    const auto c8 = yager::check_claim(ClaimId::C8, cfg);
    EXPECT_EQ(c8.verdict, Verdict::Refuted);
    expect_counterexample_reproduces(c8);
    // Uniform gives VH(negate) = 0, the smallest possible value.
    EXPECT_EQ(c8.counterexample->lhs, 0.0);
    ASSERT_TRUE(c8.max_observed.has_value());
    EXPECT_GT(c8.max_observed->value, 0.1);

    const auto c9 = yager::check_claim(ClaimId::C9, cfg);
    EXPECT_EQ(c9.verdict, Verdict::Refuted);
    expect_counterexample_reproduces(c9);
}

TEST(CheckAll, NineReportsInOrder) {
    const auto reports = yager::check_all(small_config(200));
    ASSERT_EQ(reports.size(), 9u);
    for (std::size_t i = 0; i < 9; ++i) EXPECT_EQ(static_cast<std::size_t>(reports[i].claim), i + 1);
    EXPECT_EQ(reports[0].verdict, Verdict::Confirmed);
    EXPECT_EQ(reports[1].verdict, Verdict::Refuted);
    EXPECT_EQ(reports[2].verdict, Verdict::Refuted);
    for (const auto& r : reports) {
        EXPECT_NE(r.verdict, Verdict::Vacuous);
        if (r.verdict == Verdict::Refuted) {
            EXPECT_TRUE(r.counterexample.has_value());
        }
        if (r.verdict == Verdict::Confirmed) {
            EXPECT_EQ(r.failures, 0u);
        }
    }
}

TEST(CheckAll, IndependentOfWorkerCount) {
    auto serial = small_config(3000);
    serial.workers = 1;
    auto parallel = serial;
    parallel.workers = 7;
    const auto a = yager::check_all(serial);
    const auto b = yager::check_all(parallel);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(yager::to_json(a[i]).dump(), yager::to_json(b[i]).dump());
    }
}

TEST(CheckAll, RejectsInvalidConfig) {
    auto cfg = small_config();
    cfg.trials = 0;
    EXPECT_THROW(yager::check_all(cfg), yager::Error);
    cfg = small_config();
    cfg.n_range = {1, 4};
    EXPECT_THROW(yager::check_all(cfg), yager::Error);
    cfg.n_range = {5, 4};
    EXPECT_THROW(yager::check_all(cfg), yager::Error);
    cfg.n_range = {2, 20000};
    EXPECT_THROW(yager::check_all(cfg), yager::Error);
    cfg = small_config();
    cfg.tolerance = 0.0;
    EXPECT_THROW(yager::check_claim(ClaimId::C1, cfg), yager::Error);
}

TEST(Probe, CoversOrderedPairs) {
    const auto probe = yager::uniform_perturbation_probe(4);
    // uniform + 2 eps * 4 * 3 ordered pairs
    EXPECT_EQ(probe.size(), 1u + 2u * 12u);
    EXPECT_EQ(probe.front(), Distribution::uniform(4));
    for (const auto& p : probe) EXPECT_LE(yager::deviation_from_uniform(p), 1e-2 + 1e-15);
}
