#include <doctest.h>

#include <algorithm>

#include "tspine/verify.hpp"

using namespace tspine;

TEST_CASE("registry") {
    const auto ids = claim_ids();
    CHECK(std::is_sorted(ids.begin(), ids.end()));
    CHECK(std::find(ids.begin(), ids.end(), "dual_involution") != ids.end());
    CHECK(claim_applies("delta_exclusion_g3", 3));
    CHECK_FALSE(claim_applies("delta_exclusion_g3", 2));
    CHECK(claim_applies("c_half_bound_g_ge5", 17));
    CHECK_THROWS_AS(claim_applies("nope", 2), UnknownClaimError);
    CHECK_THROWS_AS(run_claim("nope", VerifyConfig{}), UnknownClaimError);
}

TEST_CASE("config validation") {
    VerifyConfig cfg;
    cfg.grid_n = 4;
    CHECK_THROWS(cfg.validate());
    cfg = VerifyConfig{};
    cfg.genus_list = {};
    CHECK_THROWS(cfg.validate());
    cfg.genus_list = {1};
    CHECK_THROWS(cfg.validate());
}

TEST_CASE("single claim runs once per applicable genus") {
    VerifyConfig cfg;
    cfg.genus_list = {2};
    const auto r = run_claim("dual_involution", cfg);
    REQUIRE(r.size() == 1);
    CHECK(r[0].passed);
    CHECK(r[0].genus == 2);

    cfg.genus_list = {2, 3, 5};
    CHECK(run_claim("delta_exclusion_g3", cfg).size() == 1);
    const auto mono = run_claim("c_half_monotone", cfg);
    REQUIRE(mono.size() == 1);
    CHECK_FALSE(mono[0].genus.has_value());
}

TEST_CASE("seeded claims are reproducible and seed dependent") {
    VerifyConfig cfg;
    cfg.genus_list = {3};
    const ClaimResult a = run_claim("tanh_identity", Genus(3), cfg);
    const ClaimResult b = run_claim("tanh_identity", Genus(3), cfg);
    CHECK(a.worst_residual == b.worst_residual);
    REQUIRE(a.witness.has_value());
    cfg.seed = 12345;
    const ClaimResult c = run_claim("tanh_identity", Genus(3), cfg);
    CHECK(c.witness->c != a.witness->c);
}

TEST_CASE("genus restriction on single runs") {
    CHECK_THROWS(run_claim("delta_exclusion_g5", Genus(3), VerifyConfig{}));
}

TEST_CASE("small run of everything is ordered") {
    VerifyConfig cfg;
    cfg.genus_list = {5, 2};
    cfg.grid_n = 20;
    const auto all = run_all(cfg);
    CHECK(std::is_sorted(all.begin(), all.end(), [](const ClaimResult& x, const ClaimResult& y) {
        return x.claim_id != y.claim_id ? x.claim_id < y.claim_id : x.genus.value_or(0) < y.genus.value_or(0);
    }));
    for (const ClaimResult& r : all) {
        CAPTURE(r.claim_id);
        CHECK(r.status == (r.passed ? ClaimStatus::Passed : r.status));
        if (r.claim_id != "sign_partials") CHECK(r.status != ClaimStatus::Failed);
    }
}
