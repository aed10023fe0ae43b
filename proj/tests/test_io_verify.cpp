#include "blockspec/charpoly.hpp"
#include "blockspec/io.hpp"
#include "blockspec/verify.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace blockspec;
using namespace blockspec::testing;

TEST_CASE("block graph JSON round trip") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 30; ++trial) {
        const auto g = random_block_graph(pick(rng, 1, 4), pick(rng, 1, 5), rng);
        const Json j = to_json(g);
        CHECK(block_graph_from_json(Json::parse(j.dump())) == g);
    }
    CHECK(to_json(path_block(2, 2)).dump() == R"({"q":2,"blocks":[[0,1,2],[2,3,4]]})");
    CHECK_THROWS(block_graph_from_json(Json::parse(R"({"q":2,"blocks":[[0,1,2],[1,2,3]]})")));
    CHECK_THROWS(block_graph_from_json(Json::parse(R"({"blocks":[[0,1]]})")));
}

TEST_CASE("edge list round trip and block detection") {
    const auto g = star(7, 2).graph();
    const std::string text = to_edge_list(g);
    CHECK(graph_from_edge_list(text) == g);
    CHECK(graph_from_edge_list("# path\n0 1\n1 2 # tail\n\n") == path_graph(3));
    CHECK_THROWS(graph_from_edge_list("0 x\n"));

    const auto b = as_block_graph(g);
    REQUIRE(b);
    CHECK(b->q() == 2);
    CHECK(b->graph() == g);
    Graph c4(4);
    for (int i = 0; i < 4; ++i) c4.add_edge(i, (i + 1) % 4);
    CHECK_FALSE(as_block_graph(c4));

    const auto loaded = parse_graph(to_json(path_block(3, 2)).dump());
    REQUIRE(loaded.block);
    CHECK(*loaded.block == path_block(3, 2));
    CHECK(parse_graph(text).graph == g);
}

TEST_CASE("polynomial and interval JSON") {
    CHECK(to_json(IntPolynomial{-2, -3, 0, 1}).dump() == "[-2,-3,0,1]");
    Integer big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 30);
    CHECK(to_json(IntPolynomial(std::vector<Integer>{big, 1})).dump() == R"(["1000000000000000000000000000000",1])");
    const Json r = to_json(spectral_radius(star(7, 2)).enclosure);
    CHECK(r["lo"] == "3");
    CHECK(r["hi"] == "3");
}

TEST_CASE("verify_class on B(7, 2)") {
    const auto claims = verify_class(2, 3, default_width());
    REQUIRE(claims.size() == 4);
    for (const auto& c : claims) {
        CHECK_MESSAGE(c.status == ClaimStatus::Pass, c.claim << ": " << c.detail);
        CHECK(c.n == 7);
        CHECK(c.graphs == 2);
    }
}

TEST_CASE("verify reports the two-block lower bound failure with a witness") {
    const auto claims = verify_class(3, 2, default_width());
    const auto it = std::find_if(claims.begin(), claims.end(), [](const auto& c) { return c.claim == "lower-bound"; });
    REQUIRE(it != claims.end());
    CHECK(it->status == ClaimStatus::Fail);
    REQUIRE(it->witness);
    CHECK(it->witness->block_count() == 2);
    const auto skip = verify_class(3, 1, default_width());
    CHECK(skip.back().status == ClaimStatus::Skip);
}

TEST_CASE("run_verify is deterministic and sets exit codes") {
    VerifyConfig cfg;
    cfg.qs = {2};
    cfg.bs = {3, 4};
    const auto a = run_verify(cfg);
    cfg.jobs = 3;
    const auto b = run_verify(cfg);
    CHECK(a.exit_code() == 0);
    CHECK(render_csv(a) == render_csv(b));
    CHECK(render_json(a) == render_json(b));
    CHECK(render_csv(a).rfind("# blockspec verify v1 seed=1", 0) == 0);

    cfg.bs = {2};
    CHECK(run_verify(cfg).exit_code() == 2);

    VerifyReport fake;
    fake.claims.push_back({"x", 2, 3, 7, 1, ClaimStatus::Undecided, "", std::nullopt});
    CHECK(fake.exit_code() == 3);
    fake.claims.push_back({"y", 2, 3, 7, 1, ClaimStatus::Fail, "", std::nullopt});
    CHECK(fake.exit_code() == 2);
}

TEST_CASE("verify_identities uses the seed") {
    const auto a = verify_identities(7, 5);
    CHECK(a.size() == 8);
    for (const auto& c : a) CHECK(c.status == ClaimStatus::Pass);
    VerifyReport ra, rb;
    ra.claims = a;
    rb.claims = verify_identities(7, 5);
    CHECK(render_csv(ra) == render_csv(rb));
}
