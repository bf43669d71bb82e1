#include "doctest.h"

#include "romankit/domination.hpp"
#include "romankit/verifier.hpp"

using namespace romankit;
using namespace romankit::verify;

namespace {

Budget small() {
    Budget b;
    b.max_n = 5;
    b.max_t = 6;
    b.hyper_max_v = 5;
    b.hyper_max_e = 5;
    b.random_hypergraphs = 10;
    b.random_max_v = 7;
    b.random_max_e = 7;
    b.factor_max_n = 4;
    b.reduction_instances = 10;
    return b;
}

}  // namespace

TEST_CASE("every suite passes on a small budget") {
    CHECK(suite_names().size() == 19);
    for (const auto& name : suite_names()) {
        CAPTURE(name);
        const auto r = run_suite(name, small(), Solvers::exact(), 1);
        CHECK(r.passed);
        CHECK_FALSE(r.counterexample);
        CHECK(r.checked == suite_instances(name, small()).size());
        CHECK(r.checked > 0);
    }
}

TEST_CASE("documented suite runs") {
    Budget b;
    b.max_t = 8;
    const auto suns = run_suite("suns", b);
    CHECK(suns.passed);
    CHECK(suns.checked == 6);

    b.factor_max_n = 4;
    const auto join = run_suite("join-additivity", b);
    CHECK(join.passed);
    // the two hypothesis counterexamples are the last instances
    const auto inst = suite_instances("join-additivity", b);
    CHECK(inst.back().at("join_gamma") == 1);
    CHECK(inst[inst.size() - 2].at("join_gamma") == 3);

    Budget m;
    m.max_n = 6;
    m.max_k = 3;
    CHECK(run_suite("monotonicity", m).passed);
}

TEST_CASE("reports are deterministic across thread counts") {
    const Budget b = small();
    for (const char* name : {"sandwich", "edge-cover", "join-forward"}) {
        const auto serial = run_suite(name, b, Solvers::exact(), 0);
        CHECK(run_suite(name, b, Solvers::exact(), 4) == serial);
        CHECK(run_suite(name, b, Solvers::exact(), 1) == serial);
    }
}

TEST_CASE("corrupted solvers are caught") {
    const Budget b = small();

    Solvers bad_gamma = Solvers::exact();
    bad_gamma.gamma = [](const Graph& g) { return gamma(g).gamma + (g.order() == 4 && g.size() == 3 ? 1 : 0); };

    Solvers bad_roman = Solvers::exact();
    bad_roman.is_k_roman = [](const Graph& g, int k) { return g.order() > 12 ? !is_k_roman(g, k) : is_k_roman(g, k); };

    Solvers bad_pm = Solvers::exact();
    bad_pm.has_perfect_matching = [](const Hypergraph&) { return true; };

    Solvers bad_rho = Solvers::exact();
    bad_rho.edge_cover_number = [](const Hypergraph& h) { return edge_cover_number(h) + 1; };

    const std::vector<std::pair<std::string, Solvers>> cases{
        {"sandwich", bad_gamma},
        {"reduction-soundness", bad_roman},
        {"k-roman-iff-pm", bad_pm},
        {"edge-cover", bad_rho},
        {"middle-italian", bad_rho},
        {"join-additivity", bad_gamma},
    };
    for (const auto& [name, solvers] : cases) {
        CAPTURE(name);
        for (int threads : {0, 3}) {
            const auto r = run_suite(name, b, solvers, threads);
            REQUIRE_FALSE(r.passed);
            REQUIRE(r.counterexample);
            // the counterexample fails again on its own
            const auto again = check_instance(name, r.counterexample->instance, solvers);
            REQUIRE(again);
            CHECK(again->property == r.counterexample->property);
            CHECK(*again == *r.counterexample);
            CHECK_FALSE(check_instance(name, r.counterexample->instance));

            // and it is the first failing instance in evaluation order
            const auto instances = suite_instances(name, b);
            std::size_t first = instances.size();
            for (std::size_t i = 0; i < instances.size() && first == instances.size(); ++i)
                if (check_instance(name, instances[i], solvers)) first = i;
            CHECK(r.counterexample->instance == instances[first]);
            CHECK(r.checked == first + 1);
        }
    }
}

TEST_CASE("report JSON round trip") {
    const Budget b = small();
    const auto pass = run_suite("suns", b);
    CHECK(json(pass).get<VerificationReport>() == pass);
    CHECK(json::parse(json(pass).dump()).get<VerificationReport>() == pass);
    CHECK(json(pass).at("status") == "pass");
    CHECK_FALSE(json(pass).contains("counterexample"));

    Solvers bad = Solvers::exact();
    bad.gamma = [](const Graph& g) { return gamma(g).gamma + 1; };
    const auto fail = run_suite("suns", b, bad);
    REQUIRE_FALSE(fail.passed);
    const json j = json::parse(json(fail).dump());
    CHECK(j.at("status") == "fail");
    CHECK(j.at("counterexample").contains("instance"));
    CHECK(j.at("counterexample").contains("observed"));
    CHECK(j.at("counterexample").contains("expected"));
    CHECK(j.get<VerificationReport>() == fail);

    json broken = json(pass);
    broken["status"] = "fail";
    CHECK_THROWS(broken.get<VerificationReport>());
    CHECK(json(b).get<Budget>() == b);
}

TEST_CASE("suite and budget errors") {
    CHECK_THROWS_AS(run_suite("no-such-suite", Budget{}), std::invalid_argument);
    CHECK_THROWS_AS(check_instance("no-such-suite", json::object()), std::invalid_argument);
    Budget big;
    big.max_n = 9;
    CHECK_THROWS_AS(run_suite("sandwich", big), std::invalid_argument);
    Budget tiny;
    tiny.max_t = 2;
    CHECK_THROWS_AS(run_suite("suns", tiny), std::invalid_argument);
}

TEST_CASE("thread count from the environment") {
    setenv("ROMANKIT_THREADS", "0", 1);
    CHECK(threads_from_env() == 0);
    setenv("ROMANKIT_THREADS", "3", 1);
    CHECK(threads_from_env() == 3);
    setenv("ROMANKIT_THREADS", "junk", 1);
    CHECK(threads_from_env() >= 1);
    unsetenv("ROMANKIT_THREADS");
    CHECK(threads_from_env() >= 1);
}
