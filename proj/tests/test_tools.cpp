#include "support.hpp"

#include "cli.hpp"

#include <gtest/gtest.h>

#include <thread>

using namespace coxmut;
using namespace coxmut::tools;

namespace {

std::string example(const std::string& name) { return std::string(COXMUT_EXAMPLES_DIR) + "/" + name + ".json"; }

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::string body_of(const ExchangeMatrix& m) { return to_json(m).dump(); }

} // namespace

TEST(Caps, Parse)
{
    const auto c = Caps::parse("max_size=50, tc_cosets=1000,async_ms=5");
    EXPECT_EQ(c.cls.max_size, 50u);
    EXPECT_EQ(c.tc_cosets, 1000u);
    EXPECT_EQ(c.async_ms, 5);
    EXPECT_EQ(Caps::parse("").tc_cosets, Caps{}.tc_cosets);
    EXPECT_THROW(Caps::parse("bogus=1"), InvalidInput);
    EXPECT_THROW(Caps::parse("max_size"), InvalidInput);
    EXPECT_THROW(Caps::parse("max_size=-3"), InvalidInput);
}

TEST(JsonIo, RoundTrip)
{
    std::mt19937 rng(11);
    for (int t = 0; t < 50; ++t) {
        const auto m = coxmut::testing::random_matrix(rng, 4);
        EXPECT_EQ(matrix_from_json_text(to_json(m).dump()), m);
    }
    const auto m = matrix_from_json_text(R"({"n":2,"b":[[0,1],[-1,0]]})");
    EXPECT_TRUE(std::ranges::equal(m.symmetrizer(), std::vector<std::int64_t>{1, 1}));
}

TEST(JsonIo, Validation)
{
    EXPECT_THROW(matrix_from_json_text("{"), InvalidInput);
    EXPECT_THROW(matrix_from_json_text("[]"), InvalidInput);
    EXPECT_THROW(matrix_from_json_text(R"({"b":[[0]]})"), InvalidInput);
    EXPECT_THROW(matrix_from_json_text(R"({"n":0,"b":[]})"), InvalidInput);
    EXPECT_THROW(matrix_from_json_text(R"({"n":2,"b":[[0,1]]})"), InvalidInput);
    EXPECT_THROW(matrix_from_json_text(R"({"n":2,"b":[[0,1],[1,0]]})"), InvalidInput);
    EXPECT_THROW(matrix_from_json_text(R"({"n":2,"b":[[0,1.5],[-1,0]]})"), InvalidInput);
    EXPECT_THROW(matrix_from_json_text(R"({"n":2,"b":[[0,1],[-1,0]],"d":[1]})"), InvalidInput);
}

TEST(JsonIo, BigIntegersBecomeStrings)
{
    EXPECT_TRUE(detail::big(BigInt(42)).is_number_integer());
    EXPECT_EQ(detail::big(factorial(30)), Json(factorial(30).get_str()));
    Rational q(-3, 6);
    q.canonicalize();
    EXPECT_EQ(to_json(q).dump(), R"({"num":-1,"den":2})");
}

TEST(Cli, Mutate)
{
    const auto r = cli({"mutate", "-i", example("a3path"), "-k", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(matrix_from_json_text(r.out), mutate(coxmut::testing::path3(), 1));
    const auto back = cli({"mutate", "-i", example("a3path"), "-k", "2", "-k", "2"});
    EXPECT_EQ(matrix_from_json_text(back.out), coxmut::testing::path3());
    EXPECT_EQ(cli({"mutate", "-i", example("a3path"), "-k", "4"}).code, 1);
    EXPECT_EQ(cli({"mutate", "-i", "/nonexistent.json", "-k", "1"}).code, 1);
    EXPECT_EQ(cli({"mutate", "-k", "1"}).code, 1);
}

TEST(Cli, ClassifyAndClass)
{
    auto r = cli({"classify", "-i", example("k4")});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(parse_json_text(r.out).at("mutation_type"), "MutationInfinite");
    r = cli({"classify", "-i", example("cycle3")});
    EXPECT_EQ(parse_json_text(r.out).at("label"), "A3");

    r = cli({"class", "-i", example("a3path")});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(parse_json_text(r.out).at("size"), 4);
    EXPECT_EQ(cli({"class", "-i", example("t1_d5"), "--max", "3"}).code, 3);
}

TEST(Cli, Analyze)
{
    auto r = cli({"analyze", "-i", example("t1_a4"), "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json j = parse_json_text(r.out);
    EXPECT_EQ(j.at("cusps"), 5);
    EXPECT_EQ(j.at("group_order"), 120);
    EXPECT_EQ(j.at("geometric_type"), "Hyperbolic");
    EXPECT_EQ(j.at("dimension"), 3);
    EXPECT_EQ(cli({"analyze", "-i", example("t1_a4"), "--json"}).out, r.out);

    r = cli({"analyze", "-i", example("t2_b3")});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("genus:              3"), std::string::npos);
    EXPECT_NE(r.out.find("chi(X):             -4"), std::string::npos);
}

TEST(Cli, Verify)
{
    EXPECT_EQ(cli({"verify", "-i", example("t1_a4")}).code, 0);
    EXPECT_EQ(cli({"verify", "-i", example("k4_custom")}).code, 0);
    EXPECT_EQ(cli({"verify", "-i", example("cycle4")}).code, 0);
    EXPECT_EQ(cli({"verify", "-i", example("k4")}).code, 1);
}

TEST(Cli, VerifyReportsFailure)
{
    // Roots that generate W but break a pairwise relation: exit 2.
    const std::string path = ::testing::TempDir() + "bad_custom.json";
    std::ofstream(path) << R"({"n":4,"b":[[0,1,1,1],[-1,0,1,1],[-1,-1,0,1],[-1,-1,-1,0]],
      "custom":{"family":"A","rank":4,"roots":[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]}})";
    const auto r = cli({"verify", "-i", path});
    EXPECT_EQ(r.code, 2) << r.out << r.err;
}

TEST(Cli, Present)
{
    auto r = cli({"present", "-i", example("cycle3")});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "gens 3\npow 1 2 3\npow 1 3 3\npow 2 3 3\ncyc 1 2 3 ^ 2\n");
    const std::string extra = ::testing::TempDir() + "extra.rel";
    std::ofstream(extra) << "rel 1 2 3 ^ 4\n";
    r = cli({"present", "-i", example("cycle3"), "--extra", extra});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("rel 1 2 3 ^ 4"), std::string::npos);
    std::ofstream(extra) << "rel 1 9 ^ 2\n";
    EXPECT_EQ(cli({"present", "-i", example("cycle3"), "--extra", extra}).code, 1);
}

TEST(Cli, Tables)
{
    const auto r = cli({"tables", "--check", "2", "--json"});
    ASSERT_EQ(r.code, 0) << r.out;
    const Json j = parse_json_text(r.out);
    EXPECT_TRUE(j.at("passed").get<bool>());
    EXPECT_EQ(j.at("rows").size(), 3u);
    EXPECT_EQ(cli({"tables", "--check", "3"}).code, 1);
}

TEST(ServiceLogic, SessionLifecycle)
{
    Service s;
    auto o = s.create(body_of(coxmut::testing::path3()));
    ASSERT_EQ(o.status, 201);
    const std::string id = o.body.at("id");
    EXPECT_EQ(o.body.at("canonical_key"), matrix_key(coxmut::testing::path3()).hex());

    o = s.mutate(id, R"({"k": 2})");
    ASSERT_EQ(o.status, 200);
    EXPECT_EQ(matrix_from_json(o.body.at("matrix")), mutate(coxmut::testing::path3(), 1));
    EXPECT_EQ(o.body.at("history").at("sequence"), Json::array({2}));

    o = s.analysis(id);
    ASSERT_EQ(o.status, 200);
    EXPECT_EQ(o.body.at("geometric_type"), "Euclidean");
    EXPECT_EQ(o.body.at("group_order"), 24);

    EXPECT_EQ(s.mutate(id, R"({"k": 7})").status, 409);
    EXPECT_EQ(s.mutate(id, R"({"k": 0})").status, 409);
    EXPECT_EQ(s.mutate(id, R"({"x": 1})").status, 400);
    EXPECT_EQ(s.mutate(id, "not json").status, 400);
    EXPECT_EQ(s.mutate("999", R"({"k": 1})").status, 404);
    EXPECT_EQ(s.get("999").status, 404);
    EXPECT_EQ(s.create(R"({"n":2,"b":[[0,1],[1,0]]})").status, 400);

    o = s.undo(id);
    ASSERT_EQ(o.status, 200);
    EXPECT_EQ(matrix_from_json(o.body.at("matrix")), coxmut::testing::path3());
    EXPECT_EQ(s.undo(id).status, 409);

    // Redoing the same mutation reuses the existing history node.
    o = s.mutate(id, R"({"k": 2})");
    EXPECT_EQ(o.body.at("history").at("nodes").size(), 2u);
}

TEST(ServiceLogic, ReplayMatchesLibrary)
{
    Service s;
    std::mt19937 rng(5);
    const auto start = dynkin_orientation("D", 5);
    const std::string id = s.create(body_of(start)).body.at("id");
    const auto seq = coxmut::testing::random_sequence(rng, 5, 20);
    Json state;
    for (Index k : seq.steps) state = s.mutate(id, Json{{"k", k + 1}}.dump()).body;
    if (!seq.steps.empty()) {
        EXPECT_EQ(matrix_from_json(state.at("matrix")), mutate(start, seq));
        EXPECT_EQ(state.at("canonical_key"), matrix_key(mutate(start, seq)).hex());
    }
}

TEST(ServiceLogic, UnavailableAnalysis)
{
    Service s;
    const std::string id = s.create(body_of(coxmut::testing::k4())).body.at("id");
    const auto o = s.analysis(id);
    EXPECT_EQ(o.status, 422);
    EXPECT_EQ(o.body.at("canonical_key"), matrix_key(coxmut::testing::k4()).hex());
    EXPECT_TRUE(o.body.contains("reason"));
}

TEST(ServiceLogic, CacheAndCustom)
{
    Service s;
    const std::string a = s.create(tools::read_file(example("t2_b3"))).body.at("id");
    const std::string b = s.create(tools::read_file(example("t2_b3"))).body.at("id");
    auto o = s.analysis(a);
    ASSERT_EQ(o.status, 200);
    EXPECT_EQ(o.body.at("chi_X"), -4);
    EXPECT_EQ(o.body.at("volume"), (Json{{"coeff_num", 8}, {"coeff_den", 1}, {"pi_power", 1}}));
    EXPECT_EQ(o.body.at("genus"), 3);
    EXPECT_EQ(s.analysis(b).body, o.body);
    EXPECT_EQ(s.analyses_started(), 1u);

    const std::string c = s.create(tools::read_file(example("k4_custom"))).body.at("id");
    o = s.analysis(c);
    ASSERT_EQ(o.status, 200);
    EXPECT_EQ(o.body.at("cusps"), 20);
    EXPECT_EQ(o.body.at("quotient_order"), 120);
    EXPECT_TRUE(s.get(c).body.at("custom").get<bool>());
    const auto p = s.presentation(c);
    EXPECT_NE(p.body.at("text").get<std::string>().find("rel 1 2 3 2 ^ 2"), std::string::npos);
}

TEST(ServiceLogic, SlowAnalysisReturnsPending)
{
    Caps caps;
    caps.async_ms = 1;
    Service s(caps);
    const std::string id = s.create(tools::read_file(example("t1_e8"))).body.at("id");
    const auto o = s.analysis(id);
    ASSERT_EQ(o.status, 202);
    EXPECT_EQ(o.body.at("status"), "pending");
    EXPECT_EQ(o.body.at("poll"), "/api/sessions/" + id + "/analysis");
    // The worker finishes in the background; poll until done.
    Outcome done;
    for (int i = 0; i < 600; ++i) {
        done = s.analysis(id);
        if (done.status != 202) break;
        std::this_thread::sleep_for(std::chrono::milliseconds(200));
    }
    ASSERT_EQ(done.status, 200);
    EXPECT_EQ(done.body.at("cusps"), 2160);
    EXPECT_EQ(s.analyses_started(), 1u);
}

TEST(ServiceLogic, Dump)
{
    const std::string path = ::testing::TempDir() + "sessions.json";
    std::remove(path.c_str());
    Service s({}, path);
    const std::string id = s.create(body_of(coxmut::testing::path3())).body.at("id");
    s.mutate(id, R"({"k": 1})");
    const Json j = parse_json_text(tools::read_file(path));
    ASSERT_EQ(j.size(), 1u);
    EXPECT_EQ(j[0].at("node_matrices").size(), 2u);
}

TEST(ServiceHttp, EndToEnd)
{
    Service service;
    httplib::Server srv;
    service.mount(srv);
    const int port = srv.bind_to_any_port("127.0.0.1");
    ASSERT_GT(port, 0);
    std::thread t([&] { srv.listen_after_bind(); });
    srv.wait_until_ready();

    httplib::Client cl("127.0.0.1", port);
    auto res = cl.Post("/api/sessions", body_of(coxmut::testing::path3()), "application/json");
    ASSERT_TRUE(res);
    ASSERT_EQ(res->status, 201);
    EXPECT_EQ(res->get_header_value("Access-Control-Allow-Origin"), "*");
    const std::string id = parse_json_text(res->body).at("id");

    res = cl.Post("/api/sessions/" + id + "/mutate", R"({"k":2})", "application/json");
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 200);

    res = cl.Get("/api/sessions/" + id + "/analysis");
    ASSERT_TRUE(res);
    ASSERT_EQ(res->status, 200);
    EXPECT_EQ(parse_json_text(res->body).at("group_order"), 24);

    res = cl.Get("/api/sessions/" + id + "/presentation");
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 200);
    EXPECT_EQ(res->get_header_value("X-Canonical-Key"), matrix_key(mutate(coxmut::testing::path3(), 1)).hex());
    EXPECT_NE(res->body.find("cyc "), std::string::npos);

    res = cl.Post("/api/sessions/" + id + "/mutate", R"({"k":7})", "application/json");
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 409);
    res = cl.Post("/api/sessions/" + id + "/undo", "", "application/json");
    ASSERT_TRUE(res);
    EXPECT_EQ(matrix_from_json(parse_json_text(res->body).at("matrix")), coxmut::testing::path3());
    res = cl.Get("/api/sessions/nope");
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 404);

    srv.stop();
    t.join();
}
