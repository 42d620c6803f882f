#include <blstate/claims.hh>
#include <blstate/constructors.hh>
#include <blstate/suite.hh>

#include <doctest.h>

#include <fstream>
#include <set>

using namespace blstate;

namespace {

const CorpusInstance & instance(const std::vector<CorpusInstance> & corpus, const std::string & name)
{
    for (const auto & c : corpus)
        if (c.name == name)
            return c;
    throw std::out_of_range(name);
}

} // namespace

TEST_CASE("catalogue ids are unique and known")
{
    std::set<std::string> ids;
    for (const auto & c : claim_catalogue()) {
        CHECK(ids.insert(c.id).second);
        CHECK(is_known_claim(c.id));
        CHECK_FALSE(c.statement.empty());
    }
    for (char part = 'a'; part <= 'r'; ++part)
        CHECK(ids.count(std::string("Lemma-3.5-") + part) == 1);
    CHECK_FALSE(is_known_claim("Lemma-3.5-s"));

    const auto corpus = default_corpus();
    InstanceContext ctx(corpus.front());
    CHECK_THROWS_AS(check_claim("Lemma-3.5-s", ctx), std::invalid_argument);
}

TEST_CASE("default corpus shape")
{
    const auto corpus = default_corpus();
    std::vector<std::string> names;
    for (const auto & c : corpus)
        names.push_back(c.name);
    CHECK(names
        == std::vector<std::string>{"mv-chain(1)", "mv-chain(2)", "mv-chain(3)", "mv-chain(4)", "mv-chain(5)", "godel-chain(3)",
            "godel-chain(4)", "godel-chain(5)", "example-3-4", "S1xS1", "S2xS2", "S1+(S1xS1)", "S4xS4", "example-5-2"});
    CHECK(instance(corpus, "S1+(S1xS1)").algebra.size() == 5);
    CHECK(instance(corpus, "S4xS4").algebra.size() == 25);
}

TEST_CASE("lemma on coordinate operators reports the operator count")
{
    const auto corpus = default_corpus();
    InstanceContext ctx(instance(corpus, "S1+(S1xS1)"));
    const auto r = check_claim("Lemma-4.3", ctx);
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.detail == "6 state operators, at least 4 required");

    InstanceContext chain(instance(corpus, "mv-chain(2)"));
    CHECK(check_claim("Lemma-4.3", chain).verdict == Verdict::not_applicable);
}

TEST_CASE("the rejected sigma_a passes as a negative instance")
{
    const auto corpus = default_corpus();
    InstanceContext ctx(instance(corpus, "S4xS4"));
    const auto r = check_claim("Remark-4.5", ctx);
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.witness == "x=(3,1)");
    CHECK(r.detail.find("(2,0)") != std::string::npos);
    CHECK(ctx.named().size() == 1);
    CHECK_FALSE(ctx.named().front().is_state());
}

TEST_CASE("the irreducibility example is logged for homomorphisms with a kernel")
{
    const auto corpus = default_corpus();
    InstanceContext godel(instance(corpus, "godel-chain(3)"));
    const auto r = check_claim("Example-5.3", godel);
    CHECK(r.verdict == Verdict::logged);
    CHECK(r.witness.find("{(c1,1),(1,1)}") != std::string::npos);

    InstanceContext mv(instance(corpus, "mv-chain(3)"));
    CHECK(check_claim("Example-5.3", mv).verdict == Verdict::pass);
}

TEST_CASE("hypotheses that fail give n/a")
{
    const auto corpus = default_corpus();
    InstanceContext example(instance(corpus, "example-3-4"));
    CHECK(check_claim("Cor-2.12", example).verdict == Verdict::not_applicable);
    CHECK(check_claim("Prop-3.13", example).verdict == Verdict::not_applicable);
    CHECK(check_claim("Example-3.4", example).verdict == Verdict::pass);

    InstanceContext chain(instance(corpus, "mv-chain(4)"));
    CHECK(check_claim("Example-3.4", chain).verdict == Verdict::not_applicable);
    CHECK(check_claim("Prop-4.12", chain).verdict == Verdict::pass);
}

TEST_CASE("above the enumeration limit only named operators are used")
{
    const auto corpus = default_corpus();
    InstanceContext ctx(instance(corpus, "example-5-2"), 4);
    CHECK_FALSE(ctx.exhaustive());
    CHECK(ctx.state_operators().size() == 2);
    const auto r = check_claim("Lemma-3.5-f", ctx);
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.detail == "2 operators (named operators only)");
}

TEST_CASE("a malformed instance fails and stops the suite")
{
    std::vector<CorpusInstance> corpus = {
        {"good", mv_chain(2), {}, {}, {}},
        {"bad", mv_chain(2), {{"short", {0, 1}}}, {}, {}},
        {"later", mv_chain(3), {}, {}, {}},
    };
    const auto stopped = run_suite(corpus, {{"Def-2.1", "Def-3.1", "Prop-2.10"}, 1, false});
    // catalogue order puts Prop-2.10 before Def-3.1
    REQUIRE(stopped.records.size() == 8);
    CHECK(stopped.records.back().instance == "bad");
    CHECK(stopped.records.back().verdict == Verdict::fail);
    CHECK(stopped.records.back().detail.find("error:") == 0);
    CHECK(stopped.stopped_early);
    CHECK_FALSE(stopped.passed());

    const auto all = run_suite(corpus, {{"Def-2.1", "Def-3.1", "Prop-2.10"}, 2, true});
    CHECK(all.records.size() == 9);
    CHECK_FALSE(all.stopped_early);
    CHECK_FALSE(all.passed());
}

TEST_CASE("records are ordered by claim, then instance")
{
    const auto corpus = default_corpus();
    const auto report = run_suite(corpus, {{"Prop-2.10", "Def-2.1"}, 3, true});
    REQUIRE(report.records.size() == 2 * corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        CHECK(report.records[i].claim == "Def-2.1");
        CHECK(report.records[i].instance == corpus[i].name);
        CHECK(report.records[corpus.size() + i].claim == "Prop-2.10");
    }
    CHECK(report.passed());
    CHECK_THROWS_AS(run_suite(corpus, {{"Nope"}, 1, false}), std::invalid_argument);
}

TEST_CASE("timings appear only on request")
{
    const auto corpus = default_corpus();
    const auto report = run_suite({corpus.front()}, {{"Def-2.1"}, 1, false});
    CHECK(report_text(report).find(" us]") == std::string::npos);
    CHECK(report_text(report, true).find(" us]") != std::string::npos);
    CHECK(report_json(report).find("elapsed_us") == std::string::npos);
    CHECK(report_json(report, true).find("elapsed_us") != std::string::npos);
}

TEST_CASE("the claim table in docs lists every id in order")
{
    std::ifstream in(std::string(BLSTATE_DOCS_DIR) + "/claims.md");
    REQUIRE(in);
    std::vector<std::string> ids;
    for (std::string line; std::getline(in, line);)
        if (line.starts_with("| `"))
            ids.push_back(line.substr(3, line.find('`', 3) - 3));
    std::vector<std::string> expected;
    for (const auto & c : claim_catalogue())
        expected.push_back(c.id);
    CHECK(ids == expected);
}
