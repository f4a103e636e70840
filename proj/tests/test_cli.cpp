#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qpi/cli.hpp"
#include "qpi/identities.hpp"
#include "qpi/report_json.hpp"

using nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = qpi::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle)
{
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("verify one identity")
{
    const CliRun r = run({"verify", "--id", "thm-3.2", "--order", "10", "--enum-ceiling", "10"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "thm-3.2"));
    CHECK(contains(r.out, "MATCH"));
    CHECK(contains(r.out, "theorem"));
    CHECK(r.err.empty());
}

TEST_CASE("unknown ids are rejected with suggestions")
{
    const CliRun r = run({"verify", "--id", "thm-3.9"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(contains(r.err, "unknown identity id 'thm-3.9'"));
    CHECK(contains(r.err, "did you mean"));
    CHECK(contains(r.err, "thm-3."));
}

TEST_CASE("verify requires exactly one target")
{
    CHECK(run({"verify"}).code == 2);
    CHECK(contains(run({"verify"}).err, "exactly one"));
    CHECK(run({"verify", "--id", "thm-3.2", "--all"}).code == 2);
}

TEST_CASE("whole-registry verification as json")
{
    const CliRun r =
        run({"verify", "--all", "--order", "8", "--enum-ceiling", "8", "--format", "json"});
    REQUIRE(r.code == 0);
    const json arr = json::parse(r.out);
    REQUIRE(arr.is_array());
    CHECK(arr.size() == qpi::registry().size());
    for (const json& j : arr) {
        CHECK(j.contains("id"));
        CHECK(j.contains("status"));
        CHECK(j.contains("first_divergent_exponent"));
        const std::string status = j["status"].get<std::string>();
        const bool ok = status == "MATCH" || status == "CONJECTURE-MATCH";
        CHECK(ok);
        CHECK(j["first_divergent_exponent"].is_null());
        // Every emitted report parses back into the typed form.
        const qpi::VerificationReport rep = qpi::report_from_json(j);
        CHECK(qpi::report_to_json(rep) == j);
    }
}

TEST_CASE("report json round trip")
{
    const qpi::VerificationReport rep = qpi::verify("thm-4.5", 10, 10);
    const json j = qpi::report_to_json(rep);
    CHECK(qpi::report_from_json(j) == rep);
    // Including divergence data from the negative-control clone.
    const qpi::CorruptedEntry bad = qpi::corrupted_entry();
    const qpi::VerificationReport failed = qpi::verify_entry(bad.entry, 10, 10);
    const json jf = qpi::report_to_json(failed);
    CHECK(jf["status"] == "MISMATCH");
    CHECK(jf["first_divergent_exponent"] == bad.expected_divergence);
    CHECK(qpi::report_from_json(jf) == failed);
}

TEST_CASE("csv output")
{
    const CliRun r =
        run({"verify", "--all", "--order", "6", "--enum-ceiling", "6", "--format", "csv"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "id,kind,order,status,first_divergent_exponent,ms");
    size_t rows = 0;
    while (std::getline(lines, line))
        ++rows;
    CHECK(rows == qpi::registry().size());
}

TEST_CASE("worked-example tables through the tool")
{
    const CliRun t2 = run({"table", "--id", "2"});
    CHECK(t2.code == 0);
    CHECK(contains(t2.out, "(1,2,3,4)"));
    CHECK(contains(t2.out, "total: 24"));

    const CliRun t7 = run({"table", "--id", "7"});
    CHECK(t7.code == 0);
    CHECK(contains(t7.out, "n=2"));
    CHECK(contains(t7.out, "total: 36"));

    const CliRun t7json = run({"table", "--id", "7", "--format", "json"});
    REQUIRE(t7json.code == 0);
    const json sections = json::parse(t7json.out);
    REQUIRE(sections.is_array());
    CHECK(sections.size() == 3);
    for (const json& sec : sections)
        CHECK(sec["total"] == "36");

    const CliRun bad = run({"table", "--id", "9"});
    CHECK(bad.code == 2);
    CHECK(contains(bad.err, "known ids are 2, 3, 4 and 7"));
}

TEST_CASE("coefficient dumps")
{
    const CliRun r = run({"coeffs", "--id", "thm-3.2", "--side", "2", "--order", "10"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "combinatorial-enum"));
    CHECK(contains(r.out, "q^10: 24"));

    const CliRun z = run({"coeffs", "--id", "thm-4.4", "--side", "1", "--order", "9",
                          "--format", "json"});
    REQUIRE(z.code == 0);
    const json j = json::parse(z.out);
    CHECK(j["coeffs"][1] == "z");
    CHECK(j["coeffs"][4] == "z^2");
    CHECK(j["coeffs"][9] == "z^3");

    CHECK(run({"coeffs", "--id", "thm-3.2", "--side", "9"}).code == 2);
    CHECK(run({"coeffs", "--id", "thm-3.4", "--side", "0", "--order", "50"}).code == 2);
    CHECK(run({"coeffs", "--id", "nope", "--side", "0"}).code == 2);
}

TEST_CASE("listing the registry")
{
    const CliRun r = run({"list"});
    CHECK(r.code == 0);
    for (const qpi::IdentityEntry& e : qpi::registry())
        CHECK(contains(r.out, e.id));
    CHECK(contains(r.out, "Ramanujan"));

    const CliRun j = run({"list", "--format", "json"});
    REQUIRE(j.code == 0);
    CHECK(json::parse(j.out).size() == qpi::registry().size());
}

TEST_CASE("usage errors and help")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"verify", "--id", "thm-3.2", "--order", "0"}).code == 2);
    CHECK(run({"verify", "--id", "thm-3.2", "--format", "xml"}).code == 2);
    CHECK(run({"table"}).code == 2);

    const CliRun help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(contains(help.out, "verify"));
    CHECK(contains(help.out, "table"));
}
