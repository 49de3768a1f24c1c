#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fpcl/cli.hpp"
#include "json.hpp"

using namespace fpcl;
using nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

// Scoped temp file in the working directory.
struct TempFile {
    std::string path;
    TempFile(std::string name, const std::string& contents) : path(std::move(name)) {
        std::ofstream f(path);
        f << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

const std::string kFuzzyConfig =
    R"({"algebra":"fuzzy","ports":["p","q"],
        "interactions":[{"p":"0.3","q":"1"},{"p":"1","q":"0"}]})";

}  // namespace

TEST_CASE("check echoes the canonical form") {
    const CliResult inline_arg = run({"check", "p&!p | q"});
    CHECK(inline_arg.code == 0);
    CHECK(inline_arg.out == "p & !p | q\n");

    TempFile file("cli_check_formula.txt", "p # (q + r)\n");
    const CliResult from_file = run({"check", file.path});
    CHECK(from_file.code == 0);
    CHECK(from_file.out == "p # (q + r)\n");

    const CliResult at_file = run({"check", "@" + file.path});
    CHECK(at_file.code == 0);
    CHECK(at_file.out == from_file.out);

    const CliResult bad = run({"check", "p &"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("position") != std::string::npos);
}

TEST_CASE("eval and closure") {
    TempFile config("cli_eval_config.json", kFuzzyConfig);
    const CliResult eval = run({"eval", "--formula", "!p", "--config", config.path});
    CHECK(eval.code == 0);
    CHECK(eval.out == "0\n");  // min(0.7, 0) = 0

    const CliResult clo = run({"closure", "--formula", "!p", "--config", config.path});
    CHECK(clo.code == 0);
    CHECK(clo.out == "7/10\n");  // best subset: {first interaction} alone

    const CliResult json_out =
        run({"eval", "--formula", "!p", "--config", config.path, "--json"});
    CHECK(json::parse(json_out.out)["value"] == "0");

    const CliResult missing = run({"eval", "--formula", "r", "--config", config.path});
    CHECK(missing.code == 2);
}

TEST_CASE("normalize") {
    const CliResult text = run({"normalize", "--formula", "p # q", "--ports", "p,q",
                                "--mode", "demorgan"});
    CHECK(text.code == 0);
    CHECK(text.out == "p # q\n");

    const CliResult sets = run({"normalize", "--formula", "p & !p", "--ports", "p,q",
                                "--mode", "kleene", "--sets", "--json"});
    CHECK(sets.code == 0);
    const json doc = json::parse(sets.out);
    CHECK(doc["kind"] == "sum");
    CHECK(doc["sets"].is_array());
    CHECK(doc["groups"] == doc["sets"]);

    const CliResult val = run({"normalize", "--formula", "p & !p", "--mode", "boolean",
                               "--json"});
    CHECK(json::parse(val.out)["kind"] == "false");

    const CliResult bad_mode =
        run({"normalize", "--formula", "p", "--mode", "sorta"});
    CHECK(bad_mode.code == 2);
}

TEST_CASE("equiv exit codes and JSON schema") {
    const std::string left = "p & !p";
    const std::string right = "(p&!p&q)|(p&!p&!q)";

    const CliResult kleene = run({"equiv", "--left", left, "--right", right, "--ports",
                                  "p,q", "--mode", "kleene"});
    CHECK(kleene.code == 0);

    const CliResult demorgan = run({"equiv", "--left", left, "--right", right,
                                    "--ports", "p,q", "--mode", "demorgan", "--oracle",
                                    "--json"});
    CHECK(demorgan.code == 1);
    const json doc = json::parse(demorgan.out);
    CHECK(doc["equivalent"] == false);
    CHECK(doc["mode"] == "demorgan");
    CHECK(doc["witness"].is_object());
    CHECK(doc["witness"]["config"]["algebra"] == "four");

    const CliResult usage = run({"equiv", "--left", left});
    CHECK(usage.code == 2);
}

TEST_CASE("oracle subcommand") {
    const CliResult not_eq = run({"oracle", "--left", "p", "--right", "q", "--ports",
                                  "p,q", "--algebra", "bool2", "--json"});
    CHECK(not_eq.code == 1);
    const json doc = json::parse(not_eq.out);
    CHECK(doc["verdict"] == "not-equivalent");
    CHECK(doc["witness"]["values"].size() == 2);

    const CliResult fuzzy = run({"oracle", "--left", "p&!p", "--right",
                                 "(p&!p&q)|(p&!p&!q)", "--ports", "p,q", "--algebra",
                                 "fuzzy", "--grid", "2", "--max-size", "2", "--json"});
    CHECK(fuzzy.code == 0);
    CHECK(json::parse(fuzzy.out)["verdict"] == "no-counterexample-found");

    const CliResult guard = run({"oracle", "--left", "p", "--right", "p", "--ports",
                                 "p,q", "--algebra", "four"});
    CHECK(guard.code == 2);  // 4^2 > 12 without --max-size
}

TEST_CASE("template and analyze") {
    const CliResult tpl = run({"template", "master-slave", "--masters", "2", "--slaves",
                               "2", "--json"});
    CHECK(tpl.code == 0);
    const json doc = json::parse(tpl.out);
    CHECK(doc["ports"] == json::array({"m1", "m2", "s1", "s2"}));

    const CliResult p2p = run({"template", "p2p", "--n", "2"});
    CHECK(p2p.code == 0);
    CHECK(p2p.out.find("ports: r1,r2,s1,s2") != std::string::npos);

    TempFile config("cli_analyze_config.json",
                    R"({"algebra":"bool2","ports":["m1","m2","s1","s2"],
                        "interactions":[{"s1":"1","m1":"1","s2":"0","m2":"0"},
                                        {"s2":"1","m2":"1","s1":"0","m1":"0"}]})");
    const json tpl_doc =
        json::parse(run({"template", "master-slave", "--masters", "2", "--slaves", "2",
                         "--json"})
                        .out);
    const CliResult analyzed = run({"analyze", "--formula",
                                    tpl_doc["formula"].get<std::string>(), "--config",
                                    config.path, "--json"});
    CHECK(analyzed.code == 0);
    const json adoc = json::parse(analyzed.out);
    CHECK(adoc["eval"] == "1");
    CHECK(adoc["uncertainty"] == "1");
}

TEST_CASE("laws subcommand") {
    const CliResult four = run({"laws", "--algebra", "four", "--json"});
    CHECK(four.code == 0);
    const json doc = json::parse(four.out);
    CHECK(doc["classification"] == "demorgan");
    bool kleene_fails = false;
    for (const auto& law : doc["laws"]) {
        if (law["name"] == "kleene-condition") {
            CHECK(law["holds"] == false);
            CHECK(law["counterexample"] == "(u, w)");
            kleene_fails = true;
        } else if (law["name"].get<std::string>().rfind("boolean-", 0) != 0) {
            CHECK(law["holds"] == true);
        }
    }
    CHECK(kleene_fails);

    CHECK(run({"laws", "--algebra", "galois"}).code == 2);
    CHECK(run({"laws", "--algebra", "fuzzy"}).code == 0);
}

TEST_CASE("unknown flags exit 2") {
    CHECK(run({"equiv", "--wat", "1"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({}).code == 2);
}
