#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>

#include "commands.hpp"
#include "document.hpp"
#include "report.hpp"
#include "sublat/spin.hpp"
#include "support/gen.hpp"

using sublat::ExactMatrix;
using sublat::ExactVector;
using sublat::GaussianRational;
using sublat::Subspace;
using namespace sublat::cli;

namespace {

std::string data_path(const std::string& name) {
    return std::string(SUBLAT_TEST_DATA_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

/// Runs the installed binary through the shell, stderr folded into stdout.
std::pair<int, std::string> run_cli(const std::string& args) {
    const std::string command = std::string(SUBLAT_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buffer;
    while (fgets(buffer.data(), buffer.size(), pipe)) output += buffer.data();
    const int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    return {WEXITSTATUS(status), std::move(output)};
}

} // namespace

TEST_SUITE("cli") {
    TEST_CASE("format names parse") {
        CHECK(parse_format("text") == Format::Text);
        CHECK(parse_format("json") == Format::Json);
        CHECK(parse_format("dot") == Format::Dot);
        CHECK_FALSE(parse_format("yaml"));
        CHECK_FALSE(parse_format("JSON"));
    }

    TEST_CASE("documents load with exact entries") {
        const OperatorSetDocument doc = load_document(data_path("spin_half.json"));
        CHECK(doc.ambient_dim == 2);
        REQUIRE(doc.contexts.size() == 3);
        CHECK(doc.contexts[0].label == "z");
        CHECK(doc.contexts[1].label == "x");
        CHECK(doc.contexts[2].label == "y");
        CHECK(doc.subspaces.empty());
        CHECK(doc.contexts[0].projectors[0] == sublat::spin::p1_z().matrix());
        CHECK(doc.contexts[1].projectors[1] == sublat::spin::p2_x().matrix());
        CHECK(doc.contexts[2].projectors[0] == sublat::spin::p1_y().matrix());
    }

    TEST_CASE("serialization is a canonicalizing fixed point") {
        const std::string raw = R"({
            "ambient_dim": 2,
            "contexts": [{
                "label": "z",
                "projectors": [
                    [[["2/2", "0"], ["0", "-0"]], [["0", "0"], ["0", "0"]]],
                    [[["0", "0"], ["0", "0"]], [["0", "0"], ["3/3", "0"]]]
                ]
            }]
        })";
        const OperatorSetDocument doc = parse_document(raw);
        const auto once = serialize_document(doc);
        CHECK(once["contexts"][0]["projectors"][0][0][0][0] == "1");
        const OperatorSetDocument again = parse_document(once.dump());
        CHECK(serialize_document(again) == once);

        const OperatorSetDocument with_spans =
            load_document(data_path("subspaces_lc2.json"));
        CHECK(with_spans.subspaces.size() == 8);
        const auto js = serialize_document(with_spans);
        CHECK(js.contains("subspaces"));
        CHECK(serialize_document(parse_document(js.dump())) == js);
    }

    TEST_CASE("document parsing rejects malformed input") {
        CHECK_THROWS_AS(parse_document("{"), DocumentError);
        CHECK_THROWS_WITH_AS(parse_document("{\n  \"ambient_dim\": 2,,\n}"),
                             doctest::Contains("line 2"), DocumentError);
        CHECK_THROWS_AS(parse_document("[]"), DocumentError);
        CHECK_THROWS_AS(parse_document("{\"contexts\": []}"), DocumentError);

        const std::string zero_den = R"({"ambient_dim": 1, "contexts": [
            {"label": "a", "projectors": [[[["1/0", "0"]]]]}]})";
        CHECK_THROWS_AS(parse_document(zero_den), DocumentError);

        const std::string ragged = R"({"ambient_dim": 2, "contexts": [
            {"label": "a", "projectors": [[[["1", "0"]], [["0", "0"], ["0", "0"]]]]}]})";
        CHECK_THROWS_AS(parse_document(ragged), DocumentError);

        const std::string wrong_size = R"({"ambient_dim": 2, "contexts": [
            {"label": "a", "projectors": [[[["1", "0"]]]]}]})";
        CHECK_THROWS_AS(parse_document(wrong_size), DocumentError);

        CHECK_THROWS_AS(load_document(data_path("truncated.json")), DocumentError);
        CHECK_THROWS_AS(load_document(data_path("no_such_file.json")), DocumentError);
    }

    TEST_CASE("subspaces round trip through json") {
        const auto j = subspace_to_json(sublat::ran(sublat::spin::p1_y()));
        CHECK(j["dim"] == 1);
        REQUIRE(j["basis"].size() == 1);
        CHECK(j["basis"][0][0] == nlohmann::ordered_json::array({"1", "0"}));
        CHECK(j["basis"][0][1] == nlohmann::ordered_json::array({"0", "1"}));

        gen::Rng rng(61);
        for (int k = 0; k < 25; ++k) {
            const Subspace s = gen::random_subspace(rng, 3);
            CHECK(subspace_from_json(subspace_to_json(s), 3) == s);
        }
        CHECK_THROWS_AS(subspace_from_json(nlohmann::json::array(), 2), DocumentError);
        CHECK_THROWS_AS(
            subspace_from_json(nlohmann::json{{"dim", 1}, {"basis", {{"1"}}}}, 2),
            DocumentError);
    }

    TEST_CASE("json rendering wraps the body in a versioned envelope") {
        Report r;
        r.command = "probe";
        r.body["value"] = 7;
        r.text = "plain\n";
        const std::string js = render(r, Format::Json);
        CHECK(js.substr(0, 16) == "{\n  \"schema\": 1,");
        const auto parsed = nlohmann::json::parse(js);
        CHECK(parsed["schema"] == 1);
        CHECK(parsed["command"] == "probe");
        CHECK(parsed["value"] == 7);
        CHECK(render(r, Format::Text) == "plain\n");
        CHECK(render(r, Format::Dot).empty());
    }

    TEST_CASE("validate accepts the three-context document") {
        const Report r = cmd_validate(data_path("spin_half.json"));
        CHECK(r.exit_code == 0);
        CHECK(r.body["all_valid"] == true);
        REQUIRE(r.body["contexts"].size() == 3);
        for (const auto& jc : r.body["contexts"]) {
            CHECK(jc["valid"] == true);
            CHECK(jc["ranks"] == nlohmann::ordered_json::array({1, 1}));
        }
        CHECK(r.text.find("all contexts valid") != std::string::npos);
    }

    TEST_CASE("validate reports a non-orthogonal family") {
        const Report r = cmd_validate(data_path("bad_pair.json"));
        CHECK(r.exit_code == 1);
        CHECK(r.body["all_valid"] == false);
        REQUIRE(r.body["contexts"].size() == 1);
        CHECK(r.body["contexts"][0]["valid"] == false);
        CHECK_FALSE(r.body["contexts"][0]["error"].get<std::string>().empty());
        CHECK(r.text.find("INVALID") != std::string::npos);
    }

    TEST_CASE("context-lattice lists four elements with clean axioms") {
        const Report r = cmd_context_lattice(data_path("spin_half.json"), "z", Format::Text);
        CHECK(r.exit_code == 0);
        CHECK(r.body["label"] == "z");
        REQUIRE(r.body["elements"].size() == 4);
        CHECK(r.body["elements"][0]["dim"] == 0);
        CHECK(r.body["elements"][3]["dim"] == 2);
        REQUIRE(r.body["axioms"].size() == 4);
        for (const auto& ja : r.body["axioms"]) CHECK(ja["holds"] == true);
        CHECK(r.body["axioms"][2]["axiom"] == "distributive");
        CHECK(r.dot.empty());

        const Report rd =
            cmd_context_lattice(data_path("spin_half.json"), "y", Format::Dot);
        CHECK(rd.dot.find("digraph {") == 0);
        CHECK(rd.dot.find("rankdir=BT;") != std::string::npos);

        CHECK_THROWS_AS(cmd_context_lattice(data_path("spin_half.json"), "q", Format::Text),
                        sublat::SelectorError);
    }

    TEST_CASE("intersect keeps only the trivial pair for all three contexts") {
        const Report r = cmd_intersect(data_path("spin_half.json"), Format::Text);
        CHECK(r.exit_code == 0);
        CHECK(r.body["irreducible"] == true);
        REQUIRE(r.body["lattices"].size() == 3);
        for (const auto& jl : r.body["lattices"]) CHECK(jl["size"] == 4);
        REQUIRE(r.body["elements"].size() == 2);
        CHECK(r.body["elements"][0]["dim"] == 0);
        CHECK(r.body["elements"][1]["dim"] == 2);
    }

    TEST_CASE("intersect of a single context returns its whole lattice") {
        const Report r = cmd_intersect(data_path("z_only.json"), Format::Text);
        CHECK(r.exit_code == 0);
        CHECK(r.body["irreducible"] == false);
        CHECK(r.body["elements"].size() == 4);
    }

    TEST_CASE("burnside verdicts for the worked documents") {
        const Report full = cmd_burnside(data_path("spin_half.json"));
        CHECK(full.exit_code == 0);
        CHECK(full.body["generators"] == 6);
        CHECK(full.body["rounds"] == nlohmann::ordered_json::array({4, 4}));
        CHECK(full.body["closure_dimension"] == 4);
        CHECK(full.body["full_dimension"] == 4);
        CHECK(full.body["irreducible"] == true);
        CHECK_FALSE(full.body.contains("invariant_witness"));
        CHECK(full.text.find("verdict: irreducible") != std::string::npos);

        const Report z = cmd_burnside(data_path("z_only.json"));
        CHECK(z.exit_code == 0);
        CHECK(z.body["closure_dimension"] == 2);
        CHECK(z.body["irreducible"] == false);
        REQUIRE(z.body.contains("invariant_witness"));
        CHECK(z.body["invariant_witness"]["dim"] == 1);
        CHECK(z.text.find("verdict: reducible") != std::string::npos);

        const Report trivial = cmd_burnside(data_path("identity_only.json"));
        CHECK(trivial.body["closure_dimension"] == 1);
        CHECK(trivial.body["irreducible"] == false);
        CHECK_FALSE(trivial.body.contains("invariant_witness"));

        CHECK_THROWS_AS(cmd_burnside(data_path("ambient_one.json")),
                        sublat::OutOfScopeError);
    }

    TEST_CASE("axioms from contexts and from spans agree") {
        const Report from_contexts = cmd_axioms(data_path("spin_half.json"), Format::Text);
        const Report from_spans = cmd_axioms(data_path("subspaces_lc2.json"), Format::Text);
        CHECK(from_contexts.exit_code == 0);
        CHECK(from_spans.exit_code == 0);
        CHECK(from_contexts.body["source"] == "contexts");
        CHECK(from_spans.body["source"] == "subspaces");
        CHECK(from_contexts.body["family_size"] == 8);
        CHECK(from_contexts.body["elements"] == from_spans.body["elements"]);
        CHECK(from_contexts.body["reports"] == from_spans.body["reports"]);

        REQUIRE(from_contexts.body["reports"].size() == 5);
        const auto& reports = from_contexts.body["reports"];
        CHECK(reports[0]["axiom"] == "closure-meet");
        CHECK(reports[0]["holds"] == true);
        CHECK(reports[1]["holds"] == true);
        CHECK(reports[2]["axiom"] == "distributive");
        CHECK(reports[2]["holds"] == false);
        CHECK(reports[2]["counterexample"]["indices"] ==
              nlohmann::ordered_json::array({1, 2, 3}));
        CHECK(reports[3]["axiom"] == "modular-identity");
        CHECK(reports[3]["holds"] == true);
        CHECK(reports[4]["axiom"] == "orthomodular");
        CHECK(reports[4]["holds"] == true);
    }

    TEST_CASE("axioms stops after a closure failure") {
        const Report r = cmd_axioms(data_path("open_family.json"), Format::Text);
        CHECK(r.exit_code == 1);
        CHECK(r.body["checks_skipped"] == true);
        REQUIRE(r.body["reports"].size() == 2);
        CHECK(r.body["reports"][0]["holds"] == true);
        CHECK(r.body["reports"][1]["holds"] == false);
        CHECK(r.body["reports"][1]["counterexample"].contains("lhs"));
        CHECK(r.text.find("axiom checks skipped") != std::string::npos);
    }

    TEST_CASE("the walkthrough checks every line it prints") {
        const Report r = cmd_demo_spin_half();
        CHECK(r.exit_code == 0);
        CHECK(r.body["assertions"] == 31);
        CHECK(r.body["passed"] == true);
        CHECK(r.text == read_file(data_path("demo_spin_half.txt")));
    }

    TEST_CASE("binary exit codes distinguish failure classes") {
        CHECK(run_cli("--help").first == 0);
        CHECK(run_cli("demo spin-half").first == 0);
        CHECK(run_cli("validate --input " + data_path("spin_half.json")).first == 0);
        CHECK(run_cli("validate --input " + data_path("bad_pair.json")).first == 1);
        CHECK(run_cli("axioms --input " + data_path("open_family.json")).first == 1);

        const auto [syntax_code, syntax_out] =
            run_cli("validate --input " + data_path("truncated.json"));
        CHECK(syntax_code == 2);
        CHECK(syntax_out.find("line") != std::string::npos);
        CHECK(run_cli("validate --input " + data_path("no_such_file.json")).first == 2);

        CHECK(run_cli("context-lattice --input " + data_path("spin_half.json") +
                      " --context q")
                  .first == 3);
        CHECK(run_cli("demo nope").first == 3);
        CHECK(run_cli("frobnicate").first == 3);
        CHECK(run_cli("validate").first == 3);
    }

    TEST_CASE("binary output matches the frozen walkthrough") {
        const auto [code, out] = run_cli("demo spin-half");
        CHECK(code == 0);
        CHECK(out == read_file(data_path("demo_spin_half.txt")));
    }

    TEST_CASE("binary json output carries the schema tag") {
        const auto [code, out] =
            run_cli("burnside --input " + data_path("spin_half.json") + " --format json");
        CHECK(code == 0);
        const auto parsed = nlohmann::json::parse(out);
        CHECK(parsed["schema"] == 1);
        CHECK(parsed["command"] == "burnside");
        CHECK(parsed["irreducible"] == true);
    }
}
