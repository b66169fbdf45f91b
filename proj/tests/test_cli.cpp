#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "conred/cli.hpp"
#include "conred/io.hpp"

using json = nlohmann::json;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
    return path;
}

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = conred::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("descriptor JSON round-trip") {
    const auto j = json::parse(R"({"summands":[{"l":0,"k":1},{"l":0,"k":1},{"l":1,"k":2}]})");
    const conred::RepDescriptor rep = conred::io::descriptor_from_json(j);
    CHECK(rep.dim() == 7);
    CHECK(json(conred::io::descriptor_to_json(rep)) == j);
    CHECK_THROWS_AS(conred::io::descriptor_from_json(json::parse(R"({"summands":[{"l":0}]})")), conred::Error);
}

TEST_CASE("analyze") {
    const auto path = write_temp("conred_mu2.json", R"({"summands":[{"l":0,"k":2}]})");
    const auto r = run_cli({"analyze", path.string()});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["generic"] == true);
    CHECK(j["uniform"] == true);
    CHECK(j["moment_never_zero"] == true);
    CHECK(j["dim"] == 3);
    CHECK(j["index_count"] == 3);
}

TEST_CASE("polytope emits rational vertices") {
    const auto path = write_temp("conred_mu2.json", R"({"summands":[{"l":0,"k":2}]})");
    const auto r = run_cli({"polytope", path.string()});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    REQUIRE(j["vertices"].size() == 2);
    CHECK(j["vertices"][0]["x"]["den"] == 1);
}

TEST_CASE("rays lists critical rays and wedges") {
    const auto path = write_temp("conred_mu2.json", R"({"summands":[{"l":0,"k":2}]})");
    const auto r = run_cli({"rays", path.string()});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    REQUIRE(j["rays"].size() == 3);
    CHECK(j["rays"][0]["dir"] == json::array({1, 0}));
    CHECK(j["rays"][1]["dir"] == json::array({1, 1}));
    CHECK(j["rays"][2]["dir"] == json::array({0, 1}));
    CHECK(j["wedges"].size() == 2);
}

TEST_CASE("transversal verdicts and strict exit") {
    const auto path = write_temp("conred_mu2.json", R"({"summands":[{"l":0,"k":2}]})");
    {
        const auto r = run_cli({"transversal", path.string(), "--nu", "1,1"});
        CHECK(r.code == 0);
        const json j = json::parse(r.out);
        CHECK(j["psi"] == "critical");
        CHECK(j["phi"] == "diagonal_ray_unsupported");
        CHECK(j["witnesses"] == json::array({json::array({1, 1})}));
    }
    {
        const auto r = run_cli({"transversal", path.string(), "--nu", "1,1", "--strict"});
        CHECK(r.code == 1);
    }
    {
        const auto r = run_cli({"transversal", path.string(), "--nu", "3,1"});
        CHECK(r.code == 0);
        const json j = json::parse(r.out);
        CHECK(j["psi"] == "transverse");
        CHECK(j["phi"] == "transverse");
        CHECK(j["nu"]["primitive"] == json::array({3, 1}));
    }
    {
        // nu is normalized to primitive form; the report echoes both.
        const auto r = run_cli({"transversal", path.string(), "--nu", "2,2"});
        const json j = json::parse(r.out);
        CHECK(j["nu"]["raw"] == json::array({2, 2}));
        CHECK(j["nu"]["primitive"] == json::array({1, 1}));
        CHECK(j["psi"] == "critical");
    }
}

TEST_CASE("reduce reproduces the wps classification") {
    const auto path = write_temp("conred_mu2.json", R"({"summands":[{"l":0,"k":2}]})");
    const auto r = run_cli({"reduce", path.string(), "--nu", "3,1"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["kind"] == "wps");
    CHECK(j["weights"] == json::array({1, 2}));
    CHECK(j["raw_weights"] == json::array({4, 8}));
    CHECK(j["quotient_weights"].size() == 3);
    CHECK(j["isotopy"]["ambient"]["weights"] == json::array({1, 2}));

    const auto crit = run_cli({"reduce", path.string(), "--nu", "1,1"});
    CHECK(crit.code == 1);
    const json err = json::parse(crit.err);
    CHECK(err["error"]["code"] == "CriticalRay");
    CHECK(err["error"]["witnesses"] == json::array({json::array({1, 1})}));
}

TEST_CASE("reduce emits the segre quotient") {
    const auto path = write_temp("conred_w11.json", R"({"summands":[{"l":0,"k":1},{"l":0,"k":1}]})");
    const auto r = run_cli({"reduce", path.string(), "--nu", "2,1"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["kind"] == "segre");
    CHECK(j["a"] == json::array({2, 2}));
    CHECK(j["b"] == json::array({1, 1}));
    CHECK(j["generators"] == 1);
    CHECK(j["complex_dim"] == 2);
}

TEST_CASE("betti") {
    const auto r = run_cli({"betti", "--base", "1,0,1"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["conic_reduction"] == json::array({1, 0, 2, 0, 1}));
    CHECK(j["product_p1"] == json::array({1, 0, 2, 0, 1}));
}

TEST_CASE("verify aggregates and is byte-deterministic") {
    const auto path = write_temp("conred_mu2.json", R"({"summands":[{"l":0,"k":2}]})");
    const auto r1 = run_cli({"verify", path.string(), "--nu", "3,1", "--samples", "100", "--seed", "5"});
    const auto r2 = run_cli({"verify", path.string(), "--nu", "3,1", "--samples", "100", "--seed", "5"});
    CHECK(r1.code == 0);
    CHECK(r1.out == r2.out);
    const json j = json::parse(r1.out);
    CHECK(j["all_pass"] == true);
    CHECK(j["reports"].size() == 12);

    const auto crit = run_cli({"verify", path.string(), "--nu", "1,1", "--samples", "20"});
    CHECK(crit.code == 1); // errored properties gate the exit status
}

TEST_CASE("malformed input exits 2 with a JSON error") {
    {
        const auto r = run_cli({"analyze", "/nonexistent/nowhere.json"});
        CHECK(r.code == 2);
        CHECK(json::parse(r.err)["error"]["code"] == "MalformedInput");
    }
    {
        const auto path = write_temp("conred_bad.json", R"({"summands":[{"l":0,"k":-2}]})");
        const auto r = run_cli({"analyze", path.string()});
        CHECK(r.code == 2);
        CHECK(json::parse(r.err)["error"]["code"] == "NegativeSymmetricDegree");
    }
    {
        const auto r = run_cli({"betti", "--base", "1,x"});
        CHECK(r.code == 2);
    }
}

TEST_CASE("output file and table format") {
    const auto path = write_temp("conred_mu2.json", R"({"summands":[{"l":0,"k":2}]})");
    const auto out_path = std::filesystem::temp_directory_path() / "conred_out.json";
    std::filesystem::remove(out_path);
    const auto r = run_cli({"analyze", path.string(), "--output", out_path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(out_path);
    json j;
    in >> j;
    CHECK(j["dim"] == 3);

    const auto table = run_cli({"analyze", path.string(), "--format", "table"});
    CHECK(table.code == 0);
    CHECK(table.out.find("generic") != std::string::npos);
    CHECK(table.out.find('{') == std::string::npos);
}
