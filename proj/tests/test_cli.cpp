#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "ptv/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::initializer_list<std::string> args) {
    std::ostringstream out, err;
    const int code = ptv::run_cli(std::vector<std::string>(args), out, err);
    return {code, out.str(), err.str()};
}

json cli_json(std::initializer_list<std::string> args) {
    const Run r = cli(args);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

} // namespace

TEST_CASE("volume subcommand") {
    const json j = cli_json({"volume", "--word", "LR", "--format", "json"});
    CHECK(j["volume"].get<double>() == doctest::Approx(2.029883212).epsilon(1e-8));
    CHECK(j["tetrahedra"].get<int>() == 2);
    CHECK(j["geometric"].get<bool>());
    CHECK(j["dilatation"].get<double>() == doctest::Approx(2.6180340).epsilon(1e-7));
    CHECK(j["theorems"].is_object());
    // matrix input goes through the same pipeline
    const json m = cli_json({"volume", "--matrix", "2,1;1,1", "--format", "json"});
    CHECK(m["volume"].get<double>() == doctest::Approx(j["volume"].get<double>()).epsilon(1e-12));
    // psi input
    const json p = cli_json({"volume", "--psi", "2", "--format", "json"});
    CHECK(p["word"].get<std::string>() == "LLRR");
}

TEST_CASE("volume usage errors give exit code 2") {
    CHECK(cli({"volume"}).code == 2);
    CHECK(cli({"volume", "--word", "LR", "--matrix", "2,1;1,1"}).code == 2);
    CHECK(cli({"volume", "--word", "XYZ"}).code == 2);
    CHECK(cli({"volume", "--word", "LLLL"}).code == 2); // parabolic
    CHECK(cli({"volume", "--matrix", "1,1;0,1"}).code == 2);
    CHECK(cli({"volume", "--matrix", "2,0;0,1"}).code == 2); // det != 1
    CHECK(cli({"nonsense"}).code == 2);
}

TEST_CASE("farey-distance subcommand") {
    const json j = cli_json({"farey-distance", "0", "2/5", "--format", "json"});
    CHECK(j["dp"].get<int>() == 2);
    CHECK(j["lower"].get<double>() == doctest::Approx(0.539871).epsilon(1e-5));
    CHECK(j["upper"].get<double>() == doctest::Approx(51.70).epsilon(0.1 / 51.7));
    const json e = cli_json({"farey-distance", "0", "inf", "--format", "json"});
    CHECK(e["dp"].get<int>() == 1);
    CHECK(cli({"farey-distance", "1/2", "1/2"}).code == 2);
    CHECK(cli({"farey-distance", "a", "b"}).code == 2);
}

TEST_CASE("systole, diameter, inradius subcommands") {
    const json s = cli_json({"systole", "--genus", "2", "--punctures", "0", "--format", "json"});
    CHECK(s["lower"].get<double>() == doctest::Approx(0.177289).epsilon(1e-5));
    CHECK(s["upper"].get<double>() == doctest::Approx(3.41173).epsilon(1e-4));
    const json sp = cli_json({"systole", "--genus", "1", "--punctures", "1", "--format", "json"});
    CHECK_FALSE(sp.contains("upper"));
    CHECK(cli({"systole", "--genus", "1", "--punctures", "0"}).code == 2);

    const json d = cli_json({"diameter", "--genus", "1", "--punctures", "1", "--format", "json"});
    CHECK(d["lower"].get<double>() == doctest::Approx(0.487224).epsilon(1e-5));
    CHECK(cli({"diameter", "--genus", "0", "--punctures", "3"}).code == 2);

    const json i = cli_json({"inradius", "--format", "json"});
    CHECK(i["lower"].get<double>() == doctest::Approx(0.974447).epsilon(1e-5));
    CHECK(i["upper"].get<double>() == doctest::Approx(25.850).epsilon(1e-2 / 25.85));
}

TEST_CASE("constants subcommand") {
    const json j = cli_json({"constants", "--format", "json"});
    CHECK(j["v3"].get<double>() == doctest::Approx(1.0149416064).epsilon(1e-9));
    CHECK(j["v8"].get<double>() == doctest::Approx(3.6638623767).epsilon(1e-9));
    CHECK(j["weeks_volume"].get<double>() == doctest::Approx(0.9427074).epsilon(1e-6));
}

TEST_CASE("check-km is deterministic under a seed and always holds") {
    const json a = cli_json({"check-km", "--random", "12", "--max-len", "10", "--seed", "5",
                             "--format", "json"});
    CHECK(a["count"].get<int>() == 12);
    CHECK(a["holds"].get<int>() == 12);
    const json b = cli_json({"check-km", "--random", "12", "--max-len", "10", "--seed", "5",
                             "--format", "json"});
    CHECK(a == b);
    const json c = cli_json({"check-km", "--random", "12", "--max-len", "10", "--seed", "6",
                             "--format", "json"});
    CHECK(a["details"] != c["details"]);
}

TEST_CASE("wp-bounds subcommand") {
    const json j = cli_json({"wp-bounds", "--word", "LR", "--format", "json"});
    CHECK(j["area"].get<double>() == doctest::Approx(6.2831853).epsilon(1e-7));
    CHECK(j["volume"].get<double>() == doctest::Approx(2.0298832).epsilon(1e-7));
    CHECK(j["wp_translation_lower"].get<double>() == doctest::Approx(0.539871).epsilon(1e-5));
    CHECK(j["km_holds"].get<bool>());
    const json v = cli_json({"wp-bounds", "--volume", "2.0298832", "--genus", "2",
                             "--punctures", "0", "--format", "json"});
    CHECK(v["wp_translation_lower"].get<double>() ==
          doctest::Approx(2.0298832 / (3.0 * std::sqrt(3.14159265358979 / 2.0 * 2.0)))
              .epsilon(1e-7));
    CHECK(cli({"wp-bounds", "--word", "LR", "--genus", "2", "--punctures", "0"}).code == 2);
}

TEST_CASE("json round trip: emitted reports parse back unchanged") {
    for (auto args : {std::initializer_list<std::string>{"volume", "--word", "LLRR"},
                      {"farey-distance", "1/2", "3/7"},
                      {"systole", "--genus", "3", "--punctures", "1"},
                      {"constants"}}) {
        std::vector<std::string> argv(args);
        argv.push_back("--format");
        argv.push_back("json");
        std::ostringstream out, err;
        REQUIRE(ptv::run_cli(argv, out, err) == 0);
        const json j = json::parse(out.str());
        CHECK(json::parse(j.dump()) == j);
    }
}

TEST_CASE("text format prints key-value lines") {
    const Run r = cli({"volume", "--word", "LR"});
    CHECK(r.code == 0);
    CHECK(r.out.find("volume:") != std::string::npos);
    CHECK(r.out.find("tetrahedra:") != std::string::npos);
}
