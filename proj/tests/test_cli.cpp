#include "radon/space.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(RADON_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/radon_test_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("catalog command lists the bundled spaces") {
    auto r = run_cli("catalog");
    CHECK(r.code == 0);
    CHECK(r.out.find("sphere-2") != std::string::npos);
    CHECK(r.out.find("rp-2") != std::string::npos);
    CHECK(r.out.find("group-su2") != std::string::npos);
}

TEST_CASE("missing catalog file exits 2") {
    auto r = run_cli("--catalog /nonexistent/file catalog");
    CHECK(r.code == 2);
}

TEST_CASE("malformed catalog reports the offending line and exits 2") {
    std::string path = write_temp("broken.spaces", "[space]\nname = x\nwhat is this\n");
    auto r = run_cli("--catalog " + path + " catalog");
    CHECK(r.code == 2);
    CHECK(r.out.find("line 3") != std::string::npos);
}

TEST_CASE("analyze reports injectivity per space") {
    auto rp = run_cli("analyze rp-2");
    CHECK(rp.code == 0);
    CHECK(rp.out.find("injective (M coincides with its adjoint form): yes") != std::string::npos);

    auto s2 = run_cli("analyze sphere-2");
    CHECK(s2.code == 0);
    CHECK(s2.out.find("injective (M coincides with its adjoint form): no") != std::string::npos);
    CHECK(s2.out.find("witness omega") != std::string::npos);
    CHECK(s2.out.find("index [LambdaHat : Lambda] = 2") != std::string::npos);

    auto unknown = run_cli("analyze nope");
    CHECK(unknown.code == 2);
}

TEST_CASE("test-weight classifies and rejects bad input with exit 3") {
    auto ik = run_cli("test-weight sphere-2 2");
    CHECK(ik.code == 0);
    CHECK(ik.out.find("InKernel") != std::string::npos);

    auto tr = run_cli("test-weight sphere-2 0");
    CHECK(tr.code == 0);
    CHECK(tr.out.find("DescendsToAdjoint") != std::string::npos);

    auto wu = run_cli("test-weight su3-mod-so3 2 0");
    CHECK(wu.code == 0);
    CHECK(wu.out.find("InKernel") != std::string::npos);

    auto odd = run_cli("test-weight sphere-2 3");  // not analytic for the root lattice
    CHECK(odd.code == 3);
    CHECK(odd.out.find("analytic") != std::string::npos);

    auto garbage = run_cli("test-weight sphere-2 x");
    CHECK(garbage.code == 3);
}

TEST_CASE("enumerate json output is deterministic and schema-versioned") {
    auto a = run_cli("enumerate sphere-2 --bound 6 --format json");
    auto b = run_cli("enumerate sphere-2 --bound 6 --format json");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    json j = json::parse(a.out);
    CHECK(j["schema"] == 1);
    CHECK(j["space"] == "sphere-2");
    CHECK(j["bound"] == 6);
    REQUIRE(j["rows"].size() == 4);
    CHECK(j["rows"][0]["verdict"] == "DescendsToAdjoint");
    CHECK(j["rows"][1]["verdict"] == "InKernel");
    CHECK(j["rows"][1]["omega"][0] == "2");

    auto zero = run_cli("enumerate sphere-2 --bound 0 --format json");
    json jz = json::parse(zero.out);
    CHECK(jz["rows"].size() == 1);

    auto bad = run_cli("enumerate sphere-2 --bound -1 --format json");
    CHECK(bad.code == 3);
}

TEST_CASE("csv output round-trips against the json rows") {
    auto jr = run_cli("enumerate su3-mod-so3 --bound 4 --format json");
    auto cr = run_cli("enumerate su3-mod-so3 --bound 4 --format csv");
    REQUIRE(jr.code == 0);
    REQUIRE(cr.code == 0);
    json j = json::parse(jr.out);

    std::istringstream in(cr.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "space,omega,verdict,certificate,oracle");
    size_t row = 0;
    while (std::getline(in, line)) {
        REQUIRE(row < j["rows"].size());
        std::istringstream fields(line);
        std::string space, omega, verdict, cert, oracle;
        std::getline(fields, space, ',');
        std::getline(fields, omega, ',');
        std::getline(fields, verdict, ',');
        std::getline(fields, cert, ',');
        std::getline(fields, oracle, ',');
        CHECK(space == j["rows"][row]["space"]);
        CHECK(verdict == j["rows"][row]["verdict"]);
        CHECK(oracle == j["rows"][row]["oracle"]);
        // omega field: space-separated coordinates
        std::istringstream oss(omega);
        std::string c;
        size_t k = 0;
        while (oss >> c) {
            REQUIRE(k < j["rows"][row]["omega"].size());
            CHECK(c == j["rows"][row]["omega"][k]);
            ++k;
        }
        ++row;
    }
    CHECK(row == j["rows"].size());
}

TEST_CASE("verify confirms the bundled pairings") {
    auto r = run_cli("verify sphere-2 --bound 4");
    CHECK(r.code == 0);
    CHECK(r.out.find("verify: all confirmed") != std::string::npos);
    CHECK(r.out.find("mismatch") == std::string::npos);
}

TEST_CASE("verify marks spaces without a model as unchecked") {
    auto r = run_cli("verify sphere-6 --bound 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("warning: no matrix model") != std::string::npos);
    CHECK(r.out.find("unchecked") != std::string::npos);
}

TEST_CASE("verify catches an injected theta fault with exit 1") {
    // theta = -id on A1xA1 validates as a symmetric space, but it is NOT the
    // involution of the group manifold the su2xsu2 model encodes
    std::string fixture = R"(
[space]
name = group-su2-faulty
series = AxA
rank = 1x1
theta = [[-1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]
analytic_lattice = weight
flavor = K0
oracle = su2xsu2
)";
    std::string path = write_temp("faulty.spaces", fixture);
    auto r = run_cli("--catalog " + path + " verify group-su2-faulty --bound 2");
    CHECK(r.code == 1);
    CHECK(r.out.find("mismatch") != std::string::npos);
}

TEST_CASE("funk emits ratio tables in both formats") {
    auto j = run_cli("funk --l 4 --trials 8 --format json");
    REQUIRE(j.code == 0);
    json out = json::parse(j.out);
    CHECK(out["schema"] == 1);
    REQUIRE(out["rows"].size() == 9);
    for (const auto& row : out["rows"])
        CHECK(std::abs(row["ratio"].get<double>() - 0.375) < 1e-7);

    auto c = run_cli("funk --l 3 --trials 8 --format csv");
    REQUIRE(c.code == 0);
    std::istringstream in(c.out);
    std::string header;
    std::getline(in, header);
    CHECK(header == "l,m,ratio,residual,max_abs_transform");
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        double maxabs = std::stod(line.substr(line.rfind(',') + 1));
        CHECK(maxabs <= 1e-10);  // odd degree: annihilated
        ++rows;
    }
    CHECK(rows == 7);

    auto bad = run_cli("funk --l 40");
    CHECK(bad.code == 3);
}

TEST_CASE("the shipped catalog file mirrors the embedded default") {
    std::ifstream f(std::string(RADON_SOURCE_DIR) + "/data/catalog.spaces");
    REQUIRE(f.good());
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str() == radon::bundled_catalog_text());
}
