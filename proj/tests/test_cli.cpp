#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "dops/cli.hpp"
#include "dops/families.hpp"
#include "dops/io.hpp"
#include "support.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = dops::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path golden(const std::string &name) { return fs::path(DOPS_GOLDEN_DIR) / name; }

class TempDir {
public:
    TempDir() : path_(fs::temp_directory_path() / ("dops-cli-" + std::to_string(::getpid()))) {
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    TempDir(const TempDir &) = delete;
    TempDir &operator=(const TempDir &) = delete;

    fs::path write(const std::string &name, const std::string &text) const {
        const fs::path p = path_ / name;
        std::ofstream(p) << text;
        return p;
    }

private:
    fs::path path_;
};

} // namespace

TEST_CASE("family-build example") {
    const auto r = call({"family-build", "--name", "hermite", "--c2", "1", "--c3", "1", "--alpha", "1", "-N", "8", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    const auto built = dops::build_family(dops::HermiteType{0, 1, 1, 1}, 8);
    CHECK(j.at("A") == nlohmann::json::parse(dops::to_json(built.a()).dump()));
    const auto &a = j.at("A").at("coeffs");
    CHECK(a[0].at("u") == "1");
    CHECK(a[1].at("u") == "0");
    CHECK(a[2].at("u") == "1");
    CHECK(a[3].at("u") == "1");
    CHECK(a[4].at("u") == "1/2");
    CHECK(j.at("case_label") == "A2_Hermite");
}

TEST_CASE("check example") {
    const auto r = call({"check", "--name", "laguerre", "--a1", "1", "--lambda", "1", "--mu", "2", "--gamma", "3", "-N", "20", "-d", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("positive") != std::string::npos);
    const auto j = call({"check", "--name", "laguerre", "-N", "20", "--json"});
    CHECK(nlohmann::json::parse(j.out).at("verdict") == "positive");
}

TEST_CASE("classify example") {
    const auto r = call({"classify", "--name", "hermite", "--c2", "1", "--c3", "1", "--alpha", "1", "--json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).at("label") == "A2_Hermite");
}

TEST_CASE("golden files are byte-stable") {
    for (const auto &entry : dops::catalog()) {
        CAPTURE(entry.name);
        const auto build = call({"family-build", "--sample", entry.name, "-N", "10", "--json"});
        CHECK(build.code == 0);
        CHECK(build.out == slurp(golden(entry.name + ".family-build.json")));
        const auto cls = call({"classify", "--sample", entry.name, "--json"});
        CHECK(cls.code == 0);
        CHECK(cls.out == slurp(golden(entry.name + ".classify.json")));
        const auto chk = call({"check", "--sample", entry.name, "-N", "16", "--oracle", "all", "--json"});
        CHECK(chk.code == 0);
        CHECK(chk.out == slurp(golden(entry.name + ".check.json")));
        CHECK(call({"classify", "--sample", entry.name, "--json"}).out == cls.out);
    }
}

TEST_CASE("oracle flags give identical exit codes") {
    for (const auto &entry : dops::catalog()) {
        CAPTURE(entry.name);
        std::vector<int> codes;
        for (const char *oracle : {"recurrence", "dual", "delta", "all"}) {
            codes.push_back(call({"check", "--sample", entry.name, "-N", "20", "--oracle", oracle}).code);
        }
        CHECK(codes == std::vector<int>{0, 0, 0, 0});
        CHECK(call({"check", "--sample", entry.name, "-N", "20", "--oracle", "delta", "--delta-range", "next"}).code == 0);
    }
}

TEST_CASE("coefficient files") {
    TempDir dir;
    const auto s = dops::build_family(dops::HermiteType{0, 1, 1, 1}, 20);
    const auto a = dir.write("a.json", dops::to_json(s.a()).dump());
    const auto b = dir.write("b.json", dops::to_json(s.b()).dump());
    CHECK(call({"check", "--a-file", a.string(), "--b-file", b.string(), "-N", "20"}).code == 0);
    const auto cls = call({"classify", "--a-file", a.string(), "--b-file", b.string(), "-N", "20", "--json"});
    CHECK(cls.code == 0);
    CHECK(nlohmann::json::parse(cls.out).at("label") == "A2_Hermite");

    support::Rng rng(1);
    const auto ra = dir.write("ra.json", dops::to_json(rng.normalized(20, false)).dump());
    const auto rb = dir.write("rb.json", dops::to_json(rng.normalized(20, true)).dump());
    for (const char *oracle : {"recurrence", "dual", "delta", "all"}) {
        CHECK(call({"check", "--a-file", ra.string(), "--b-file", rb.string(), "-N", "20", "--oracle", oracle}).code == 1);
    }
    CHECK(call({"classify", "--a-file", ra.string(), "--b-file", rb.string(), "-N", "20"}).code == 1);

    const auto plain = dir.write("plain.json", R"(["1", "1/2", {"u": "0", "v": "1"}])");
    const auto gen = call({"gen", "--a-file", plain.string(), "--b-file", b.string(), "-N", "2", "--table", "poly"});
    CHECK(gen.code == 0);
    CHECK(gen.out.rfind("n,x^0,x^1,x^2\n", 0) == 0);

    const auto broken = dir.write("broken.json", "{");
    CHECK(call({"check", "--a-file", broken.string(), "--b-file", b.string()}).code == 2);
    CHECK(call({"check", "--a-file", (dir.write("x", "") .parent_path() / "missing.json").string(), "--b-file", b.string()}).code == 2);
    const auto zero_b = dir.write("zb.json", R"(["1", "0", "1"])");
    CHECK(call({"check", "--a-file", a.string(), "--b-file", zero_b.string(), "-N", "2"}).code == 2);
}

TEST_CASE("exit-code contract") {
    CHECK(call({"family-list"}).code == 0);
    const auto listing = call({"family-list", "--json"});
    CHECK(listing.code == 0);
    CHECK(nlohmann::json::parse(listing.out).size() == dops::catalog().size());
    CHECK(call({"gen", "--sample", "laguerre", "--table", "delta"}).code == 0);
    CHECK(call({"recur", "--sample", "laguerre", "--csv"}).code == 0);
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"check", "--sample", "laguerre", "--bogus"}).code == 2);
    CHECK(call({"check", "--sample", "laguerre", "--name", "hermite"}).code == 2);
    CHECK(call({"check", "--sample", "no-such"}).code == 2);
    CHECK(call({"check", "--name", "hermite", "--c3", "0"}).code == 2);
    CHECK(call({"check", "--name", "laguerre", "--q", "1/2"}).code == 2);
    CHECK(call({"check", "--name", "hermite", "--c2", "x"}).code == 2);
    CHECK(call({"check", "--sample", "laguerre", "-d", "4"}).code == 2);
    CHECK(call({"check", "--sample", "laguerre", "--oracle", "magic"}).code == 2);
    CHECK(call({"check", "--sample", "laguerre", "-N", "10", "--n-max", "10"}).code == 2);
    CHECK(call({"check", "--sample", "laguerre", "-N", "6", "--oracle", "dual"}).code == 2);

    const auto neg = call({"check", "--name", "hermite", "--c2", "1", "--c3", "1", "--alpha", "1", "-d", "1", "--json"});
    CHECK(neg.code == 1);
    const auto j = nlohmann::json::parse(neg.out);
    CHECK(j.at("verdict") == "negative");
    CHECK(j.contains("witness"));
    const auto err = call({"check", "--name", "hermite", "--c3", "0"});
    CHECK_FALSE(err.err.empty());
    CHECK(err.out.empty());
}

TEST_CASE("csv outputs") {
    const auto delta = call({"gen", "--sample", "laguerre", "--table", "delta", "-N", "3"});
    CHECK(delta.out == "n,r,delta\n0,2,2\n1,12,10\n2,36,24\n");
    const auto recur = call({"recur", "--sample", "hermite-a2", "-N", "4"});
    CHECK(recur.code == 0);
    CHECK(recur.out.rfind("n,gamma_-1,gamma_0,gamma_1,gamma_2\n", 0) == 0);
    CHECK(recur.out.find('.') == std::string::npos);
}
