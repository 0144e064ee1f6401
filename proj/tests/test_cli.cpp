#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    Run r;
    std::string cmd = std::string(CHEBTOOL_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

fs::path tmpdir() {
    auto d = fs::temp_directory_path() / ("chebtool_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
}

}  // namespace

TEST_CASE("ramtable golden output") {
    auto r = run("ramtable --preset a4");
    CHECK(r.code == 0);
    CHECK(r.out == slurp(fs::path(GOLDEN_DIR) / "table_a4.csv"));
    CHECK(run("ramtable --preset a4 --format text").code == 0);
    CHECK(run("ramtable --preset q9").code == 1);
}

TEST_CASE("cheb report has one row per class and grid point") {
    auto r = run("cheb report --poly \"x^3-x-1\" --xmax 100000 --grid geometric:5");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("x,class,count,main_term,normalized_error\n", 0) == 0);
    CHECK(lines(r.out) == 1 + 5 * 3);
    CHECK(r.out.find("\n100000,2+1,") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run("--no-such-flag group info").code == 64);
    CHECK(run("").code == 64);
    CHECK(run("cheb pattern --poly \"x^3-x-1\" --p 23").code == 1);
    CHECK(run("cheb pattern --poly \"x^3-x-1\" --p 5").out == "p,pattern\n5,2+1\n");
    CHECK(run("cheb report --poly \"x^3-x-1\" --xmax 1000000000").code == 2);
    CHECK(run("cheb report --poly \"x^3-\" ").code == 1);
    CHECK(run("torsion group --D -12").code == 1);
    CHECK(run("--class-cap 100 torsion stats --X 1000").code == 2);
    CHECK(run("--help").code == 0);
}

TEST_CASE("census of an empty database is a fit error") {
    auto d = tmpdir();
    std::ofstream(d / "empty.db").close();
    CHECK(run("fields census --degree 3 --db " + (d / "empty.db").string()).code == 1);
    fs::remove_all(d);
}

TEST_CASE("artifacts, manifests and determinism") {
    auto d = tmpdir();
    const std::string db = (d / "c3.db").string();
    REQUIRE(run("fields enumerate --degree 3 --disc-bound 500 --height 6 --out " + db).code == 0);
    REQUIRE(fs::exists(db + ".manifest.json"));
    auto m = nlohmann::json::parse(slurp(db + ".manifest.json"));
    CHECK(m["command"] == "fields enumerate");
    CHECK(m["flags"]["enumerate.--height"] == "6");
    CHECK(m["caps"].contains("sieve"));
    CHECK(m.contains("version"));
    CHECK(m.contains("wall_seconds"));

    auto first = slurp(db);
    CHECK(first.find("3|-23|1,1|S3|") != std::string::npos);
    REQUIRE(run("--threads 3 fields enumerate --degree 3 --disc-bound 500 --height 6 --out " + db).code == 0);
    CHECK(slurp(db) == first);

    const std::string sg = (d / "sg.csv").string();
    REQUIRE(run("heights smallgen --db " + db + " --height 2 --out " + sg).code == 0);
    auto s = slurp(sg);
    CHECK(s.rfind("disc,alpha_coeffs,H,bound,ok\n", 0) == 0);
    CHECK(lines(s) == lines(first) + 1);
    fs::remove_all(d);
}

TEST_CASE("relative output goes under the environment directory") {
    auto d = tmpdir();
    std::string cmd = "env CHEB_OUT_DIR=" + d.string() + " " + std::string(CHEBTOOL_PATH) +
                      " torsion stats --X 100 --l 3 --out t.csv >/dev/null 2>&1";
    CHECK(std::system(cmd.c_str()) == 0);
    CHECK(fs::exists(d / "t.csv"));
    CHECK(fs::exists(d / "t.csv.manifest.json"));
    auto t = slurp(d / "t.csv");
    CHECK(t.rfind("D,h,divisors,l_torsion\n", 0) == 0);
    CHECK(t.find("\n-23,3,3,3\n") != std::string::npos);
    fs::remove_all(d);
}

TEST_CASE("constants and audit") {
    auto r = run("constants report --preset s3 --eps0 0.1 --A 2 --c5 1 --c6 1");
    CHECK(r.code == 0);
    CHECK(r.out.find("delta,1/324\n") != std::string::npos);
    CHECK(run("constants report --preset s3 --eps0 0.9").code == 1);
    CHECK(run("constants bound --kind silverman --arg n=2 --arg D=5").out == "kind,value\nsilverman,1.05737126344\n");
    auto a = run("audit --preset s3 --samples 50");
    CHECK(a.code == 0);
    CHECK(a.out == "preset,check,samples,failures\ns3,all,50,0\n");
}

TEST_CASE("torsion and heights subcommands") {
    auto g = run("torsion group --D -84 --l 2");
    CHECK(g.out.rfind("D,h,divisors,l_torsion\n-84,4,2;2,4\n", 0) == 0);
    auto c = run("torsion correspondence --X 40");
    CHECK(c.code == 0);
    CHECK(c.out.find("\n-23,3,3,3,1,1\n") != std::string::npos);
    CHECK(c.out.find("\n-4,1,1,1,0,0\n") != std::string::npos);
    CHECK(run("heights height --poly \"x^2-x-1\"").out == "poly,H\n\"x^2-x-1\",1.27201964951\n");
    CHECK(run("heights height --poly \"x^2-1\"").code == 1);
    auto gi = run("group info --label S3");
    CHECK(gi.out == "class,cycle_type,size,order,representative\n0,1+1+1,1,1,\"()\"\n1,2+1,3,2,\"(2 3)\"\n2,3,2,3,\"(1 2 3)\"\n");
}
