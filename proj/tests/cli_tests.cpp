#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
};

Run cli(const std::string& args) {
    const std::string cmd = std::string(GRADECS_CLI) + " " + args + " 2>/dev/null";
    Run r{-1, {}};
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

// Draft 2020-12 subset used by the shipped schema: type, const, enum, required, properties,
// items, minimum, pattern, allOf, oneOf and local $ref.
class Validator {
public:
    explicit Validator(json root) : root_(std::move(root)) {}

    bool valid(const json& v) const { return check(root_, v); }

private:
    json root_;

    const json& resolve(const std::string& ref) const {
        const json::json_pointer ptr(ref.substr(1));
        return root_.at(ptr);
    }

    static bool type_ok(const std::string& t, const json& v) {
        if (t == "object") return v.is_object();
        if (t == "array") return v.is_array();
        if (t == "string") return v.is_string();
        if (t == "integer") return v.is_number_integer();
        if (t == "null") return v.is_null();
        if (t == "boolean") return v.is_boolean();
        return v.is_number();
    }

    bool check(const json& s, const json& v) const {
        if (s.contains("$ref") && !check(resolve(s["$ref"]), v)) return false;
        if (s.contains("type")) {
            bool ok = false;
            if (s["type"].is_array())
                for (const auto& t : s["type"]) ok = ok || type_ok(t, v);
            else
                ok = type_ok(s["type"], v);
            if (!ok) return false;
        }
        if (s.contains("const") && v != s["const"]) return false;
        if (s.contains("enum") && std::find(s["enum"].begin(), s["enum"].end(), v) == s["enum"].end()) return false;
        if (s.contains("minimum") && v.is_number() && v.get<double>() < s["minimum"].get<double>()) return false;
        if (s.contains("pattern") && v.is_string() &&
            !std::regex_match(v.get<std::string>(), std::regex(s["pattern"].get<std::string>())))
            return false;
        if (v.is_object()) {
            for (const auto& k : s.value("required", json::array()))
                if (!v.contains(k.get<std::string>())) return false;
            const json props = s.value("properties", json::object());
            for (const auto& [k, sub] : props.items())
                if (v.contains(k) && !check(sub, v[k])) return false;
        }
        if (v.is_array() && s.contains("items"))
            for (const auto& x : v)
                if (!check(s["items"], x)) return false;
        for (const auto& sub : s.value("allOf", json::array()))
            if (!check(sub, v)) return false;
        if (s.contains("oneOf")) {
            int hits = 0;
            for (const auto& sub : s["oneOf"]) hits += check(sub, v);
            if (hits != 1) return false;
        }
        return true;
    }
};

const Validator& schema() {
    static const Validator v = [] {
        std::ifstream in(GRADECS_SCHEMA);
        return Validator(json::parse(in));
    }();
    return v;
}

// Splits a markdown table row on unescaped pipes.
std::vector<std::string> cells(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (std::size_t i = 1; i < line.size(); ++i) {
        if (line[i] == '\\' && i + 1 < line.size() && line[i + 1] == '|') {
            cur += '|';
            ++i;
        } else if (line[i] == '|') {
            out.push_back(cur.substr(1, cur.size() - 2));
            cur.clear();
        } else {
            cur += line[i];
        }
    }
    return out;
}

std::vector<std::vector<std::string>> table_rows(const std::string& md) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(md);
    std::string line;
    int seen = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] != '|') continue;
        if (seen++ < 2) continue;  // header and rule
        rows.push_back(cells(line));
    }
    return rows;
}

} // namespace

TEST_CASE("classify examples") {
    auto c = cli("classify --type C --rank 4..6 --json");
    REQUIRE(c.code == 0);
    auto j = json::parse(c.out);
    for (const auto& row : j["rows"]) {
        const int n = row["n"], r = row["r"];
        CHECK(n % r == 0);
    }
    // C_n Coxeter-type gradings: one row per divisor l of n
    CHECK(j["rows"].size() == 3 + 2 + 4);

    j = json::parse(cli("classify --type A --rank 1 --json").out);
    REQUIRE(j["rows"].size() == 1);
    CHECK(j["rows"][0]["m"] == 2);

    j = json::parse(cli("classify --type D --rank 4 --json").out);
    bool triality = false;
    for (const auto& row : j["rows"]) triality = triality || row["twist"] == 3;
    CHECK(triality);
}

TEST_CASE("exit codes") {
    CHECK(cli("classify --type Q").code == 2);
    CHECK(cli("report B:n=4:m=5 chars").code == 2);
    CHECK(cli("report not-a-key").code == 2);
    CHECK(cli("verify --claim no-such-claim").code == 2);
    CHECK(cli("frobnicate").code == 2);
    CHECK(cli("verify --claim tau-det --rank-bound 4").code == 0);
    CHECK(cli("verify --claim lemma-B.iii.w0 --case B:n=4:m=8").code == 1);
}

TEST_CASE("verify examples") {
    auto j = json::parse(cli("verify --claim tau-det --rank-bound 6 --json").out);
    CHECK(j["summary"]["fail"] == 0);
    CHECK(j["summary"]["pass"].get<int>() > 0);

    j = json::parse(cli("verify --claim rank-one.endoscopy --case D:n=5:m=8 --json").out);
    int fours = 0;
    for (const auto& r : j["records"]) {
        CHECK(r["status"] == "pass");
        fours += r["expected"].get<std::string>().find("d=4") != std::string::npos;
    }
    CHECK(fours == 2);
}

TEST_CASE("JSON output validates against the schema") {
    for (const char* args : {"classify --type A --rank 1..8", "classify --type E6", "classify --type D --rank 4",
                             "report D:n=4:m=4 all", "report E:n=8:m=30 all", "report B:n=3:m=2 grading",
                             "report C:n=4:m=4 hecke", "report D:n=4:m=12 endoscopy",
                             "report A:n=5:m=6:r=2:twist=2 monodromy", "report C:n=2:m=4 chars",
                             "verify --rank-bound 3", "verify --case G:n=2:m=6"}) {
        auto r = cli(std::string(args) + " --json");
        CAPTURE(args);
        REQUIRE(!r.out.empty());
        CHECK(schema().valid(json::parse(r.out)));
    }
    // the validator rejects broken documents
    auto j = json::parse(cli("verify --case A:n=2:m=3 --json").out);
    j["records"][0]["status"] = "maybe";
    CHECK_FALSE(schema().valid(j));
    j = json::parse(cli("classify --type B --rank 3 --json").out);
    j["rows"][0].erase("little_weyl_group");
    CHECK_FALSE(schema().valid(j));
}

TEST_CASE("markdown tables round-trip through the JSON payload") {
    for (const char* args : {"verify --rank-bound 3", "verify --case D:n=4:m=6", "verify --claim lemma-C --rank-bound 4"}) {
        CAPTURE(args);
        auto md = table_rows(cli(args).out);
        auto j = json::parse(cli(std::string(args) + " --format json").out);
        REQUIRE(md.size() == j["records"].size());
        for (std::size_t i = 0; i < md.size(); ++i) {
            const auto& r = j["records"][i];
            std::vector<std::string> want{r["case"], r["claim"], r["subject"], r["status"], r["expected"], r["actual"]};
            CHECK(md[i] == want);
        }
    }
    auto md = table_rows(cli("classify --type B --rank 2..4").out);
    auto j = json::parse(cli("classify --type B --rank 2..4 --json").out);
    REQUIRE(md.size() == j["rows"].size());
    for (std::size_t i = 0; i < md.size(); ++i) {
        CHECK(md[i][0] == j["rows"][i]["key"].get<std::string>());
        CHECK(md[i][6] == j["rows"][i]["little_weyl_group"].get<std::string>());
    }
}

TEST_CASE("identical invocations give identical bytes") {
    for (const char* args : {"report B:n=4:m=4 all --json", "verify --rank-bound 4 --json", "classify --type D"}) {
        CAPTURE(args);
        CHECK(cli(args).out == cli(args).out);
    }
    CHECK(cli("verify --rank-bound 4 --json --workers 1").out == cli("verify --rank-bound 4 --json --workers 7").out);
}

TEST_CASE("--out writes the document to a file") {
    const std::string path = "cli_tests_out.json";
    REQUIRE(cli("report A:n=3:m=4 chars --json --out " + path).code == 0);
    std::ifstream in(path);
    std::string body((std::istreambuf_iterator<char>(in)), {});
    CHECK(body == cli("report A:n=3:m=4 chars --json").out);
    std::remove(path.c_str());
}
