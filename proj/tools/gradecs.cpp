#include "gradecs/endoscopy.hpp"
#include "gradecs/errors.hpp"
#include "gradecs/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace gradecs;
using nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "gradecs/v1";

struct Output {
    std::string format = "md";
    bool json_flag = false;
    std::string path;

    bool json() const { return json_flag || format == "json"; }
    void emit(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path);
        if (!f) throw Error(Errc::InvalidArgument, "cannot write " + path);
        f << text;
    }
};

void add_output_flags(CLI::App* cmd, Output& out) {
    cmd->add_flag("--json", out.json_flag, "JSON output (same as --format json)");
    cmd->add_option("--format", out.format, "md or json")->check(CLI::IsMember({"md", "json"}));
    cmd->add_option("--out", out.path, "write to a file instead of stdout");
}

std::string md_table(const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        os << "|";
        for (const auto& c : cells) {
            os << " ";
            for (char ch : c) os << (ch == '|' ? "\\|" : std::string(1, ch));
            os << " |";
        }
        os << "\n";
    };
    line(head);
    os << "|";
    for (std::size_t i = 0; i < head.size(); ++i) os << "---|";
    os << "\n";
    for (const auto& r : rows) line(r);
    return os.str();
}

std::string rat(Rat q) { return to_string(q); }

ordered_json torus_json(const TorusElement& t) {
    ordered_json a = ordered_json::array();
    for (auto q : t) a.push_back(rat(q));
    return a;
}

std::pair<int, int> parse_rank_range(const std::string& s) {
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(s);
            return {v, v};
        }
        return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw Error(Errc::InvalidArgument, "rank must be N or A..B, got '" + s + "'");
    }
}

// ---- classify -------------------------------------------------------------------------

ordered_json descriptor_json(const GradingDescriptor& d) {
    auto W = ReflectionGroup::build(d.weyl_m(), d.weyl_p(), d.weyl_rank());
    return ordered_json{{"key", d.key()},
                        {"type", to_string(d.type)},
                        {"n", d.n},
                        {"m", d.m},
                        {"twist", d.twist},
                        {"r", d.r},
                        {"family", family_tag(d.family)},
                        {"cartan_rank", d.cartan_rank()},
                        {"little_weyl_group", W.name()},
                        {"little_weyl_order", W.order()}};
}

int cmd_classify(const std::string& type_arg, const std::string& rank_arg, const Output& out) {
    auto [lo, hi] = parse_rank_range(rank_arg);
    if (lo < 1 || hi < lo) throw Error(Errc::InvalidArgument, "empty rank range " + rank_arg);
    std::vector<GradingDescriptor> rows;
    for (int n = lo; n <= hi; ++n) {
        auto t = parse_type(type_arg, n);
        if (!t) throw Error(Errc::InvalidType, "unknown type '" + type_arg + "'");
        for (const auto& d : enumerate_stable_gradings(*t, n)) rows.push_back(d);
    }
    if (out.json()) {
        ordered_json j{{"schema", kSchema}, {"command", "classify"}, {"type", type_arg}, {"rank", rank_arg}};
        j["rows"] = ordered_json::array();
        for (const auto& d : rows) j["rows"].push_back(descriptor_json(d));
        out.emit(j.dump(2) + "\n");
        return 0;
    }
    std::vector<std::vector<std::string>> cells;
    for (const auto& d : rows) {
        auto j = descriptor_json(d);
        cells.push_back({d.key(), std::to_string(d.n), std::to_string(d.m), std::to_string(d.twist),
                         std::to_string(d.r), family_tag(d.family), j["little_weyl_group"].get<std::string>()});
    }
    out.emit(md_table({"case", "n", "m", "twist", "r", "family", "W_a"}, cells));
    return 0;
}

// ---- report ---------------------------------------------------------------------------

struct CharacterRow {
    StabilizerData st;
    MchiDescriptor md;
    std::optional<EndoscopyReport> en;
};

ordered_json grading_json(const Grading& g) {
    ordered_json j = descriptor_json(g.desc());
    j["theta_word"] = g.aut.word;
    j["eigenspace_dims"] = g.eigenspace_dims;
    j["I_invariant_factors"] = g.I.invariant_factors();
    j["I_order"] = g.I.order();
    ordered_json named = ordered_json::array();
    for (const auto& [nm, t] : g.I.named()) named.push_back({{"name", nm}, {"element", torus_json(t)}});
    j["I_generators"] = named;
    ordered_json refl = ordered_json::array();
    for (const auto& s : g.Wa.reflections())
        refl.push_back({{"hyperplane", to_string(s.hyperplane)}, {"order", s.order}, {"orbit", s.orbit}});
    j["distinguished_reflections"] = refl;
    return j;
}

// One reflection per hyperplane orbit keeps reports short.
std::vector<std::size_t> orbit_leaders(const Grading& g) {
    std::vector<std::size_t> out;
    std::set<int> seen;
    const auto& refl = g.Wa.reflections();
    for (std::size_t h = 0; h < refl.size(); ++h)
        if (seen.insert(refl[h].orbit).second) out.push_back(h);
    return out;
}

ordered_json character_json(const CharacterAnalysis& ca, const CharacterOrbit& o, const CharacterRow& row,
                            const std::string& what) {
    const auto& g = ca.grading();
    const auto& refl = g.Wa.reflections();
    ordered_json j{{"character", describe(g.I, o.rep)}, {"exponents", o.rep.exponents}};
    if (what == "chars" || what == "all") {
        j["orbit_size"] = o.members.size();
        j["stabilizer_order"] = row.st.stabilizer_order;
        j["W0"] = row.st.w0.name();
        j["W0_order"] = row.st.w0.order();
        j["stabilizer_over_W0"] = row.st.quotient_order();
    }
    if (what == "monodromy" || what == "all") {
        ordered_json a = ordered_json::array();
        for (auto h : orbit_leaders(g)) {
            const auto& mono = row.st.mono[h];
            a.push_back({{"hyperplane", to_string(refl[h].hyperplane)},
                         {"order", refl[h].order},
                         {"e", mono.e},
                         {"R", mono.R.factored()},
                         {"Rbar", mono.Rbar.factored()}});
        }
        j["monodromy"] = a;
    }
    if (what == "hecke" || what == "all") {
        j["hecke"] = row.md.label;
        j["induction_index"] = row.md.induction_index;
        j["total_rank"] = row.md.total_rank;
    }
    if (row.en) {
        const auto& en = *row.en;
        ordered_json e{{"dual_type", en.dual_type}, {"dual_element", torus_json(en.y)}};
        e["component_group_order"] = en.component_group_order ? ordered_json(*en.component_group_order) : ordered_json();
        e["Wen"] = en.wen.name();
        e["Wen_order"] = en.wen.order();
        ordered_json per = ordered_json::array();
        for (auto h : orbit_leaders(g))
            per.push_back({{"hyperplane", to_string(refl[h].hyperplane)},
                           {"d", en.d[h]},
                           {"mono2", to_string(en.mono2[h])},
                           {"min_mono", to_string(en.min_mono[h])}});
        e["reflections"] = per;
        e["notes"] = en.notes;
        j["endoscopy"] = e;
    }
    return j;
}

std::string report_markdown(const CharacterAnalysis& ca, const ordered_json& j, const std::string& what) {
    const auto& g = ca.grading();
    std::ostringstream os;
    os << "# " << g.desc().key() << "\n\n";
    const auto& gj = j["grading"];
    os << "- family: " << gj["family"].get<std::string>() << "\n";
    os << "- little Weyl group: " << gj["little_weyl_group"].get<std::string>() << " (order "
       << gj["little_weyl_order"].get<std::int64_t>() << ")\n";
    os << "- I: order " << g.I.order() << ", invariant factors " << gj["I_invariant_factors"].dump() << "\n";
    if (what == "grading" || what == "all") {
        os << "- theta: " << g.aut.word << "\n";
        os << "- dim g_i: " << gj["eigenspace_dims"].dump() << "\n";
        for (const auto& [nm, t] : g.I.named()) os << "- " << nm << " = " << to_string(t) << "\n";
        os << "\n";
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : gj["distinguished_reflections"])
            rows.push_back({r["hyperplane"].get<std::string>(), std::to_string(r["order"].get<int>()),
                            std::to_string(r["orbit"].get<int>())});
        os << md_table({"hyperplane", "order", "orbit"}, rows);
    }
    if (what == "grading") return os.str();
    os << "\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : j["characters"]) {
        const std::string chi = c["character"].get<std::string>();
        if (what == "chars" || what == "all")
            rows.push_back({chi, std::to_string(c["orbit_size"].get<std::int64_t>()),
                            std::to_string(c["stabilizer_order"].get<std::int64_t>()), c["W0"].get<std::string>(),
                            std::to_string(c["stabilizer_over_W0"].get<std::int64_t>())});
        if (what == "monodromy")
            for (const auto& m : c["monodromy"])
                rows.push_back({chi, m["hyperplane"].get<std::string>(), std::to_string(m["e"].get<std::int64_t>()),
                                m["R"].get<std::string>(), m["Rbar"].get<std::string>()});
        if (what == "hecke")
            rows.push_back({chi, c["hecke"].get<std::string>(), std::to_string(c["induction_index"].get<std::int64_t>())});
        if (what == "endoscopy") {
            const auto& e = c["endoscopy"];
            std::string ds, m2, mm;
            for (const auto& r : e["reflections"]) {
                ds += (ds.empty() ? "" : ",") + std::to_string(r["d"].get<std::int64_t>());
                m2 += (m2.empty() ? "" : ",") + r["mono2"].get<std::string>();
                mm += (mm.empty() ? "" : ",") + r["min_mono"].get<std::string>();
            }
            rows.push_back({chi, e["dual_type"].get<std::string>(),
                            e["component_group_order"].is_null() ? "?" : e["component_group_order"].dump(),
                            e["Wen"].get<std::string>(), ds, m2, mm});
        }
    }
    if (what == "chars" || what == "all")
        os << md_table({"chi", "orbit", "|W_chi|", "W0", "|W_chi/W0|"}, rows);
    else if (what == "monodromy")
        os << md_table({"chi", "hyperplane", "e_s", "R", "Rbar"}, rows);
    else if (what == "hecke")
        os << md_table({"chi", "Hecke algebra of W0", "induction index"}, rows);
    else
        os << md_table({"chi", "dual type", "|pi0|", "Wen", "d_s", "mono2", "min_mono"}, rows);
    return os.str();
}

int cmd_report(const std::string& key, const std::string& what, const Output& out) {
    CharacterAnalysis ca(build_grading(parse_case_key(key)));
    ordered_json j{{"schema", kSchema}, {"command", "report"}, {"case", ca.grading().desc().key()}, {"what", what}};
    j["grading"] = grading_json(ca.grading());
    if (what != "grading") {
        j["characters"] = ordered_json::array();
        for (const auto& o : ca.orbits()) {
            CharacterRow row{ca.stabilizer_data(o.rep), {}, std::nullopt};
            row.md = ca.build_mchi(row.st);
            if (what == "endoscopy" || what == "all") row.en = endoscopy_group(ca, row.st);
            j["characters"].push_back(character_json(ca, o, row, what));
        }
    }
    out.emit(out.json() ? j.dump(2) + "\n" : report_markdown(ca, j, what));
    return 0;
}

// ---- verify ---------------------------------------------------------------------------

int cmd_verify(const std::string& scope, const std::string& case_arg, const std::string& claim, int rank_bound,
               unsigned workers, const Output& out) {
    VerifyOptions opt;
    opt.rank_bound = rank_bound;
    opt.workers = workers;
    opt.weyl_oracle_bound = weyl_oracle_bound_from_env();
    opt.claim_prefix = claim;
    std::string case_key = case_arg;
    if (scope != "all") {
        // a case key has ':' fields; anything else is a claim id
        if (scope.find(':') != std::string::npos) case_key = scope;
        else opt.claim_prefix = scope;
    }
    if (!case_key.empty()) opt.only_case = parse_case_key(case_key);
    if (!opt.claim_prefix.empty()) {
        bool known = false;
        for (const auto& id : claim_catalog())
            known = known || claim_selected(opt.claim_prefix, id) || claim_selected(id, opt.claim_prefix);
        if (!known) throw Error(Errc::InvalidArgument, "unknown claim id '" + opt.claim_prefix + "'");
    }

    const auto records = run_verification(opt);
    const auto sum = summarize(records);
    if (out.json()) {
        ordered_json j{{"schema", kSchema}, {"command", "verify"}, {"rank_bound", rank_bound}};
        j["claim"] = opt.claim_prefix;
        j["case"] = opt.only_case ? opt.only_case->key() : "";
        j["summary"] = {{"pass", sum.pass}, {"fail", sum.fail}, {"unchecked", sum.unchecked}};
        j["records"] = ordered_json::array();
        for (const auto& r : records)
            j["records"].push_back({{"case", r.case_key},
                                    {"claim", r.claim},
                                    {"subject", r.subject},
                                    {"status", to_string(r.status)},
                                    {"expected", r.expected},
                                    {"actual", r.actual}});
        out.emit(j.dump(2) + "\n");
    } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : records)
            rows.push_back({r.case_key, r.claim, r.subject, to_string(r.status), r.expected, r.actual});
        std::ostringstream os;
        os << md_table({"case", "claim", "subject", "status", "expected", "actual"}, rows);
        os << "\n" << sum.pass << " pass, " << sum.fail << " fail, " << sum.unchecked << " unchecked\n";
        out.emit(os.str());
    }
    return sum.fail ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite data of stable gradings: tables, character orbits, monodromy, Hecke algebras, endoscopy"};
    app.require_subcommand(1);

    Output out;
    std::string type_arg, rank_arg = "1..8";
    auto* classify = app.add_subcommand("classify", "list stable gradings");
    classify->add_option("--type", type_arg, "A, B, C, D, E, F or G")->required();
    classify->add_option("--rank", rank_arg, "N or A..B");
    add_output_flags(classify, out);

    std::string key, what = "all";
    auto* report = app.add_subcommand("report", "report on one case");
    report->add_option("case", key, "case key, e.g. B:n=4:m=4")->required();
    report->add_option("what", what, "grading, chars, monodromy, hecke, endoscopy or all")
        ->check(CLI::IsMember({"grading", "chars", "monodromy", "hecke", "endoscopy", "all"}));
    add_output_flags(report, out);

    std::string scope = "all", case_arg, claim;
    int rank_bound = 8;
    unsigned workers = 0;
    auto* verify = app.add_subcommand("verify", "check the closed forms against computation");
    verify->add_option("--scope", scope, "all, a case key or a claim id");
    verify->add_option("--case", case_arg, "restrict to one case");
    verify->add_option("--claim", claim, "restrict to claim ids with this prefix");
    verify->add_option("--rank-bound,--rank", rank_bound, "largest rank in the sweep")->check(CLI::Range(1, 12));
    verify->add_option("--workers", workers, "worker threads (0: one per core)");
    add_output_flags(verify, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (*classify) return cmd_classify(type_arg, rank_arg, out);
        if (*report) return cmd_report(key, what, out);
        return cmd_verify(scope, case_arg, claim, rank_bound, workers, out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_internal(e.code()) ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
