// Command line front end. Subcommands: build prints the shape of a space and
// can write its text format, spectrum eigendecomposes one idempotent with its
// fusion data, verify runs the reproducible report suites.
//
// Exit codes: 0 success (for verify, a passing report), 1 verify mismatch,
// 2 unparseable input, 3 construction failure, 4 degenerate parameter,
// 5 incomplete eigenvalue set.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "matsuo/axial.hpp"
#include "matsuo/case_studies.hpp"
#include "matsuo/errors.hpp"
#include "matsuo/fischer.hpp"
#include "matsuo/matsuo_algebra.hpp"
#include "matsuo/scalar.hpp"

namespace {

using namespace matsuo;
using nlohmann::ordered_json;
using spaces::Family;
using spaces::FischerSpace;

struct SpaceSpec {
    enum class Kind { family, complete, file };
    Kind kind = Kind::family;
    Family family = Family::A;
    int n = 0;
    bool doubled = false;
    std::string path;
    std::string raw;
};

int parse_positive(const std::string& digits, const std::string& what) {
    if (digits.empty()) throw ParseError(what + ": missing index");
    for (char c : digits)
        if (c < '0' || c > '9') throw ParseError(what + ": bad index '" + digits + "'");
    if (digits.size() > 4) throw ParseError(what + ": index out of range");
    return std::stoi(digits);
}

SpaceSpec parse_space(const std::string& raw) {
    SpaceSpec sp;
    sp.raw = raw;
    if (std::filesystem::exists(raw)) {
        sp.kind = SpaceSpec::Kind::file;
        sp.path = raw;
        return sp;
    }
    std::string s = raw;
    auto strip_suffix = [&](const std::string& suf) {
        if (s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0) {
            s.resize(s.size() - suf.size());
            return true;
        }
        return false;
    };
    if (strip_suffix("\xc2\xb1") || strip_suffix("+-")) sp.doubled = true;

    if (s.rfind("Aff3:", 0) == 0) {
        sp.family = Family::Affine3;
        sp.n = parse_positive(s.substr(5), "affine space");
        return sp;
    }
    if (s.rfind("W3A:", 0) == 0) {
        sp.family = Family::W3AffineA;
        sp.n = parse_positive(s.substr(4), "affine reflection space");
        return sp;
    }
    if (s == "E6" || s == "E7" || s == "E8") {
        sp.family = s == "E6" ? Family::E6 : s == "E7" ? Family::E7 : Family::E8;
        sp.n = s[1] - '0';
        return sp;
    }
    if (!s.empty() && (s[0] == 'A' || s[0] == 'D' || s[0] == 'K')) {
        int n = parse_positive(s.substr(1), "space family");
        if (s[0] == 'K') {
            if (sp.doubled) throw ParseError("complete graphs have no doubled form");
            sp.kind = SpaceSpec::Kind::complete;
            sp.n = n;
            return sp;
        }
        sp.family = s[0] == 'A' ? Family::A : Family::D;
        sp.n = n;
        return sp;
    }
    throw ParseError("unrecognised space '" + raw + "' (and no such file)");
}

FischerSpace build_space(const SpaceSpec& sp) {
    if (sp.kind == SpaceSpec::Kind::complete)
        throw Error("complete graphs carry no line structure; use them with build only");
    FischerSpace g = [&] {
        if (sp.kind == SpaceSpec::Kind::file) {
            std::ifstream in(sp.path);
            if (!in) throw Error("cannot read '" + sp.path + "'");
            std::ostringstream buf;
            buf << in.rdbuf();
            return spaces::from_text(buf.str());
        }
        return spaces::build_named(sp.family, sp.n);
    }();
    if (sp.doubled) g = spaces::double_graph(g);
    return g;
}

Scalar parse_alpha(const std::string& s) {
    if (s == "generic") return Scalar(RatFunc::alpha());
    return scalar_parse(s);
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw Error("cannot write '" + out + "'");
    f << text;
    std::cout << "written: " << out << "\n";
}

// ---------------------------------------------------------------------------
// build

int line_count(const FischerSpace& g) {
    int pairs = 0;
    for (int i = 0; i < g.points(); ++i)
        for (int j = i + 1; j < g.points(); ++j)
            if (g.collinear(i, j)) ++pairs;
    return pairs / 3;
}

int cmd_build(const std::string& space, const std::string& format, const std::string& out) {
    SpaceSpec sp = parse_space(space);
    if (sp.kind == SpaceSpec::Kind::complete) {
        if (!out.empty()) throw Error("complete graphs have no line format to write");
        ordered_json j{{"space", sp.raw},
                       {"points", sp.n},
                       {"graph_only", true},
                       {"regularity", sp.n - 1}};
        if (format == "json") {
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "points " << sp.n << "\nregularity " << sp.n - 1
                      << "\ngraph only, no line structure\n";
        }
        return 0;
    }
    FischerSpace g = build_space(sp);
    auto reg = spaces::regularity(g);
    int comps = static_cast<int>(spaces::components(g).size());
    if (!out.empty()) emit(spaces::to_text(g), out);
    if (format == "json") {
        ordered_json j{{"space", sp.raw},
                       {"points", g.points()},
                       {"lines", line_count(g)},
                       {"regularity", reg ? ordered_json(*reg) : ordered_json(nullptr)},
                       {"components", comps}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "points " << g.points() << "\nlines " << line_count(g) << "\nregularity ";
        if (reg)
            std::cout << *reg;
        else
            std::cout << "none";
        std::cout << "\ncomponents " << comps << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// spectrum

struct IdemSpec {
    enum class Kind { point, subset, chain_step, chain_lift };
    Kind kind = Kind::point;
    int index = 0;
    std::vector<int> subset;
};

IdemSpec parse_idempotent(const std::string& s) {
    IdemSpec id;
    if (s.rfind("point:", 0) == 0) {
        id.kind = IdemSpec::Kind::point;
        id.index = parse_positive(s.substr(6), "point idempotent");
        return id;
    }
    if (s.rfind("id:", 0) == 0) {
        id.kind = IdemSpec::Kind::subset;
        std::stringstream ss(s.substr(3));
        std::string tok;
        while (std::getline(ss, tok, ','))
            id.subset.push_back(parse_positive(tok, "subset idempotent"));
        if (id.subset.empty()) throw ParseError("subset idempotent: empty point list");
        return id;
    }
    if (s.rfind("chain:", 0) == 0) {
        std::string rest = s.substr(6);
        if (rest.rfind("ehat_", 0) == 0) {
            id.kind = IdemSpec::Kind::chain_lift;
            id.index = parse_positive(rest.substr(5), "chain idempotent");
            return id;
        }
        if (rest.rfind("e_", 0) == 0) {
            id.kind = IdemSpec::Kind::chain_step;
            id.index = parse_positive(rest.substr(2), "chain idempotent");
            return id;
        }
        throw ParseError("chain idempotent: expected e_<i> or ehat_<i>");
    }
    throw ParseError("idempotent must be point:<i>, id:<points> or chain:e_<i>/ehat_<i>");
}

template <class K>
std::vector<K> value_diffs(const std::vector<K>& a, const std::vector<K>& b) {
    std::vector<K> out;
    for (const K& x : a)
        for (const K& y : b) {
            K d = x - y;
            bool seen = false;
            for (const K& v : out) seen = seen || v == d;
            if (!seen) out.push_back(d);
        }
    return out;
}

template <class K>
ordered_json spectrum_report(const algebra::MatsuoAlgebra<K>& alg,
                             const axial::Eigendecomposition<K>& dec) {
    ordered_json j;
    ordered_json spec = ordered_json::array();
    for (const auto& sp : dec.spaces)
        spec.push_back(ordered_json{{"value", k_str(sp.value)}, {"dim", sp.dim()}});
    j["spectrum"] = spec;
    j["diagonalisable"] = dec.diagonalisable;

    auto fus = axial::fusion_table(alg, dec);
    ordered_json ft;
    ordered_json vals = ordered_json::array();
    for (const K& v : fus.eigenvalues) vals.push_back(k_str(v));
    ft["eigenvalues"] = vals;
    ordered_json rule = ordered_json::array();
    for (const auto& row : fus.rule) {
        ordered_json r = ordered_json::array();
        for (const auto& cell : row) {
            ordered_json c = ordered_json::array();
            for (int hit : cell) c.push_back(k_str(fus.eigenvalues[hit]));
            r.push_back(c);
        }
        rule.push_back(r);
    }
    ft["rule"] = rule;
    j["fusion"] = ft;

    auto sv = axial::is_seress(fus);
    j["seress"] = sv.seress;
    j["seress_vacuous"] = sv.vacuous;

    if (auto grading = axial::grading_partition(fus)) {
        ordered_json even = ordered_json::array(), odd = ordered_json::array();
        for (int i : grading->first) even.push_back(k_str(fus.eigenvalues[i]));
        for (int i : grading->second) odd.push_back(k_str(fus.eigenvalues[i]));
        j["grading"] = ordered_json{{"even", even}, {"odd", odd}};
    } else {
        j["grading"] = nullptr;
    }
    return j;
}

std::string spectrum_text(const ordered_json& j) {
    std::ostringstream os;
    os << "spectrum:\n";
    for (const auto& e : j["spectrum"])
        os << "  " << e["value"].get<std::string>() << "  dim " << e["dim"].get<int>() << "\n";
    os << "diagonalisable: " << (j["diagonalisable"].get<bool>() ? "yes" : "no") << "\n";
    os << "seress: " << (j["seress"].get<bool>() ? "yes" : "no") << "\n";
    if (!j["grading"].is_null()) {
        os << "grading even:";
        for (const auto& v : j["grading"]["even"]) os << " " << v.get<std::string>();
        os << "\ngrading odd:";
        for (const auto& v : j["grading"]["odd"]) os << " " << v.get<std::string>();
        os << "\n";
    }
    os << "fusion:\n";
    const auto& vals = j["fusion"]["eigenvalues"];
    for (std::size_t x = 0; x < vals.size(); ++x)
        for (std::size_t y = x; y < vals.size(); ++y) {
            os << "  " << vals[x].get<std::string>() << " * " << vals[y].get<std::string>()
               << " ->";
            for (const auto& v : j["fusion"]["rule"][x][y]) os << " " << v.get<std::string>();
            os << "\n";
        }
    return os.str();
}

template <class K>
ordered_json run_spectrum(const SpaceSpec& sp, const FischerSpace& g, const K& alpha,
                          const IdemSpec& idem) {
    algebra::MatsuoAlgebra<K> alg(g, alpha);
    switch (idem.kind) {
    case IdemSpec::Kind::point: {
        if (idem.index >= alg.dim()) throw ParseError("point index out of range");
        auto axis = axial::decompose_parabolic(alg, {idem.index});
        return spectrum_report(alg, axis.decomposition);
    }
    case IdemSpec::Kind::subset: {
        for (int p : idem.subset)
            if (p >= alg.dim()) throw ParseError("subset point index out of range");
        auto axis = axial::decompose_parabolic(alg, idem.subset);
        return spectrum_report(alg, axis.decomposition);
    }
    default: break;
    }
    // chain elements live in a doubled pair space
    if (sp.kind != SpaceSpec::Kind::family || sp.family != Family::A || !sp.doubled)
        throw ParseError("chain idempotents need a doubled pair space, e.g. --space A5+-");
    const int n = sp.n;
    const int nb = n * (n + 1) / 2;
    const int i = idem.index;
    auto block = [&](int level, bool both) {
        std::vector<int> s = spaces::letter_block_pairs(n + 1, level + 1);
        if (both) {
            const std::size_t half = s.size();
            for (std::size_t t = 0; t < half; ++t) s.push_back(s[t] + nb);
        }
        return s;
    };
    if (idem.kind == IdemSpec::Kind::chain_step) {
        if (i < 4 || i > n) throw ParseError("chain step index must satisfy 4 <= i <= n");
        auto hi = axial::decompose_parabolic(alg, block(i, false));
        auto lo = axial::decompose_parabolic(alg, block(i - 1, false));
        VecX<K> e = hi.element - lo.element;
        auto dec = axial::eigendecompose_with_candidates(alg, e,
                                                         value_diffs(hi.candidates, lo.candidates));
        return spectrum_report(alg, dec);
    }
    if (i < 3 || i > n) throw ParseError("chain lift index must satisfy 3 <= i <= n");
    auto base = axial::decompose_parabolic(alg, block(i, false));
    VecX<K> lift;
    std::vector<K> lift_cand;
    if (i == n) {
        lift = alg.identity_element();
        lift_cand = {K(1), K(0)};
    } else {
        lift = alg.parabolic_identity(block(i, true));
        lift_cand =
            axial::id_spectrum_candidates(alg, block(i, true), axial::SignConvention::minus);
    }
    VecX<K> ehat = lift - base.element;
    auto dec =
        axial::eigendecompose_with_candidates(alg, ehat, value_diffs(lift_cand, base.candidates));
    return spectrum_report(alg, dec);
}

int cmd_spectrum(const std::string& space, const std::string& alpha_str, const std::string& idem_str,
                 const std::string& format, const std::string& out) {
    SpaceSpec sp = parse_space(space);
    FischerSpace g = build_space(sp);
    Scalar alpha = parse_alpha(alpha_str);
    IdemSpec idem = parse_idempotent(idem_str);
    ordered_json j{{"space", sp.raw}, {"alpha", alpha.str()}, {"idempotent", idem_str}};
    ordered_json body = alpha.is_rational()
                            ? run_spectrum<Rat>(sp, g, alpha.rational(), idem)
                            : run_spectrum<RatFunc>(sp, g, alpha.func(), idem);
    j.update(body);
    if (format == "json")
        emit(j.dump(2) + "\n", out);
    else
        emit(spectrum_text(j), out);
    return 0;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const std::string& suite, const std::string& alpha_str, const std::string& charge_str,
               int max_n, std::size_t depth_cap, bool with_e6, const std::string& format,
               const std::string& out) {
    Scalar alpha = parse_alpha(alpha_str);
    Scalar charge_s = scalar_parse(charge_str);
    if (!charge_s.is_rational()) throw ParseError("charge must be rational");
    Rat charge = charge_s.rational();

    auto vreg_plan = [&] {
        cases::VregPlan plan;
        plan.max_pair = max_n;
        plan.max_doubled = max_n;
        plan.max_affine = std::min(max_n, 4);
        plan.max_weyl = std::min(max_n, 3);
        plan.include_e6 = with_e6;
        return plan;
    };

    std::vector<ordered_json> reports;
    if (suite == "spectra" || suite == "all")
        reports.push_back(cases::run_spectra_tables(max_n, max_n, max_n));
    if (suite == "an-chain" || suite == "all")
        reports.push_back(cases::run_an_chain(std::max(max_n, 5), alpha, charge));
    if (suite == "dn-involutions" || suite == "all")
        reports.push_back(cases::run_dn_involutions(std::max(max_n, 5), alpha));
    if (suite == "vreg" || suite == "all")
        reports.push_back(cases::run_vreg_campaign(vreg_plan(), depth_cap));

    ordered_json j;
    if (reports.size() == 1) {
        j = reports.front();
    } else {
        j["schema"] = "matsuo-lab/1";
        j["suite"] = "all";
        ordered_json arr = ordered_json::array();
        std::string verdict = "pass";
        for (const auto& r : reports) {
            arr.push_back(r);
            std::string v = r["verdict"].get<std::string>();
            if (v == "fail")
                verdict = "fail";
            else if (v == "partial" && verdict == "pass")
                verdict = "partial";
        }
        j["reports"] = arr;
        j["verdict"] = verdict;
    }

    if (format == "json") {
        emit(j.dump(2) + "\n", out);
    } else {
        std::ostringstream os;
        for (const auto& r : reports.size() == 1 ? std::vector<ordered_json>{j}
                                                 : reports)
            os << r["suite"].get<std::string>() << ": " << r["verdict"].get<std::string>() << "\n";
        emit(os.str(), out);
    }
    return j["verdict"] == "pass" ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Matsuo algebras over Fischer spaces"};
    app.require_subcommand(1);

    std::string space, alpha = "generic", charge = "1/2", suite = "all", idem;
    std::string format = "json", out;
    int max_n = 6;
    std::size_t depth_cap = 100000;
    bool with_e6 = false;

    auto* build = app.add_subcommand("build", "construct a space and print its shape");
    build->add_option("--space", space, "space name, doubled suffix +- allowed, or a file path")
        ->required();
    build->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    build->add_option("--out", out, "write the space text format to this file");

    auto* spectrum =
        app.add_subcommand("spectrum", "eigendecompose an idempotent and report its fusion");
    spectrum->add_option("--space", space)->required();
    spectrum->add_option("--alpha", alpha, "generic (default) or an exact value such as 1/4");
    spectrum
        ->add_option("--idempotent", idem,
                     "point:<i>, id:<p1,p2,...> or chain:e_<i> / chain:ehat_<i>")
        ->required();
    spectrum->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    spectrum->add_option("--out", out, "write the report to this file");

    auto* verify = app.add_subcommand("verify", "run a verification suite and report pass or fail");
    verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"spectra", "an-chain", "dn-involutions", "vreg", "all"}));
    verify->add_option("--alpha", alpha, "generic (default) or an exact value");
    verify->add_option("--charge", charge, "bilinear form normalisation, default 1/2");
    verify->add_option("--max-n", max_n, "size ceiling per family, default 6");
    verify->add_option("--depth-cap", depth_cap, "subspace enumeration cap, default 100000");
    verify->add_flag("--e6", with_e6, "include the 36 point exceptional space in vreg");
    verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--out", out, "write the report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (build->parsed()) return cmd_build(space, format, out);
        if (spectrum->parsed()) return cmd_spectrum(space, alpha, idem, format, out);
        return cmd_verify(suite, alpha, charge, max_n, depth_cap, with_e6, format, out);
    } catch (const matsuo::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const matsuo::DegenerateAlpha& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const matsuo::IncompleteSpectrum& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const matsuo::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
