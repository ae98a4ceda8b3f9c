#pragma once

// Command-line front end. `run` is kept separate from main() so the tests can drive it.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "repdual/repdual.hpp"

namespace repdual::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kBadInput = 2 };

struct Options {
    std::string group;
    std::string code;
    std::string format = "text";
    std::vector<std::string> caps;
    std::string cache_dir;
    double x = 2, y = 2;
    std::string route = "frobenius";
    bool greene = false, mw1 = false, mw2 = false, abelian = false, extension = false, all = false;
};

inline Caps parse_caps(const std::vector<std::string>& items) {
    Caps caps;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("--cap", "expected name=value, got '" + item + "'");
        const std::string name = item.substr(0, eq), value = item.substr(eq + 1);
        std::size_t v = 0;
        try {
            std::size_t used = 0;
            const double d = std::stod(value, &used);
            if (used != value.size() || d < 0 || d > 1e18) throw std::invalid_argument(value);
            v = static_cast<std::size_t>(d);
        } catch (const std::exception&) {
            throw ParseError("--cap " + name, "invalid value '" + value + "'");
        }
        if (name == "group_order") caps.group_order = v;
        else if (name == "code_size") caps.code_size = v;
        else if (name == "tuples") caps.tuples = v;
        else if (name == "cosets") caps.cosets = v;
        else if (name == "universe") caps.universe = v;
        else if (name == "subset_bits") caps.subset_bits = static_cast<unsigned>(v);
        else throw ParseError("--cap", "unknown cap '" + name + "'");
    }
    return caps;
}

inline std::string double_string(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    std::string s = buf;
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    return s;
}

class Session {
   public:
    Session(const Options& opt, std::ostream& out) : opt_(opt), out_(out), caps_(parse_caps(opt.caps)) {
        if (!opt.cache_dir.empty()) cache_.emplace(std::filesystem::path(opt.cache_dir));
        else cache_.emplace();
    }

    bool json() const { return opt_.format == "json"; }

    FiniteGroup group() {
        if (!group_) {
            if (opt_.group.empty()) {
                if (!opt_.code.empty()) return code().group();
                throw ParseError("--group", "a group is required");
            }
            group_ = load_group_reference(opt_.group.find(':') == std::string::npos && !std::filesystem::exists(opt_.group)
                                              ? "builtin:" + opt_.group
                                              : opt_.group,
                                          "--group", {}, caps_);
        }
        return *group_;
    }

    const GroupCode& code() {
        if (!code_) {
            if (opt_.code.empty()) throw ParseError("--code", "a code is required");
            std::optional<FiniteGroup> g;
            if (!opt_.group.empty()) g = group();
            code_ = load_code(opt_.code, g, caps_);
        }
        return *code_;
    }

    std::shared_ptr<const CharacterTable> table(const FiniteGroup& G) { return cache_->get(G); }

    const Caps& caps() const { return caps_; }
    std::ostream& out() { return out_; }
    const Options& opt() const { return opt_; }

   private:
    const Options& opt_;
    std::ostream& out_;
    Caps caps_;
    std::optional<FiniteGroup> group_;
    std::optional<GroupCode> code_;
    std::optional<CharacterTableCache> cache_;
};

inline int cmd_classes(Session& s) {
    const auto G = s.group();
    const auto cd = conjugacy_classes(G);
    if (s.json()) {
        s.out() << to_json(G, cd).dump(2) << "\n";
        return kOk;
    }
    s.out() << "group " << G.name() << ": order " << G.order() << ", exponent " << G.exponent() << ", " << cd.num_classes
            << " classes\n";
    for (std::size_t c = 0; c < cd.num_classes; ++c)
        s.out() << "C" << c + 1 << ": rep " << G.label(cd.reps[c]) << ", size " << cd.sizes[c] << ", order "
                << G.element_order(cd.reps[c]) << "\n";
    return kOk;
}

inline int cmd_chartable(Session& s) {
    const auto G = s.group();
    const auto ct = s.table(G);
    if (s.json()) {
        s.out() << to_json(*ct).dump(2) << "\n";
        return kOk;
    }
    s.out() << "character table of " << G.name() << " (values in z" << G.exponent() << " = exp(2πi/" << G.exponent()
            << "))\n";
    s.out() << "classes:";
    for (std::size_t c = 0; c < ct->k; ++c)
        s.out() << "  C" << c + 1 << "=" << G.label(ct->classes.reps[c]) << " [" << ct->classes.sizes[c] << "]";
    s.out() << "\n";
    for (std::size_t i = 0; i < ct->k; ++i) {
        s.out() << ct->irrep_labels[i] << " (deg " << ct->degrees[i] << "):";
        for (std::size_t c = 0; c < ct->k; ++c) s.out() << "  " << ct->values[i][c].str();
        s.out() << "\n";
    }
    return kOk;
}

inline int cmd_wenum(Session& s) {
    const auto W = weight_enumerator(s.code());
    if (s.json())
        s.out() << Json{{"size", s.code().size()}, {"weight_enumerator", to_json(W)}}.dump(2) << "\n";
    else
        s.out() << "W_H(z) = " << W.str("z") << "\n";
    return kOk;
}

inline int cmd_cwe(Session& s) {
    const auto& code = s.code();
    const auto P = complete_weight_enumerator(code, conjugacy_classes(code.group()));
    if (s.json())
        s.out() << Json{{"cwe", to_json(P)}}.dump(2) << "\n";
    else
        s.out() << "cwe_H = " << P.str("y") << "\n";
    return kOk;
}

inline int cmd_rank(Session& s) {
    const auto& code = s.code();
    const auto rp = rank_profile(code, s.caps().subset_bits);
    if (s.json()) {
        s.out() << to_json(rp).dump(2) << "\n";
        return kOk;
    }
    s.out() << "|H| = " << code.size() << ", |Γ| = " << code.group().order() << "\n";
    for (std::size_t S = 0; S < rp.card.size(); ++S) {
        std::string set = "{";
        for (std::size_t i = 0; i < rp.n; ++i)
            if (S >> i & 1u) set += (set.size() > 1 ? "," : "") + std::to_string(i + 1);
        s.out() << "S=" << set << "}  |pr_S(H)| = " << rp.card[S] << "  r(S) = " << double_string(rp.rank(static_cast<Subset>(S)))
                << "\n";
    }
    return kOk;
}

inline int cmd_tutte(Session& s) {
    const auto rp = rank_profile(s.code(), s.caps().subset_bits);
    const double v = tutte_evaluate(rp, s.opt().x, s.opt().y);
    if (s.json())
        s.out() << Json{{"x", s.opt().x}, {"y", s.opt().y}, {"value", v}}.dump(2) << "\n";
    else
        s.out() << double_string(v) << "\n";
    return kOk;
}

inline int cmd_dual(Session& s) {
    const auto& code = s.code();
    const auto ct = s.table(code.group());
    DualMultiset dm;
    if (s.opt().route == "cosets") {
        dm = decompose_permutation_character(permutation_character(code, ct->classes, s.caps()), code, *ct, s.caps());
    } else if (s.opt().route == "frobenius") {
        dm = dual_multiset(code, *ct, s.caps());
    } else {
        throw ParseError("--route", "expected frobenius or cosets");
    }
    if (s.json()) {
        s.out() << to_json(dm).dump(2) << "\n";
        return kOk;
    }
    for (const auto& [j, m] : dm.mult)
        s.out() << m << " × " << dm.tuple_label(j) << " (dim " << dm.dim(j) << ", weight " << dm.weight(j) << ")\n";
    return kOk;
}

inline int cmd_verify(Session& s) {
    const auto& code = s.code();
    const auto ct = s.table(code.group());
    const auto& o = s.opt();
    const bool all = o.all || !(o.greene || o.mw1 || o.mw2 || o.abelian || o.extension);
    std::vector<CheckReport> reports;
    if (all || o.greene) reports.push_back(verify_greene(code, *ct, s.caps()));
    if (all || o.mw1) reports.push_back(verify_macwilliams1(code, *ct, s.caps()));
    if (all || o.mw2) reports.push_back(verify_macwilliams2(code, *ct, s.caps()));
    if (all || o.extension) {
        CheckReport rep{"extension_lemma"};
        const auto dm = dual_multiset(code, *ct, s.caps());
        if (code.length() > s.caps().subset_bits) throw CapExceeded("n exceeds cap subset_bits");
        std::size_t checked = 0;
        for (std::size_t S = 0; S < (std::size_t{1} << code.length()); ++S, ++checked) {
            auto r = extension_lemma_check(code, dm, static_cast<Subset>(S));
            if (!r.passed) rep.fail(r.detail);
        }
        rep.data["subsets_checked"] = checked;
        reports.push_back(rep);
    }
    // --all only includes the abelian check when it applies
    if (o.abelian || (all && code.group().is_abelian())) reports.push_back(verify_abelian_specialization(code, *ct, s.caps()));

    bool ok = true;
    Json arr = Json::array();
    for (const auto& r : reports) {
        ok = ok && r.passed;
        arr.push_back(r.to_json());
        if (!s.json()) s.out() << r.name << ": " << (r.passed ? "PASS" : "FAIL") << (r.detail.empty() ? "" : "  " + r.detail) << "\n";
    }
    if (s.json()) s.out() << Json{{"passed", ok}, {"checks", arr}}.dump(2) << "\n";
    return ok ? kOk : kVerificationFailed;
}

inline int cmd_demo(Session& s) {
    auto& out = s.out();
    bool ok = true;
    Json report = Json::array();
    auto row = [&](const std::string& what, const std::string& computed, const std::string& reference) {
        const bool match = computed == reference;
        ok = ok && match;
        report.push_back(Json{{"quantity", what}, {"computed", computed}, {"reference", reference}, {"match", match}});
        if (!s.json())
            out << "  " << what << " = " << computed << "\n      stated: " << reference << "  ["
                << (match ? "match" : "MISMATCH") << "]\n";
    };

    const FiniteGroup S3 = symmetric_group(3);
    CharacterTableCache local;
    const auto ct = local.get(S3);
    auto el = [&](const char* c) { return *parse_element(S3, c); };

    if (!s.json()) out << "Example: H = <((0 1), (0 1 2))> in S3^2\n";
    const GroupCode H = code_from_generators(S3, 2, {GroupWord{el("(0 1)"), el("(0 1 2)")}});
    std::string words;
    for (const auto& w : H.words()) words += (words.empty() ? "" : " ") + word_string(S3, w);
    if (!s.json()) out << "  H = {" << words << "}\n";
    const auto pc = permutation_character(H, ct->classes);
    auto cls = [&](const char* a, const char* b) {
        return ClassTuple{ct->classes.class_of[el(a)], ct->classes.class_of[el(b)]};
    };
    std::string chi = "χ((),())=" + pc.at(cls("()", "()")).str() + " χ((0 1),())=" + pc.at(cls("(0 1)", "()")).str() +
                      " χ((),(0 1 2))=" + pc.at(cls("()", "(0 1 2)")).str() +
                      " χ((0 1),(0 1 2))=" + pc.at(cls("(0 1)", "(0 1 2)")).str();
    std::size_t nonzero = 0;
    for (const auto& v : pc.values) nonzero += v != 0;
    chi += " nonzero classes=" + std::to_string(nonzero);
    row("permutation character", chi, "χ((),())=6 χ((0 1),())=2 χ((),(0 1 2))=6 χ((0 1),(0 1 2))=2 nonzero classes=4");
    auto multiset_string = [](const DualMultiset& dm) {
        std::string rh;
        for (const auto& [j, m] : dm.mult) rh += (rh.empty() ? "" : ", ") + (m == 1 ? "" : m.str() + "×") + dm.tuple_label(j);
        return "{" + rh + "}";
    };
    row("R(H)", multiset_string(dual_multiset(H, *ct)), "{1⊗1, 1⊗s, t⊗1, t⊗s}");
    row("R(H) by fixed cosets", multiset_string(decompose_permutation_character(pc, H, *ct)), "{1⊗1, 1⊗s, t⊗1, t⊗s}");

    // the diagonal subgroup of S3^n
    if (!s.json()) out << "Example: diagonal subgroup of S3^n\n";
    for (std::size_t n : {2u, 3u, 4u}) {
        const auto D = diagonal_code(S3, n);
        const std::string e = std::to_string(n);
        row("cwe_H, n=" + e, complete_weight_enumerator(D, ct->classes).str("x"),
            "x1^" + e + " + 3*x2^" + e + " + 2*x3^" + e);
    }
    const auto D4 = diagonal_code(S3, 4);
    row("(1/|H|) cwe_H(v), n=4", macwilliams2_rhs(D4, *ct).str("x"),
        "x1^4 + 6*x1^2*x2^2 + 6*x1^2*x3^2 + 12*x1*x2*x3^2 + 4*x1*x3^3 + x2^4 + 6*x2^2*x3^2 + 4*x2*x3^3 + 3*x3^4");
    const auto dm4 = dual_multiset(D4, *ct);
    row("mult(t⊗t⊗t⊗t)", dm4.multiplicity(IrrepTuple(4, 2)).str(), "3");

    if (s.json()) out << Json{{"passed", ok}, {"rows", report}}.dump(2) << "\n";
    else out << (ok ? "all values match\n" : "MISMATCHES FOUND\n");
    return ok ? kOk : kVerificationFailed;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    Options opt;
    CLI::App app{"Representation-based duals of group codes: enumerators, polymatroids and identity checks", "repdual"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub, bool needs_code) {
        sub->add_option("--group", opt.group, "group: builtin:NAME, NAME (S3, Z6, D4, Q8, S4, ...) or a JSON file");
        if (needs_code) sub->add_option("--code", opt.code, "code: JSON file or trivial:n=N / full:n=N / diag:n=N");
        sub->add_option("--format", opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--cap", opt.caps, "override a cap, e.g. tuples=1e6 (repeatable)");
        sub->add_option("--cache-dir", opt.cache_dir, "directory for cached character tables");
    };
    auto* classes = app.add_subcommand("classes", "conjugacy classes of a group");
    add_common(classes, false);
    auto* chartable = app.add_subcommand("chartable", "exact character table of a group");
    add_common(chartable, false);
    auto* wenum = app.add_subcommand("wenum", "weight enumerator of a code");
    add_common(wenum, true);
    auto* cwe = app.add_subcommand("cwe", "complete weight enumerator of a code");
    add_common(cwe, true);
    auto* rank = app.add_subcommand("rank", "polymatroid rank data |pr_S(H)|");
    add_common(rank, true);
    auto* tutte = app.add_subcommand("tutte", "evaluate the Tutte sum of the polymatroid");
    add_common(tutte, true);
    tutte->add_option("--x", opt.x, "x > 1")->required();
    tutte->add_option("--y", opt.y, "y > 1")->required();
    auto* dual = app.add_subcommand("dual", "the dual multiset R(H)");
    add_common(dual, true);
    dual->add_option("--route", opt.route, "frobenius (default) or cosets");
    auto* verify = app.add_subcommand("verify", "verify the identities for a code");
    add_common(verify, true);
    verify->add_flag("--greene", opt.greene, "Greene's theorem for H and R(H)");
    verify->add_flag("--mw1", opt.mw1, "MacWilliams identity for weight enumerators");
    verify->add_flag("--mw2", opt.mw2, "MacWilliams identity for complete weight enumerators");
    verify->add_flag("--abelian", opt.abelian, "agreement with the classical dual (abelian groups)");
    verify->add_flag("--extension", opt.extension, "extension lemma on every coordinate subset");
    verify->add_flag("--all", opt.all, "all checks that apply");
    auto* demo = app.add_subcommand("demo", "reproduce the two worked S3 examples");
    demo->add_option("--format", opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }

    try {
        Session s(opt, out);
        if (*classes) return cmd_classes(s);
        if (*chartable) return cmd_chartable(s);
        if (*wenum) return cmd_wenum(s);
        if (*cwe) return cmd_cwe(s);
        if (*rank) return cmd_rank(s);
        if (*tutte) return cmd_tutte(s);
        if (*dual) return cmd_dual(s);
        if (*verify) return cmd_verify(s);
        if (*demo) return cmd_demo(s);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}

}  // namespace repdual::cli
