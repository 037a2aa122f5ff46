// Command line front end: expand named forms, run the tower / triality /
// identity verifications, print divisor tables and lattice data.
//
// Exit codes: 0 success, 1 verification or computation failure, 2 usage error.

#include "jfl/checks.hpp"
#include "jfl/series_io.hpp"
#include "jfl/towers.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace jfl;

std::string monomial_str(const TermKey& k, int eden, int vars) {
    std::string out;
    for (int i = 0; i < vars; ++i) {
        if (k.e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars == 1 ? "s" : "s" + std::to_string(i + 1);
        Rational e(k.e[i], eden);
        if (e != 1) {
            out += "^";
            out += rat_den(e) == 1 ? rat_str(e) : "(" + rat_str(e) + ")";
        }
    }
    return out;
}

std::string slice_str(const FourierSeries& s, long long q24) {
    std::string out;
    auto lo = s.terms.lower_bound(TermKey{q24, {}});
    auto hi = s.terms.lower_bound(TermKey{q24 + 1, {}});
    for (auto it = lo; it != hi; ++it) {
        Rational c = it->second;
        bool neg = c < 0;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        Rational a = neg ? -c : c;
        std::string mono = monomial_str(it->first, s.eden, s.vars);
        if (mono.empty())
            out += rat_str(a);
        else if (a == 1)
            out += mono;
        else
            out += rat_str(a) + "*" + mono;
    }
    return out;
}

std::string render_text(const FourierSeries& s) {
    if (s.terms.empty()) return "0  (up to q^(" + rat_str(Rational(s.trunc24, kQDen)) + "))";
    std::string out;
    long long q = s.terms.begin()->first.q;
    while (q < s.trunc24) {
        auto it = s.terms.lower_bound(TermKey{q, {}});
        if (it == s.terms.end()) break;
        q = it->first.q;
        std::string head;
        if (q != 0) {
            head = "q";
            Rational e(q, kQDen);
            if (e != 1) head += rat_den(e) == 1 ? "^" + rat_str(e) : "^(" + rat_str(e) + ")";
            head += " ";
        }
        if (!out.empty()) out += "\n  + ";
        out += head + "(" + slice_str(s, q) + ")";
        ++q;
    }
    out += "\n  [q < " + rat_str(Rational(s.trunc24, kQDen)) + "]";
    return out;
}

int cmd_expand(const std::string& key, Precision prec, const std::string& output) {
    FourierSeries s;
    const char* cache_dir = std::getenv("JACOBI_CACHE_DIR");
    std::filesystem::path cache_file;
    if (cache_dir && *cache_dir) {
        std::string safe = key;
        for (auto& ch : safe)
            if (ch == ':' || ch == ',' || ch == '/' || ch == '(' || ch == ')') ch = '_';
        cache_file = std::filesystem::path(cache_dir) / (safe + "__" + std::to_string(prec.q24) + ".json");
    }
    if (!cache_file.empty() && std::filesystem::exists(cache_file)) {
        std::ifstream in(cache_file);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        s = series_from_string(text);
    } else {
        s = build_form(key, prec);
        if (!cache_file.empty()) {
            std::filesystem::create_directories(cache_file.parent_path());
            std::ofstream out(cache_file);
            out << series_to_string(s);
        }
    }
    if (output == "json")
        std::cout << series_to_string(s) << "\n";
    else
        std::cout << key << " =\n  " << render_text(s) << "\n";
    return 0;
}

int cmd_lattice(const std::string& desc) {
    if (desc.rfind("2U+", 0) == 0) {
        HyperbolicLattice h = parse_hyperbolic(desc);
        Inertia sig = h.signature();
        std::cout << desc << ": signature (" << sig.positive << "," << sig.negative << ")\n";
        std::cout << "Gram (basis e, e1, base, f1, f):\n";
        for (auto& row : h.gram) {
            std::cout << "  [";
            for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << row[j];
            std::cout << "]\n";
        }
        return 0;
    }
    Lattice l = parse_lattice(desc);
    std::cout << l.descriptor << ": rank " << l.rank() << ", ambient dim " << l.ambient_dim
              << ", form scale " << rat_str(l.form_scale) << "\n";
    std::cout << "Gram:\n";
    for (auto& row : l.gram()) {
        std::cout << "  [";
        for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << rat_str(row[j]);
        std::cout << "]\n";
    }
    std::cout << "det = " << rat_str(l.det_gram()) << "\n";
    auto [sc, nr] = scale_and_norm(l);
    std::cout << "scale s(L) = " << rat_str(sc) << ", norm n(L) = " << rat_str(nr) << "\n";
    DiscriminantGroup g = discriminant_group(l);
    std::cout << "discriminant group:";
    if (g.orders.empty()) std::cout << " trivial";
    for (auto& o : g.orders) std::cout << " Z/" << o;
    std::cout << "  (" << g.size() << " classes)\n";
    std::cout << "class minima:";
    for (auto& c : g.classes) std::cout << " " << rat_str(c.min_norm);
    std::cout << "\nmax-min norm = " << rat_str(max_min_norm(l)) << "\n";
    return 0;
}

void write_report(const std::string& path, const nlohmann::ordered_json& j) {
    if (path.empty()) return;
    std::ofstream out(path);
    out << j.dump(2) << "\n";
}

int cmd_verify(const std::string& target, Precision prec, int jobs, const std::string& report_path) {
    if (target.rfind("tower:", 0) == 0) {
        if (prec.q24 > 3 * kQDen && target != "tower:4A1")
            std::cerr << "note: rank-8 products grow quickly above q^3; this may take a while\n";
        TowerDiagram d = build_tower(target.substr(6), prec);
        TowerReport rep = verify_tower(d, jobs);
        int arrows_ok = 0;
        for (auto& a : rep.arrows)
            if (a.ok) ++arrows_ok;
        int nodes_ok = 0;
        for (auto& n : rep.nodes)
            if (n.ok) ++nodes_ok;
        std::map<std::string, int> by_kind;
        for (auto& a : rep.arrows)
            if (a.ok) ++by_kind[a.kind];
        std::cout << "tower " << rep.kind << ": " << arrows_ok << "/" << rep.arrows.size()
                  << " arrows verified (";
        bool first = true;
        for (auto& [k, c] : by_kind) {
            std::cout << (first ? "" : ", ") << c << " " << k;
            first = false;
        }
        std::cout << "), " << nodes_ok << "/" << rep.nodes.size() << " nodes match\n";
        for (auto& a : rep.arrows)
            if (!a.ok) std::cout << "  FAIL arrow " << a.src << " -> " << a.dst << ": " << a.message << "\n";
        for (auto& n : rep.nodes)
            if (!n.ok)
                std::cout << "  FAIL node " << n.name << ": declared " << n.class_declared
                          << ", measured " << n.class_measured << " (" << n.message << ")\n";
        write_report(report_path, tower_report_json(rep));
        return rep.ok ? 0 : 1;
    }
    if (target == "triality") {
        TrialityReport rep = triality_report(Precision{std::max(prec.q24, 3 * kQDen)});
        std::cout << "triality sign table (psi = eta^36 th th^(2) th^(3), q < "
                  << rat_str(rep.psi_q_range) << "):\n";
        for (auto& [name, sign] : rep.table)
            std::cout << "  " << name << " -> " << rat_str(sign) << "\n";
        std::cout << "coordinate factorizations match: " << (rep.routes_ok ? "yes" : "NO") << "\n";
        std::cout << "singular supports agree: " << (rep.supports_ok ? "yes" : "NO") << "\n";
        std::cout << (rep.ok() ? "sign character verified\n" : "FAILED\n");
        write_report(report_path, triality_report_json(rep));
        return rep.ok() ? 0 : 1;
    }
    if (target == "identities") {
        auto items = identities_report();
        bool ok = true;
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (auto& it : items) {
            std::cout << (it.ok ? "  ok   " : "  FAIL ") << it.name;
            if (!it.detail.empty()) std::cout << "  [" << it.detail << "]";
            std::cout << "\n";
            ok = ok && it.ok;
            nlohmann::ordered_json e;
            e["name"] = it.name;
            e["ok"] = it.ok;
            e["detail"] = it.detail;
            j.push_back(std::move(e));
        }
        write_report(report_path, j);
        return ok ? 0 : 1;
    }
    std::cerr << "unknown verify target '" << target
              << "' (expected tower:4A1, tower:DN2, tower:AN2, triality, identities)\n";
    return 2;
}

int cmd_divisor(const std::string& key, Precision prec, const std::string& bound_str,
                const std::string& report_path) {
    FourierSeries s = build_form(key, prec);
    if (s.meta.lattice.empty()) {
        std::cerr << "form " << key << " carries no lattice\n";
        return 2;
    }
    Lattice l = parse_lattice(s.meta.lattice);
    SupportReport sup = support_report(s, &l, s.meta.index);
    if (sup.min_hyp >= 0) {
        std::cout << "warning: " << key << " is " << sup.class_name()
                  << "; no negative-norm data, divisor table empty\n";
        return 0;
    }
    DivisorTable t = divisor_table(s, l, s.meta.index, rat_parse(bound_str));
    t.source = key;
    std::cout << "divisor data of " << key << " (scan bound " << rat_str(t.norm_bound) << "):\n";
    std::cout << "  (r,r)  div  class  jacobi-norm  multiplicity  #data\n";
    for (auto& r : t.rows) {
        std::cout << "  " << rat_str(r.r_norm) << "  " << r.div << "  [";
        for (std::size_t i = 0; i < r.cls.size(); ++i) std::cout << (i ? " " : "") << rat_str(r.cls[i]);
        std::cout << "]  " << rat_str(r.jacobi_norm) << "  " << r.multiplicity << "  " << r.data_count
                  << (r.consistent ? "" : "  INCONSISTENT") << "\n";
    }
    if (t.rows.empty()) std::cout << "  (empty)\n";
    write_report(report_path, divisor_table_json(t));
    return t.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-expansions of lattice-indexed Jacobi forms"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string prec_str = "3";
    std::string output = "text";
    std::string report_path;
    std::string bound_str = "-4";
    int jobs = 1;
    app.add_option("--prec", prec_str, "q-expansion cutoff, e.g. 3 or 49/24")->capture_default_str();
    app.add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", jobs, "verification parallelism")->check(CLI::PositiveNumber);
    app.add_option("--report", report_path, "write a JSON report to this file");

    std::string expand_key, verify_target, divisor_key, lattice_desc;
    auto* c_expand = app.add_subcommand("expand", "print the q-expansion of a named form");
    c_expand->add_option("form", expand_key, "registry key, e.g. phi:0,1 or theta:D4")->required();
    auto* c_verify = app.add_subcommand("verify", "run a verification target");
    c_verify->add_option("target", verify_target, "tower:4A1 | tower:DN2 | tower:AN2 | triality | identities")
        ->required();
    auto* c_divisor = app.add_subcommand("divisor", "Borcherds divisor table of a weak form");
    c_divisor->add_option("form", divisor_key)->required();
    c_divisor->add_option("--bound", bound_str, "negative norm scan bound")->capture_default_str();
    auto* c_lattice = app.add_subcommand("lattice", "print lattice data for a descriptor");
    c_lattice->add_option("descriptor", lattice_desc, "e.g. D4, A2, 4A1, A7(2), 2U+D4(-1)")->required();
    std::string list_pattern;
    auto* c_list = app.add_subcommand("list", "list the named-form registry");
    c_list->add_option("pattern", list_pattern, "substring filter");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Precision prec = Precision::from_rational(rat_parse(prec_str));
        if (c_expand->parsed()) return cmd_expand(expand_key, prec, output);
        if (c_verify->parsed()) return cmd_verify(verify_target, prec, jobs, report_path);
        if (c_divisor->parsed()) return cmd_divisor(divisor_key, prec, bound_str, report_path);
        if (c_lattice->parsed()) return cmd_lattice(lattice_desc);
        if (c_list->parsed()) {
            for (auto& k : registry_list(list_pattern)) std::cout << k << "\n";
            return 0;
        }
    } catch (const UnknownFormKey& e) {
        std::cerr << e.what() << "\nknown keys:";
        for (auto& k : jfl::registry_keys()) std::cerr << " " << k;
        std::cerr << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
