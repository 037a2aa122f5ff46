// The three tower diagrams of theta type Jacobi forms, their arrow-by-arrow
// verification, the D_4 triality computation, and Borcherds divisor
// multiplicities keyed by Eichler orbits.
#pragma once

#include "jfl/forms.hpp"
#include "jfl/hyperbolic.hpp"
#include "jfl/series_io.hpp"

#include <atomic>
#include <thread>

namespace jfl {

enum class ArrowKind { Tensor, Graft, Qp1, Qp2 };

inline const char* arrow_kind_name(ArrowKind k) {
    switch (k) {
        case ArrowKind::Tensor: return "tensor";
        case ArrowKind::Graft: return "graft";
        case ArrowKind::Qp1: return "qp1";
        case ArrowKind::Qp2: return "qp2";
    }
    return "?";
}

struct TowerNode {
    std::string name;
    FourierSeries series;      // canonical (projected) series, used for support reports
    FourierSeries raw;         // ambient-coordinate series, used for arrow verification
    std::string class_declared;
    std::optional<Rational> min_bound;  // declared lower bound for the hyperbolic norms
    std::optional<Lattice> lattice;     // support lattice (with its form scale)
    Rational index_t = 1;
};

struct TowerArrow {
    std::string src, dst;
    ArrowKind kind;
    int coord = 0;  // 0-based coordinate of the tensor/graft variable or derivative
    std::optional<Rational> expected_alpha;
};

struct TowerDiagram {
    std::string kind;
    std::vector<TowerNode> nodes;
    std::vector<TowerArrow> arrows;

    const TowerNode& node(const std::string& name) const {
        for (auto& n : nodes)
            if (n.name == name) return n;
        throw std::invalid_argument("tower: unknown node " + name);
    }
};

struct ArrowResult {
    std::string src, dst, kind;
    Rational alpha = 0;
    Rational q_range = 0;  // exclusive q-bound of the comparison
    bool ok = false;
    std::string message;
};

struct NodeResult {
    std::string name;
    std::string class_declared, class_measured;
    Rational min_hyp = 0;
    bool ok = false;
    std::string message;
};

struct TowerReport {
    std::string kind;
    std::vector<ArrowResult> arrows;
    std::vector<NodeResult> nodes;
    bool ok = true;
};

// ---- builders --------------------------------------------------------------

inline TowerDiagram build_tower_4a1(Precision prec) {
    TowerDiagram d;
    d.kind = "4A1";
    auto add_node = [&](std::string name, FourierSeries s, std::string cls, int nvars) {
        TowerNode n;
        n.name = std::move(name);
        n.class_declared = std::move(cls);
        if (nvars > 0) {
            n.lattice = root_lattice(RootKind::ScaledA1, nvars);
            n.index_t = 1;
            n.min_bound = Rational(4 - nvars, 2);
        } else {
            n.index_t = 0;
        }
        n.series = std::move(s);
        n.raw = n.series;
        d.nodes.push_back(std::move(n));
    };

    FourierSeries delta = eta_power(24, prec);
    add_node("Delta12", delta, "cusp", 0);
    // tensor rows: the k = 12 row grows out of Delta12, the others out of
    // psi_{12-2N, N A1}
    std::vector<std::pair<std::string, FourierSeries>> row_heads = {{"Delta12", delta}};
    for (int n = 1; n <= 4; ++n)
        row_heads.emplace_back("psi:" + std::to_string(12 - 2 * n) + "," +
                                   root_lattice(RootKind::ScaledA1, n).descriptor,
                               theta_block_NA1(n, NA1Kind::Psi, prec));
    for (int row = 0; row <= 4; ++row) {
        auto [head_name, head] = row_heads[row];
        int weight = 12 - 2 * row;
        if (row > 0)
            add_node(head_name, head, row == 4 ? "holomorphic" : "cusp", row);
        FourierSeries cur = head;
        std::string prev = head_name;
        for (int n = row + 1; n <= 4; ++n) {
            cur = tensor_phi01(cur, 1, prec);
            std::string name = "phi:" + std::to_string(weight) + "," +
                               root_lattice(RootKind::ScaledA1, n).descriptor;
            add_node(name, cur, n == 4 ? "holomorphic" : "cusp", n);
            d.arrows.push_back({name, prev, ArrowKind::Tensor, n - 1, Rational(12)});
            prev = name;
        }
    }
    // diagonal quasi-pullbacks of order two
    for (int n = 1; n <= 4; ++n)
        d.arrows.push_back({row_heads[n].first, row_heads[n - 1].first, ArrowKind::Qp2, n - 1,
                            Rational(2)});
    return d;
}

inline TowerDiagram build_tower_dn2(Precision prec) {
    TowerDiagram d;
    d.kind = "DN2";
    // index 1 chain psi_{12-N, D_N}
    std::vector<FourierSeries> chain(9);
    for (int n = 1; n <= 8; ++n) {
        chain[n] = theta_block_DN(n, prec);
        TowerNode node;
        node.name = "psi:" + std::to_string(12 - n) + ",D" + std::to_string(n);
        node.series = chain[n];
        node.raw = chain[n];
        node.lattice = root_lattice(RootKind::D, n);
        node.index_t = 1;
        node.class_declared = n == 8 ? "singular" : "cusp";
        node.min_bound = Rational(8 - n, 4);
        d.nodes.push_back(std::move(node));
    }
    for (int n = 8; n >= 2; --n)
        d.arrows.push_back({"psi:" + std::to_string(12 - n) + ",D" + std::to_string(n),
                            "psi:" + std::to_string(13 - n) + ",D" + std::to_string(n - 1),
                            ArrowKind::Qp1, n - 1, Rational(1)});

    // scale 2 columns: tops are psi^2_{12-M, D_M}, the rest grafts
    auto col_name = [](int k, int m) {
        return "phi:" + std::to_string(k) + ",D" + std::to_string(m) + "(2)";
    };
    std::map<int, FourierSeries> prev_col;
    for (int m = 1; m <= 8; ++m) {
        std::map<int, FourierSeries> col;
        if (m <= 7) {
            // psi_{12-M, D_M} has valuation q^1
            FourierSeries psi = theta_block_DN(m, Precision{std::max<long long>(prec.q24 - kQDen, 1)});
            FourierSeries top = restrict_trunc(mul(psi, psi), prec.q24);
            top.meta.index = 1;
            col[24 - 2 * m] = std::move(top);
        }
        for (auto& [k, target] : prev_col) {
            col[k] = graft_phi01(target, m - 1, prec);
            col[k].meta.index = 1;
            d.arrows.push_back({col_name(k, m), col_name(k, m - 1), ArrowKind::Graft, m - 1,
                                Rational(12)});
        }
        for (auto& [k, s] : col) {
            TowerNode node;
            node.name = col_name(k, m);
            node.series = s;
            node.raw = s;
            node.lattice = root_lattice(RootKind::D, m, 2);
            node.index_t = 1;
            node.class_declared = m == 8 ? "holomorphic" : "cusp";
            node.min_bound = Rational(8 - m, 2);
            d.nodes.push_back(std::move(node));
        }
        prev_col = std::move(col);
    }
    return d;
}

inline TowerDiagram build_tower_an2(Precision prec) {
    TowerDiagram d;
    d.kind = "AN2";
    // index 1 chain psi_{11-N, A_N}; raw ambient series drive the qp arrows,
    // projected ones the support reports
    std::vector<FourierSeries> chain_raw(8);
    for (int n = 2; n <= 7; ++n) {
        chain_raw[n] = theta_block_AN(n, ANKind::Psi, prec, /*project=*/false);
        TowerNode node;
        node.name = "psi:" + std::to_string(11 - n) + ",A" + std::to_string(n);
        node.lattice = root_lattice(RootKind::A, n);
        node.series = project_onto(chain_raw[n], *node.lattice);
        node.raw = chain_raw[n];
        node.index_t = 1;
        node.class_declared = n == 7 ? "holomorphic" : "cusp";
        node.min_bound = Rational(7 - n, 4);
        d.nodes.push_back(std::move(node));
    }
    for (int n = 7; n >= 3; --n)
        d.arrows.push_back({"psi:" + std::to_string(11 - n) + ",A" + std::to_string(n),
                            "psi:" + std::to_string(12 - n) + ",A" + std::to_string(n - 1),
                            ArrowKind::Qp1, n, Rational(1)});

    auto col_name = [](int k, int m) {
        return "phi:" + std::to_string(k) + ",A" + std::to_string(m) + "(2)";
    };
    std::map<int, FourierSeries> prev_col;
    for (int m = 2; m <= 7; ++m) {
        std::map<int, FourierSeries> col;
        if (m <= 6) {
            // psi_{11-M, A_M} has valuation q^1
            FourierSeries psi =
                theta_block_AN(m, ANKind::Psi, Precision{std::max<long long>(prec.q24 - kQDen, 1)}, false);
            FourierSeries top = restrict_trunc(mul(psi, psi), prec.q24);
            top.meta.index = 1;
            col[22 - 2 * m] = std::move(top);
        }
        for (auto& [k, target] : prev_col) {
            col[k] = graft_phi01(target, m, prec);
            col[k].meta.index = 1;
            d.arrows.push_back({col_name(k, m), col_name(k, m - 1), ArrowKind::Graft, m,
                                Rational(12)});
        }
        for (auto& [k, s] : col) {
            TowerNode node;
            node.name = col_name(k, m);
            node.lattice = root_lattice(RootKind::A, m, 2);
            node.series = project_onto(s, *node.lattice);
            node.raw = s;
            node.index_t = 1;
            node.class_declared = m == 7 ? "holomorphic" : "cusp";
            node.min_bound = Rational(7 - m, 2);
            d.nodes.push_back(std::move(node));
        }
        prev_col = std::move(col);
    }
    return d;
}

inline TowerDiagram build_tower(const std::string& kind, Precision prec) {
    if (prec.q24 < 2 * kQDen) throw std::invalid_argument("build_tower: precision below q^2");
    if (kind == "4A1") return build_tower_4a1(prec);
    if (kind == "DN2") return build_tower_dn2(prec);
    if (kind == "AN2") return build_tower_an2(prec);
    throw std::invalid_argument("build_tower: unknown kind " + kind);
}

// ---- verification ----------------------------------------------------------

inline void run_parallel(std::size_t count, int jobs, const std::function<void(std::size_t)>& task) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    int w = std::min<std::size_t>(jobs, count);
    for (int i = 0; i < w; ++i)
        workers.emplace_back([&] {
            for (std::size_t j = next.fetch_add(1); j < count; j = next.fetch_add(1)) task(j);
        });
    for (auto& t : workers) t.join();
}

inline TowerReport verify_tower(const TowerDiagram& d, int jobs = 1) {
    TowerReport rep;
    rep.kind = d.kind;
    rep.arrows.resize(d.arrows.size());
    rep.nodes.resize(d.nodes.size());

    run_parallel(d.arrows.size(), jobs, [&](std::size_t i) {
        const TowerArrow& a = d.arrows[i];
        ArrowResult& r = rep.arrows[i];
        r.src = a.src;
        r.dst = a.dst;
        r.kind = arrow_kind_name(a.kind);
        try {
            const FourierSeries& src = d.node(a.src).raw;
            const FourierSeries& dst = d.node(a.dst).raw;
            FourierSeries t;
            switch (a.kind) {
                case ArrowKind::Tensor:
                case ArrowKind::Graft: t = set_zero(src, a.coord); break;
                case ArrowKind::Qp1: t = quasi_pullback(src, a.coord, 1); break;
                case ArrowKind::Qp2: t = quasi_pullback(src, a.coord, 2); break;
            }
            r.alpha = proportionality(t, dst);
            r.q_range = Rational(std::min(t.trunc24, dst.trunc24), kQDen);
            if (r.alpha == 0) {
                r.message = "vanishing proportionality constant";
            } else if (a.expected_alpha && r.alpha != *a.expected_alpha) {
                r.message = "alpha " + rat_str(r.alpha) + " != expected " + rat_str(*a.expected_alpha);
            } else {
                r.ok = true;
                r.message = "ok";
            }
        } catch (const std::exception& e) {
            r.message = e.what();
        }
    });

    run_parallel(d.nodes.size(), jobs, [&](std::size_t i) {
        const TowerNode& n = d.nodes[i];
        NodeResult& r = rep.nodes[i];
        r.name = n.name;
        r.class_declared = n.class_declared;
        try {
            SupportReport s = support_report(n.series, n.lattice ? &*n.lattice : nullptr, n.index_t);
            r.class_measured = s.class_name();
            r.min_hyp = s.min_hyp;
            bool class_ok = r.class_measured == n.class_declared ||
                            (n.class_declared == "holomorphic" && s.klass == FormClass::Singular) ||
                            (n.class_declared == "cusp" && n.index_t == 0 && s.min_hyp > 0);
            bool bound_ok = !n.min_bound || s.klass == FormClass::Empty || s.min_hyp >= *n.min_bound;
            r.ok = class_ok && bound_ok;
            r.message = r.ok ? "ok"
                             : (!class_ok ? "class mismatch"
                                          : "min_hyp " + rat_str(s.min_hyp) + " below declared bound " +
                                                rat_str(*n.min_bound));
        } catch (const std::exception& e) {
            r.message = e.what();
        }
    });

    for (auto& a : rep.arrows) rep.ok = rep.ok && a.ok;
    for (auto& n : rep.nodes) rep.ok = rep.ok && n.ok;
    return rep;
}

inline nlohmann::ordered_json tower_report_json(const TowerReport& rep) {
    nlohmann::ordered_json j;
    j["kind"] = rep.kind;
    j["ok"] = rep.ok;
    auto arrows = nlohmann::ordered_json::array();
    for (auto& a : rep.arrows) {
        nlohmann::ordered_json e;
        e["source"] = a.src;
        e["target"] = a.dst;
        e["kind"] = a.kind;
        e["alpha"] = rat_str(a.alpha);
        e["q_range"] = rat_str(a.q_range);
        e["status"] = a.ok ? "ok" : a.message;
        arrows.push_back(std::move(e));
    }
    j["arrows"] = std::move(arrows);
    auto nodes = nlohmann::ordered_json::array();
    for (auto& n : rep.nodes) {
        nlohmann::ordered_json e;
        e["name"] = n.name;
        e["class_declared"] = n.class_declared;
        e["class_measured"] = n.class_measured;
        e["min_hyp"] = rat_str(n.min_hyp);
        e["status"] = n.ok ? "ok" : n.message;
        nodes.push_back(std::move(e));
    }
    j["nodes"] = std::move(nodes);
    return j;
}

// ---- triality --------------------------------------------------------------

struct TrialityReport {
    std::vector<std::pair<std::string, Rational>> table;  // S3 element -> sign of psi | sigma
    bool table_ok = false;    // equals the sign character
    bool routes_ok = false;   // slash route equals the coordinate factorizations
    bool supports_ok = false; // all three thetas share a singular support report
    Rational psi_q_range = 0;
    bool ok() const { return table_ok && routes_ok && supports_ok; }
};

// psi = eta^36 theta theta^{(2)} theta^{(3)} starts at q^3; the sign table is
// computed on the first nonempty slice, so the cutoff is raised to q^4 when
// the requested one is lower.
inline TrialityReport triality_report(Precision prec) {
    if (prec.q24 < 3 * kQDen) throw std::invalid_argument("triality_report: precision below q^3");
    TrialityReport rep;
    TrialityThetas th = triality_thetas(prec);  // throws RouteMismatch on failure
    rep.routes_ok = true;

    Lattice d4 = root_lattice(RootKind::D, 4);
    SupportReport s1 = support_report(th.th1, &d4, 1);
    SupportReport s2 = support_report(th.th2, &d4, 1);
    SupportReport s3 = support_report(th.th3, &d4, 1);
    rep.supports_ok = s1.klass == FormClass::Singular && s2.klass == FormClass::Singular &&
                      s3.klass == FormClass::Singular && s1.min_hyp == s2.min_hyp &&
                      s1.min_hyp == s3.min_hyp;

    Precision pp{std::max(prec.q24, 4 * kQDen)};
    TrialityThetas thp = prec.q24 >= pp.q24 ? th : triality_thetas(pp);
    FourierSeries psi = mul(mul(mul(promote(eta_power(36, pp), 4), thp.th1), thp.th2), thp.th3);
    rep.psi_q_range = Rational(psi.trunc24, kQDen);

    OrthMap s_eps = d4_sigma_eps1(), s_v = d4_sigma_v();
    std::vector<std::pair<std::string, OrthMap>> elements = {
        {"id", OrthMap(rat_identity(4))},
        {"s_eps1", s_eps},
        {"s_v", s_v},
        {"s_eps1*s_v", s_eps.then(s_v)},
        {"s_v*s_eps1", s_v.then(s_eps)},
        {"s_eps1*s_v*s_eps1", d4_sigma_conj()},
    };
    std::vector<Rational> expected = {1, -1, -1, 1, 1, -1};
    rep.table_ok = true;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        Rational sign;
        try {
            sign = proportionality(orthogonal_slash(psi, elements[i].second), psi);
        } catch (const NotProportional&) {
            sign = 0;
        }
        rep.table.emplace_back(elements[i].first, sign);
        if (sign != expected[i]) rep.table_ok = false;
    }
    return rep;
}

inline nlohmann::ordered_json triality_report_json(const TrialityReport& rep) {
    nlohmann::ordered_json j;
    j["ok"] = rep.ok();
    j["routes_match"] = rep.routes_ok;
    j["singular_supports"] = rep.supports_ok;
    j["psi_q_range"] = rat_str(rep.psi_q_range);
    auto table = nlohmann::ordered_json::array();
    for (auto& [name, sign] : rep.table) {
        nlohmann::ordered_json e;
        e["element"] = name;
        e["sign"] = rat_str(sign);
        table.push_back(std::move(e));
    }
    j["sign_table"] = std::move(table);
    return j;
}

// ---- Borcherds divisor data -------------------------------------------------

// alpha_h = sum_{d > 0} f(d^2 n, d l) for a primitive Jacobi datum of negative
// hyperbolic norm.  Coefficients beyond the computed range are known to vanish
// when their norm lies below the weak bound -t * max_min_norm(L).
inline Int borcherds_multiplicity(const FourierSeries& phi, const Lattice& l, const Rational& t,
                                  long long n0_q24, const RatVec& l0) {
    if (!l.in_dual(l0)) throw std::domain_error("borcherds_multiplicity: l not in the dual lattice");
    Rational h = Rational(2 * n0_q24, kQDen) * t - l.norm(l0);
    if (h >= 0) throw std::domain_error("borcherds_multiplicity: hyperbolic norm must be negative");
    Rational weak_bound = -t * max_min_norm(l);
    // exponent key of l0: e = s * (l0 in ambient coordinates)
    Int alpha = 0;
    for (long long d = 1;; ++d) {
        if (d * d * h < weak_bound) break;  // tail vanishes for weak forms
        long long q = d * d * n0_q24;
        if (q >= phi.trunc24)
            throw std::runtime_error("borcherds_multiplicity: insufficient precision for d = " +
                                     std::to_string(d));
        std::vector<Rational> ev(l0.size());
        bool on_grid = true;
        std::vector<int> e(l0.size());
        for (std::size_t i = 0; i < l0.size(); ++i) {
            Rational v = l.form_scale * Rational(d) * l0[i] * phi.eden;
            if (rat_den(v) != 1) { on_grid = false; break; }
            e[i] = static_cast<int>(to_ll(rat_num(v)));
        }
        if (on_grid) {
            Rational c = phi.coeff(q, e, phi.eden);
            if (rat_den(c) != 1)
                throw std::runtime_error("borcherds_multiplicity: non-integral coefficient");
            alpha += rat_num(c);
        }
    }
    return alpha;
}

struct DivisorRow {
    Rational r_norm;             // (r, r) for the primitive lattice vector r
    Int div = 1;                 // div(r)
    std::vector<Rational> cls;   // class of r* in D(L_2), as fractional basis coordinates
    Rational jacobi_norm;        // 2 n t - (l, l) of the defining data
    Int multiplicity = 0;
    long long data_count = 0;
    bool consistent = true;      // every datum in the orbit produced the same alpha
};

struct DivisorTable {
    std::string source;
    Rational norm_bound;
    std::vector<DivisorRow> rows;
    bool ok = true;
};

// Enumerate primitive negative-norm Jacobi data of phi down to norm_bound,
// group them by the orbit key of the corresponding L_2 vector, and record the
// Borcherds multiplicities.
inline DivisorTable divisor_table(const FourierSeries& phi, const Lattice& l, const Rational& t,
                                  const Rational& norm_bound = Rational(-4)) {
    if (norm_bound >= 0) throw std::invalid_argument("divisor_table: bound must be negative");
    DivisorTable table;
    table.norm_bound = norm_bound;
    HyperbolicLattice h(l);
    RatMat dual_gram = rat_inverse(l.gram());
    QuadFormEnumerator en(dual_gram);
    RatMat dual = l.dual_basis();
    int rank = l.rank(), dim = h.dim();

    std::map<std::vector<Rational>, DivisorRow> rows;  // keyed by (r_norm, div, cls...)
    for (long long n = 0; n * kQDen < phi.trunc24; ++n) {
        Rational radius = 2 * Rational(n) * t - norm_bound;
        RatVec offset(rank, 0);
        for (auto& [c, nrm] : en.enumerate(offset, radius)) {
            Rational hyp = 2 * Rational(n) * t - nrm;
            if (hyp >= 0 || hyp < norm_bound) continue;
            RatVec l0(l.ambient_dim, 0);
            for (int i = 0; i < rank; ++i)
                for (int j = 0; j < l.ambient_dim; ++j) l0[j] += Rational(c[i]) * dual[i][j];
            // h = n e + l0 + t f in the (e, e1, L, f1, f) basis
            RatVec hv(dim, 0);
            hv[0] = n;
            hv[dim - 1] = t;
            auto l_coords = l.coords_of(l0);
            if (!l_coords) throw std::logic_error("divisor_table: datum left the lattice span");
            for (int i = 0; i < rank; ++i) hv[2 + i] = (*l_coords)[i];
            // primitive scaling: r = c0 * h integral with coprime pairings
            long long den = 1;
            for (auto& v : hv) den = lcm_ll(den, to_ll(rat_den(v)));
            IntVec r(dim);
            for (int i = 0; i < dim; ++i) r[i] = rat_num(hv[i] * den);
            Int g = 0;
            for (auto& v : r) g = boost::multiprecision::gcd(g, v);
            for (auto& v : r) v /= g;  // primitive representative of the ray
            Int alpha = borcherds_multiplicity(phi, l, t, n * kQDen, l0);
            OrbitKey key = classify_orbit(h, r);
            Int dv = vector_div(h, r);
            // D_r and D_{-r} are the same divisor: canonicalize the class under negation
            std::vector<Rational> cls_neg(key.cls.size());
            for (std::size_t i = 0; i < key.cls.size(); ++i) cls_neg[i] = rat_frac(-key.cls[i]);
            if (cls_neg < key.cls) key.cls = std::move(cls_neg);
            std::vector<Rational> map_key;
            map_key.push_back(key.norm);
            map_key.push_back(Rational(dv));
            for (auto& v : key.cls) map_key.push_back(v);
            auto it = rows.find(map_key);
            if (it == rows.end()) {
                DivisorRow row;
                row.r_norm = key.norm;
                row.div = dv;
                row.cls = key.cls;
                row.jacobi_norm = hyp;
                row.multiplicity = alpha;
                row.data_count = 1;
                rows.emplace(std::move(map_key), std::move(row));
            } else {
                ++it->second.data_count;
                if (it->second.multiplicity != alpha) {
                    it->second.consistent = false;
                    table.ok = false;
                }
            }
        }
    }
    for (auto& [k, row] : rows) {
        (void)k;
        if (row.multiplicity != 0 || !row.consistent) table.rows.push_back(row);
    }
    return table;
}

inline nlohmann::ordered_json divisor_table_json(const DivisorTable& t) {
    nlohmann::ordered_json j;
    j["source"] = t.source;
    j["norm_bound"] = rat_str(t.norm_bound);
    j["ok"] = t.ok;
    auto rows = nlohmann::ordered_json::array();
    for (auto& r : t.rows) {
        nlohmann::ordered_json e;
        e["r_norm"] = rat_str(r.r_norm);
        e["div"] = r.div.str();
        auto cls = nlohmann::ordered_json::array();
        for (auto& v : r.cls) cls.push_back(rat_str(v));
        e["class"] = std::move(cls);
        e["jacobi_norm"] = rat_str(r.jacobi_norm);
        e["multiplicity"] = r.multiplicity.str();
        e["data_count"] = r.data_count;
        e["consistent"] = r.consistent;
        rows.push_back(std::move(e));
    }
    j["rows"] = std::move(rows);
    return j;
}

}  // namespace jfl
