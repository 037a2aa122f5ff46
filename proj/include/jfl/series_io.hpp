// Canonical JSON form of a Fourier series.  All numbers are exact fraction
// strings, terms are sorted by (q, e), and serialize(parse(x)) == x for any
// canonically formatted x.
#pragma once

#include "jfl/series.hpp"

#include <json.hpp>

#include <string>

namespace jfl {

inline nlohmann::ordered_json series_to_json(const FourierSeries& s) {
    nlohmann::ordered_json meta;
    meta["weight"] = rat_str(s.meta.weight);
    meta["index"] = rat_str(s.meta.index);
    meta["lattice"] = s.meta.lattice;
    meta["trunc"] = rat_str(Rational(s.trunc24, kQDen));
    if (s.meta.congruence24)
        meta["congruence"] = rat_str(Rational(*s.meta.congruence24, kQDen));
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (auto& [k, c] : s.terms) {
        nlohmann::ordered_json t;
        t["q"] = rat_str(Rational(k.q, kQDen));
        nlohmann::ordered_json evec = nlohmann::ordered_json::array();
        for (int i = 0; i < s.vars; ++i) evec.push_back(rat_str(Rational(k.e[i], s.eden)));
        t["e"] = std::move(evec);
        t["c"] = rat_str(c);
        terms.push_back(std::move(t));
    }
    nlohmann::ordered_json out;
    out["meta"] = std::move(meta);
    out["vars"] = s.vars;
    out["terms"] = std::move(terms);
    return out;
}

inline std::string series_to_string(const FourierSeries& s) { return series_to_json(s).dump(); }

inline FourierSeries series_from_json(const nlohmann::json& j) {
    FourierSeries s;
    const auto& meta = j.at("meta");
    s.meta.weight = rat_parse(meta.at("weight").get<std::string>());
    s.meta.index = rat_parse(meta.at("index").get<std::string>());
    s.meta.lattice = meta.at("lattice").get<std::string>();
    Rational trunc = rat_parse(meta.at("trunc").get<std::string>()) * kQDen;
    if (rat_den(trunc) != 1) throw std::invalid_argument("series_from_json: trunc not on the 1/24 grid");
    s.trunc24 = to_ll(rat_num(trunc));
    if (meta.contains("congruence")) {
        Rational c = rat_parse(meta.at("congruence").get<std::string>()) * kQDen;
        if (rat_den(c) != 1) throw std::invalid_argument("series_from_json: congruence not on the 1/24 grid");
        s.meta.congruence24 = to_ll(rat_num(c));
    }
    s.vars = j.at("vars").get<int>();

    // first pass: common elliptic denominator
    long long eden = 1;
    for (const auto& t : j.at("terms"))
        for (const auto& ev : t.at("e"))
            eden = lcm_ll(eden, to_ll(rat_den(rat_parse(ev.get<std::string>()))));
    s.eden = static_cast<int>(eden);
    for (const auto& t : j.at("terms")) {
        Rational q = rat_parse(t.at("q").get<std::string>()) * kQDen;
        if (rat_den(q) != 1) throw std::invalid_argument("series_from_json: q-exponent not on the 1/24 grid");
        TermKey k;
        k.q = to_ll(rat_num(q));
        if (static_cast<int>(t.at("e").size()) != s.vars)
            throw std::invalid_argument("series_from_json: exponent vector length mismatch");
        k.e.resize(s.vars);
        int i = 0;
        for (const auto& ev : t.at("e"))
            k.e[i++] = static_cast<int>(to_ll(rat_num(rat_parse(ev.get<std::string>()) * eden)));
        Rational c = rat_parse(t.at("c").get<std::string>());
        if (c == 0) throw std::invalid_argument("series_from_json: zero coefficient stored");
        if (k.q >= s.trunc24) throw std::invalid_argument("series_from_json: term beyond trunc");
        if (!s.terms.emplace(std::move(k), std::move(c)).second)
            throw std::invalid_argument("series_from_json: duplicate term");
    }
    s.normalize_eden();
    return s;
}

inline FourierSeries series_from_string(const std::string& text) {
    return series_from_json(nlohmann::json::parse(text));
}

}  // namespace jfl
