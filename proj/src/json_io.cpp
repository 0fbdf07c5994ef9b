#include "seqring/json_io.hpp"

#include "seqring/parser.hpp"

namespace seqring {

json apset_to_json(const APSet& s) {
    return json{{"threshold", s.threshold},
                {"modulus", s.modulus},
                {"residues", s.residues},
                {"sporadic", s.sporadic}};
}

APSet apset_from_json(const json& j) {
    APSet s;
    s.threshold = j.at("threshold").get<std::uint64_t>();
    s.modulus = j.at("modulus").get<std::uint64_t>();
    for (const auto& r : j.at("residues")) s.residues.insert(r.get<std::uint64_t>());
    for (const auto& x : j.at("sporadic")) s.sporadic.insert(x.get<std::uint64_t>());
    return s;
}

json equation_to_json(const Equation& e) {
    json coeffs = json::array();
    for (const RatFunc& h : e.coeffs) coeffs.push_back(h.str());
    return json{{"order", e.order}, {"coeffs", std::move(coeffs)}};
}

Equation equation_from_json(const json& j) {
    std::size_t order = j.at("order").get<std::size_t>();
    std::vector<RatFunc> coeffs;
    for (const auto& s : j.at("coeffs")) coeffs.push_back(parse_ratfunc(s.get<std::string>()));
    return Equation(order, std::move(coeffs));
}

json matk_to_json(const MatK& a) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.dim(); ++j) row.push_back(a.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return json{{"n", a.dim()}, {"entries", std::move(rows)}};
}

MatK matk_from_json(const json& j) {
    std::size_t n = j.at("n").get<std::size_t>();
    const json& rows = j.at("entries");
    if (rows.size() != n) throw ParseError("matrix row count differs from n", 0);
    MatK a(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw ParseError("matrix column count differs from n", 0);
        for (std::size_t c = 0; c < n; ++c) {
            a.at(i, c) = parse_ratfunc(rows[i][c].get<std::string>());
        }
    }
    return a;
}

json qmatrix_to_json(const QMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return json{{"n", m.dim()}, {"entries", std::move(rows)}};
}

QMatrix qmatrix_from_json(const json& j) {
    std::size_t n = j.at("n").get<std::size_t>();
    const json& rows = j.at("entries");
    if (rows.size() != n) throw ParseError("matrix row count differs from n", 0);
    QMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw ParseError("matrix column count differs from n", 0);
        for (std::size_t c = 0; c < n; ++c) {
            m.at(i, c) = Rat::parse(rows[i][c].get<std::string>());
        }
    }
    return m;
}

json seq_to_json(const ExactSeq& f) {
    json values = json::array();
    for (const Rat& v : f.values) values.push_back(v.str());
    return json{{"start", f.start}, {"values", std::move(values)}};
}

ExactSeq seq_from_json(const json& j) {
    ExactSeq f;
    f.start = j.at("start").get<std::int64_t>();
    for (const auto& v : j.at("values")) f.values.push_back(Rat::parse(v.get<std::string>()));
    f.provenance = "json input";
    return f;
}

json regular_to_json(const RegularFunction& f) {
    return json{{"poly", f.poly_str()}, {"detPower", f.det_power()}};
}

RegularFunction regular_from_json(const json& j, std::size_t n) {
    RegularFunction poly = parse_regular(j.at("poly").get<std::string>(), n);
    unsigned m = j.at("detPower").get<unsigned>();
    return poly * RegularFunction::det_z_inverse(n, m);
}

json subvariety_to_json(const Subvariety& y) {
    json gens = json::array();
    for (const RegularFunction& g : y.generators) gens.push_back(regular_to_json(g));
    return json{{"generators", std::move(gens)}};
}

Subvariety subvariety_from_json(const json& j, std::size_t n) {
    std::vector<RegularFunction> gens;
    for (const auto& g : j.at("generators")) {
        if (g.is_string()) {
            gens.push_back(parse_regular(g.get<std::string>(), n));
        } else {
            gens.push_back(regular_from_json(g, n));
        }
    }
    return Subvariety(std::move(gens));
}

json decomposition_report(const Decomposition& dec, std::uint64_t periods_checked,
                          const std::vector<PeriodWitness>& witnesses) {
    json ws = json::array();
    for (const PeriodWitness& w : witnesses) {
        ws.push_back(json{{"element", w.name},
                          {"apset", apset_to_json(w.set)},
                          {"status", status_name(w.status)}});
    }
    return json{{"zero_set_window", {dec.window_lo, dec.window_hi}},
                {"apset", apset_to_json(dec.set)},
                {"status", status_name(dec.status)},
                {"periods_checked", periods_checked},
                {"witnesses", std::move(ws)}};
}

} // namespace seqring
