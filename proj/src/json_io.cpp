#include "homkit/json_io.hpp"

#include <stdexcept>

namespace homkit {

json int_to_json(const Int& v) { return v.get_str(); }

Int int_from_json(const json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    if (j.is_number_integer()) return Int(j.get<long long>());
    throw std::invalid_argument("expected an integer or decimal string");
}

json matrix_to_json(const IntMatrix& m) {
    json entries = json::array();
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) entries.push_back(int_to_json(m(i, j)));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

IntMatrix matrix_from_json(const json& j) {
    const Index rows = j.at("rows").get<Index>();
    const Index cols = j.at("cols").get<Index>();
    const json& entries = j.at("entries");
    if (rows < 0 || cols < 0 || static_cast<Index>(entries.size()) != rows * cols)
        throw std::invalid_argument("matrix: entries length must equal rows*cols");
    IntMatrix m(rows, cols);
    Index t = 0;
    for (Index i = 0; i < rows; ++i)
        for (Index jj = 0; jj < cols; ++jj) m(i, jj) = int_from_json(entries[t++]);
    return m;
}

json complex_to_json(const ChainComplex& c) {
    json diffs = json::array();
    for (const auto& d : c.differentials) diffs.push_back(matrix_to_json(d));
    return json{{"lowest_degree", c.lowest_degree},
                {"levels", c.levels},
                {"differentials", diffs}};
}

ChainComplex complex_from_json(const json& j) {
    ChainComplex c;
    c.lowest_degree = j.at("lowest_degree").get<int>();
    c.levels = j.at("levels").get<std::vector<Index>>();
    for (const auto& d : j.at("differentials")) c.differentials.push_back(matrix_from_json(d));
    c.validate();
    return c;
}

json group_to_json(const FgAbelianGroup& g) {
    json factors = json::array();
    for (const Int& d : g.invariant_factors) factors.push_back(int_to_json(d));
    return json{{"free_rank", g.free_rank}, {"invariant_factors", factors}};
}

FgAbelianGroup group_from_json(const json& j) {
    std::vector<Int> factors;
    for (const auto& d : j.at("invariant_factors")) factors.push_back(int_from_json(d));
    return FgAbelianGroup(j.at("free_rank").get<Index>(), std::move(factors));
}

json graded_to_json(const GradedGroup& g) {
    json degrees = json::object();
    for (const auto& [deg, grp] : g.entries())
        degrees[std::to_string(deg)] = group_to_json(grp);
    return json{{"homology", degrees}};
}

GradedGroup graded_from_json(const json& j) {
    GradedGroup g;
    for (const auto& [key, value] : j.at("homology").items())
        g.set(std::stoi(key), group_from_json(value));
    return g;
}

json monoid_to_json(const CommMonoidWithZero& m) {
    json table = json::array();
    for (Index i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (Index j = 0; j < m.size(); ++j) row.push_back(m.table(i, j));
        table.push_back(row);
    }
    return json{{"size", m.size()}, {"unit", m.unit}, {"table", table}};
}

CommMonoidWithZero monoid_from_json(const json& j) {
    const Index size = j.at("size").get<Index>();
    std::vector<std::vector<int>> table;
    for (const auto& row : j.at("table")) table.push_back(row.get<std::vector<int>>());
    return make_monoid(size, j.at("unit").get<int>(), table);
}

namespace {

json maps_to_json(const std::vector<std::vector<SimplicialMap>>& maps) {
    json out = json::array();
    for (const auto& level : maps) {
        json fam = json::array();
        for (const auto& m : level) fam.push_back(m);
        out.push_back(fam);
    }
    return out;
}

std::vector<std::vector<SimplicialMap>> maps_from_json(const json& j) {
    std::vector<std::vector<SimplicialMap>> out;
    for (const auto& level : j) {
        std::vector<SimplicialMap> fam;
        for (const auto& m : level) fam.push_back(m.get<SimplicialMap>());
        out.push_back(std::move(fam));
    }
    return out;
}

void data_to_json(json& out, const TruncatedSimplicialData& x) {
    out["truncation"] = x.truncation;
    out["sets"] = x.sizes;
    out["faces"] = maps_to_json(x.faces);
    out["degeneracies"] = maps_to_json(x.degeneracies);
}

void data_from_json(TruncatedSimplicialData& x, const json& j) {
    x.truncation = j.at("truncation").get<int>();
    x.sizes = j.at("sets").get<std::vector<Index>>();
    x.faces = maps_from_json(j.at("faces"));
    x.degeneracies = maps_from_json(j.at("degeneracies"));
}

}  // namespace

json pointed_simplicial_to_json(const PointedSimplicialSet& x) {
    json out;
    data_to_json(out, x);
    out["point"] = x.point;
    return out;
}

PointedSimplicialSet pointed_simplicial_from_json(const json& j) {
    PointedSimplicialSet x;
    data_from_json(x, j);
    x.point = j.value("point", 0);
    return x;
}

json simplicial_pointed_to_json(const SimplicialPointedSet& x) {
    json out;
    data_to_json(out, x);
    out["basepoints"] = x.basepoints;
    return out;
}

SimplicialPointedSet simplicial_pointed_from_json(const json& j) {
    SimplicialPointedSet x;
    data_from_json(x, j);
    if (j.contains("basepoints")) {
        x.basepoints = j.at("basepoints").get<std::vector<Index>>();
    } else {
        // Lift from the chosen point when only a pointed simplicial set was
        // provided.
        PointedSimplicialSet p;
        static_cast<TruncatedSimplicialData&>(p) = x;
        p.point = j.value("point", 0);
        x = basepoint_lift(p);
    }
    return x;
}

json field_to_json(const NumberField& k) {
    json coeffs = json::array();
    for (const Int& c : k.min_poly) coeffs.push_back(int_to_json(c));
    return json{{"min_poly", coeffs}};
}

NumberField field_from_json(const json& j) {
    IntPoly coeffs;
    for (const auto& c : j.at("min_poly")) coeffs.push_back(int_from_json(c));
    return make_number_field(coeffs);
}

json adele_to_json(const FiniteAdele& x) {
    json comps = json::object();
    for (const auto& [p, c] : x.components) {
        json r = json::array();
        for (Index i = 0; i < c.r.size(); ++i) r.push_back(int_to_json(c.r(i)));
        comps[p.get_str()] = json{{"k", c.k}, {"r", r}};
    }
    return json{{"precision", x.precision},
                {"cap", x.denominator_cap},
                {"components", comps}};
}

FiniteAdele adele_from_json(const NumberField& k, const json& j) {
    std::map<Int, FiniteAdele::Component> comps;
    if (j.contains("components"))
        for (const auto& [key, value] : j.at("components").items()) {
            FiniteAdele::Component c;
            c.k = value.at("k").get<int>();
            const json& r = value.at("r");
            c.r.resize(static_cast<Index>(r.size()));
            for (std::size_t i = 0; i < r.size(); ++i)
                c.r(static_cast<Index>(i)) = int_from_json(r[i]);
            comps[Int(key)] = std::move(c);
        }
    return make_adele(k, j.at("precision").get<int>(), comps, j.value("cap", 6));
}

json system_to_json(const CompatibleSystem& s) {
    json values = json::object();
    for (const auto& [m, v] : s.values) {
        json arr = json::array();
        for (Index i = 0; i < v.size(); ++i) arr.push_back(int_to_json(v(i)));
        values[m.get_str()] = arr;
    }
    return json{{"modulus", int_to_json(s.modulus)}, {"values", values}};
}

CompatibleSystem system_from_json(const NumberField& k, const json& j) {
    std::map<Int, IntVector> values;
    for (const auto& [key, value] : j.at("values").items()) {
        IntVector v(static_cast<Index>(value.size()));
        for (std::size_t i = 0; i < value.size(); ++i)
            v(static_cast<Index>(i)) = int_from_json(value[i]);
        values[Int(key)] = std::move(v);
    }
    return make_system(k, int_from_json(j.at("modulus")), values);
}

json graded_formal_ext_to_json(const GradedFormalExt& g) {
    json degrees = json::object();
    for (const auto& [deg, v] : g.entries)
        degrees[std::to_string(deg)] =
            json{{"rank", v.rank}, {"label", v.source_label}};
    return json{{"ext", degrees},
                {"window", json::array({g.window_lo, g.window_hi})}};
}

}  // namespace homkit
