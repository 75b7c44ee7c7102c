#include "korb/json_io.hpp"

#include <cctype>
#include <stdexcept>

namespace korb {

namespace {

Int int_from_json(const Json& j) {
    if (!j.is_number_integer()) throw std::invalid_argument("expected an integer");
    return Int(static_cast<long>(j.get<long long>()));
}

const char* scalar_name(ScalarAction s) {
    switch (s) {
        case ScalarAction::plus_one: return "+1";
        case ScalarAction::minus_one: return "-1";
        default: return "general";
    }
}

}  // namespace

Json int_json(const Int& v) {
    if (!v.fits_slong_p()) throw std::logic_error("integer too large for JSON output");
    return Json(static_cast<long long>(v.get_si()));
}

Json rat_json(const Rat& v) { return Json(rat_str(v)); }

Json matrix_json(const ZMat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(int_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ZMat matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("expected a nonempty matrix");
    int rows = (int)j.size();
    int cols = (int)j[0].size();
    ZMat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (!j[i].is_array() || (int)j[i].size() != cols)
            throw std::invalid_argument("matrix rows must have equal length");
        for (int c = 0; c < cols; ++c) m.at(i, c) = int_from_json(j[i][c]);
    }
    return m;
}

Json lattice_json(const GramLattice& L) {
    Json j;
    j["rank"] = L.rank();
    j["gram"] = matrix_json(L.gram());
    return j;
}

GramLattice lattice_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("gram")) throw std::invalid_argument("lattice JSON needs a \"gram\" key");
    ZMat g = matrix_from_json(j["gram"]);
    if (j.contains("rank") && int_from_json(j["rank"]) != g.rows())
        throw std::invalid_argument("lattice JSON rank does not match the Gram matrix");
    return GramLattice(std::move(g));
}

Json vector_json(const ZVec& v) {
    Json coords = Json::array();
    for (const Int& c : v) coords.push_back(int_json(c));
    Json j;
    j["coords"] = std::move(coords);
    return j;
}

ZVec vector_from_json(const Json& j) {
    const Json* arr = &j;
    if (j.is_object()) {
        if (!j.contains("coords")) throw std::invalid_argument("vector JSON needs a \"coords\" key");
        arr = &j["coords"];
    }
    if (!arr->is_array()) throw std::invalid_argument("expected a coordinate array");
    ZVec v;
    for (const Json& c : *arr) v.push_back(int_from_json(c));
    return v;
}

ZVec coords_from_string(const std::string& text) {
    ZVec out;
    std::string token;
    auto flush = [&]() {
        if (token.empty()) throw std::invalid_argument("empty coordinate in vector string");
        try {
            out.emplace_back(token);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("bad integer '" + token + "' in vector string");
        }
        token.clear();
    };
    for (char ch : text) {
        if (ch == ',') {
            flush();
        } else if (!std::isspace((unsigned char)ch)) {
            token.push_back(ch);
        }
    }
    flush();
    return out;
}

Json isometry_json(const Isometry& g) {
    Json j;
    j["matrix"] = matrix_json(g.mat);
    j["det"] = g.det;
    j["disc_action"] = scalar_name(g.disc_action.scalar);
    j["orientation"] = g.orientation;
    return j;
}

Json disc_group_json(const GramLattice& L) {
    const DiscriminantGroup& d = L.disc_group();
    Json j;
    j["order"] = int_json(d.order);
    Json factors = Json::array();
    for (const Int& f : d.invariant_factors) factors.push_back(int_json(f));
    j["invariant_factors"] = std::move(factors);
    Json gens = Json::array();
    for (size_t i = 0; i < d.generators.size(); ++i) {
        Json gen;
        Json coords = Json::array();
        for (const Rat& c : d.generators[i]) coords.push_back(rat_json(c));
        gen["coords"] = std::move(coords);
        gen["order"] = int_json(d.invariant_factors[i]);
        gen["q_value"] = rat_json(normalize_mod2(L.q_q(d.generators[i])));
        gens.push_back(std::move(gen));
    }
    j["generators"] = std::move(gens);
    return j;
}

Json polarization_json(const PolarizationType& p) {
    Json j;
    j["n"] = p.n;
    j["square"] = int_json(p.square);
    j["t"] = int_json(p.t);
    j["beta"] = int_json(p.beta);
    j["m"] = int_json(p.m);
    j["d_prime"] = int_json(p.d_prime);
    return j;
}

Json sat_invariant_json(const SaturatedPairInvariant& inv) {
    Json j;
    j["gram"] = matrix_json(inv.gram2);
    Json v = Json::array(), h = Json::array();
    for (const Int& c : inv.v_coords) v.push_back(int_json(c));
    for (const Int& c : inv.h_coords) h.push_back(int_json(c));
    j["v"] = std::move(v);
    j["h"] = std::move(h);
    return j;
}

Json divisor_json(const UniruledDivisorClass& u) {
    Json j;
    j["n"] = u.n;
    j["k"] = u.k;
    j["reduced"] = u.reduced;
    j["p_a"] = int_json(u.p_a);
    Json cls;
    cls["h_a"] = rat_json(u.divisor.h_coeff);
    cls["delta"] = rat_json(u.divisor.delta_coeff);
    j["divisor_class"] = std::move(cls);
    j["square"] = rat_json(u.square);
    j["lambda"] = int_json(u.multiple.lambda);
    j["s"] = int_json(u.multiple.s);
    j["t"] = int_json(u.multiple.t);
    return j;
}

Json coverage_json(const CoverageReport& report) {
    Json j;
    j["n"] = report.n;
    j["d_max"] = int_json(report.d_max);
    Json types = Json::array();
    for (const CoverageEntry& e : report.types) {
        Json entry;
        entry["t"] = int_json(e.t);
        entry["beta"] = int_json(e.beta);
        entry["min_square"] = int_json(e.min_square);
        switch (e.status) {
            case CoverageStatus::witnessed: entry["status"] = "witnessed"; break;
            case CoverageStatus::square_limited: entry["status"] = "square-limited"; break;
            default: entry["status"] = "gap"; break;
        }
        if (e.witness) {
            Json w;
            w["k"] = e.witness->k;
            w["reduced"] = e.witness->reduced;
            w["p_a"] = int_json(e.witness->p_a);
            entry["witness"] = std::move(w);
        } else {
            entry["witness"] = nullptr;
        }
        types.push_back(std::move(entry));
    }
    j["types"] = std::move(types);
    return j;
}

}  // namespace korb
