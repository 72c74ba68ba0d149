#include "loxo/json_io.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "loxo/errors.hpp"
#include "loxo/rational_format.hpp"

namespace loxo {

namespace {

mpz_class mpz_from_json(const Json& j, const std::string& what) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned())
            return mpz_class(static_cast<unsigned long>(j.get<unsigned long long>()));
        return mpz_class(static_cast<long>(j.get<long long>()));
    }
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        try {
            return mpz_class(s, 10);
        } catch (const std::invalid_argument&) {
            throw InputFormatError(what + ": '" + s + "' is not an integer");
        }
    }
    throw InputFormatError(what + ": expected an integer");
}

Json mpz_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return Json(z.get_si());
    return Json(z.get_str());
}

std::string rational_string(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Json interval_to_json(const RationalInterval& r) {
    return Json{{"lo", rational_string(r.lo())}, {"hi", rational_string(r.hi())}};
}

}  // namespace

IntMatrix matrix_from_json(const Json& j, const std::string& what) {
    if (!j.is_array() || j.empty())
        throw InputFormatError(what + ": expected a non-empty array of rows");
    std::vector<std::vector<mpz_class>> rows;
    std::size_t width = 0;
    for (const auto& row : j) {
        if (!row.is_array() || row.empty())
            throw InputFormatError(what + ": each row must be a non-empty array");
        if (rows.empty()) width = row.size();
        if (row.size() != width) throw InputFormatError(what + ": ragged rows");
        std::vector<mpz_class> out;
        for (const auto& cell : row) out.push_back(mpz_from_json(cell, what));
        rows.push_back(std::move(out));
    }
    return IntMatrix::from_rows(std::move(rows));
}

Json matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(mpz_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Lattice lattice_from_json(const Json& j) {
    if (!j.is_object()) throw InputFormatError("lattice: expected an object");
    if (j.contains("catalog")) {
        if (!j["catalog"].is_string())
            throw InputFormatError("lattice.catalog: expected a name string");
        std::optional<long> n;
        if (j.contains("n")) {
            if (!j["n"].is_number_integer())
                throw InputFormatError("lattice.n: expected an integer");
            n = j["n"].get<long>();
        }
        try {
            return catalog(j["catalog"].get<std::string>(), n);
        } catch (const PreconditionError& e) {
            throw InputFormatError(e.what());
        }
    }
    if (!j.contains("gram")) throw InputFormatError("lattice: needs 'gram' or 'catalog'");
    std::string label;
    if (j.contains("label")) {
        if (!j["label"].is_string()) throw InputFormatError("lattice.label: expected a string");
        label = j["label"].get<std::string>();
    }
    return Lattice(matrix_from_json(j["gram"], "lattice.gram"), std::move(label));
}

Json lattice_to_json(const Lattice& l) {
    Json out;
    out["label"] = l.label();
    out["rank"] = l.rank();
    out["signature"] = Json{{"positives", l.signature().positives},
                            {"negatives", l.signature().negatives}};
    out["gram"] = matrix_to_json(l.gram());
    return out;
}

std::pair<Lattice, IntMatrix> isometry_input_from_json(const Json& j) {
    if (!j.is_object()) throw InputFormatError("isometry: expected an object");
    if (!j.contains("lattice")) throw InputFormatError("isometry: missing 'lattice'");
    if (!j.contains("matrix")) throw InputFormatError("isometry: missing 'matrix'");
    Lattice l = lattice_from_json(j["lattice"]);
    IntMatrix m = matrix_from_json(j["matrix"], "isometry.matrix");
    return {std::move(l), std::move(m)};
}

int decimal_digits_for(const mpq_class& precision) {
    if (precision <= 0) throw PreconditionError("precision must be positive");
    mpq_class inv = 1 / precision;
    mpz_class ceiling = inv.get_num() / inv.get_den() + (inv.get_num() % inv.get_den() != 0);
    int e = ceiling > 1 ? static_cast<int>(ceiling.get_str().size()) : 0;
    return std::clamp(e + 4, 6, 64);
}

Json value_to_json(const AlgebraicValue& v, const mpq_class& precision) {
    Json out;
    out["decimal"] = v.decimal(decimal_digits_for(precision));
    if (const mpq_class* q = v.as_rational()) {
        out["exact"] = rational_string(*q);
    } else if (const QuadraticValue* qv = v.as_quadratic()) {
        mpz_class den;
        mpz_lcm(den.get_mpz_t(), qv->a().get_den().get_mpz_t(), qv->b().get_den().get_mpz_t());
        if (den <= 2) {
            mpq_class a_num = qv->a() * den;
            mpq_class b_num = qv->b() * den;
            out["exact"] = Json{{"a", mpz_to_json(a_num.get_num())},
                                {"b", mpz_to_json(b_num.get_num())},
                                {"d", mpz_to_json(qv->d())},
                                {"den", mpz_to_json(den)}};
        } else {
            out["exact"] = nullptr;
        }
    } else {
        out["exact"] = nullptr;
    }
    out["enclosure"] = interval_to_json(v.enclosure(precision));
    return out;
}

Json classification_to_json(const Classification& c, const mpq_class& precision) {
    Json out;
    out["kind"] = to_string(c.kind);
    out["char_poly"] = c.char_poly.to_string();
    Json coeffs = Json::array();
    for (int i = 0; i <= c.char_poly.degree(); ++i)
        coeffs.push_back(mpz_to_json(c.char_poly.coeff(i)));
    out["char_poly_coeffs"] = std::move(coeffs);

    if (c.kind == IsometryKind::Loxodromic) {
        out["lambda1"] = value_to_json(c.lambda1_value(), precision);
        out["lambda1_trace"] =
            c.lambda1_trace ? mpz_to_json(*c.lambda1_trace) : Json(nullptr);
    } else {
        out["lambda1"] = nullptr;
        out["lambda1_trace"] = nullptr;
    }

    out["finite_order"] = c.finite_order ? Json(*c.finite_order) : Json(nullptr);
    out["unipotence_exponent"] =
        c.unipotence_exponent ? Json(*c.unipotence_exponent) : Json(nullptr);
    if (c.jordan_ranks) {
        out["jordan_ranks"] = Json::array({(*c.jordan_ranks)[0], (*c.jordan_ranks)[1],
                                           (*c.jordan_ranks)[2]});
    } else {
        out["jordan_ranks"] = nullptr;
    }

    Json cyc = Json::array();
    for (const auto& f : c.cyclotomic_factors)
        cyc.push_back(Json{{"index", f.index}, {"multiplicity", f.multiplicity}});
    out["cyclotomic_factors"] = std::move(cyc);

    GrowthProfile g = growth_profile(c);
    out["growth"] = Json{{"exponential_rate", interval_to_json(g.exponential_rate)},
                         {"polynomial_degree", g.polynomial_degree}};
    out["structural_warnings"] = c.structural_warnings;
    return out;
}

Json degree_sequence_to_json(const DegreeSequence& s, const mpq_class& precision) {
    Json values = Json::array();
    for (const auto& v : s.values) values.push_back(value_to_json(v, precision));
    return Json{{"n", s.n}, {"values", std::move(values)}};
}

Json certificate_to_json(const Certificate& cert) {
    Json out;
    out["primitive"] = to_string(cert.primitive);
    out["justification"] = cert.justification;
    out["max_periodic_hypersurfaces"] = cert.max_periodic_hypersurfaces
                                            ? Json(*cert.max_periodic_hypersurfaces)
                                            : Json(nullptr);
    out["dense_generic_orbit"] =
        cert.dense_generic_orbit ? Json(*cert.dense_generic_orbit) : Json("unknown");
    out["base_dim_lower_bound"] = cert.base_dim_lower_bound;
    out["notes"] = cert.notes;
    return out;
}

Json feasibility_to_json(const Feasibility& f, int base_dim, const mpq_class& precision) {
    Json out;
    out["base_dim"] = base_dim;
    out["status"] = to_string(f.status);
    out["index"] = f.index >= 0 ? Json(f.index) : Json(nullptr);
    if (f.status == Verdict::Holds) {
        Json witness = Json::array();
        for (const auto& v : f.witness) witness.push_back(value_to_json(v, precision));
        out["witness"] = std::move(witness);
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

}  // namespace loxo
