#include "frameposet/json_io.hpp"

#include <sstream>

namespace frameposet {

namespace {

json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw ValidationError("expected an integer (number or decimal string)");
}

json rational_to_json(const Rational& q) {
    json out;
    out["num"] = int_to_json(Int(numerator(q)));
    out["den"] = int_to_json(Int(denominator(q)));
    return out;
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_object() && j.contains("num") && j.contains("den")) {
        const Int num = int_from_json(j.at("num"));
        const Int den = int_from_json(j.at("den"));
        if (den == 0) throw ValidationError("rational with zero denominator");
        return Rational(num) / Rational(den);
    }
    throw ValidationError("expected a rational {\"num\":..,\"den\":..} or integer");
}

} // namespace

json scalar_to_json(const Scalar& s) {
    switch (s.kind()) {
        case Scalar::Kind::Rational: return rational_to_json(s.rational_value());
        case Scalar::Kind::Quad: {
            const auto& q = s.quad_value();
            json out;
            out["a"] = rational_to_json(q.a);
            out["b"] = rational_to_json(q.b);
            out["d"] = q.d;
            return out;
        }
        case Scalar::Kind::Gaussian: {
            const auto& g = s.gaussian_value();
            json out;
            out["re"] = rational_to_json(g.re);
            out["im"] = rational_to_json(g.im);
            return out;
        }
        case Scalar::Kind::Float: return s.float_value();
        case Scalar::Kind::ComplexFloat: {
            const auto z = s.complex_float_value();
            json out;
            out["re"] = z.real();
            out["im"] = z.imag();
            return out;
        }
    }
    throw Error("unreachable");
}

Scalar scalar_from_json(const json& j, bool exact_mode) {
    if (j.is_number_integer())
        return exact_mode ? Scalar(Rational(j.get<std::int64_t>()))
                          : Scalar::real_float(j.get<double>());
    if (j.is_number_float()) {
        if (exact_mode)
            throw MixedModeError("non-integer number in an exact-mode context; "
                                 "use {\"num\":..,\"den\":..}");
        return Scalar::real_float(j.get<double>());
    }
    if (!j.is_object()) throw ValidationError("unrecognized scalar encoding");
    if (j.contains("d")) {
        if (!exact_mode) throw MixedModeError("quadratic scalar in a float-mode context");
        return Scalar::quad(rational_from_json(j.at("a")), rational_from_json(j.at("b")),
                            j.at("d").get<long long>());
    }
    if (j.contains("re")) {
        if (exact_mode)
            return Scalar::gaussian(rational_from_json(j.at("re")),
                                    rational_from_json(j.at("im")));
        return Scalar::complex_float({j.at("re").get<double>(), j.at("im").get<double>()});
    }
    if (j.contains("num")) {
        if (!exact_mode) throw MixedModeError("exact rational in a float-mode context");
        return Scalar(rational_from_json(j));
    }
    throw ValidationError("unrecognized scalar encoding");
}

json frame_to_json(const Frame& f) {
    json out;
    out["field"] = f.field == Field::Real ? "real" : "complex";
    if (f.mode.exact)
        out["mode"] = json{{"exact", json{{"d", f.mode.d}}}};
    else
        out["mode"] = json{{"float", json::object()}};
    out["dim"] = f.n;
    json vecs = json::array();
    for (const auto& v : f.vectors) {
        json vec = json::array();
        for (const auto& s : v) vec.push_back(scalar_to_json(s));
        vecs.push_back(std::move(vec));
    }
    out["vectors"] = std::move(vecs);
    return out;
}

Frame frame_from_json(const json& j) {
    Frame f;
    const std::string field = j.at("field").get<std::string>();
    if (field == "real") f.field = Field::Real;
    else if (field == "complex") f.field = Field::Complex;
    else throw ValidationError("frame field must be \"real\" or \"complex\"");

    const json& mode = j.at("mode");
    if (mode.is_string() && mode.get<std::string>() == "float") {
        f.mode = ScalarMode::float_mode();
    } else if (mode.is_object() && mode.contains("float")) {
        f.mode = ScalarMode::float_mode();
    } else if (mode.is_object() && mode.contains("exact")) {
        long long d = 1;
        if (mode.at("exact").is_object() && mode.at("exact").contains("d"))
            d = mode.at("exact").at("d").get<long long>();
        long long s = 1;
        f.mode = ScalarMode::exact_mode(squarefree_part(d, s));
    } else {
        throw ValidationError("frame mode must be {\"exact\":{\"d\":..}} or {\"float\":{}}");
    }
    f.n = j.at("dim").get<int>();
    for (const auto& vec : j.at("vectors")) {
        std::vector<Scalar> v;
        for (const auto& s : vec) v.push_back(scalar_from_json(s, f.mode.exact));
        f.vectors.push_back(std::move(v));
    }
    validate_frame(f);
    return f;
}

json index_set_to_json(IndexSet s) {
    json out = json::array();
    for (int i : set_indices(s)) out.push_back(i);
    return out;
}

json poset_to_json(const Poset& p) {
    json out;
    out["k"] = p.k;
    json sets = json::array();
    for (IndexSet s : p.sets) sets.push_back(index_set_to_json(s));
    out["sets"] = std::move(sets);
    return out;
}

Poset poset_from_json(const json& j) {
    const int k = j.at("k").get<int>();
    std::vector<IndexSet> sets;
    for (const auto& s : j.at("sets")) {
        std::vector<int> idx;
        for (const auto& i : s) idx.push_back(i.get<int>());
        sets.push_back(set_from_indices(idx, k));
    }
    return make_poset(k, std::move(sets));
}

json polytope_to_json(const ScalingPolytope& poly) {
    json out;
    out["m"] = poly.m();
    json minimal = json::array();
    for (const auto& v : poly.minimal) {
        json row = json::array();
        for (const auto& s : v) row.push_back(scalar_to_json(s));
        minimal.push_back(std::move(row));
    }
    out["minimal"] = std::move(minimal);
    json supports = json::array();
    for (IndexSet s : poly.supports()) supports.push_back(index_set_to_json(s));
    out["supports"] = std::move(supports);
    json rows = json::array();
    for (int r = 0; r < poly.equality.rows; ++r) {
        json row = json::array();
        for (int c = 0; c < poly.equality.cols; ++c)
            row.push_back(scalar_to_json(poly.equality.at(r, c)));
        rows.push_back(std::move(row));
    }
    out["equality_rows"] = std::move(rows);
    json rhs = json::array();
    for (const auto& s : poly.rhs) rhs.push_back(scalar_to_json(s));
    out["rhs"] = std::move(rhs);
    return out;
}

std::vector<Scalar> scaling_from_json(const json& j, const Frame& f) {
    const json& arr = j.is_object() && j.contains("w") ? j.at("w") : j;
    if (!arr.is_array()) throw ValidationError("scaling must be an array or {\"w\":[..]}");
    std::vector<Scalar> w;
    for (const auto& s : arr) w.push_back(scalar_from_json(s, f.mode.exact));
    return w;
}

json census_to_json(const CensusResult& c) {
    json out;
    out["k"] = c.k;
    out["max_norm"] = c.max_norm;
    out["class_count"] = static_cast<int>(c.entries.size());
    json by_size = json::object();
    for (const auto& [size, count] : c.count_by_size)
        by_size[std::to_string(size)] = count;
    out["count_by_size"] = std::move(by_size);
    json classes = json::array();
    for (const auto& e : c.entries) {
        json entry;
        entry["poset"] = poset_to_json(e.poset);
        entry["witness"] = e.witness;
        classes.push_back(std::move(entry));
    }
    out["classes"] = std::move(classes);
    return out;
}

json feasibility_to_json(const FeasibilitySystem& fs) {
    json out;
    out["k"] = fs.k;
    out["n"] = fs.n;
    out["variables"] = fs.variables;
    json cons = json::array();
    for (const auto& c : fs.constraints) {
        json jc;
        jc["sense"] = c.sense == FsConstraint::Sense::Eq ? "eq" : "ge";
        jc["rhs"] = rational_to_json(c.rhs);
        jc["tag"] = c.tag;
        json terms = json::array();
        for (const auto& t : c.terms) {
            json jt;
            jt["coef"] = rational_to_json(t.coef);
            jt["vars"] = t.vars;
            terms.push_back(std::move(jt));
        }
        jc["terms"] = std::move(terms);
        cons.push_back(std::move(jc));
    }
    out["constraints"] = std::move(cons);
    return out;
}

json projection_report_to_json(const ProjectionReport& rep, Field field) {
    json out;
    out["eigenvalues"] = rep.eigenvalues;
    switch (rep.tag) {
        case ProjectionReport::Case::AllTight: out["case"] = "all-projections-tight"; break;
        case ProjectionReport::Case::TwoTightSubspaces: out["case"] = "two-tight-subspaces"; break;
        case ProjectionReport::Case::OneTightSubspace: out["case"] = "one-tight-subspace"; break;
        case ProjectionReport::Case::None: out["case"] = "none"; break;
        case ProjectionReport::Case::ComplexFamily: out["case"] = "complex-family"; break;
    }
    auto cvec_to_json = [&](const std::vector<std::complex<double>>& v) {
        json arr = json::array();
        for (const auto& z : v) {
            if (field == Field::Real) arr.push_back(z.real());
            else arr.push_back(json{{"re", z.real()}, {"im", z.imag()}});
        }
        return arr;
    };
    json normals = json::array();
    for (const auto& nu : rep.normals) normals.push_back(cvec_to_json(nu));
    out["normals"] = std::move(normals);
    if (!rep.family_basis.empty()) {
        json basis = json::array();
        for (const auto& b : rep.family_basis) basis.push_back(cvec_to_json(b));
        out["family_basis"] = std::move(basis);
    }
    if (rep.tight_bound) out["tight_bound"] = *rep.tight_bound;
    if (!rep.warning.empty()) out["warning"] = rep.warning;
    return out;
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

} // namespace frameposet
