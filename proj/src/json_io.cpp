#include "weilform/json_io.hpp"

namespace weilform {

json poly_to_json(const Poly& p) {
    json arr = json::array();
    for (int i = 0; i <= p.degree(); ++i) arr.push_back(rat_to_string(p[i]));
    if (p.is_zero()) arr.push_back("0");
    return arr;
}

Poly poly_from_json(const json& j) {
    if (!j.is_array()) throw InputError("polynomial must be a JSON array of rational strings");
    std::vector<Rat> c;
    for (const auto& x : j) {
        if (x.is_string())
            c.push_back(rat_from_string(x.get<std::string>()));
        else if (x.is_number_integer())
            c.push_back(Rat(x.get<long>()));
        else
            throw InputError("polynomial coefficients must be strings or integers");
    }
    return Poly(std::move(c));
}

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Mat mat_from_json(const json& j) {
    if (!j.is_array()) throw InputError("matrix must be a JSON array of rows");
    int rows = static_cast<int>(j.size());
    int cols = rows ? static_cast<int>(j[0].size()) : 0;
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j[static_cast<size_t>(i)].size()) != cols)
            throw InputError("matrix rows have unequal lengths");
        for (int c = 0; c < cols; ++c) {
            const auto& x = j[static_cast<size_t>(i)][static_cast<size_t>(c)];
            if (x.is_string())
                m(i, c) = rat_from_string(x.get<std::string>());
            else if (x.is_number_integer())
                m(i, c) = Rat(x.get<long>());
            else
                throw InputError("matrix entries must be strings or integers");
        }
    }
    return m;
}

json module_to_json(const FrobeniusModule& m) {
    json j;
    j["matrix"] = mat_to_json(m.frobenius());
    j["q"] = m.q().get_si();
    j["weight"] = m.declared_weight() ? json(*m.declared_weight()) : json(nullptr);
    return j;
}

FrobeniusModule module_from_json(const json& j) {
    if (!j.contains("matrix") || !j.contains("q")) throw InputError("module needs \"matrix\" and \"q\"");
    Mat f = mat_from_json(j.at("matrix"));
    if (f.rows() != f.cols()) throw InputError("module matrix must be square");
    Int q(j.at("q").get<long>());
    std::optional<long> w;
    if (j.contains("weight") && !j.at("weight").is_null()) w = j.at("weight").get<long>();
    return FrobeniusModule(std::move(f), std::move(q), w);
}

json profile_to_json(const JordanProfile& p) {
    json layers = json::object();
    for (const auto& [e, d] : p.layers) layers[std::to_string(e)] = poly_to_json(d);
    return json{{"layers", layers}};
}

json verdict_to_json(const DualityVerdict& v) {
    json j;
    j["self_dual"] = v.self_dual;
    j["plus"] = v.plus_self_dual;
    j["minus"] = v.minus_self_dual;
    if (v.witness) {
        j["witness"] = mat_to_json(*v.witness);
        j["witness_sign"] = v.witness_sign;
    } else {
        j["witness"] = nullptr;
    }
    json viol = json::array();
    for (const auto& r : v.refusal_reasons)
        viol.push_back(json{{"eigenvalue", r.eigenvalue}, {"e", r.e}, {"parity", r.parity}});
    j["violations"] = viol;
    return j;
}

NilpotentDatum nilpotent_from_json(const json& j) {
    if (!j.contains("N")) throw InputError("nilpotent datum needs \"N\"");
    Mat n = mat_from_json(j.at("N"));
    if (j.contains("A") && !j.at("A").is_null()) {
        if (!j.contains("sign") || j.at("sign").is_null())
            throw InputError("nilpotent datum with pairing needs \"sign\"");
        return NilpotentDatum(std::move(n), mat_from_json(j.at("A")), j.at("sign").get<int>());
    }
    return NilpotentDatum(std::move(n));
}

json class_to_json(const VirtualWeilClass& x) {
    json comps = json::object();
    for (const auto& [w, c] : x.components())
        comps[std::to_string(w)] = json{{"num", poly_to_json(c.num)}, {"den", poly_to_json(c.den)}};
    return json{{"q", x.q().get_si()}, {"components", comps}};
}

VirtualWeilClass class_from_json(const json& j) {
    if (!j.contains("q")) throw InputError("class needs \"q\"");
    VirtualWeilClass x{Int(j.at("q").get<long>())};
    if (j.contains("components"))
        for (auto& [key, val] : j.at("components").items()) {
            long w = std::stol(key);
            Poly num = val.contains("num") ? poly_from_json(val.at("num")) : Poly(Rat(1));
            Poly den = val.contains("den") ? poly_from_json(val.at("den")) : Poly(Rat(1));
            x.set_component(w, num, den, true);
        }
    return x;
}

json membership_to_json(const MembershipReport& r) {
    json per = json::object();
    for (const auto& [w, m] : r.per_weight)
        per[std::to_string(w)] = json{{"symmetric", m.symmetric},
                                      {"evenness", m.even_ok},
                                      {"member", m.member},
                                      {"detail", m.detail}};
    return json{{"sigma", r.sigma}, {"member", r.member}, {"per_weight", per}};
}

FiniteGroup group_from_json(const json& j) {
    if (j.is_string()) return bundled_group(j.get<std::string>());
    if (!j.contains("degree") || !j.contains("generators"))
        throw InputError("group needs \"degree\" and \"generators\" (one-line, 1-based)");
    int degree = j.at("degree").get<int>();
    std::vector<Perm> gens;
    for (const auto& g : j.at("generators")) {
        Perm p;
        for (const auto& x : g) p.push_back(x.get<int>() - 1);  // 1-based in JSON
        gens.push_back(std::move(p));
    }
    return FiniteGroup(degree, std::move(gens));
}

json group_to_json(const FiniteGroup& g) {
    json gens = json::array();
    for (const Perm& p : g.generators()) {
        json one = json::array();
        for (int x : p) one.push_back(x + 1);
        gens.push_back(one);
    }
    return json{{"degree", g.degree()}, {"generators", gens}};
}

namespace {

Cyc cyc_from_json(const json& j, int conductor) {
    if (j.is_string()) return Cyc(rat_from_string(j.get<std::string>()));
    if (j.is_number_integer()) return Cyc(Rat(j.get<long>()));
    if (j.is_array()) {
        std::vector<Rat> coords;
        for (const auto& x : j)
            coords.push_back(x.is_string() ? rat_from_string(x.get<std::string>()) : Rat(x.get<long>()));
        return Cyc(conductor, std::move(coords));
    }
    throw InputError("cyclotomic entry must be a string, integer, or coordinate array");
}

json cyc_to_json(const Cyc& c) {
    if (c.is_rational()) return rat_to_string(c.rational_value());
    json arr = json::array();
    for (const Rat& x : c.coords()) arr.push_back(rat_to_string(x));
    return arr;
}

}  // namespace

GroupRep rep_from_json(const FiniteGroup& g, const json& j) {
    int conductor = j.contains("conductor") ? j.at("conductor").get<int>() : 1;
    if (!j.contains("matrices")) throw InputError("representation needs \"matrices\"");
    std::vector<Matrix<Cyc>> mats;
    for (const auto& mj : j.at("matrices")) {
        int rows = static_cast<int>(mj.size());
        Matrix<Cyc> m(rows, rows);
        for (int r = 0; r < rows; ++r) {
            if (static_cast<int>(mj[static_cast<size_t>(r)].size()) != rows)
                throw InputError("representation matrices must be square");
            for (int c = 0; c < rows; ++c)
                m(r, c) = cyc_from_json(mj[static_cast<size_t>(r)][static_cast<size_t>(c)], conductor);
        }
        mats.push_back(std::move(m));
    }
    return GroupRep(g, conductor, std::move(mats));
}

json rep_to_json(const GroupRep& r) {
    json mats = json::array();
    for (const Perm& g : r.group().generators()) {
        int e = r.group().element_index(g);
        const Matrix<Cyc>& m = r.matrix(e);
        json rows = json::array();
        for (int i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (int j2 = 0; j2 < m.cols(); ++j2) row.push_back(cyc_to_json(m(i, j2)));
            rows.push_back(row);
        }
        mats.push_back(rows);
    }
    return json{{"conductor", r.conductor()}, {"matrices", mats}};
}

IhInput ih_input_from_json(const json& j) {
    IhInput in;
    if (!j.contains("q")) throw InputError("input needs \"q\"");
    in.q = Int(j.at("q").get<long>());
    in.kind = j.contains("kind") ? j.at("kind").get<std::string>() : "intersection";
    if (!j.contains("entries")) throw InputError("input needs \"entries\"");
    for (const auto& e : j.at("entries")) {
        IhEntry entry;
        entry.n = e.at("n").get<int>();
        entry.poly = poly_from_json(e.at("poly"));
        if (e.contains("matrix") && !e.at("matrix").is_null()) entry.matrix = mat_from_json(e.at("matrix"));
        in.entries.push_back(std::move(entry));
    }
    return in;
}

json report_to_json(const Report& r) {
    json records = json::array();
    for (const auto& rec : r.records)
        records.push_back(json{{"name", rec.name}, {"status", rec.pass ? "pass" : "fail"}, {"details", rec.details}});
    return json{{"checks", records}, {"pass", r.pass()}};
}

Report report_from_json(const json& j) {
    Report r;
    for (const auto& rec : j.at("checks"))
        r.add(rec.at("name").get<std::string>(), rec.at("status").get<std::string>() == "pass",
              rec.contains("details") ? rec.at("details").get<std::string>() : "");
    return r;
}

}  // namespace weilform
