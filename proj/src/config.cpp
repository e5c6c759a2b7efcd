#include "fnh/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fnh {

namespace {

json term_to_json(const RateTerm& t) {
    json j;
    if (t.is_constant() && !t.round_up) {
        j["const"] = t.coef;
        return j;
    }
    j["A"] = t.coef;
    if (t.rho != 1.0) j["rho"] = t.rho;
    if (t.rho == 1.0 || t.p != 0.0 || t.q != 0.0) {
        j["p"] = t.p;
        j["q"] = t.q;
    }
    if (t.round_up) j["ceil"] = true;
    return j;
}

RateTerm term_from_json(const json& j) {
    if (j.contains("const")) return constant_term(j.at("const").get<double>());
    RateTerm t;
    t.coef = j.at("A").get<double>();
    t.rho = j.value("rho", 1.0);
    t.p = j.value("p", 0.0);
    t.q = j.value("q", 0.0);
    t.round_up = j.value("ceil", false);
    return t;
}

}  // namespace

json to_json(const RateExpr& e) {
    if (e.is_zero()) return json{{"const", 0.0}};
    if (e.terms().size() == 1) return term_to_json(e.terms()[0]);
    json terms = json::array();
    for (const RateTerm& t : e.terms()) terms.push_back(term_to_json(t));
    return json{{"terms", std::move(terms)}};
}

RateExpr rate_expr_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("rate expression must be a JSON object");
    if (j.contains("terms")) {
        std::vector<RateTerm> terms;
        for (const json& tj : j.at("terms")) terms.push_back(term_from_json(tj));
        return RateExpr(std::move(terms));
    }
    return RateExpr(term_from_json(j));
}

json to_json(const CoordSeq& s) {
    json j;
    j["lengths"] = to_json(s.lengths());
    j["twists"] = to_json(s.twists());
    if (!s.overrides().empty()) {
        json ov = json::array();
        for (const auto& [m, c] : s.overrides()) ov.push_back(json::array({m, c.length, c.twist}));
        j["overrides"] = std::move(ov);
    }
    if (s.has_peripheral()) {
        if (const auto* list = std::get_if<std::vector<double>>(&*s.peripheral()))
            j["peripheral"] = *list;
        else
            j["peripheral"] = to_json(std::get<RateExpr>(*s.peripheral()));
    }
    if (s.shift_compatible()) j["shift_compatible"] = true;
    return j;
}

CoordSeq coordseq_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("surface family must be a JSON object");
    CoordSeq s(rate_expr_from_json(j.at("lengths")),
               j.contains("twists") ? rate_expr_from_json(j.at("twists")) : RateExpr::zero());
    if (j.contains("overrides")) {
        for (const json& row : j.at("overrides")) {
            if (!row.is_array() || row.size() != 3)
                throw std::invalid_argument("override rows are [m, length, twist]");
            s.set_override(row[0].get<std::size_t>(),
                           CoordPair{row[1].get<double>(), row[2].get<double>()});
        }
    }
    if (j.contains("peripheral")) {
        const json& p = j.at("peripheral");
        if (p.is_array())
            s.set_peripheral(p.get<std::vector<double>>());
        else
            s.set_peripheral(rate_expr_from_json(p));
    }
    if (j.value("shift_compatible", false)) s.set_shift_compatible(true);
    return s;
}

json to_json(const MappingClass& mc) {
    json gens = json::array();
    for (const Generator& g : mc.generators) {
        json gj;
        if (const auto* mt = std::get_if<MultiTwist>(&g)) {
            gj["kind"] = "multitwist";
            if (const auto* map = std::get_if<std::map<std::size_t, long>>(&mt->counts)) {
                json rows = json::array();
                for (const auto& [m, n] : *map) rows.push_back(json::array({m, n}));
                gj["counts"] = json{{"map", std::move(rows)}};
            } else {
                gj["counts"] = to_json(std::get<RateExpr>(mt->counts));
            }
        } else if (const auto* sh = std::get_if<Shift>(&g)) {
            gj["kind"] = "shift";
            gj["offset"] = sh->offset;
        } else {
            const auto& perm = std::get<FinitePerm>(g);
            gj["kind"] = "perm";
            json rows = json::array();
            for (const auto& [from, to] : perm.images) rows.push_back(json::array({from, to}));
            gj["map"] = std::move(rows);
        }
        gens.push_back(std::move(gj));
    }
    return json{{"generators", std::move(gens)}};
}

MappingClass mapping_class_from_json(const json& j) {
    MappingClass mc;
    for (const json& gj : j.at("generators")) {
        const std::string kind = gj.at("kind").get<std::string>();
        if (kind == "multitwist") {
            const json& counts = gj.at("counts");
            if (counts.contains("map")) {
                std::map<std::size_t, long> map;
                for (const json& row : counts.at("map"))
                    map[row[0].get<std::size_t>()] = row[1].get<long>();
                mc.generators.push_back(MultiTwist{std::move(map)});
            } else {
                mc.generators.push_back(MultiTwist{rate_expr_from_json(counts)});
            }
        } else if (kind == "shift") {
            mc.generators.push_back(Shift{gj.at("offset").get<long>()});
        } else if (kind == "perm") {
            FinitePerm perm;
            for (const json& row : gj.at("map"))
                perm.images[row[0].get<std::size_t>()] = row[1].get<std::size_t>();
            perm.validate();
            mc.generators.push_back(std::move(perm));
        } else {
            throw std::invalid_argument("unknown generator kind: " + kind);
        }
    }
    return mc;
}

MappingClass parse_mapping_class_spec(const std::string& spec) {
    if (spec.rfind("twist-power:", 0) == 0) {
        double e = std::stod(spec.substr(12));
        if (e < 0.0) throw std::invalid_argument("twist-power exponent must be >= 0");
        MappingClass mc;
        mc.generators.push_back(MultiTwist{RateExpr::power_log(1.0, -e, 0.0)});
        return mc;
    }
    if (spec.rfind("twist-const:", 0) == 0) {
        double v = std::stod(spec.substr(12));
        MappingClass mc;
        mc.generators.push_back(MultiTwist{RateExpr::constant(v)});
        return mc;
    }
    return load_mapping_class(spec);
}

SubspaceDesc parse_subspace_spec(const std::string& spec) {
    SubspaceDesc d;
    if (spec == "full") {
        d.kind = SubspaceDesc::Kind::FULL_H;
    } else if (spec == "geod") {
        d.kind = SubspaceDesc::Kind::GEOD_COMPLETE;
    } else if (spec == "metr") {
        d.kind = SubspaceDesc::Kind::METR_COMPLETE;
    } else if (spec.rfind("systole:", 0) == 0) {
        d.kind = SubspaceDesc::Kind::SYSTOLE_BOUNDED;
        d.epsilon = std::stod(spec.substr(8));
    } else if (spec.rfind("dr:", 0) == 0) {
        d.kind = SubspaceDesc::Kind::D_R;
        std::string r = spec.substr(3);
        // Trailing ":C" declares the transverse upper bound.
        if (auto colon = r.find(':'); colon != std::string::npos) {
            d.transverse_bound = std::stod(r.substr(colon + 1));
            r = r.substr(0, colon);
        }
        auto slash = r.find('/');
        if (slash == std::string::npos) {
            d.r = std::stod(r);
        } else {
            double num = std::stod(r.substr(0, slash));
            double den = std::stod(r.substr(slash + 1));
            d.r = num / den;
        }
    } else {
        throw std::invalid_argument("unknown subspace spec: " + spec);
    }
    d.validate();
    return d;
}

namespace {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    json j;
    in >> j;
    return j;
}

}  // namespace

CoordSeq load_coordseq(const std::string& path) { return coordseq_from_json(load_json_file(path)); }

MappingClass load_mapping_class(const std::string& path) {
    return mapping_class_from_json(load_json_file(path));
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace fnh
