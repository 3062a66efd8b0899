#pragma once

// Structured (JSON) renderings of catalog records, pipeline results and
// oracle reports. Kept separate so the core headers stay dependency-free.
// Schema: polynomials carry ascending integer coefficients plus display text.

#include <json.hpp>

#include "charvar/catalog.hpp"
#include "charvar/oracle.hpp"
#include "charvar/pipelines.hpp"

namespace charvar {

inline nlohmann::json to_json(const EPoly& p, std::string_view var = "q") {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Integer& c : p.coeffs()) {
        if (c.fits_int64())
            coeffs.push_back(c.to_int64());
        else
            coeffs.push_back(c.to_string());
    }
    return {{"coefficients", std::move(coeffs)}, {"text", p.to_string(var)}};
}

inline nlohmann::json to_json(const RepZ2& r) {
    return {{"T", to_json(r.t)}, {"N", to_json(r.n)}, {"text", to_string(r)}};
}

inline nlohmann::json to_json(const RepZ2xZ2& r) {
    return {{"T", to_json(r.t)},   {"S2", to_json(r.s2)},
            {"S-2", to_json(r.sm2)}, {"S0", to_json(r.s0)},
            {"text", to_string(r)}};
}

inline nlohmann::json to_json(const StratumRecord& rec) {
    nlohmann::json j{{"id", rec.id}, {"epoly", to_json(rec.epoly)},
                     {"citation", rec.ref}};
    if (!rec.notes.empty()) j["notes"] = rec.notes;
    if (rec.equiv)
        j["equivariant"] = {{"plus", to_json(rec.equiv->plus)},
                            {"minus", to_json(rec.equiv->minus)}};
    if (rec.mono_z2) j["monodromy"] = to_json(*rec.mono_z2);
    if (rec.mono_z2z2) j["monodromy"] = to_json(*rec.mono_z2z2);
    if (rec.fiber) j["fiber"] = to_json(*rec.fiber);
    if (rec.sign != 1) j["sign"] = rec.sign;
    if (rec.poincare_c) j["poincare_c"] = to_json(*rec.poincare_c, "t");
    if (rec.poincare) j["poincare"] = to_json(*rec.poincare, "t");
    return j;
}

inline nlohmann::json catalog_to_json() {
    const Catalog& cat = Catalog::instance();
    nlohmann::json records = nlohmann::json::array();
    for (const std::string& id : cat.ids()) records.push_back(to_json(cat.lookup(id)));
    nlohmann::json opaque = nlohmann::json::object();
    for (const auto& [id, text] : cat.opaque_values()) opaque[id] = text;
    nlohmann::json known = nlohmann::json::array();
    for (const KnownDiscrepancy& k : cat.known_discrepancies())
        known.push_back({{"id", k.id}, {"description", k.description}});
    return {{"records", std::move(records)},
            {"opaque", std::move(opaque)},
            {"known_discrepancies", std::move(known)}};
}

inline nlohmann::json to_json(const Discrepancy& d) {
    return {{"id", d.id},
            {"what", d.what},
            {"computed", to_json(d.computed)},
            {"stated", to_json(d.stated)},
            {"known", d.known}};
}

inline nlohmann::json to_json(const ModuliResult& r) {
    nlohmann::json inter = nlohmann::json::array();
    for (const auto& [name, poly] : r.intermediates)
        inter.push_back({{"name", name}, {"epoly", to_json(poly)}});
    nlohmann::json discs = nlohmann::json::array();
    for (const Discrepancy& d : r.discrepancies) discs.push_back(to_json(d));
    return {{"space", r.space},
            {"genus", r.genus},
            {"holonomy", holonomy_name(r.holonomy)},
            {"epoly", to_json(r.epoly)},
            {"intermediates", std::move(inter)},
            {"citations", r.citations},
            {"discrepancies", std::move(discs)}};
}

inline nlohmann::json to_json(const MixedHodgeData& d) {
    nlohmann::json hs = nlohmann::json::array();
    for (const HodgeNumber& h : d.hodge_numbers)
        hs.push_back({{"k", h.k}, {"p", h.p}, {"q", h.q}, {"value", h.value}});
    nlohmann::json j{{"space", d.space},
                     {"hodge_numbers", std::move(hs)},
                     {"poincare_c", to_json(d.poincare_c, "t")},
                     {"ambiguous", d.ambiguity_flag}};
    if (!d.alternative.empty()) {
        nlohmann::json alt = nlohmann::json::array();
        for (const HodgeNumber& h : d.alternative)
            alt.push_back({{"k", h.k}, {"p", h.p}, {"q", h.q}, {"value", h.value}});
        j["alternative"] = std::move(alt);
    }
    if (!d.discrepancies.empty()) {
        nlohmann::json discs = nlohmann::json::array();
        for (const Discrepancy& dd : d.discrepancies) discs.push_back(to_json(dd));
        j["discrepancies"] = std::move(discs);
    }
    return j;
}

inline nlohmann::json to_json(const OracleRow& row) {
    nlohmann::json j{{"space", row.space},   {"prime", row.prime},
                     {"expected", row.expected}, {"observed", row.observed},
                     {"match", row.match},   {"valid", row.valid}};
    if (row.lambda) {
        j["lambda"] = *row.lambda;
        j["legendre"] = row.legendre;
    }
    if (!row.validity_note.empty()) j["validity_note"] = row.validity_note;
    if (row.partner_expected) {
        j["partner_expected"] = *row.partner_expected;
        j["partner_match"] = row.partner_match;
    }
    return j;
}

inline nlohmann::json to_json(const VerifyReport& rep) {
    nlohmann::json rows = nlohmann::json::array();
    for (const OracleRow& r : rep.rows) rows.push_back(to_json(r));
    nlohmann::json j{{"space", rep.space},
                     {"rows", std::move(rows)},
                     {"all_valid_match", rep.all_valid_match},
                     {"has_findings", rep.has_findings}};
    if (rep.interpolation.attempted) {
        j["interpolation"] = {{"primes", rep.interpolation.primes},
                              {"degree", rep.interpolation.degree_bound},
                              {"epoly", to_json(rep.interpolation.interpolated)},
                              {"matches_catalog", rep.interpolation.matches_catalog}};
    }
    return j;
}

}  // namespace charvar
