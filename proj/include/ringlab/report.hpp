// JSON rendering of library values.  Reports are versioned and byte-stable:
// nlohmann::json objects keep keys sorted, element tuples render as numbers
// for Z/n rings and as canonical name strings otherwise.
#ifndef RINGLAB_REPORT_HPP
#define RINGLAB_REPORT_HPP

#include <json.hpp>

#include "ringlab/finring.hpp"
#include "ringlab/fpring.hpp"
#include "ringlab/points.hpp"
#include "ringlab/theory.hpp"

namespace ringlab {

using Json = nlohmann::json;

inline constexpr int kReportSchemaVersion = 1;

inline Json elem_json(const FiniteRing& A, int idx) {
    if (A.kind() == FiniteRing::Kind::Zmod) return idx;
    return A.elem_name(idx);
}

inline Json tuple_json(const FiniteRing& A, const std::vector<int>& values) {
    Json arr = Json::array();
    for (int v : values) arr.push_back(elem_json(A, v));
    return arr;
}

inline Json named_tuple_json(const FiniteRing& A, const Presentation& P,
                             const std::vector<int>& values) {
    Json obj = Json::object();
    for (int i = 0; i < P.nvars; ++i) obj[P.var_name(i)] = elem_json(A, values[i]);
    return obj;
}

inline Json pointset_json(const PointSet& ps) {
    Json j;
    j["ring"] = ps.ring.name();
    j["presentation"] = ps.pres.to_string();
    j["count"] = ps.members.size();
    Json pts = Json::array();
    for (const auto& m : ps.members) pts.push_back(tuple_json(ps.ring, m));
    j["points"] = pts;
    return j;
}

inline Json morphism_json(const PrimMorphism& m) {
    Json j;
    j["dom"] = m.dom.to_string();
    j["cod"] = m.cod.to_string();
    Json imgs = Json::array();
    for (int i = 0; i < m.dom.nvars; ++i)
        imgs.push_back(m.dom.var_name(i) + " -> " + poly_to_string(m.images[i], m.cod.var_names));
    j["images"] = imgs;
    j["verification"] = to_string(m.verification);
    if (!m.label.empty()) j["label"] = m.label;
    return j;
}

inline Json sat_report_json(const FiniteRing& A, const Axiom& chi, const SatReport& rep) {
    Json j;
    j["axiom"] = rep.axiom_name;
    j["holds"] = rep.holds;
    if (rep.witness) j["witness"] = named_tuple_json(A, chi.pres, *rep.witness);
    return j;
}

}  // namespace ringlab

#endif
