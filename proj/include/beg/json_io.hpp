#pragma once

#include <json.hpp>

#include "beg/braid.hpp"
#include "beg/e_group.hpp"
#include "beg/engine.hpp"
#include "beg/exact_matrix.hpp"
#include "beg/report.hpp"

namespace beg {

using Json = nlohmann::ordered_json;

inline Json to_json(const Check& c) {
    return Json{{"id", c.id},
                {"statement", c.statement},
                {"status", c.pass ? "pass" : "fail"},
                {"witness", c.witness}};
}

inline Json to_json(const Report& r) {
    Json claims = Json::array();
    for (const auto& c : r.claims) claims.push_back(to_json(c));
    return Json{{"case", r.case_name}, {"claims", claims}};
}

inline Json to_json(const ExactMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(row);
    }
    return rows;
}

inline Json to_json(const PauliString& g) {
    return Json{{"p", g.p}, {"x", g.x}, {"z", g.z}, {"k", g.k}};
}

template <class Rec>
inline Json histogram_json(const Rec& hist) {
    Json h = Json::object();
    for (const auto& [ord, count] : hist) h[std::to_string(ord)] = count;
    return h;
}

inline Json to_json(const EGroupRecord& rec) {
    return Json{{"n", rec.n},
                {"nu", rec.nu},
                {"order", rec.order},
                {"order_histogram", histogram_json(rec.order_histogram)},
                {"center_type", to_string(rec.center_type)}};
}

inline Json to_json(const ClassificationRecord& rec) {
    return Json{{"n", rec.n},
                {"nu", rec.nu},
                {"label", rec.label.text()},
                {"category", to_string(rec.category)},
                {"predicted", rec.predicted.to_string()},
                {"enumerated", rec.enumerated.to_string()},
                {"report", to_json(rec.report)}};
}

inline Json to_json(const Decomposition& dec) {
    Json steps = Json::array();
    for (const auto& s : dec.steps)
        steps.push_back(Json{{"level", s.level}, {"factor", s.factor},
                             {"check", to_json(s.check)}});
    return Json{{"n", dec.n},
                {"nu", dec.nu},
                {"steps", steps},
                {"word", dec.word},
                {"normalized", dec.normalized.text()},
                {"matches_prediction", dec.matches_prediction},
                {"all_steps_pass", dec.all_steps_pass}};
}

}  // namespace beg
