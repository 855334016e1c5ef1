#include "lpm/json_io.hpp"

namespace lpm {

Json shape_json(const SkewShape& s) {
    return Json{{"lambda", s.lambda()}, {"mu", s.mu()}};
}

Json polynomial_json(const Polynomial& p) {
    return Json{{"coeffs", p.coeff_strings()}};
}

Json report_json(const EhrhartReport& r) {
    Json witnesses = Json::array();
    for (const PathWitness& w : r.witnesses) {
        Json hp = Json::array();
        for (const Cell c : w.high_peaks) {
            hp.push_back(Json::array({c.row, c.col}));
        }
        witnesses.push_back(Json{{"path", w.path.step_word()},
                                 {"high_peaks", hp},
                                 {"filter_count", w.filter_count},
                                 {"ehr_pm", polynomial_json(w.ehr_pm)}});
    }
    return Json{{"shape", shape_json(r.shape)},
                {"by_oracle", polynomial_json(r.by_oracle)},
                {"by_signed", polynomial_json(r.by_signed)},
                {"by_grouped", polynomial_json(r.by_grouped)},
                {"by_positive", polynomial_json(r.by_positive)},
                {"agree", r.agree},
                {"positive", r.positive},
                {"witnesses", witnesses}};
}

}  // namespace lpm
