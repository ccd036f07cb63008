#include "critnum/json_io.hpp"

namespace critnum {

Json to_json(HalfInt h) {
    return h.str();
}

Json to_json(const CritSet& s) {
    Json arr = Json::array();
    for (const auto& t : s.values) arr.push_back(t.str());
    return arr;
}

Json to_json(const IntInterval& iv) {
    if (iv.empty()) return Json::array();
    return Json::array({iv.lo, iv.hi});
}

Json to_json(const LanglandsParam& p) {
    return Json{{"n", p.rank}, {"w", p.w}, {"l", p.l}, {"delta", p.delta}};
}

namespace {

Json optional_weight(const std::optional<Weight>& w) {
    if (!w) return nullptr;
    return *w;
}

const char* empty_reason_name(PipelineTrace::EmptyReason r) {
    switch (r) {
        case PipelineTrace::EmptyReason::None: return "";
        case PipelineTrace::EmptyReason::CoincidentSpectra: return "coincident_spectra";
        case PipelineTrace::EmptyReason::DefectInadmissible: return "defect_inadmissible";
    }
    return "";
}

}  // namespace

Json to_json(const PipelineTrace& t) {
    Json j;
    j["normalized"] = t.normalized;
    j["exceptional"] = t.exceptional;
    if (t.empty_reason == PipelineTrace::EmptyReason::None)
        j["empty_reason"] = nullptr;
    else
        j["empty_reason"] = empty_reason_name(t.empty_reason);
    j["a"] = t.a;
    j["jumps"] = t.jumps;
    j["r"] = t.r;
    j["lambda"] = t.lambda;
    j["lambda_mod"] = optional_weight(t.lambda_mod);
    j["lambda_tr"] = optional_weight(t.lambda_tr);
    j["u"] = t.u;
    j["v0"] = t.v0;
    j["d_u"] = t.d_u;
    j["d_v"] = t.d_v;
    j["d"] = t.d;
    j["u_hat"] = t.u_hat;
    j["v0_hat"] = t.v0_hat;
    j["mu_tilde"] = t.mu_tilde;
    j["lambda_tilde"] = t.lambda_tilde;
    j["theta_images"] = Json{{"theta1_mu", t.theta_mu[0]},
                             {"theta2_mu", t.theta_mu[1]},
                             {"theta1_lambda", t.theta_lambda[0]},
                             {"theta2_lambda", t.theta_lambda[1]}};
    j["emb_intervals"] = Json::array({to_json(t.emb_intervals[0]), to_json(t.emb_intervals[1])});
    if (t.parity_filter)
        j["parity_filter"] = *t.parity_filter;
    else
        j["parity_filter"] = nullptr;
    j["t_offset"] = t.t_offset.str();
    j["crit"] = to_json(t.crit);
    return j;
}

Json to_json(const WitnessT0& w) {
    if (!w.applies) return nullptr;
    return Json{{"value", w.t0.str()}, {"in_coset", w.in_coset}, {"critical", w.critical}};
}

Json to_json(const MismatchReport& r) {
    Json j;
    j["pi"] = to_json(r.pi);
    j["sigma"] = to_json(r.sigma);
    j["gamma"] = to_json(r.gamma);
    j["inequality"] = to_json(r.inequality);
    j["embedding"] = to_json(r.embedding);
    j["first_difference"] = r.first_difference ? Json(r.first_difference->str()) : Json(nullptr);
    j["notes"] = r.notes;
    j["trace"] = to_json(r.trace);
    return j;
}

Json to_json(const FuzzSummary& s) {
    Json j;
    j["config"] = Json{{"n_range", {s.config.n_range.lo, s.config.n_range.hi}},
                       {"m_range", {s.config.m_range.lo, s.config.m_range.hi}},
                       {"l_bound", s.config.l_bound},
                       {"trials", s.config.trials},
                       {"seed", s.config.seed},
                       {"boundary_percent", s.config.boundary_percent}};
    j["trials"] = s.trials;
    j["agreements"] = s.agreements;
    j["mismatches"] = s.mismatches;
    j["property_violations"] = s.property_violations;
    j["empties"] = s.empties;
    j["exceptional"] = s.exceptional;
    Json reports = Json::array();
    for (const auto& r : s.reports) reports.push_back(to_json(r));
    j["reports"] = reports;
    j["property_notes"] = s.property_notes;
    return j;
}

Json violation_to_json(const Violation& v) {
    return Json{{"rule", rule_name(v.rule)}, {"field", v.field}, {"index", v.index}};
}

namespace {

Weight weight_from(const Json& j, const std::string& field) {
    if (!j.is_array()) throw ValidationError({{Rule::BadRank, field, -1}});
    Weight w;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw ValidationError({{Rule::BadRank, field, -1}});
        w.push_back(e.get<Entry>());
    }
    return w;
}

LanglandsParam parse_side(const Json& j, const std::string& name) {
    if (!j.is_object()) throw ValidationError({{Rule::BadRank, name, -1}});
    const int delta = j.value("delta", 0);

    if (j.contains("mu")) {
        const Weight entries = weight_from(j.at("mu"), name + ".mu");
        auto vs = PureWeight::violations(entries, name + ".mu");
        if (delta != 0 && delta != 1) vs.push_back({Rule::BadDelta, name + ".delta", -1});
        if (!vs.empty()) throw ValidationError(std::move(vs));
        const PureWeight mu{entries};
        auto [w, l] = weight_to_langlands(mu);
        return LanglandsParam{mu.rank(), w, std::move(l), delta};
    }

    if (!j.contains("w") || !j.contains("l"))
        throw ValidationError({{Rule::BadRank, name, -1}});
    const Weight l = weight_from(j.at("l"), name + ".l");
    if (!j.at("w").is_number_integer())
        throw ValidationError({{Rule::BadRank, name + ".w", -1}});
    const Entry w = j.at("w").get<Entry>();
    const int n = j.contains("n") ? j.at("n").get<int>() : static_cast<int>(l.size());
    auto vs = langlands_violations(n, w, l, delta, name + ".");
    if (!vs.empty()) throw ValidationError(std::move(vs));
    return LanglandsParam{n, w, l, delta};
}

}  // namespace

std::pair<LanglandsParam, LanglandsParam> parse_pair_document(const Json& doc) {
    if (!doc.is_object() || !doc.contains("pi") || !doc.contains("sigma"))
        throw ValidationError({{Rule::BadRank, "document", -1}});
    return {parse_side(doc.at("pi"), "pi"), parse_side(doc.at("sigma"), "sigma")};
}

}  // namespace critnum
