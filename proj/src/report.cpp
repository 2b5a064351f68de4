// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The liftbank Authors

#include "liftbank/report.hpp"

#include <json.hpp>

#include <sstream>

namespace liftbank {

using nlohmann::ordered_json;

namespace {

ordered_json taps_json(const LaurentPoly& p) {
    ordered_json taps = ordered_json::array();
    for (const auto& [index, value] : p.taps()) {
        taps.push_back(ordered_json{{"n", index}, {"c", value.str()}});
    }
    return taps;
}

ordered_json optional_scalar(const std::optional<Scalar>& s) {
    return s ? ordered_json(s->str()) : ordered_json(nullptr);
}

ordered_json compliance_json(const ComplianceReport& r) {
    ordered_json j;
    j["verdict"] = to_string(r.verdict);
    j["reversible"] = r.reversible;
    j["k"] = r.k.str();
    j["m_init"] = r.m_init ? ordered_json(index_of(*r.m_init)) : ordered_json(nullptr);
    j["b_index"] = r.b_index ? ordered_json(*r.b_index) : ordered_json(nullptr);
    j["actual_b"] = optional_scalar(r.actual_b);
    j["required_value"] = optional_scalar(r.required_value);
    j["alternation_ok"] = r.alternation_ok;
    j["dyadic_ok"] = r.dyadic_ok ? ordered_json(*r.dyadic_ok) : ordered_json(nullptr);
    j["tolerance_qualified"] = r.tolerance_qualified;
    j["reasons"] = r.reasons;
    return j;
}

ordered_json group_json(const GroupLiftingClass& g) {
    return ordered_json{{"class", to_string(g.kind)}, {"notes", g.notes}};
}

std::string compliance_text(const ComplianceReport& r) {
    std::ostringstream out;
    out << "verdict: " << to_string(r.verdict) << (r.tolerance_qualified ? " (within tolerance 1e-9)" : "") << '\n';
    out << "  normalization: " << (r.reversible ? "reversible" : "irreversible") << ", K = " << r.k.str() << '\n';
    if (r.m_init) {
        out << "  m_init: " << index_of(*r.m_init) << '\n';
    }
    if (r.actual_b && r.b_index) {
        out << "  B_" << *r.b_index << " = " << r.actual_b->str() << ", required " << r.required_value->str() << '\n';
    }
    for (const std::string& reason : r.reasons) {
        out << "  - " << reason << '\n';
    }
    return out.str();
}

} // namespace

std::string render_compliance(const ComplianceReport& report, ReportFormat format) {
    if (format == ReportFormat::Json) {
        return compliance_json(report).dump(2) + "\n";
    }
    return compliance_text(report);
}

std::string render_analysis(const AnalysisReport& r, ReportFormat format) {
    if (format == ReportFormat::Json) {
        ordered_json j;
        j["matrix"] = ordered_json::array({ordered_json::array({taps_json(r.matrix.h00), taps_json(r.matrix.h01)}),
                                           ordered_json::array({taps_json(r.matrix.h10), taps_json(r.matrix.h11)})});
        j["lowpass"] = taps_json(r.filters.lowpass);
        j["highpass"] = taps_json(r.filters.highpass);
        j["dc_lowpass"] = r.dc_lowpass.str();
        j["nyquist_lowpass"] = r.nyquist_lowpass.str();
        j["dc_highpass"] = r.dc_highpass.str();
        j["nyquist_highpass"] = r.nyquist_highpass.str();
        j["determinant"] = taps_json(r.det);
        j["m_init"] = r.m_init ? ordered_json(index_of(*r.m_init)) : ordered_json(nullptr);
        ordered_json vectors = ordered_json::array();
        for (const auto& v : r.trace.vectors) {
            vectors.push_back(ordered_json::array({v.lowpass.str(), v.highpass.str()}));
        }
        ordered_json b = ordered_json::array();
        for (const Scalar& s : r.trace.b) {
            b.push_back(s.str());
        }
        ordered_json d = ordered_json::array();
        for (const Scalar& s : r.trace.d) {
            d.push_back(s.str());
        }
        j["dc_vectors"] = std::move(vectors);
        j["b_sequence"] = std::move(b);
        j["d_sequence"] = std::move(d);
        j["symmetry"] = ordered_json{{"ws_group", group_json(r.symmetry.ws_group)},
                                     {"hs_group", group_json(r.symmetry.hs_group)},
                                     {"linear_phase", to_string(r.symmetry.linear_phase)}};
        j["compliance"] = compliance_json(r.compliance);
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "polyphase matrix:\n";
    out << "  [ " << r.matrix.h00.str() << " , " << r.matrix.h01.str() << " ]\n";
    out << "  [ " << r.matrix.h10.str() << " , " << r.matrix.h11.str() << " ]\n";
    out << "determinant: " << r.det.str() << '\n';
    out << "H0(z) = " << r.filters.lowpass.str() << '\n';
    out << "H1(z) = " << r.filters.highpass.str() << '\n';
    out << "H0(1) = " << r.dc_lowpass.str() << ", H0(-1) = " << r.nyquist_lowpass.str() << '\n';
    out << "H1(1) = " << r.dc_highpass.str() << ", H1(-1) = " << r.nyquist_highpass.str() << '\n';
    if (r.m_init) {
        out << "m_init: " << index_of(*r.m_init) << '\n';
    }
    out << "DC vectors E^(n)(1):\n";
    for (std::size_t i = 0; i < r.trace.vectors.size(); ++i) {
        out << "  n = " << static_cast<long>(i) - 1 << ": [" << r.trace.vectors[i].lowpass.str() << ", "
            << r.trace.vectors[i].highpass.str() << "]\n";
    }
    out << "B sequence:";
    for (std::size_t i = 0; i < r.trace.b.size(); ++i) {
        out << " B_" << static_cast<long>(i) - 2 << "=" << r.trace.b[i].str();
    }
    out << '\n';
    out << "symmetry: WS-group class " << to_string(r.symmetry.ws_group.kind) << "; HS-group class "
        << to_string(r.symmetry.hs_group.kind) << "; linear phase " << to_string(r.symmetry.linear_phase) << '\n';
    out << "compliance " << compliance_text(r.compliance);
    return out.str();
}

} // namespace liftbank
