// Copyright 2026 The ckasim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ckasim/serialization.h"

#include <cmath>
#include <cstdio>

#include "ckasim/errors.h"

namespace ckasim {

namespace {

Json nullable(double v) {
    return std::isfinite(v) ? Json(v) : Json(nullptr);
}

CertificateStatus status_from_string(const std::string &s) {
    if (s == "separated") {
        return CertificateStatus::Separated;
    }
    if (s == "inside") {
        return CertificateStatus::Inside;
    }
    if (s == "inconclusive") {
        return CertificateStatus::Inconclusive;
    }
    throw DomainError("unknown certificate status \"" + s + "\"");
}

}  // namespace

Json to_json(const DensityMatrix &rho) {
    const std::size_t d = rho.dim();
    Json re = Json::array();
    Json im = Json::array();
    for (std::size_t r = 0; r < d; r++) {
        Json rr = Json::array();
        Json ir = Json::array();
        for (std::size_t c = 0; c < d; c++) {
            rr.push_back(rho(r, c).real());
            ir.push_back(rho(r, c).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ir));
    }
    return Json{{"dim", d}, {"re", std::move(re)}, {"im", std::move(im)}};
}

DensityMatrix density_from_json(const Json &j) {
    try {
        const std::size_t d = j.at("dim").get<std::size_t>();
        const Json &re = j.at("re");
        const Json &im = j.contains("im") ? j.at("im") : Json();
        if (re.size() != d || (!im.is_null() && im.size() != d)) {
            throw DomainError("density matrix JSON rows do not match dim");
        }
        ComplexMatrix m(d);
        for (std::size_t r = 0; r < d; r++) {
            if (re[r].size() != d || (!im.is_null() && im[r].size() != d)) {
                throw DomainError("density matrix JSON columns do not match dim");
            }
            for (std::size_t c = 0; c < d; c++) {
                m(r, c) = Complex(re[r][c].get<double>(), im.is_null() ? 0.0 : im[r][c].get<double>());
            }
        }
        return DensityMatrix(std::move(m));
    } catch (const Json::exception &e) {
        throw DomainError(std::string("malformed density matrix JSON: ") + e.what());
    }
}

Json to_json(const GhzMixtureSpec &spec) {
    Json j{{"n", spec.n()}, {"k", spec.k()}, {"p", spec.noise_p()}};
    if (spec.is_uniform()) {
        j["weights"] = nullptr;
    } else {
        Json w = Json::array();
        for (const auto &t : spec.terms()) {
            w.push_back(Json{{"parties", t.parties}, {"q", t.q}});
        }
        j["weights"] = std::move(w);
    }
    return j;
}

GhzMixtureSpec spec_from_json(const Json &j) {
    try {
        const int n = j.at("n").get<int>();
        const int k = j.at("k").get<int>();
        const double p = j.value("p", 0.0);
        if (!j.contains("weights") || j.at("weights").is_null()) {
            return GhzMixtureSpec::uniform(n, k, p);
        }
        std::vector<WeightedSubset> terms;
        for (const auto &t : j.at("weights")) {
            terms.push_back(WeightedSubset{t.at("parties").get<std::vector<int>>(), t.at("q").get<double>()});
        }
        return GhzMixtureSpec::weighted(n, k, std::move(terms), p);
    } catch (const Json::exception &e) {
        throw DomainError(std::string("malformed mixture spec JSON: ") + e.what());
    }
}

Json to_json(const SeparationCertificate &cert) {
    const Partition &part = cert.witness.partition;
    std::string side;
    for (int p : part.s_alpha()) {
        side += party_label(p);
    }
    std::string comp;
    for (int p : part.complement()) {
        comp += party_label(p);
    }
    Json coeffs = Json::object();
    for (std::size_t i = 0; i < cert.witness.coeffs.size(); i++) {
        coeffs[cert.witness.layout.label(i)] = cert.witness.coeffs[i];
    }
    return Json{{"partition", Json::array({side, comp})},
                {"coeffs", std::move(coeffs)},
                {"violation", cert.violation},
                {"status", to_string(cert.status)},
                {"oracle", to_string(cert.oracle)},
                {"oracle_min", cert.oracle_min},
                {"grid_min", nullable(cert.grid_min)},
                {"cut_count", cert.cut_count},
                {"point_count", cert.point_count},
                {"min_over_points", nullable(cert.min_over_points)},
                {"heuristic", cert.heuristic},
                {"lp_history", cert.lp_history}};
}

SeparationCertificate certificate_from_json(const Json &j, const MeasurementSet &meas) {
    try {
        const auto sides = j.at("partition").get<std::vector<std::string>>();
        if (sides.size() != 2) {
            throw DomainError("certificate partition must list two sides");
        }
        Partition part = Partition::parse(sides[0] + "|" + sides[1], meas.parties());
        TableLayout layout = TableLayout::of(meas);
        std::vector<double> coeffs(layout.size(), 0.0);
        for (const auto &[label, value] : j.at("coeffs").items()) {
            coeffs[layout.parse_label(label)] = value.get<double>();
        }
        SeparationCertificate cert;
        cert.status = status_from_string(j.at("status").get<std::string>());
        cert.witness = WitnessCoefficients{part, layout, std::move(coeffs), 0.0};
        cert.violation = j.at("violation").get<double>();
        cert.oracle = j.at("oracle").get<std::string>() == "grid" ? OracleKind::Grid : OracleKind::AltOpt;
        cert.oracle_min = j.value("oracle_min", 0.0);
        cert.grid_min = j.contains("grid_min") && !j.at("grid_min").is_null() ? j.at("grid_min").get<double>() : NAN;
        cert.cut_count = j.value("cut_count", 0);
        cert.point_count = j.value("point_count", std::size_t{0});
        cert.min_over_points = j.contains("min_over_points") && !j.at("min_over_points").is_null()
                                   ? j.at("min_over_points").get<double>()
                                   : NAN;
        cert.heuristic = j.value("heuristic", false);
        cert.lp_history = j.value("lp_history", std::vector<double>{});
        return cert;
    } catch (const Json::exception &e) {
        throw DomainError(std::string("malformed certificate JSON: ") + e.what());
    }
}

Json to_json(const RateReport &r) {
    return Json{{"r_infinity", r.r_infinity},   {"r_unclamped", r.r_unclamped}, {"h_x_given_e", r.h_x_given_e},
                {"leak_terms", r.leak_terms},   {"worst_bob", r.worst_bob},     {"method", to_string(r.method)}};
}

Json to_json(const EstimateReport &r) {
    return Json{{"n", r.n},
                {"k", r.k},
                {"p", r.p},
                {"rounds", r.rounds},
                {"test_rounds", r.counts.test_rounds},
                {"key_rounds", r.counts.key_rounds},
                {"q_x_hat", r.q_x_hat},
                {"q_x_std_error", r.q_x_std_error},
                {"q_ab_hat", r.q_ab_hat},
                {"q_ab_std_error", r.q_ab_std_error},
                {"r_hat", r.r_hat},
                {"r_hat_unclamped", r.r_hat_unclamped}};
}

Json to_json(const SeparableCheckReport &r) {
    return Json{{"n", r.n},
                {"h_x_given_e_total", r.h_x_given_e_total},
                {"h_x_given_f", r.h_x_given_f},
                {"complement_bobs", r.complement_bobs},
                {"h_x_given_y", r.h_x_given_y},
                {"h_x_given_yf", r.h_x_given_yf},
                {"leak_all", r.leak_all},
                {"min_leak", r.min_leak},
                {"implied_rate", r.implied_rate},
                {"chain_holds", r.chain_holds},
                {"passes", r.passes}};
}

std::string format_csv_double(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    if (v == 0.0) {
        v = 0.0;  // drop the sign of negative zero
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string csv_line(const std::vector<std::string> &fields) {
    std::string s;
    for (std::size_t i = 0; i < fields.size(); i++) {
        if (i) {
            s += ',';
        }
        s += fields[i];
    }
    s += '\n';
    return s;
}

}  // namespace ckasim
