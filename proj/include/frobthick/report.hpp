/*
 * Copyright 2026 The frobthick Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FROBTHICK_REPORT_HPP
#define FROBTHICK_REPORT_HPP

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "analyzer.hpp"
#include "parser.hpp"
#include "verify.hpp"

namespace frobthick {

using Json = nlohmann::ordered_json;

inline double round_ms(double ms) { return std::round(ms * 1000.0) / 1000.0; }

inline Json variety_json(const Variety& v) {
    Json gens = Json::array();
    for (const auto& g : v.generators()) gens.push_back(format_poly(g));
    return Json{{"n", v.ring().n()},
                {"p", v.ring().p()},
                {"c", v.codim()},
                {"degrees", v.degrees()},
                {"generators", std::move(gens)}};
}

inline Json witness_json(const std::optional<CechClass>& w) {
    if (!w) return nullptr;
    return Json{{"numerator", format_poly(w->numerator())}, {"level", w->level()}};
}

inline Json report_json(const Variety& v, const InjectivityReport& r) {
    return Json{{"variety", variety_json(v)},
                {"query", {{"t", r.query.t}, {"twist", r.query.twist}, {"mode", to_string(r.query.mode)}}},
                {"result",
                 {{"domain_dim", r.domain_dim},
                  {"codomain_dim", r.codomain_dim},
                  {"rank", r.rank},
                  {"injective", r.injective},
                  {"kernel_witness", witness_json(r.kernel_witness)},
                  {"level", r.level}}},
                {"elapsed_ms", round_ms(r.elapsed_ms)}};
}

inline std::string report_csv_header() { return "p,t,twist,domain_dim,rank,injective,elapsed_ms"; }

inline std::string report_csv(const Variety& v, const InjectivityReport& r) {
    std::ostringstream os;
    os << v.ring().p() << ',' << r.query.t << ',' << r.query.twist << ',' << r.domain_dim << ',' << r.rank << ','
       << (r.injective ? "true" : "false") << ',' << round_ms(r.elapsed_ms);
    return os.str();
}

inline std::string report_human(const Variety& v, const InjectivityReport& r) {
    std::ostringstream os;
    os << "p=" << v.ring().p() << " t=" << r.query.t << " twist=" << r.query.twist
       << " mode=" << to_string(r.query.mode) << ": domain " << r.domain_dim << ", codomain " << r.codomain_dim
       << ", rank " << r.rank << ", level " << r.level << " -> ";
    if (r.injective) os << "injective";
    else if (r.codomain_zero) os << "not injective (codomain zero)";
    else os << "not injective";
    if (r.kernel_witness)
        os << "\n  kernel witness: [" << format_poly(r.kernel_witness->numerator()) << "] / (x0...xn)^"
           << r.kernel_witness->level();
    return os.str();
}

inline Json check_json(const CheckResult& c) {
    return Json{{"check", c.id}, {"pass", c.pass}, {"transcript", c.transcript}};
}

inline std::string check_human(const CheckResult& c) {
    std::ostringstream os;
    os << c.id << ": " << (c.pass ? "PASS" : "FAIL");
    for (const auto& line : c.transcript) os << "\n  " << line;
    return os.str();
}

}  // namespace frobthick

#endif
