/*
   Copyright 2026 the hypcf authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "hypcf/table_io.hpp"

#include <sstream>

namespace hypcf {

std::string nu_alpha_str(const NuAlpha& v) {
    switch (v.kind) {
        case NuAlpha::Kind::MinusInf:
            return "-inf";
        case NuAlpha::Kind::WindowEstimate:
            return "~" + std::to_string(v.value);
        case NuAlpha::Kind::Exact:
        default:
            return std::to_string(v.value);
    }
}

NuAlpha nu_alpha_parse(const std::string& s) {
    if (s == "-inf") return NuAlpha::minus_inf();
    if (!s.empty() && s[0] == '~') return NuAlpha::estimate(std::stoi(s.substr(1)));
    return NuAlpha::exact(std::stoi(s));
}

std::string valuation_csv(const std::vector<ValuationRow>& rows) {
    std::ostringstream os;
    os << kValuationCsvHeader << "\n";
    for (const auto& r : rows)
        os << r.n << "," << r.lambda << "," << nu_alpha_str(r.nuAlpha) << "," << r.nuA << ","
           << r.nuLCA << "," << r.nuQ << "," << r.nuLCQ << "\n";
    return os.str();
}

std::string degree_csv(const std::vector<DegreeRow>& rows) {
    std::ostringstream os;
    os << kDegreeCsvHeader << "\n";
    for (const auto& r : rows)
        os << r.n << "," << r.m << "," << r.degA << "," << r.degC << "," << r.degQ << ","
           << r.degQred << "," << r.degV << "\n";
    return os.str();
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

namespace {

std::vector<std::vector<std::string>> rows_of(const std::string& text, const char* header) {
    std::istringstream is(text);
    std::string line;
    std::vector<std::vector<std::string>> out;
    bool first = true;
    while (std::getline(is, line)) {
        if (line.empty() || line == "\r") continue;
        auto cells = split_csv_line(line);
        if (first) {
            first = false;
            std::string h = line;
            if (!h.empty() && h.back() == '\r') h.pop_back();
            if (h != header) throw InvalidInput("unexpected CSV header: " + h);
            continue;
        }
        out.push_back(std::move(cells));
    }
    return out;
}

}  // namespace

std::vector<ValuationRow> parse_valuation_csv(const std::string& text) {
    std::vector<ValuationRow> rows;
    for (auto& c : rows_of(text, kValuationCsvHeader)) {
        if (c.size() != 7) throw InvalidInput("bad valuation CSV row");
        ValuationRow r;
        r.n = std::stol(c[0]);
        r.lambda = std::stol(c[1]);
        r.nuAlpha = nu_alpha_parse(c[2]);
        r.nuA = std::stoi(c[3]);
        r.nuLCA = std::stoi(c[4]);
        r.nuQ = std::stoi(c[5]);
        r.nuLCQ = std::stoi(c[6]);
        rows.push_back(r);
    }
    return rows;
}

std::vector<DegreeRow> parse_degree_csv(const std::string& text) {
    std::vector<DegreeRow> rows;
    for (auto& c : rows_of(text, kDegreeCsvHeader)) {
        if (c.size() != 7) throw InvalidInput("bad degree CSV row");
        DegreeRow r;
        r.n = std::stol(c[0]);
        r.m = std::stol(c[1]);
        r.degA = std::stoi(c[2]);
        r.degC = std::stoi(c[3]);
        r.degQ = std::stoi(c[4]);
        r.degQred = std::stoi(c[5]);
        r.degV = std::stoi(c[6]);
        rows.push_back(r);
    }
    return rows;
}

}  // namespace hypcf
