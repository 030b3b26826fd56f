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

#pragma once

#include <string>
#include <vector>

#include "hypcf/reduction.hpp"

namespace hypcf {

inline constexpr char kValuationCsvHeader[] = "n,lambda,nu_alpha,nu_a,nu_lc_a,nu_q,nu_lc_q";
inline constexpr char kDegreeCsvHeader[] = "n,m,deg_a,deg_c,deg_q,deg_qred,deg_v";

/// -infinity encodes as "-inf", window estimates as "~v".
std::string nu_alpha_str(const NuAlpha& v);
NuAlpha nu_alpha_parse(const std::string& s);

std::string valuation_csv(const std::vector<ValuationRow>& rows);
std::string degree_csv(const std::vector<DegreeRow>& rows);

std::vector<ValuationRow> parse_valuation_csv(const std::string& text);
std::vector<DegreeRow> parse_degree_csv(const std::string& text);

std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace hypcf
