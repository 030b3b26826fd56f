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

#include <vector>

#include "hypcf/poly.hpp"
#include "hypcf/rat.hpp"

namespace hypcf {

/// Projective logarithmic height of a nonzero polynomial over Q:
/// sum over all places of log max_i |f_i|_nu. The finite-place total is the
/// log of the normalized content, tracked exactly in integers; only the
/// final logs are floating point.
double proj_height(const Poly<Rat>& f);

/// Affine height: height of (1 : f_0 : ... : f_n); >= proj_height.
double aff_height(const Poly<Rat>& f);

/// h(x) = log max(|num|, |den|) of a rational in lowest terms.
double rat_height(const Rat& x);

/// Coefficient w_n of sqrt(D) = X^d (w_0 + w_1/X + ...) respects
/// h(w_n) <= h(LC D)/2 + n (log 4 + 2 log(2d) + hproj(D)).
bool sqrt_coeff_bound_check(const Poly<Rat>& D, int n);

struct HeightReport {
    long m = 0;          // convergent index
    int degQ = 0;
    double hP = 0;
    double hQ = 0;
    double hA = 0;       // partial quotient a_m
    double boundP = 0;
    double boundQ = 0;
    bool withinBounds = false;
};

/// Measured convergent/partial-quotient heights next to the Toeplitz-minor
/// upper bounds, for m = 0..M.
std::vector<HeightReport> convergent_height_report(const Poly<Rat>& D, int M);

}  // namespace hypcf
