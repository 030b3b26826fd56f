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

#include "hypcf/rat.hpp"

#include <cmath>

namespace hypcf {

int int_val(const Int& n, const Int& p) {
    if (sgn(n) == 0) return kValInf;
    Int rem;
    mp_bitcnt_t v = mpz_remove(rem.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    return static_cast<int>(v);
}

int rat_val(const Rat& x, const Int& p) {
    if (is_zero(x)) return kValInf;
    return int_val(x.get_num(), p) - int_val(x.get_den(), p);
}

std::optional<Rat> rat_sqrt(const Rat& x) {
    if (sgn(x) < 0) return std::nullopt;
    if (is_zero(x)) return Rat(0);
    const Int& n = x.get_num();
    const Int& d = x.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    Int sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    return Rat(sn, sd);
}

std::string rat_str(const Rat& x) { return x.get_str(); }

double log_int(const Int& n) {
    if (sgn(n) == 0) return -std::numeric_limits<double>::infinity();
    signed long exp2;
    double m = mpz_get_d_2exp(&exp2, n.get_mpz_t());
    return std::log(std::fabs(m)) + static_cast<double>(exp2) * std::log(2.0);
}

double log_rat_abs(const Rat& x) {
    if (is_zero(x)) return -std::numeric_limits<double>::infinity();
    return log_int(x.get_num()) - log_int(x.get_den());
}

}  // namespace hypcf
