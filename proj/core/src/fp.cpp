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

#include "hypcf/fp.hpp"

namespace hypcf {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    while (e) {
        if (e & 1) acc = mulmod(acc, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return acc;
}

}  // namespace

Fp Fp::pow(std::uint64_t e) const { return Fp(powmod(v_, e, p_), p_); }

Fp Fp::inverse() const {
    if (v_ == 0) throw DivisionByZero("inverse of zero in F_p");
    // extended Euclid; p_ need not be prime for unit v_
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(v_);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw DivisionByZero("non-invertible element in Z/p");
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return Fp(static_cast<std::uint64_t>(t), p_);
}

std::optional<Fp> fp_sqrt(const Fp& a) {
    std::uint64_t p = a.modulus(), n = a.value();
    if (n == 0) return Fp(0, p);
    if (p == 2) return Fp(n, p);
    if (powmod(n, (p - 1) / 2, p) != 1) return std::nullopt;
    std::uint64_t root;
    if (p % 4 == 3) {
        root = powmod(n, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks
        std::uint64_t q = p - 1, s = 0;
        while ((q & 1) == 0) {
            q >>= 1;
            ++s;
        }
        std::uint64_t z = 2;
        while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
        std::uint64_t m = s;
        std::uint64_t c = powmod(z, q, p);
        std::uint64_t t = powmod(n, q, p);
        std::uint64_t r = powmod(n, (q + 1) / 2, p);
        while (t != 1) {
            std::uint64_t i = 0, tt = t;
            while (tt != 1) {
                tt = mulmod(tt, tt, p);
                ++i;
            }
            std::uint64_t b = powmod(c, 1ull << (m - i - 1), p);
            m = i;
            c = mulmod(b, b, p);
            t = mulmod(t, c, p);
            r = mulmod(r, b, p);
        }
        root = r;
    }
    std::uint64_t other = p - root;
    return Fp(root <= other ? root : other, p);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    // deterministic Miller-Rabin for 64-bit range
    std::uint64_t d = n - 1, s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (std::uint64_t r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace hypcf
