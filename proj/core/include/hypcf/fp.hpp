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

#include <cstdint>
#include <optional>
#include <string>

#include "hypcf/errors.hpp"
#include "hypcf/field.hpp"

namespace hypcf {

/// Prime field element, canonical representative in [0, p).
///
/// The modulus travels with the value; mixing moduli throws FieldMismatch.
class Fp {
  public:
    Fp() : v_(0), p_(0) {}
    Fp(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) {}
    static Fp from_signed(std::int64_t v, std::uint64_t p) {
        std::int64_t r = v % static_cast<std::int64_t>(p);
        if (r < 0) r += static_cast<std::int64_t>(p);
        return Fp(static_cast<std::uint64_t>(r), p);
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero_elem() const { return v_ == 0; }

    Fp operator+(const Fp& o) const {
        check(o);
        std::uint64_t s = v_ + o.v_;
        if (s >= p_) s -= p_;
        return raw(s, p_);
    }
    Fp operator-(const Fp& o) const {
        check(o);
        return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_);
    }
    Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp operator*(const Fp& o) const {
        check(o);
        return raw(static_cast<std::uint64_t>(
                       (static_cast<unsigned __int128>(v_) * o.v_) % p_),
                   p_);
    }
    Fp operator/(const Fp& o) const {
        check(o);
        if (o.v_ == 0) throw DivisionByZero("division by zero in F_p");
        return *this * o.inverse();
    }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    Fp inverse() const;
    Fp pow(std::uint64_t e) const;

    std::string str() const { return std::to_string(v_); }

  private:
    static Fp raw(std::uint64_t v, std::uint64_t p) {
        Fp r;
        r.v_ = v;
        r.p_ = p;
        return r;
    }
    void check(const Fp& o) const {
        if (p_ != o.p_) throw FieldMismatch("F_p moduli differ");
    }
    std::uint64_t v_;
    std::uint64_t p_;
};

/// Square root in F_p with the least canonical representative, if any.
std::optional<Fp> fp_sqrt(const Fp& a);

template <>
struct FieldOps<Fp> {
    static bool is_zero(const Fp& x) { return x.is_zero_elem(); }
    static Fp zero(const Fp& x) { return Fp(0, x.modulus()); }
    static Fp one(const Fp& x) { return Fp(1, x.modulus()); }
    static Fp from_int(const Fp& x, long n) { return Fp::from_signed(n, x.modulus()); }
    static int cmp(const Fp& a, const Fp& b) {
        return a.value() < b.value() ? -1 : (a.value() > b.value() ? 1 : 0);
    }
    static std::optional<Fp> sqrt(const Fp& a) { return fp_sqrt(a); }
};

bool is_prime_u64(std::uint64_t n);

}  // namespace hypcf
