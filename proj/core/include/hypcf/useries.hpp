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

#include "hypcf/field.hpp"
#include "hypcf/rat.hpp"

namespace hypcf {

/// Q[u]/(u^K): fixed-precision power series in the uniformizer u = t - t0.
///
/// Lets the specialization scan run the CF recursion inside the valuation
/// ring instead of Q(t), where coefficient degrees grow quadratically. Only
/// divisions by units occur along a good-reduction prefix, and the unit test
/// (constant term nonzero) is exact, so the first bad index is detected
/// exactly even at small K.
class USeries {
  public:
    USeries() = default;
    explicit USeries(std::vector<Rat> c) : c_(std::move(c)) {}
    static USeries constant(const Rat& x, std::size_t K) {
        std::vector<Rat> c(K, Rat(0));
        if (K > 0) c[0] = x;
        return USeries(std::move(c));
    }
    static USeries uniformizer(std::size_t K) {
        std::vector<Rat> c(K, Rat(0));
        if (K > 1) c[1] = Rat(1);
        return USeries(std::move(c));
    }

    std::size_t prec() const { return c_.size(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero_elem() const {
        for (const auto& x : c_)
            if (sgn(x) != 0) return false;
        return true;
    }
    bool is_unit() const { return !c_.empty() && sgn(c_[0]) != 0; }
    /// u-adic valuation of the known part; prec() when ~ 0.
    std::size_t val() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (sgn(c_[i]) != 0) return i;
        return c_.size();
    }

    USeries operator-() const {
        USeries r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    USeries operator+(const USeries& o) const {
        USeries r = *this;
        for (std::size_t i = 0; i < r.c_.size() && i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
        return r;
    }
    USeries operator-(const USeries& o) const { return *this + (-o); }
    USeries operator*(const USeries& o) const {
        std::size_t K = c_.size();
        std::vector<Rat> r(K, Rat(0));
        for (std::size_t i = 0; i < K; ++i) {
            if (sgn(c_[i]) == 0) continue;
            for (std::size_t j = 0; i + j < K && j < o.c_.size(); ++j) {
                if (sgn(o.c_[j]) == 0) continue;
                r[i + j] += c_[i] * o.c_[j];
            }
        }
        return USeries(std::move(r));
    }
    USeries operator/(const USeries& o) const {
        if (!o.is_unit()) throw DivisionByZero("USeries: division by a non-unit");
        std::size_t K = c_.size();
        std::vector<Rat> r(K, Rat(0));
        for (std::size_t j = 0; j < K; ++j) {
            Rat acc = j < c_.size() ? c_[j] : Rat(0);
            for (std::size_t i = 0; i < j; ++i) {
                if (j - i < o.c_.size()) acc -= r[i] * o.c_[j - i];
            }
            r[j] = acc / o.c_[0];
        }
        return USeries(std::move(r));
    }
    bool operator==(const USeries& o) const {
        for (std::size_t i = 0; i < std::max(c_.size(), o.c_.size()); ++i) {
            Rat a = i < c_.size() ? c_[i] : Rat(0);
            Rat b = i < o.c_.size() ? o.c_[i] : Rat(0);
            if (!(a == b)) return false;
        }
        return true;
    }

  private:
    std::vector<Rat> c_;
};

template <>
struct FieldOps<USeries> {
    static bool is_zero(const USeries& x) { return x.is_zero_elem(); }
    static USeries zero(const USeries& s) { return USeries::constant(Rat(0), s.prec()); }
    static USeries one(const USeries& s) { return USeries::constant(Rat(1), s.prec()); }
    static USeries from_int(const USeries& s, long n) {
        return USeries::constant(Rat(n), s.prec());
    }
    static int cmp(const USeries& a, const USeries& b) {
        std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
        for (std::size_t i = 0; i < n; ++i) {
            Rat x = i < a.coeffs().size() ? a.coeffs()[i] : Rat(0);
            Rat y = i < b.coeffs().size() ? b.coeffs()[i] : Rat(0);
            int c = ::cmp(x, y);
            if (c != 0) return c;
        }
        return 0;
    }
    static std::optional<USeries> sqrt(const USeries& x) {
        if (!x.is_unit()) return std::nullopt;
        auto r0 = rat_sqrt(x.coeffs()[0]);
        if (!r0) return std::nullopt;
        if (hypcf::is_zero(*r0)) return std::nullopt;
        // u-adic Newton lift: y <- (y + x/y)/2
        USeries y = USeries::constant(*r0, x.prec());
        USeries half = USeries::constant(rat(1, 2), x.prec());
        for (std::size_t k = 1; k < x.prec(); k *= 2) y = (y + x / y) * half;
        return y;
    }
};

}  // namespace hypcf
