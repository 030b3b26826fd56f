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

#include <optional>

namespace hypcf {

/// Customization point for exact coefficient fields. Each field header
/// specializes this; generic code reaches it through the wrappers below, so
/// lookup works for field types living outside this namespace (mpq_class).
template <class K>
struct FieldOps;

template <class K>
bool is_zero(const K& x) {
    return FieldOps<K>::is_zero(x);
}
template <class K>
K zero_like(const K& sample) {
    return FieldOps<K>::zero(sample);
}
template <class K>
K one_like(const K& sample) {
    return FieldOps<K>::one(sample);
}
template <class K>
K from_int_like(const K& sample, long n) {
    return FieldOps<K>::from_int(sample, n);
}
/// total order used for map keys; any fixed order works
template <class K>
int cmp_elems(const K& a, const K& b) {
    return FieldOps<K>::cmp(a, b);
}
/// canonical square root, when one exists
template <class K>
std::optional<K> elem_sqrt(const K& x) {
    return FieldOps<K>::sqrt(x);
}

}  // namespace hypcf
