/*
   Copyright 2026 The trcert Authors

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

#ifndef TRCERT_CONJ_HPP
#define TRCERT_CONJ_HPP

#include "trcert/tower.hpp"

namespace trcert {

enum class CMKind {
    none,
    top_step,    // totally real subtower plus a square root of a totally negative element
    cyclotomic,  // base Phi_n, n >= 3, no steps
    imaginary_quadratic,
};

CMKind cm_kind(const FieldTower& t);

/// Complex conjugation on a CM tower; throws NotCMTower otherwise.
AlgNum conj(const AlgNum& a);

}  // namespace trcert

#endif
