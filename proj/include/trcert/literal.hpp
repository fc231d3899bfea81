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

#ifndef TRCERT_LITERAL_HPP
#define TRCERT_LITERAL_HPP

#include <string>

#include "trcert/tower.hpp"

namespace trcert {

// "Q", "Q(sqrt2)", "Q(sqrt2,i)", "Q(zeta5)", "Q(zeta5,sqrt2)", or tower JSON.
// A zetaN generator must come first and becomes the base Phi_N; every other
// generator is a square-root step.
FieldTower parse_tower(const std::string& text);

// Expression over integers, generators and + - * / ^ with parentheses, or
// nested-array JSON. Generators: x (base generator), s1, s2, ... (square-root
// steps), sqrtN / sqrt(-N) / i (a square root of N present in the tower),
// zetaN (a primitive N-th root of unity in the tower).
AlgNum parse_element(const std::string& text, const FieldTower& t);

}  // namespace trcert

#endif
