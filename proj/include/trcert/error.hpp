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

#ifndef TRCERT_ERROR_HPP
#define TRCERT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace trcert {

// Every failure the library raises carries a stable kind name; the CLI
// reports that name verbatim in its machine-readable error objects.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define TRCERT_DEFINE_ERROR(Name)                                        \
    class Name : public Error {                                          \
    public:                                                              \
        explicit Name(const std::string& what) : Error(#Name, what) {}   \
    };

TRCERT_DEFINE_ERROR(DivisionByZero)
TRCERT_DEFINE_ERROR(ZeroPolynomial)
TRCERT_DEFINE_ERROR(NotSquarefree)
TRCERT_DEFINE_ERROR(NotCMTower)
TRCERT_DEFINE_ERROR(NotTotallyReal)
TRCERT_DEFINE_ERROR(NotTotallyNonnegative)
TRCERT_DEFINE_ERROR(NotAlgebraicInteger)
TRCERT_DEFINE_ERROR(NotAUnit)
TRCERT_DEFINE_ERROR(ConjugateInForbiddenInterval)
TRCERT_DEFINE_ERROR(PreconditionFailed)
TRCERT_DEFINE_ERROR(InternalContradiction)
TRCERT_DEFINE_ERROR(IncompatibleTowers)
TRCERT_DEFINE_ERROR(ParseError)

#undef TRCERT_DEFINE_ERROR

// A zero divisor surfaced while inverting: the step that was assumed to be
// irreducible is not. Step 0 is the base polynomial, step k >= 1 the k-th
// adjoined square root.
class ReducibleTower : public Error {
public:
    ReducibleTower(std::size_t step, const std::string& what)
        : Error("ReducibleTower", what), step_(step) {}

    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

// The census coefficient box is larger than the configured budget.
class ResourceGuard : public Error {
public:
    ResourceGuard(double needed, double budget)
        : Error("ResourceGuard", "coefficient box needs " + std::to_string(static_cast<long long>(needed)) +
                                     " cells, budget is " + std::to_string(static_cast<long long>(budget))),
          needed_(needed), budget_(budget) {}

    double needed() const noexcept { return needed_; }
    double budget() const noexcept { return budget_; }

private:
    double needed_;
    double budget_;
};

}  // namespace trcert

#endif
