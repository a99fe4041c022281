// Copyright 2026 The qmcforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

namespace qmcforge {

/// Numeric tolerances shared by every check in the pipeline.
struct Tolerances {
    double algebraic = 1e-12;  // unitarity, Hermiticity, trace, round-trip
    double pipeline = 1e-9;    // end-to-end semantic agreement
    double psd = 1e-10;        // eigenvalue floor for density matrices
    double row = 1e-10;        // trace preservation of QMC rows
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace qmcforge
