// Copyright 2026 The sdrcalc Authors
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

#include <filesystem>
#include <string>

#include "sdrcalc/sdrep.hpp"

namespace sdrcalc {

// Renders the feasibility margin problem at fixed x,
//
//   maximize t  s.t.  pencil(x, z) - t I  is PSD,  variables (z_1..z_m, t),
//
// as a sparse SDPA (.dat-s) problem in the standard orientation
// min c'y s.t. sum_i y_i F_i - F_0 PSD, i.e. F_j = C_j (j <= m),
// F_{m+1} = -I, F_0 = -(A + sum x_i B_i), c = (0,...,0,-1). The pencil's
// direct-sum block structure is preserved when block metadata is present
// and consistent; otherwise everything goes into one block. Entries are
// 1-based upper-triangle "matno blkno i j value" lines.
std::string format_sdpa(const SDRep& rep, const Point& x);

void export_sdpa(const SDRep& rep, const Point& x,
                 const std::filesystem::path& path);

}  // namespace sdrcalc
