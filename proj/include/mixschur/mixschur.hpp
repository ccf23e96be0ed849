// Copyright 2026 The mixschur Authors
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

#include "measure.hpp"
#include "mixed_norm.hpp"
#include "kernel.hpp"
#include "schur.hpp"
#include "kernel_module.hpp"
#include "sum_norm.hpp"
#include "covering.hpp"
#include "coorbit.hpp"
#include "oracles.hpp"

namespace mixschur {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace mixschur
