// Copyright 2026 The Incidence Scrolls Contributors
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

#include <cstdint>

namespace incidence {

// Exact count. Every arithmetic step on counts goes through the checked
// helpers below and throws ArithmeticOverflow instead of wrapping.
using Count = std::int64_t;

Count checked_add(Count lhs, Count rhs);
Count checked_sub(Count lhs, Count rhs);
Count checked_mul(Count lhs, Count rhs);

}  // namespace incidence
