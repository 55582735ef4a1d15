// Copyright 2026 The Authors.
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

#ifndef MCSRECRUIT_TYPES_H_
#define MCSRECRUIT_TYPES_H_

#include <chrono>
#include <cstdint>
#include <vector>

namespace mcsrecruit {

// Dense index of a user inside a SocialGraph. Nodes are numbered in
// ascending order of their external user-id, so comparing NodeIds is the
// same as comparing user-ids.
using NodeId = int32_t;

// External user identifier as it appears in the input files.
using UserId = int64_t;

using TimePoint = std::chrono::sys_seconds;

// Ordered list of seed users, in selection order.
using SeedSet = std::vector<NodeId>;

}  // namespace mcsrecruit

#endif  // MCSRECRUIT_TYPES_H_
