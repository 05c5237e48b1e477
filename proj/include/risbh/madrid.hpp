// SPDX-License-Identifier: Apache-2.0
//
// risbh - planner for RIS-aided multi-hop drone backhaul
// Copyright (C) 2026 The risbh authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include "risbh/scenario.hpp"

namespace risbh
{

// Parameters of the rectangular-block city layout.
struct MadridGridSpec
{
    int blocks_x = 5;
    int blocks_y = 5;
    double block_w = 120.0; // m, along x
    double block_h = 120.0; // m, along y
    double street_w = 15.0; // m, also the margin around the grid
    bool ris_center_square = false;
};

// Grid of block_w x block_h buildings separated by streets, MBS at the centre
// of the bounds. When the centre falls inside a block that block is left open
// as the central square. With ris_center_square, two RIS sites are placed on
// the facing facades nearest the MBS, normals pointing at it.
Scenario madrid_like_scenario(const MadridGridSpec &spec);

} // namespace risbh
