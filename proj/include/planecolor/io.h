// Copyright 2026 The planecolor Authors
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

#ifndef PLANECOLOR_IO_H_
#define PLANECOLOR_IO_H_

#include <string>
#include <string_view>

#include "planecolor/plane_graph.h"
#include "planecolor/recolor.h"

namespace planecolor {

// planegraph 1
// n <count>
// <v>: <clockwise neighbors>     one line per vertex, ascending
// outer <u> <v> | outer none
std::string serialize_graph(const PlaneGraph& g);
PlaneGraph parse_graph(std::string_view text);

// coloring 1, then "<v> <color>" for v = 0, 1, ... in order.
std::string serialize_coloring(const Coloring& c);
Coloring parse_coloring(std::string_view text);

// sequence 1, then "<v> <old> <new>" per step.
std::string serialize_sequence(const RecolorSequence& seq);
RecolorSequence parse_sequence(std::string_view text);

// Parse failures throw kParse naming the line; structural problems in a
// parsed graph surface with the plane graph's own error codes.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace planecolor

#endif  // PLANECOLOR_IO_H_
