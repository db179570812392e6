// Copyright 2026 The efl-color Authors
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

#ifndef EFL_EFL_HPP
#define EFL_EFL_HPP

#include "efl/color_matrix.hpp"
#include "efl/coloring.hpp"
#include "efl/export.hpp"
#include "efl/generators.hpp"
#include "efl/greedy.hpp"
#include "efl/instance.hpp"
#include "efl/instance_io.hpp"
#include "efl/matrix_method.hpp"
#include "efl/oracle.hpp"

#endif  // EFL_EFL_HPP
