/*
   Copyright 2026 The skewpbw authors

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

// Umbrella header: the whole library except the CLI (which pulls in the
// vendored argument parser and JSON library; include skewpbw/cli.hpp and
// skewpbw/spec_file.hpp separately when you need them).

#ifndef SKEWPBW_SKEWPBW_HPP
#define SKEWPBW_SKEWPBW_HPP

#include "base_ring.hpp"
#include "catalog.hpp"
#include "center.hpp"
#include "coordinates.hpp"
#include "element.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "fractions.hpp"
#include "growth.hpp"
#include "maps.hpp"
#include "matrix.hpp"
#include "parser.hpp"
#include "presentation.hpp"
#include "random.hpp"

#endif // SKEWPBW_SKEWPBW_HPP
