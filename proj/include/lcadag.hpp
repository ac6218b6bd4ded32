// Copyright 2026 The lcadag Authors
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

// Umbrella header.

#pragma once

#include "lcadag/bitset.hpp"
#include "lcadag/catalog.hpp"
#include "lcadag/combinatorics.hpp"
#include "lcadag/dag.hpp"
#include "lcadag/error.hpp"
#include "lcadag/fixtures.hpp"
#include "lcadag/generate.hpp"
#include "lcadag/hasse.hpp"
#include "lcadag/lca_props.hpp"
#include "lcadag/properties.hpp"
#include "lcadag/report.hpp"
#include "lcadag/report_io.hpp"
#include "lcadag/set_system.hpp"
#include "lcadag/text_format.hpp"
#include "lcadag/transit.hpp"
#include "lcadag/validate.hpp"
