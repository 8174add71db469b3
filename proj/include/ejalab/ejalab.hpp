// Copyright 2026 The ejalab Authors
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

#include "ejalab/category.hpp"
#include "ejalab/composite.hpp"
#include "ejalab/conjugate.hpp"
#include "ejalab/core.hpp"
#include "ejalab/jordan.hpp"
#include "ejalab/model_io.hpp"
#include "ejalab/numkernel/hermitian.hpp"
#include "ejalab/numkernel/lp.hpp"
#include "ejalab/numkernel/polytope.hpp"
#include "ejalab/numkernel/quaternion.hpp"
#include "ejalab/ordered.hpp"
#include "ejalab/report.hpp"
#include "ejalab/suites.hpp"
#include "ejalab/testspace.hpp"
