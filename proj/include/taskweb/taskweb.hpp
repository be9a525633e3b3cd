// Copyright 2026 The TaskWeb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "taskweb/config.hpp"
#include "taskweb/csv.hpp"
#include "taskweb/error.hpp"
#include "taskweb/evaluation.hpp"
#include "taskweb/fixture.hpp"
#include "taskweb/graph.hpp"
#include "taskweb/hash.hpp"
#include "taskweb/judge.hpp"
#include "taskweb/parallel.hpp"
#include "taskweb/similarity.hpp"
#include "taskweb/structure.hpp"
#include "taskweb/taskshop.hpp"
#include "taskweb/trainset.hpp"
#include "taskweb/transfer_metrics.hpp"
#include "taskweb/types.hpp"
#include "taskweb/web_json.hpp"
