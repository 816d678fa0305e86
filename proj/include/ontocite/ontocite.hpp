// Copyright 2026 The ontocite Authors
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

// Umbrella header.

#include "ontocite/error.hpp"
#include "ontocite/vocab.hpp"
#include "ontocite/rdf.hpp"
#include "ontocite/format.hpp"
#include "ontocite/ntriples.hpp"
#include "ontocite/turtle.hpp"
#include "ontocite/metadata.hpp"
#include "ontocite/citation.hpp"
#include "ontocite/principles.hpp"
#include "ontocite/mutual.hpp"
#include "ontocite/network.hpp"
#include "ontocite/pipeline.hpp"
