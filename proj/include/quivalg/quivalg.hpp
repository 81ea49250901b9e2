// Copyright 2026 The quivalg Authors
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

#include "quivalg/algebra.hpp"
#include "quivalg/characters.hpp"
#include "quivalg/corpus.hpp"
#include "quivalg/error.hpp"
#include "quivalg/fock.hpp"
#include "quivalg/graph.hpp"
#include "quivalg/isomorphism.hpp"
#include "quivalg/nestrep.hpp"
#include "quivalg/paths.hpp"
#include "quivalg/random.hpp"
#include "quivalg/reconstruct.hpp"
#include "quivalg/scalar.hpp"
#include "quivalg/sparse.hpp"
