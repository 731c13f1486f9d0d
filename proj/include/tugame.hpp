// Copyright 2026 The tugame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TUGAME_TUGAME_HPP
#define TUGAME_TUGAME_HPP

#include "tugame/bounds.hpp"
#include "tugame/coalition.hpp"
#include "tugame/cost_allocation.hpp"
#include "tugame/error.hpp"
#include "tugame/game.hpp"
#include "tugame/gately.hpp"
#include "tugame/io.hpp"
#include "tugame/oracle.hpp"
#include "tugame/properties.hpp"
#include "tugame/rational.hpp"
#include "tugame/tau.hpp"
#include "tugame/transforms.hpp"

#endif  // TUGAME_TUGAME_HPP
