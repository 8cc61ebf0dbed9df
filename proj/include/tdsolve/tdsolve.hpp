/*
 * Copyright 2026 the tdsolve authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "tdsolve/arena.hpp"
#include "tdsolve/attract.hpp"
#include "tdsolve/classic.hpp"
#include "tdsolve/counters.hpp"
#include "tdsolve/gen.hpp"
#include "tdsolve/io.hpp"
#include "tdsolve/muller.hpp"
#include "tdsolve/oracle.hpp"
#include "tdsolve/solve_result.hpp"
#include "tdsolve/tda.hpp"
