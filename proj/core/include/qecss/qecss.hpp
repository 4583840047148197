// Copyright 2026 The qecss Authors
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

#include "qecss/channel.hpp"
#include "qecss/channels_std.hpp"
#include "qecss/codes.hpp"
#include "qecss/error.hpp"
#include "qecss/io.hpp"
#include "qecss/iterate.hpp"
#include "qecss/linalg.hpp"
#include "qecss/objective.hpp"
#include "qecss/random.hpp"
#include "qecss/seesaw.hpp"
