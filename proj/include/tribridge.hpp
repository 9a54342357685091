// Copyright 2026 The Tribridge Authors. All rights reserved.
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

#ifndef TRIBRIDGE_HPP_
#define TRIBRIDGE_HPP_

#include "tribridge/analytics.hpp"
#include "tribridge/auction.hpp"
#include "tribridge/card.hpp"
#include "tribridge/errors.hpp"
#include "tribridge/harness.hpp"
#include "tribridge/play.hpp"
#include "tribridge/policies.hpp"
#include "tribridge/scoring.hpp"
#include "tribridge/service.hpp"

#endif  // TRIBRIDGE_HPP_
